#include "tsel/sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tsel/errors.hpp"

namespace tsel {

namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool inside_rect(Vec2 p, Vec2 center, Vec2 half_extents) {
  return std::abs(p.x - center.x) <= half_extents.x && std::abs(p.y - center.y) <= half_extents.y;
}

// Integer cell range [lo, hi) whose centers fall inside [c - h, c + h].
std::pair<int, int> cell_range(double c, double h) {
  int lo = static_cast<int>(std::ceil(c - h - 0.5));
  int hi = static_cast<int>(std::floor(c + h - 0.5)) + 1;
  lo = std::clamp(lo, 0, kSceneSize);
  hi = std::clamp(hi, 0, kSceneSize);
  return {lo, hi};
}

void paint_rect(std::vector<float>& img, Vec2 center, Vec2 half_extents, float value) {
  auto [x0, x1] = cell_range(center.x, half_extents.x);
  auto [y0, y1] = cell_range(center.y, half_extents.y);
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) img[static_cast<std::size_t>(y) * kSceneSize + x] = value;
}

// The operator's arm: a vertical strip from the tool grip to the bottom edge
// of the frame, rigid with the tool. It moves with the tool, so it shows up
// in both the render and the flow field.
struct ArmRect {
  Vec2 center;
  Vec2 half_extents;
};

ArmRect arm_rect(Vec2 tool_pos) {
  const double y0 = std::clamp(tool_pos.y, 0.0, static_cast<double>(kSceneSize));
  return {{tool_pos.x, (y0 + kSceneSize) / 2.0}, {2.0, (kSceneSize - y0) / 2.0}};
}

double particle_dispersion(const std::vector<Particle>& particles) {
  if (particles.empty()) return 0.0;
  Vec2 centroid{0.0, 0.0};
  for (const auto& p : particles) centroid = centroid + p.position;
  centroid = (1.0 / static_cast<double>(particles.size())) * centroid;
  double sum = 0.0;
  for (const auto& p : particles) {
    Vec2 d = p.position - centroid;
    sum += d.x * d.x + d.y * d.y;
  }
  return sum / static_cast<double>(particles.size());
}

}  // namespace

Scene::Scene() : coverage(kSceneSize * kSceneSize, 0) {}

TaskMetric metric_for_verb(const std::string& verb) {
  if (verb == "wipe") return TaskMetric::WipeCoverage;
  if (verb == "scrape") return TaskMetric::ScrapeClearance;
  if (verb == "stir") return TaskMetric::StirDispersion;
  if (verb == "spread") return TaskMetric::SpreadCoverage;
  throw Error("no progress metric for verb: " + verb);
}

double wipe_coverage(const Scene& scene) {
  auto [x0, x1] = cell_range(scene.recipient.center.x, scene.recipient.half_extents.x);
  auto [y0, y1] = cell_range(scene.recipient.center.y, scene.recipient.half_extents.y);
  long total = 0;
  long wiped = 0;
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      ++total;
      if (scene.covered(x, y)) ++wiped;
    }
  }
  if (total == 0) throw DegenerateGeometry("recipient footprint has no cells");
  return static_cast<double>(wiped) / static_cast<double>(total);
}

double scrape_cleared(const Scene& scene) {
  if (scene.initial_particle_count == 0) throw NoParticles();
  constexpr double kEdgeBand = 4.0;
  const Vec2 c = scene.recipient.center;
  const Vec2 h = scene.recipient.half_extents;
  std::size_t cleared = 0;
  for (const auto& p : scene.particles) {
    // Signed distance inward from the recipient boundary; negative = outside.
    double inward = std::min(h.x - std::abs(p.position.x - c.x), h.y - std::abs(p.position.y - c.y));
    if (inward <= kEdgeBand) ++cleared;
  }
  return static_cast<double>(cleared) / static_cast<double>(scene.initial_particle_count);
}

double stir_dispersion(const Scene& scene) {
  if (scene.initial_particle_count == 0) throw NoParticles();
  const Vec2 h = scene.recipient.half_extents;
  // Mean squared centroid distance of a uniform spread over the recipient.
  const double target = (h.x * h.x + h.y * h.y) / 3.0;
  const double now = particle_dispersion(scene.particles);
  if (target <= scene.initial_dispersion) return 0.0;
  return std::clamp((now - scene.initial_dispersion) / (target - scene.initial_dispersion), 0.0, 1.0);
}

double task_progress(const Scene& scene) {
  switch (scene.metric) {
    case TaskMetric::WipeCoverage:
    case TaskMetric::SpreadCoverage:
      return wipe_coverage(scene);
    case TaskMetric::ScrapeClearance:
      return scrape_cleared(scene);
    case TaskMetric::StirDispersion:
      return stir_dispersion(scene);
  }
  return 0.0;
}

Scene make_scene(const SkillLabel& skill, std::uint64_t variation_seed) {
  std::mt19937_64 rng(variation_seed ^ fnv1a64(skill.verb));
  std::uniform_real_distribution<double> center_jitter(-4.0, 4.0);
  std::uniform_real_distribution<double> size_jitter(-2.0, 2.0);

  Scene scene;
  scene.metric = metric_for_verb(skill.verb);
  Vec2 base_extents{14.0, 11.0};
  Vec2 tool_extents{3.0, 3.0};
  int particle_count = 0;
  if (skill.verb == "wipe") {
    base_extents = {16.0, 12.0};
    tool_extents = {4.0, 4.0};
  } else if (skill.verb == "scrape") {
    base_extents = {18.0, 14.0};
    tool_extents = {2.0, 6.0};  // blade perpendicular to the stroke
    particle_count = 18;
  } else if (skill.verb == "stir") {
    base_extents = {13.0, 13.0};
    tool_extents = {3.0, 3.0};
    particle_count = 16;
  } else if (skill.verb == "spread") {
    base_extents = {12.0, 10.0};
    tool_extents = {3.0, 2.0};
    particle_count = 8;
  }

  scene.recipient.label = skill.recipient;
  scene.recipient.center = {32.0 + center_jitter(rng), 32.0 + center_jitter(rng)};
  scene.recipient.half_extents = {base_extents.x + size_jitter(rng), base_extents.y + size_jitter(rng)};
  scene.tool.half_extents = tool_extents;
  scene.tool.position = scene.recipient.center;

  // Stirring starts from an unmixed clump off to one side of the pan; the
  // other particle tasks start from a loose central pile.
  const Vec2 pile_center =
      scene.metric == TaskMetric::StirDispersion
          ? scene.recipient.center + Vec2{0.45 * scene.recipient.half_extents.x, 0.0}
          : scene.recipient.center;
  std::normal_distribution<double> spread(0.0, scene.metric == TaskMetric::StirDispersion ? 2.0 : 2.5);
  for (int i = 0; i < particle_count; ++i) {
    Vec2 p = pile_center + Vec2{spread(rng), spread(rng)};
    // Keep initial particles clear of the 4-px edge band.
    const Vec2 h = scene.recipient.half_extents;
    p.x = std::clamp(p.x, scene.recipient.center.x - (h.x - 5.0), scene.recipient.center.x + (h.x - 5.0));
    p.y = std::clamp(p.y, scene.recipient.center.y - (h.y - 5.0), scene.recipient.center.y + (h.y - 5.0));
    scene.particles.push_back({p, "food"});
  }
  scene.initial_particle_count = scene.particles.size();
  scene.initial_dispersion = particle_dispersion(scene.particles);
  return scene;
}

namespace {

AppearanceFrame render_scene(const Scene& scene, const std::vector<ObjectGeometry>& clutter) {
  std::vector<float> full(kSceneSize * kSceneSize, 0.0f);
  paint_rect(full, scene.recipient.center, scene.recipient.half_extents, 0.25f);
  for (const auto& c : clutter) paint_rect(full, c.center, c.half_extents, 0.5f);
  for (const auto& p : scene.particles) {
    int x = static_cast<int>(p.position.x);
    int y = static_cast<int>(p.position.y);
    if (x >= 0 && x < kSceneSize && y >= 0 && y < kSceneSize) {
      full[static_cast<std::size_t>(y) * kSceneSize + x] = 1.0f;
    }
  }
  const ArmRect arm = arm_rect(scene.tool.position);
  if (arm.half_extents.y > 0.0) paint_rect(full, arm.center, arm.half_extents, 0.75f);
  paint_rect(full, scene.tool.position, scene.tool.half_extents, 0.75f);

  // 4x4 average to 16x16. All paint values are dyadic, so the averages are
  // exact and independent of summation order.
  AppearanceFrame out(kAppearanceSize * kAppearanceSize, 0.0f);
  for (int y = 0; y < kAppearanceSize; ++y) {
    for (int x = 0; x < kAppearanceSize; ++x) {
      float sum = 0.0f;
      for (int dy = 0; dy < 4; ++dy)
        for (int dx = 0; dx < 4; ++dx)
          sum += full[static_cast<std::size_t>(4 * y + dy) * kSceneSize + 4 * x + dx];
      out[static_cast<std::size_t>(y) * kAppearanceSize + x] = sum / 16.0f;
    }
  }
  return out;
}

std::vector<float> downsample_flow(const std::vector<float>& full) {
  std::vector<float> out(kFlowSize * kFlowSize * 2, 0.0f);
  for (int y = 0; y < kFlowSize; ++y) {
    for (int x = 0; x < kFlowSize; ++x) {
      for (int ch = 0; ch < 2; ++ch) {
        float sum = 0.0f;
        for (int dy = 0; dy < 2; ++dy)
          for (int dx = 0; dx < 2; ++dx)
            sum += full[(static_cast<std::size_t>(2 * y + dy) * kSceneSize + 2 * x + dx) * 2 + ch];
        out[(static_cast<std::size_t>(y) * kFlowSize + x) * 2 + ch] = sum / 4.0f;
      }
    }
  }
  return out;
}

ExecutionResult execute_impl(const Scene& start, const std::vector<Vec2>& waypoints,
                             ForceLevel force, std::uint64_t seed,
                             const std::vector<ObjectGeometry>& clutter) {
  if (waypoints.size() < 2) throw Error("need at least 2 waypoints");
  Scene scene = start;
  scene.tool.position = waypoints.front();
  const double coeff = force_coefficient(force);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  ExecutionResult result;
  result.progress.push_back(task_progress(scene));
  result.appearance.push_back(render_scene(scene, clutter));

  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    Vec2 v = waypoints[i + 1] - waypoints[i];
    v.x = std::clamp(v.x, -kMaxToolSpeed, kMaxToolSpeed);
    v.y = std::clamp(v.y, -kMaxToolSpeed, kMaxToolSpeed);
    const Vec2 tool_pos = waypoints[i];
    const Vec2 th = scene.tool.half_extents;

    // Dense flow: pixels under the tool footprint carry the tool velocity.
    std::vector<float> full(kSceneSize * kSceneSize * 2, 0.0f);
    auto paint_velocity = [&](Vec2 center, Vec2 half) {
      auto [px0, px1] = cell_range(center.x, half.x);
      auto [py0, py1] = cell_range(center.y, half.y);
      for (int y = py0; y < py1; ++y) {
        for (int x = px0; x < px1; ++x) {
          full[(static_cast<std::size_t>(y) * kSceneSize + x) * 2 + 0] = static_cast<float>(v.x);
          full[(static_cast<std::size_t>(y) * kSceneSize + x) * 2 + 1] = static_cast<float>(v.y);
        }
      }
    };
    const ArmRect arm = arm_rect(tool_pos);
    if (arm.half_extents.y > 0.0) paint_velocity(arm.center, arm.half_extents);
    paint_velocity(tool_pos, th);
    auto [x0, x1] = cell_range(tool_pos.x, th.x);
    auto [y0, y1] = cell_range(tool_pos.y, th.y);

    // Particle drag. Moved food contributes its own flow, so the force level
    // is observable in the flow field, not only in the outcome.
    const Vec2 rc = scene.recipient.center;
    const Vec2 rh = scene.recipient.half_extents;

    // Signed tool rotation about the recipient center this frame; orbiting
    // motions build up a vortex, straight strokes barely rotate.
    const Vec2 ta = tool_pos - rc;
    const Vec2 tb = (tool_pos + v) - rc;
    const double dtheta_tool = std::atan2(ta.x * tb.y - ta.y * tb.x, ta.x * tb.x + ta.y * tb.y);
    const double r_tool = std::hypot(ta.x, ta.y);

    for (auto& p : scene.particles) {
      Vec2 before = p.position;
      if (scene.metric == TaskMetric::StirDispersion) {
        // Vortex entrainment with a radial falloff around the tool's orbit:
        // differential rotation shears the clump apart, and entrained food
        // drifts slowly outward toward the orbit.
        const double sigma = 0.30 * std::max(rh.x, rh.y);
        Vec2 d = p.position - rc;
        const double r = std::hypot(d.x, d.y);
        if (r > 1e-9 && std::abs(dtheta_tool) > 0.0) {
          const double g = std::exp(-(r - r_tool) * (r - r_tool) / (2.0 * sigma * sigma));
          const double dth = coeff * g * dtheta_tool;
          const double growth = 1.0 + coeff * g * std::abs(dtheta_tool);
          const double cs = std::cos(dth), sn = std::sin(dth);
          Vec2 rotated{d.x * cs - d.y * sn, d.x * sn + d.y * cs};
          p.position = rc + growth * rotated;
          p.position.x = std::clamp(p.position.x, rc.x - rh.x + 1.0, rc.x + rh.x - 1.0);
          p.position.y = std::clamp(p.position.y, rc.y - rh.y + 1.0, rc.y + rh.y - 1.0);
        }
      } else if (inside_rect(p.position, tool_pos, th)) {
        if (scene.metric == TaskMetric::ScrapeClearance) {
          // Scraped food piles up against the rim and stays there.
          double inward = std::min(rh.x - std::abs(p.position.x - rc.x),
                                   rh.y - std::abs(p.position.y - rc.y));
          if (inward <= 4.0) continue;
        }
        p.position = p.position + coeff * v;
        p.position.x = std::clamp(p.position.x, 0.5, kSceneSize - 0.5);
        p.position.y = std::clamp(p.position.y, 0.5, kSceneSize - 0.5);
      }
      Vec2 dp = p.position - before;
      if (dp.x != 0.0 || dp.y != 0.0) {
        // Smear the particle's displacement over a blob at both endpoints of
        // its motion; food is bigger than a point and leaves a visible streak.
        auto stamp = [&](Vec2 at) {
          const int cx = static_cast<int>(at.x);
          const int cy = static_cast<int>(at.y);
          for (int py = cy - 2; py < cy + 3; ++py) {
            for (int px = cx - 2; px < cx + 3; ++px) {
              if (px < 0 || px >= kSceneSize || py < 0 || py >= kSceneSize) continue;
              full[(static_cast<std::size_t>(py) * kSceneSize + px) * 2 + 0] = static_cast<float>(dp.x);
              full[(static_cast<std::size_t>(py) * kSceneSize + px) * 2 + 1] = static_cast<float>(dp.y);
            }
          }
        };
        stamp(before);
        stamp(p.position);
      }
    }
    result.flow.frames.push_back(downsample_flow(full));

    // Wiping: footprint cells over the recipient become covered with
    // probability equal to the contact coefficient.
    auto [rx0, rx1] = cell_range(rc.x, rh.x);
    auto [ry0, ry1] = cell_range(rc.y, rh.y);
    for (int y = std::max(y0, ry0); y < std::min(y1, ry1); ++y) {
      for (int x = std::max(x0, rx0); x < std::min(x1, rx1); ++x) {
        auto idx = static_cast<std::size_t>(y) * kSceneSize + x;
        if (!scene.coverage[idx] && unit(rng) < coeff) scene.coverage[idx] = 1;
      }
    }

    scene.tool.position = waypoints[i + 1];
    result.progress.push_back(task_progress(scene));
    result.appearance.push_back(render_scene(scene, clutter));
  }

  result.final_scene = std::move(scene);
  return result;
}

}  // namespace

ExecutionResult execute_template(const Scene& scene, const Template& tmpl, int steps,
                                 std::uint64_t seed) {
  auto waypoints = trajectory_waypoints(tmpl.trajectory, scene.recipient, steps);
  return execute_impl(scene, waypoints, tmpl.force, seed, {});
}

ExecutionResult execute_waypoints(const Scene& scene, const std::vector<Vec2>& waypoints,
                                  ForceLevel force, std::uint64_t seed) {
  return execute_impl(scene, waypoints, force, seed, {});
}

const Template& best_known_template(const std::string& verb) {
  static const std::vector<Template> library = build_library();
  auto find = [&](TrajectoryKind kind, ForceLevel force) -> const Template& {
    return library[static_cast<std::size_t>(3 * static_cast<int>(kind) + static_cast<int>(force))];
  };
  if (verb == "wipe") return find(TrajectoryKind::ZigzagSweep, ForceLevel::Medium);
  if (verb == "scrape") return find(TrajectoryKind::SideToSideLong, ForceLevel::High);
  if (verb == "stir") return find(TrajectoryKind::LargeCircle, ForceLevel::Medium);
  if (verb == "spread") return find(TrajectoryKind::ZigzagSweep, ForceLevel::Medium);
  throw Error("no expert template known for verb: " + verb);
}

std::vector<DemoRecord> synth_demo_corpus(const std::vector<SkillLabel>& skills, int per_skill,
                                          std::uint64_t seed) {
  if (per_skill < 1) throw Error("per_skill must be >= 1");
  static const std::vector<SkillLabel> kDistractorPool = {
      {"mash", "masher", "potato"},
      {"whisk", "whisk", "bowl"},
      {"flip", "spatula", "pancake"},
      {"grate", "grater", "cheese"},
  };
  static const std::vector<Template> library = build_library();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> jitter(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<DemoRecord> corpus;
  for (const auto& skill : skills) {
    for (int j = 0; j < per_skill; ++j) {
      Scene scene = make_scene(skill, rng());
      // Human kitchens carry appearance clutter the robot bench does not.
      std::vector<ObjectGeometry> clutter;
      for (int c = 0; c < 2; ++c) {
        clutter.push_back({{6.0 + 52.0 * unit(rng), 6.0 + 52.0 * unit(rng)},
                           {2.0 + 3.0 * unit(rng), 2.0 + 3.0 * unit(rng)},
                           "clutter"});
      }
      const Template& expert = best_known_template(skill.verb);
      auto waypoints = trajectory_waypoints(expert.trajectory, scene.recipient, kEpisodeFrames + 1);
      // Rigid jitter: every waypoint shifts by the same draw, so the
      // demonstration keeps the template's velocity signature.
      const Vec2 offset{jitter(rng), jitter(rng)};
      for (auto& w : waypoints) w = w + offset;
      auto exec = execute_impl(scene, waypoints, expert.force, rng(), clutter);

      DemoRecord record;
      record.video = std::move(exec.flow);
      record.appearance = std::move(exec.appearance);
      record.text = skill.verb + " the " + skill.recipient + " with the " + skill.tool;
      record.objects = {skill.tool, skill.recipient};
      record.expert = true;
      corpus.push_back(std::move(record));
    }
    for (int j = 0; j < per_skill; ++j) {
      const SkillLabel& other = kDistractorPool[rng() % kDistractorPool.size()];
      SkillLabel distractor_skill{other.verb, other.tool, other.recipient};
      // Distractors reuse a wipe-style scene so every verb has a metric.
      Scene scene = make_scene({"wipe", distractor_skill.tool, distractor_skill.recipient}, rng());
      const Template& tmpl = library[rng() % library.size()];
      auto exec = execute_template(scene, tmpl, kEpisodeFrames + 1, rng());

      DemoRecord record;
      record.video = std::move(exec.flow);
      record.appearance = std::move(exec.appearance);
      record.text = distractor_skill.verb + " the " + distractor_skill.recipient + " with the " +
                    distractor_skill.tool;
      record.objects = {distractor_skill.tool, distractor_skill.recipient};
      record.expert = false;
      corpus.push_back(std::move(record));
    }
  }
  return corpus;
}

std::vector<std::vector<float>> synth_flow_frames(std::size_t count, std::uint64_t seed) {
  static const std::vector<SkillLabel> kSkills = {
      {"wipe", "cloth", "plate"},
      {"scrape", "scraper", "board"},
      {"stir", "spoon", "pan"},
      {"spread", "knife", "bread"},
  };
  static const std::vector<Template> library = build_library();
  std::mt19937_64 rng(seed);
  std::vector<std::vector<float>> frames;
  frames.reserve(count);
  while (frames.size() < count) {
    const SkillLabel& skill = kSkills[rng() % kSkills.size()];
    Scene scene = make_scene(skill, rng());
    const Template& tmpl = library[rng() % library.size()];
    auto exec = execute_template(scene, tmpl, kEpisodeFrames + 1, rng());
    for (auto& frame : exec.flow.frames) {
      if (frames.size() == count) break;
      frames.push_back(std::move(frame));
    }
  }
  return frames;
}

}  // namespace tsel
