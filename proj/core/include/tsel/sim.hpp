#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsel/skill.hpp"

namespace tsel {

inline constexpr int kSceneSize = 64;        // full-resolution scene grid
inline constexpr int kFlowSize = 32;         // flow fields after 2x2 averaging
inline constexpr int kAppearanceSize = 16;   // grayscale render after 4x4 averaging
inline constexpr double kMaxToolSpeed = 4.0; // px/frame
inline constexpr int kEpisodeFrames = 60;    // default episode length

/// Sequence of dense 2-channel displacement fields, px/frame.
/// Frame layout is row-major with (dx, dy) interleaved per pixel.
struct FlowVideo {
  std::uint32_t width = kFlowSize;
  std::uint32_t height = kFlowSize;
  std::vector<std::vector<float>> frames;  // each width*height*2 floats

  std::size_t frame_count() const { return frames.size(); }
};

/// One grayscale render, row-major, values in [0,1].
using AppearanceFrame = std::vector<float>;

/// Per-frame task progress in [0,1]; length = flow frame count + 1.
using ProgressTrace = std::vector<double>;

/// Which scalar progress metric an episode is evaluated with.
enum class TaskMetric { WipeCoverage, ScrapeClearance, StirDispersion, SpreadCoverage };

TaskMetric metric_for_verb(const std::string& verb);

struct Particle {
  Vec2 position;
  std::string kind;
};

struct ToolState {
  Vec2 half_extents{3.0, 3.0};
  Vec2 position;
};

/// Top-down 2D kitchen scene on a 64x64 pixel grid.
struct Scene {
  ObjectGeometry recipient;
  std::vector<Particle> particles;
  std::vector<std::uint8_t> coverage;  // kSceneSize*kSceneSize, wiped cells
  ToolState tool;
  TaskMetric metric = TaskMetric::WipeCoverage;
  std::size_t initial_particle_count = 0;
  double initial_dispersion = 0.0;

  Scene();
  bool covered(int x, int y) const { return coverage[static_cast<std::size_t>(y) * kSceneSize + x] != 0; }
};

/// Builds a scene for a skill. `variation_seed` perturbs recipient placement
/// and particle layout deterministically.
Scene make_scene(const SkillLabel& skill, std::uint64_t variation_seed);

struct ExecutionResult {
  FlowVideo flow;
  std::vector<AppearanceFrame> appearance;  // one per waypoint (frames + 1)
  ProgressTrace progress;
  Scene final_scene;
};

/// Runs a template on a scene for `steps` waypoints (steps - 1 flow frames).
/// Deterministic for fixed inputs.
ExecutionResult execute_template(const Scene& scene, const Template& tmpl, int steps,
                                 std::uint64_t seed);

/// Runs an explicit waypoint list (used for jittered demonstrations).
ExecutionResult execute_waypoints(const Scene& scene, const std::vector<Vec2>& waypoints,
                                  ForceLevel force, std::uint64_t seed);

/// Fraction of recipient footprint cells that have been wiped.
double wipe_coverage(const Scene& scene);

/// Fraction of the initial particles now inside the 4-px edge band of the
/// recipient (or pushed beyond it).
double scrape_cleared(const Scene& scene);

/// Normalized particle-dispersion gain relative to a uniform spread target.
double stir_dispersion(const Scene& scene);

/// Dispatches to the metric selected by scene.metric.
double task_progress(const Scene& scene);

/// Synthetic stand-in for a segmented human demonstration clip.
struct DemoRecord {
  FlowVideo video;
  std::vector<AppearanceFrame> appearance;
  std::string text;
  std::vector<std::string> objects;
  bool expert = false;
};

/// Template the demo generator executes (with jitter) for a verb's expert clips.
const Template& best_known_template(const std::string& verb);

/// Generates per_skill expert records plus per_skill distractors for each
/// skill. Deterministic per seed.
std::vector<DemoRecord> synth_demo_corpus(const std::vector<SkillLabel>& skills, int per_skill,
                                          std::uint64_t seed);

/// Flow frames harvested from random template executions; codec training data.
std::vector<std::vector<float>> synth_flow_frames(std::size_t count, std::uint64_t seed);

}  // namespace tsel
