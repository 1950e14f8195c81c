#include "tsel/skill.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

#include "tsel/errors.hpp"

namespace tsel {

namespace {

struct KindInfo {
  std::string phrase;
  std::string token;
};

const std::array<KindInfo, kTrajectoryKindCount>& kind_table() {
  static const std::array<KindInfo, kTrajectoryKindCount> table = {{
      {"small circle", "small_circle"},
      {"large circle", "large_circle"},
      {"short forward and back motion", "forward_back_short"},
      {"long forward and back motion", "forward_back_long"},
      {"short side to side motion", "side_to_side_short"},
      {"long side to side motion", "side_to_side_long"},
      {"pushing motion away from you", "push_away"},
      {"pulling motion toward you", "pull_toward"},
      {"pushing motion to the left", "push_left"},
      {"pushing motion to the right", "push_right"},
      {"zigzag sweeping motion", "zigzag_sweep"},
  }};
  return table;
}

const std::array<std::string, kForceLevelCount> kForcePhrases = {"light", "medium", "firm"};
const std::array<std::string, kForceLevelCount> kForceTokens = {"low", "medium", "high"};
const std::array<double, kForceLevelCount> kForceCoefficients = {0.25, 0.55, 0.9};

}  // namespace

const std::string& trajectory_phrase(TrajectoryKind kind) {
  return kind_table()[static_cast<int>(kind)].phrase;
}

const std::string& trajectory_token(TrajectoryKind kind) {
  return kind_table()[static_cast<int>(kind)].token;
}

TrajectoryKind trajectory_from_token(const std::string& token) {
  for (int i = 0; i < kTrajectoryKindCount; ++i) {
    if (kind_table()[i].token == token) return static_cast<TrajectoryKind>(i);
  }
  throw Error("unknown trajectory token: " + token);
}

double force_coefficient(ForceLevel level) { return kForceCoefficients[static_cast<int>(level)]; }
const std::string& force_phrase(ForceLevel level) { return kForcePhrases[static_cast<int>(level)]; }
const std::string& force_token(ForceLevel level) { return kForceTokens[static_cast<int>(level)]; }

ForceLevel force_from_token(const std::string& token) {
  for (int i = 0; i < kForceLevelCount; ++i) {
    if (kForceTokens[i] == token) return static_cast<ForceLevel>(i);
  }
  throw Error("unknown force token: " + token);
}

std::vector<Template> build_library() {
  std::vector<Template> library;
  library.reserve(kLibrarySize);
  for (int t = 0; t < kTrajectoryKindCount; ++t) {
    for (int f = 0; f < kForceLevelCount; ++f) {
      Template tmpl;
      tmpl.id = 3 * t + f;
      tmpl.trajectory = static_cast<TrajectoryKind>(t);
      tmpl.force = static_cast<ForceLevel>(f);
      tmpl.descriptor_template = "Move the [tool] in a " + trajectory_phrase(tmpl.trajectory) +
                                 " while applying " + force_phrase(tmpl.force) +
                                 " pressure to the [recipient]";
      library.push_back(std::move(tmpl));
    }
  }
  return library;
}

namespace {

// Replaces the single occurrence of `placeholder`; throws if it appears
// zero or more than one time.
void replace_single(std::string& text, const std::string& placeholder,
                    const std::string& value) {
  auto first = text.find(placeholder);
  if (first == std::string::npos) {
    throw MalformedDescriptor("missing placeholder " + placeholder);
  }
  if (text.find(placeholder, first + 1) != std::string::npos) {
    throw MalformedDescriptor("duplicated placeholder " + placeholder);
  }
  text.replace(first, placeholder.size(), value);
}

}  // namespace

std::string fill_descriptor(const Template& tmpl, const SkillLabel& skill) {
  if (skill.verb.empty() || skill.tool.empty() || skill.recipient.empty()) {
    throw MalformedDescriptor("skill fields must be non-empty");
  }
  std::string out = tmpl.descriptor_template;
  replace_single(out, "[tool]", skill.tool);
  replace_single(out, "[recipient]", skill.recipient);
  if (out.find('[') != std::string::npos || out.find(']') != std::string::npos) {
    throw MalformedDescriptor("unexpected bracket after substitution");
  }
  return out;
}

std::vector<Vec2> trajectory_waypoints(TrajectoryKind kind, const ObjectGeometry& geometry,
                                       int steps) {
  if (geometry.half_extents.x <= 0.0 || geometry.half_extents.y <= 0.0) {
    throw DegenerateGeometry("object half-extents must be strictly positive");
  }
  if (steps < 2) throw Error("steps must be >= 2");

  constexpr double kShortSpan = 0.5;  // fraction of extent along the motion axis
  constexpr double kLongSpan = 0.9;
  const double hx = geometry.half_extents.x;
  const double hy = geometry.half_extents.y;
  const Vec2 c = geometry.center;
  const double two_pi = 2.0 * std::numbers::pi;

  std::vector<Vec2> wps;
  wps.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
    Vec2 offset{0.0, 0.0};
    switch (kind) {
      case TrajectoryKind::SmallCircle:
        offset = {kShortSpan * hx * std::cos(two_pi * t), kShortSpan * hy * std::sin(two_pi * t)};
        break;
      case TrajectoryKind::LargeCircle:
        offset = {kLongSpan * hx * std::cos(two_pi * t), kLongSpan * hy * std::sin(two_pi * t)};
        break;
      case TrajectoryKind::ForwardBackShort:
        offset = {0.0, kShortSpan * hy * std::sin(two_pi * t)};
        break;
      case TrajectoryKind::ForwardBackLong:
        offset = {0.0, kLongSpan * hy * std::sin(two_pi * t)};
        break;
      case TrajectoryKind::SideToSideShort:
        offset = {kShortSpan * hx * std::sin(two_pi * t), 0.0};
        break;
      case TrajectoryKind::SideToSideLong:
        offset = {kLongSpan * hx * std::sin(two_pi * t), 0.0};
        break;
      case TrajectoryKind::PushAway:
        offset = {0.0, kLongSpan * hy * (2.0 * t - 1.0)};
        break;
      case TrajectoryKind::PullToward:
        offset = {0.0, kLongSpan * hy * (1.0 - 2.0 * t)};
        break;
      case TrajectoryKind::PushLeft:
        offset = {kLongSpan * hx * (1.0 - 2.0 * t), 0.0};
        break;
      case TrajectoryKind::PushRight:
        offset = {kLongSpan * hx * (2.0 * t - 1.0), 0.0};
        break;
      case TrajectoryKind::ZigzagSweep:
        // Left-to-right sweep with a two-period vertical wiggle.
        offset = {kLongSpan * hx * (2.0 * t - 1.0), 0.6 * hy * std::sin(2.0 * two_pi * t)};
        break;
    }
    wps.push_back(c + offset);
  }
  return wps;
}

}  // namespace tsel
