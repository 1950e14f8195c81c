#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tsel {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

/// Natural-language task triple: what to do, with what, to what.
struct SkillLabel {
  std::string verb;
  std::string tool;
  std::string recipient;
};

/// The 11 object-centric trajectory shapes a template can follow.
enum class TrajectoryKind : int {
  SmallCircle = 0,
  LargeCircle,
  ForwardBackShort,
  ForwardBackLong,
  SideToSideShort,
  SideToSideLong,
  PushAway,
  PullToward,
  PushLeft,
  PushRight,
  ZigzagSweep,
};

inline constexpr int kTrajectoryKindCount = 11;
inline constexpr std::array<TrajectoryKind, kTrajectoryKindCount> kAllTrajectoryKinds = {
    TrajectoryKind::SmallCircle,      TrajectoryKind::LargeCircle,
    TrajectoryKind::ForwardBackShort, TrajectoryKind::ForwardBackLong,
    TrajectoryKind::SideToSideShort,  TrajectoryKind::SideToSideLong,
    TrajectoryKind::PushAway,         TrajectoryKind::PullToward,
    TrajectoryKind::PushLeft,         TrajectoryKind::PushRight,
    TrajectoryKind::ZigzagSweep,
};

/// Human-readable phrase embedded in descriptors, unique per kind.
const std::string& trajectory_phrase(TrajectoryKind kind);
/// Stable token name used in serialized form (e.g. "small_circle").
const std::string& trajectory_token(TrajectoryKind kind);
TrajectoryKind trajectory_from_token(const std::string& token);

enum class ForceLevel : int { Low = 0, Medium, High };

inline constexpr int kForceLevelCount = 3;

/// Fraction of contact effect the simulator applies; strictly increasing with level.
double force_coefficient(ForceLevel level);
/// Pressure word used in descriptors ("light", "medium", "firm").
const std::string& force_phrase(ForceLevel level);
const std::string& force_token(ForceLevel level);
ForceLevel force_from_token(const std::string& token);

/// One of the 33 selectable behaviors: a trajectory shape plus a force level,
/// with a descriptor containing [tool] and [recipient] placeholders.
struct Template {
  int id = 0;  // 3 * trajectory_index + force_index
  TrajectoryKind trajectory = TrajectoryKind::SmallCircle;
  ForceLevel force = ForceLevel::Low;
  std::string descriptor_template;
};

/// Axis-aligned recipient object in scene pixels.
struct ObjectGeometry {
  Vec2 center;
  Vec2 half_extents;
  std::string label;
};

inline constexpr int kLibrarySize = kTrajectoryKindCount * kForceLevelCount;

/// Enumerates all 33 templates in id order.
std::vector<Template> build_library();

/// Substitutes [tool] and [recipient]; throws MalformedDescriptor unless each
/// placeholder appears exactly once.
std::string fill_descriptor(const Template& tmpl, const SkillLabel& skill);

/// Object-centered, object-scaled waypoint list for one trajectory shape.
/// Throws DegenerateGeometry if a half-extent is not strictly positive.
std::vector<Vec2> trajectory_waypoints(TrajectoryKind kind, const ObjectGeometry& geometry,
                                       int steps);

}  // namespace tsel
