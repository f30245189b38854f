#pragma once

#include <span>
#include <vector>

namespace staygo {

/// A mission waypoint. Indices are 1-based and contiguous; wp_1 and wp_N are
/// the take-off and landing points, everything in between is a point of
/// interest. Coordinates are planar meters (altitude is folded into the
/// take-off/landing time constants).
struct Waypoint {
  int index = 0;
  double x = 0.0;
  double y = 0.0;
};

double distance(const Waypoint& a, const Waypoint& b);

/// Rectangular survey grid of points of interest.
struct GridSpec {
  int rows = 9;
  int cols = 9;
  double spacing_m = 50.0;
  double origin_x = 0.0;
  double origin_y = 0.0;

  int point_count() const { return rows * cols; }
  int ring_count() const;
};

/// Concentric-ring index of a grid waypoint: Chebyshev distance from the grid
/// center (ring 0) out to the periphery. Throws std::invalid_argument if the
/// waypoint does not lie on a grid node.
int ring_index(const Waypoint& wp, const GridSpec& grid);

/// Ordered waypoint sequence. Validates index contiguity and N >= 3 on
/// construction.
class MissionPlan {
 public:
  explicit MissionPlan(std::vector<Waypoint> waypoints);

  int size() const { return static_cast<int>(waypoints_.size()); }
  int poi_count() const { return size() - 2; }

  /// 1-based waypoint access.
  const Waypoint& at(int index) const;
  std::span<const Waypoint> waypoints() const { return waypoints_; }

  bool is_point_of_interest(int index) const {
    return index >= 2 && index <= size() - 1;
  }

  /// Maps waypoint index (2..N-1) to a 0-based point-of-interest offset.
  int poi_offset(int wp_index) const;

  /// Boustrophedon sweep over the grid with take-off/landing at (home_x,
  /// home_y): wp_1 = home, wp_2..wp_{N-1} = grid nodes row by row alternating
  /// direction, wp_N = home again.
  static MissionPlan serpentine(const GridSpec& grid, double home_x,
                                double home_y);

 private:
  std::vector<Waypoint> waypoints_;
};

}  // namespace staygo
