#include "staygo/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace staygo {

double distance(const Waypoint& a, const Waypoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

namespace {

// Distance from k to the closed integer range [lo, hi].
int range_distance(int k, int lo, int hi) {
  if (k < lo) return lo - k;
  if (k > hi) return k - hi;
  return 0;
}

// Snaps a coordinate to a grid cell index, or -1 if it is not on the lattice.
int grid_cell(double coord, double origin, double spacing, int count) {
  const double rel = (coord - origin) / spacing;
  const double snapped = std::round(rel);
  if (std::abs(rel - snapped) > 1e-9) return -1;
  const int cell = static_cast<int>(snapped);
  if (cell < 0 || cell >= count) return -1;
  return cell;
}

}  // namespace

int GridSpec::ring_count() const {
  const GridSpec& g = *this;
  const int r = range_distance(0, (g.rows - 1) / 2, g.rows / 2);
  const int c = range_distance(0, (g.cols - 1) / 2, g.cols / 2);
  return std::max(r, c) + 1;
}

int ring_index(const Waypoint& wp, const GridSpec& grid) {
  const int col = grid_cell(wp.x, grid.origin_x, grid.spacing_m, grid.cols);
  const int row = grid_cell(wp.y, grid.origin_y, grid.spacing_m, grid.rows);
  if (col < 0 || row < 0) {
    throw std::invalid_argument("ring_index: waypoint (" +
                                std::to_string(wp.x) + ", " +
                                std::to_string(wp.y) + ") is not on the grid");
  }
  // Chebyshev distance from the central cell (or central 2x2 block when a
  // dimension is even).
  const int dr = range_distance(row, (grid.rows - 1) / 2, grid.rows / 2);
  const int dc = range_distance(col, (grid.cols - 1) / 2, grid.cols / 2);
  return std::max(dr, dc);
}

MissionPlan::MissionPlan(std::vector<Waypoint> waypoints)
    : waypoints_(std::move(waypoints)) {
  if (waypoints_.size() < 3) {
    throw std::invalid_argument("MissionPlan: need at least 3 waypoints");
  }
  for (std::size_t k = 0; k < waypoints_.size(); ++k) {
    if (waypoints_[k].index != static_cast<int>(k) + 1) {
      throw std::invalid_argument(
          "MissionPlan: waypoint indices must be contiguous starting at 1");
    }
  }
}

const Waypoint& MissionPlan::at(int index) const {
  if (index < 1 || index > size()) {
    throw std::invalid_argument("MissionPlan: waypoint index " +
                                std::to_string(index) + " out of range 1.." +
                                std::to_string(size()));
  }
  return waypoints_[static_cast<std::size_t>(index) - 1];
}

int MissionPlan::poi_offset(int wp_index) const {
  if (!is_point_of_interest(wp_index)) {
    throw std::invalid_argument("MissionPlan: waypoint " +
                                std::to_string(wp_index) +
                                " is not a point of interest");
  }
  return wp_index - 2;
}

MissionPlan MissionPlan::serpentine(const GridSpec& grid, double home_x,
                                    double home_y) {
  std::vector<Waypoint> wps;
  wps.reserve(static_cast<std::size_t>(grid.point_count()) + 2);
  int idx = 1;
  wps.push_back({idx++, home_x, home_y});
  for (int r = 0; r < grid.rows; ++r) {
    for (int k = 0; k < grid.cols; ++k) {
      const int c = (r % 2 == 0) ? k : grid.cols - 1 - k;
      wps.push_back({idx++, grid.origin_x + c * grid.spacing_m,
                     grid.origin_y + r * grid.spacing_m});
    }
  }
  wps.push_back({idx++, home_x, home_y});
  return MissionPlan(std::move(wps));
}

}  // namespace staygo
