#include "staygo/flight_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace staygo {

void TimingParams::validate() const {
  auto require_positive = [](double v, const char* name) {
    if (!(v > 0.0)) {
      throw std::invalid_argument(std::string("TimingParams: ") + name +
                                  " must be strictly positive");
    }
  };
  require_positive(sense_s, "sense_s");
  require_positive(proc_s, "proc_s");
  require_positive(act_s, "act_s");
  require_positive(cruise_mps, "cruise_mps");
  require_positive(takeoff_s, "takeoff_s");
  require_positive(land_s, "land_s");
  if (turnaround_s < 0.0) {
    throw std::invalid_argument("TimingParams: turnaround_s must be >= 0");
  }
}

FlightModel::FlightModel(MissionPlan plan, TimingParams params)
    : plan_(std::move(plan)), params_(params) {
  params_.validate();
}

void FlightModel::check_index(int i) const {
  if (i < 1 || i > plan_.size()) {
    throw std::invalid_argument("FlightModel: waypoint index " +
                                std::to_string(i) + " out of range");
  }
}

double FlightModel::cruise_time(int i, int j) const {
  check_index(i);
  check_index(j);
  return distance(plan_.at(i), plan_.at(j)) / params_.cruise_mps;
}

double FlightModel::fly_time(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) {
    throw std::invalid_argument("FlightModel: fly_time requires i != j");
  }
  if (i == 1 && j == plan_.size()) {
    throw std::invalid_argument(
        "FlightModel: a leg cannot be both the first and the last");
  }
  double t = cruise_time(i, j);
  if (i == 1) t += params_.takeoff_s;
  if (j == plan_.size()) t += params_.land_s;
  return t;
}

double FlightModel::return_time(int i, double proc_s) const {
  if (!plan_.is_point_of_interest(i)) {
    throw std::invalid_argument(
        "FlightModel: return_time requires a point of interest with a "
        "successor, got waypoint " +
        std::to_string(i));
  }
  if (proc_s < 0.0) {
    throw std::invalid_argument("FlightModel: proc_s must be >= 0");
  }
  const double leg = distance(plan_.at(i), plan_.at(i + 1));
  const double traveled = std::min(params_.cruise_mps * proc_s, leg);
  const double t = traveled / params_.cruise_mps;
  return t > 0.0 ? t + params_.turnaround_s : t;
}

}  // namespace staygo
