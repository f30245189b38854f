#pragma once

#include "staygo/geometry.hpp"

namespace staygo {

/// Timing constants of the drone and its workload. All strictly positive
/// except turnaround_s, which may be zero (reversal is modeled as
/// instantaneous by default).
struct TimingParams {
  double sense_s = 1.0;
  double proc_s = 10.0;
  double act_s = 10.0;
  double cruise_mps = 4.0;
  double takeoff_s = 8.0;
  double land_s = 12.0;
  double turnaround_s = 0.0;

  /// Throws std::invalid_argument on non-positive entries.
  void validate() const;
};

/// Analytic flight/return-time model over a mission plan.
class FlightModel {
 public:
  FlightModel(MissionPlan plan, TimingParams params);

  const MissionPlan& plan() const { return plan_; }
  const TimingParams& params() const { return params_; }

  /// Time to fly wp_i -> wp_j at cruising speed, no vertical segments.
  double cruise_time(int i, int j) const;

  /// Leg time wp_i -> wp_j: cruise time, plus take-off time when i = 1, plus
  /// landing time when j = N. The first and last leg are distinct (N >= 3),
  /// so the cases never combine; fly_time(1, N) is rejected.
  double fly_time(int i, int j) const;

  /// Time to fly back to wp_i from wherever the drone is when a computation
  /// started at wp_i finishes, proc_s after departing toward wp_{i+1}. The
  /// drone travels at cruise speed and holds at wp_{i+1} if it gets there
  /// first, so the distance is capped at the leg length. i must be a point
  /// of interest (it needs a successor).
  double return_time(int i, double proc_s) const;

 private:
  void check_index(int i) const;

  MissionPlan plan_;
  TimingParams params_;
};

}  // namespace staygo
