#pragma once

#include <vector>

#include "staygo/decision_method.hpp"

namespace staygo {

struct PerceptronParams {
  double bias = 0.001;     // tips the empty-history case toward stay
  double radius_m = 150.0; // neighborhood boundary D (strict <)
  int history = 2;         // H most recent outcomes per point
  double eta = 0.1;        // learning rate for the correlation weights
  bool multi_pass = false; // compare against all H own outcomes, not just the
                           // most recent one
};

/// One small perceptron per point of interest, fed by the recent outcomes of
/// its spatial neighborhood.
///
/// For point i with neighbors j (every point within radius_m of i, i
/// included) and history slots h = 1..H:
///
///   y_i = B + sum_j sum_h x_{j,h} * q_{j,h} * w_{j,h}
///
/// where x is -1 (no event) / +1 (event), missing slots contribute nothing,
/// and the gravity weight q is proc_s for a -1 input and the return time of
/// point i for a +1 input, so each outcome votes with the delay a wrong
/// decision of that kind would cost. The decision is stay iff y_i > 0.
///
/// Correlation weights are per (point, neighbor, slot). At every mission
/// start they are reset to 1 and retrained in one pass: w moves up by eta if
/// the neighbor outcome agreed with the point's most recent outcome, down by
/// eta otherwise. The reset keeps weights driven by the last H missions only,
/// so stale correlations die with the history window.
///
/// Outcomes reported via feedback are buffered and committed into the history
/// at mission_end; decisions within a mission only ever see completed
/// missions.
class PerceptronMethod final : public DecisionMethod {
 public:
  explicit PerceptronMethod(PerceptronParams params = {});

  std::string_view name() const override { return "perceptron"; }

  void mission_begin(const MissionContext& ctx) override;
  Decision decide(int wp_index, double proc_s) override;
  void feedback(int wp_index, Decision d, bool event) override;
  void mission_end() override;

  nlohmann::json save_state() const override;
  void load_state(const nlohmann::json& j) override;

  /// Raw perceptron sum for a point; exposed so the decision rule is testable
  /// against an independent evaluation of the same state.
  double output(int wp_index, double proc_s) const;

  const PerceptronParams& params() const { return params_; }

 private:
  void bind_plan(const MissionContext& ctx);
  void retrain();
  double& weight(int poi, int neighbor_slot, int h);
  double weight(int poi, int neighbor_slot, int h) const;

  PerceptronParams params_;
  MissionContext ctx_{};
  int points_ = 0;

  // neighbors_[p] lists poi offsets within radius of poi p, own point first.
  std::vector<std::vector<int>> neighbors_;
  // history_[p * H + h]: outcome of poi p in the (h+1)-th previous mission;
  // -1 no event, +1 event, 0 not recorded yet.
  std::vector<signed char> history_;
  // weights_[p]: one weight per (neighbor slot, history slot).
  std::vector<std::vector<double>> weights_;
  std::vector<signed char> pending_;
};

}  // namespace staygo
