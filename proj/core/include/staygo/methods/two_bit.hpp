#pragma once

#include <vector>

#include "staygo/decision_method.hpp"

namespace staygo {

/// Classic 2-bit saturating counter per point of interest, states {00, 01,
/// 10, 11}. The most significant bit gives the prediction: counter >= 10
/// predicts go. No event moves the counter toward 11 (go), an event moves it
/// toward 00 (stay), saturating at both ends. Counters start at 01 so the
/// first mission waits everywhere.
class TwoBitMethod final : public DecisionMethod {
 public:
  static constexpr int kInitialCounter = 1;

  std::string_view name() const override { return "twobit"; }

  void mission_begin(const MissionContext& ctx) override;
  Decision decide(int wp_index, double proc_s) override;
  void feedback(int wp_index, Decision d, bool event) override;
  void mission_end() override {}

  nlohmann::json save_state() const override;
  void load_state(const nlohmann::json& j) override;

 private:
  const MissionPlan* plan_ = nullptr;
  std::vector<std::uint8_t> counters_;
};

}  // namespace staygo
