#pragma once

#include "staygo/decision_method.hpp"

namespace staygo {

/// Reference method with perfect knowledge of the current underlying event
/// probability at each point. Not an oracle: near p = 0.5 it still loses
/// time against the realized events. Feedback never mutates it.
class KnowledgeableMethod final : public DecisionMethod {
 public:
  std::string_view name() const override { return "knowledgeable"; }

  void mission_begin(const MissionContext& ctx) override;
  Decision decide(int wp_index, double proc_s) override;
  void feedback(int wp_index, Decision d, bool event) override;
  void mission_end() override;

  nlohmann::json save_state() const override;
  void load_state(const nlohmann::json& j) override;

 private:
  MissionContext ctx_{};
};

}  // namespace staygo
