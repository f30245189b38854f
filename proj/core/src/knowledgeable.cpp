#include "staygo/methods/knowledgeable.hpp"

#include <stdexcept>

namespace staygo {

void KnowledgeableMethod::mission_begin(const MissionContext& ctx) {
  if (ctx.plan == nullptr || ctx.model == nullptr) {
    throw std::invalid_argument("knowledgeable: mission context incomplete");
  }
  if (ctx.true_probs == nullptr) {
    throw std::invalid_argument(
        "knowledgeable: the true probability state is required");
  }
  if (static_cast<int>(ctx.true_probs->probs.size()) != ctx.plan->poi_count()) {
    throw std::invalid_argument(
        "knowledgeable: probability state does not match the plan");
  }
  ctx_ = ctx;
}

Decision KnowledgeableMethod::decide(int wp_index, double proc_s) {
  const double p = ctx_.true_probs->probs[static_cast<std::size_t>(
      ctx_.plan->poi_offset(wp_index))];
  return knowledgeable_decide(p, proc_s, ctx_.model->return_time(wp_index, proc_s));
}

void KnowledgeableMethod::feedback(int, Decision, bool) {
  // Perfect knowledge; outcomes teach it nothing.
}

void KnowledgeableMethod::mission_end() { ctx_.true_probs = nullptr; }

nlohmann::json KnowledgeableMethod::save_state() const {
  return {{"method", "knowledgeable"}, {"version", 1}};
}

void KnowledgeableMethod::load_state(const nlohmann::json& j) {
  check_state_envelope(j, "knowledgeable");
}

}  // namespace staygo
