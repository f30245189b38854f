#include "staygo/methods/two_bit.hpp"

#include <stdexcept>

namespace staygo {

void TwoBitMethod::mission_begin(const MissionContext& ctx) {
  if (ctx.plan == nullptr) {
    throw std::invalid_argument("twobit: mission context incomplete");
  }
  plan_ = ctx.plan;
  if (counters_.empty()) {
    counters_.assign(static_cast<std::size_t>(plan_->poi_count()),
                     kInitialCounter);
  } else if (static_cast<int>(counters_.size()) != plan_->poi_count()) {
    throw std::invalid_argument("twobit: plan size changed mid-run");
  }
}

Decision TwoBitMethod::decide(int wp_index, double) {
  const auto p = static_cast<std::size_t>(plan_->poi_offset(wp_index));
  return counters_[p] >= 2 ? Decision::Go : Decision::Stay;
}

void TwoBitMethod::feedback(int wp_index, Decision, bool event) {
  const auto p = static_cast<std::size_t>(plan_->poi_offset(wp_index));
  std::uint8_t& c = counters_[p];
  if (event) {
    if (c > 0) --c;
  } else {
    if (c < 3) ++c;
  }
}

nlohmann::json TwoBitMethod::save_state() const {
  return {{"method", "twobit"}, {"version", 1}, {"counters", counters_}};
}

void TwoBitMethod::load_state(const nlohmann::json& j) {
  check_state_envelope(j, "twobit");
  counters_ = j.at("counters").get<std::vector<std::uint8_t>>();
  for (auto c : counters_) {
    if (c > 3) throw std::invalid_argument("twobit: counter out of range");
  }
}

}  // namespace staygo
