#include "staygo/methods/perceptron.hpp"

#include <stdexcept>

namespace staygo {

PerceptronMethod::PerceptronMethod(PerceptronParams params)
    : params_(params) {
  if (params_.history < 1) {
    throw std::invalid_argument("perceptron: history must be >= 1");
  }
  if (params_.radius_m <= 0.0 || params_.eta < 0.0) {
    throw std::invalid_argument("perceptron: bad radius or learning rate");
  }
}

void PerceptronMethod::bind_plan(const MissionContext& ctx) {
  points_ = ctx.plan->poi_count();
  const int h = params_.history;

  neighbors_.assign(static_cast<std::size_t>(points_), {});
  for (int p = 0; p < points_; ++p) {
    auto& nb = neighbors_[static_cast<std::size_t>(p)];
    nb.push_back(p);  // own point first
    for (int q = 0; q < points_; ++q) {
      if (q == p) continue;
      if (distance(ctx.plan->at(p + 2), ctx.plan->at(q + 2)) <
          params_.radius_m) {
        nb.push_back(q);
      }
    }
  }

  history_.assign(static_cast<std::size_t>(points_ * h), 0);
  pending_.assign(static_cast<std::size_t>(points_), 0);
  weights_.resize(static_cast<std::size_t>(points_));
  for (int p = 0; p < points_; ++p) {
    weights_[static_cast<std::size_t>(p)].assign(
        neighbors_[static_cast<std::size_t>(p)].size() *
            static_cast<std::size_t>(h),
        1.0);
  }
}

double& PerceptronMethod::weight(int poi, int neighbor_slot, int h) {
  return weights_[static_cast<std::size_t>(poi)]
                 [static_cast<std::size_t>(neighbor_slot) *
                      static_cast<std::size_t>(params_.history) +
                  static_cast<std::size_t>(h)];
}

double PerceptronMethod::weight(int poi, int neighbor_slot, int h) const {
  return const_cast<PerceptronMethod*>(this)->weight(poi, neighbor_slot, h);
}

void PerceptronMethod::mission_begin(const MissionContext& ctx) {
  if (ctx.plan == nullptr || ctx.model == nullptr) {
    throw std::invalid_argument("perceptron: mission context incomplete");
  }
  if (neighbors_.empty()) {
    bind_plan(ctx);
  } else if (ctx.plan->poi_count() != points_) {
    throw std::invalid_argument("perceptron: plan size changed mid-run");
  }
  ctx_ = ctx;
  retrain();
}

void PerceptronMethod::retrain() {
  const int h_max = params_.history;
  for (auto& w : weights_) w.assign(w.size(), 1.0);

  for (int p = 0; p < points_; ++p) {
    const auto& nb = neighbors_[static_cast<std::size_t>(p)];
    // Targets: the point's own most recent outcome, or all H of them in the
    // multi-pass variant.
    const int passes = params_.multi_pass ? h_max : 1;
    for (int g = 0; g < passes; ++g) {
      const signed char target = history_[static_cast<std::size_t>(p * h_max + g)];
      if (target == 0) continue;
      for (std::size_t slot = 0; slot < nb.size(); ++slot) {
        const int j = nb[slot];
        for (int h = 0; h < h_max; ++h) {
          const signed char x = history_[static_cast<std::size_t>(j * h_max + h)];
          if (x == 0) continue;
          weight(p, static_cast<int>(slot), h) +=
              x == target ? params_.eta : -params_.eta;
        }
      }
    }
  }
}

double PerceptronMethod::output(int wp_index, double proc_s) const {
  const int p = ctx_.plan->poi_offset(wp_index);
  const double ret_s = ctx_.model->return_time(wp_index, proc_s);
  const int h_max = params_.history;

  double y = params_.bias;
  const auto& nb = neighbors_[static_cast<std::size_t>(p)];
  for (std::size_t slot = 0; slot < nb.size(); ++slot) {
    const int j = nb[slot];
    for (int h = 0; h < h_max; ++h) {
      const signed char x = history_[static_cast<std::size_t>(j * h_max + h)];
      if (x == 0) continue;
      const double q = x < 0 ? proc_s : ret_s;
      y += static_cast<double>(x) * q * weight(p, static_cast<int>(slot), h);
    }
  }
  return y;
}

Decision PerceptronMethod::decide(int wp_index, double proc_s) {
  return output(wp_index, proc_s) > 0.0 ? Decision::Stay : Decision::Go;
}

void PerceptronMethod::feedback(int wp_index, Decision, bool event) {
  pending_[static_cast<std::size_t>(ctx_.plan->poi_offset(wp_index))] =
      event ? 1 : -1;
}

void PerceptronMethod::mission_end() {
  const int h_max = params_.history;
  for (int p = 0; p < points_; ++p) {
    for (int h = h_max - 1; h > 0; --h) {
      history_[static_cast<std::size_t>(p * h_max + h)] =
          history_[static_cast<std::size_t>(p * h_max + h - 1)];
    }
    history_[static_cast<std::size_t>(p * h_max)] =
        pending_[static_cast<std::size_t>(p)];
    pending_[static_cast<std::size_t>(p)] = 0;
  }
}

nlohmann::json PerceptronMethod::save_state() const {
  nlohmann::json j;
  j["method"] = "perceptron";
  j["version"] = 1;
  j["params"] = {{"bias", params_.bias},
                 {"radius_m", params_.radius_m},
                 {"history", params_.history},
                 {"eta", params_.eta},
                 {"multi_pass", params_.multi_pass}};
  j["points"] = points_;
  j["neighbors"] = neighbors_;
  j["history"] = history_;
  j["weights"] = weights_;
  j["pending"] = pending_;
  return j;
}

void PerceptronMethod::load_state(const nlohmann::json& j) {
  check_state_envelope(j, "perceptron");
  const auto& p = j.at("params");
  params_.bias = p.at("bias").get<double>();
  params_.radius_m = p.at("radius_m").get<double>();
  params_.history = p.at("history").get<int>();
  params_.eta = p.at("eta").get<double>();
  params_.multi_pass = p.at("multi_pass").get<bool>();
  points_ = j.at("points").get<int>();
  neighbors_ = j.at("neighbors").get<std::vector<std::vector<int>>>();
  history_ = j.at("history").get<std::vector<signed char>>();
  weights_ = j.at("weights").get<std::vector<std::vector<double>>>();
  pending_ = j.at("pending").get<std::vector<signed char>>();

  if (static_cast<int>(neighbors_.size()) != points_ ||
      static_cast<int>(history_.size()) != points_ * params_.history ||
      static_cast<int>(weights_.size()) != points_) {
    throw std::invalid_argument("perceptron: inconsistent checkpoint");
  }
  for (int q = 0; q < points_; ++q) {
    if (weights_[static_cast<std::size_t>(q)].size() !=
        neighbors_[static_cast<std::size_t>(q)].size() *
            static_cast<std::size_t>(params_.history)) {
      throw std::invalid_argument("perceptron: inconsistent checkpoint");
    }
  }
}

}  // namespace staygo
