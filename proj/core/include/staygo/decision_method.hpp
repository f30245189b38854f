#pragma once

#include <cstdint>
#include <string_view>

#include <nlohmann/json.hpp>

#include "staygo/event_field.hpp"
#include "staygo/flight_model.hpp"

namespace staygo {

enum class Decision : std::uint8_t { Stay = 0, Go = 1 };

inline const char* to_string(Decision d) {
  return d == Decision::Stay ? "stay" : "go";
}

/// Everything a method may look at when a mission starts. `true_probs` is the
/// underlying probability state of this mission and is only populated for the
/// knowledgeable reference method; learning methods must not rely on it.
struct MissionContext {
  const MissionPlan* plan = nullptr;
  const FlightModel* model = nullptr;
  int mission_index = 0;  // 0-based
  const ProbabilityState* true_probs = nullptr;
};

/// Lifecycle contract of a stay-or-go decision method, as driven by the
/// mission control loop: mission_begin, then per point of interest in visit
/// order exactly one decide followed by exactly one feedback, then
/// mission_end. Methods keep whatever state they like across missions.
class DecisionMethod {
 public:
  virtual ~DecisionMethod() = default;

  virtual std::string_view name() const = 0;

  virtual void mission_begin(const MissionContext& ctx) = 0;

  /// Stay-or-go for waypoint `wp_index` given the processing time in play.
  virtual Decision decide(int wp_index, double proc_s) = 0;

  /// Reports the event outcome at `wp_index` for the decision just taken.
  virtual void feedback(int wp_index, Decision d, bool event) = 0;

  virtual void mission_end() = 0;

  /// Checkpoint as self-describing JSON ({"method", "version", ...}).
  virtual nlohmann::json save_state() const = 0;
  virtual void load_state(const nlohmann::json& j) = 0;
};

/// Expected-time rule shared by the knowledgeable method and the regression
/// baseline: stay iff the expected penalty of going, p * ret_s, is at least
/// the expected penalty of staying, (1 - p) * proc_s. Ties stay.
Decision knowledgeable_decide(double p, double proc_s, double ret_s);

/// Validates a checkpoint envelope and returns the payload version.
int check_state_envelope(const nlohmann::json& j, std::string_view method);

}  // namespace staygo
