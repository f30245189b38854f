#include "staygo/decision_method.hpp"

#include <stdexcept>
#include <string>

namespace staygo {

Decision knowledgeable_decide(double p, double proc_s, double ret_s) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("knowledgeable_decide: p must be in [0, 1]");
  }
  return p * ret_s >= (1.0 - p) * proc_s ? Decision::Stay : Decision::Go;
}

int check_state_envelope(const nlohmann::json& j, std::string_view method) {
  if (!j.is_object() || !j.contains("method") || !j.contains("version")) {
    throw std::invalid_argument(
        "method state: expected an object with 'method' and 'version'");
  }
  if (j.at("method").get<std::string>() != method) {
    throw std::invalid_argument("method state: checkpoint is for '" +
                                j.at("method").get<std::string>() +
                                "', not '" + std::string(method) + "'");
  }
  return j.at("version").get<int>();
}

}  // namespace staygo
