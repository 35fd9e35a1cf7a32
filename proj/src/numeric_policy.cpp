#include "anosov/numeric_policy.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace anosov {
namespace {

NumericPolicy initial_policy() {
  NumericPolicy policy;
  if (const char* env = std::getenv("ANOSOV_CERT_NUMERIC_SLACK")) {
    try {
      std::size_t used = 0;
      const double slack = std::stod(env, &used);
      if (used != std::string(env).size() || !(slack >= 0.0)) throw std::invalid_argument(env);
      policy.comparison_slack = slack;
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("ANOSOV_CERT_NUMERIC_SLACK is not a nonnegative number: ") + env);
    }
  }
  return policy;
}

NumericPolicy& mutable_policy() {
  static NumericPolicy policy = initial_policy();
  return policy;
}

}  // namespace

const NumericPolicy& numeric_policy() { return mutable_policy(); }

void set_numeric_policy(const NumericPolicy& policy) { mutable_policy() = policy; }

}  // namespace anosov
