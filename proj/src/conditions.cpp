#include "anosov/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "anosov/numeric_policy.hpp"

namespace anosov {

Condition make_condition(std::string name, const LogScalar& lhs, const LogScalar& rhs, Relation relation) {
  Condition c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.relation = relation;
  const double l = lhs.to_double();
  const double r = rhs.to_double();
  c.margin = (std::isinf(l) && std::isinf(r) && l == r) ? 0.0 : r - l;
  if (relation == Relation::Less) {
    c.pass = lhs < rhs;
  } else {
    c.pass = less_equal_with_slack(lhs, rhs);
  }
  return c;
}

Condition make_condition(std::string name, double lhs, double rhs, Relation relation) {
  return make_condition(std::move(name), LogScalar::from_double(lhs), LogScalar::from_double(rhs), relation);
}

bool all_pass(const std::vector<Condition>& conditions) {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.pass; });
}

const Condition* first_failure(const std::vector<Condition>& conditions) {
  for (const auto& c : conditions)
    if (!c.pass) return &c;
  return nullptr;
}

}  // namespace anosov
