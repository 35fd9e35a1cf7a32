#pragma once

#include <string>
#include <vector>

#include "anosov/log_scalar.hpp"

namespace anosov {

enum class Relation { LessEqual, Less };

/// One inequality `lhs <= rhs` (or `<`) evaluated exactly as stated.
/// `margin` is rhs - lhs in double precision (may be +-inf).
struct Condition {
  std::string name;
  LogScalar lhs;
  LogScalar rhs;
  Relation relation = Relation::LessEqual;
  double margin = 0.0;
  bool pass = false;
};

Condition make_condition(std::string name, const LogScalar& lhs, const LogScalar& rhs,
                         Relation relation = Relation::LessEqual);
Condition make_condition(std::string name, double lhs, double rhs, Relation relation = Relation::LessEqual);

bool all_pass(const std::vector<Condition>& conditions);
/// First failing condition, or nullptr.
const Condition* first_failure(const std::vector<Condition>& conditions);

/// A bound value together with the preconditions under which it is valid.
/// The value is computed even when a precondition fails.
struct BoundResult {
  LogScalar value;
  std::vector<Condition> preconditions;

  bool valid() const { return all_pass(preconditions); }
};

}  // namespace anosov
