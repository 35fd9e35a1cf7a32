#pragma once

// JSON views of the library's result types and a deterministic serializer:
// insertion-ordered keys, floats printed with 17 significant digits,
// non-finite floats written as the strings "inf", "-inf", "nan".

#include <json.hpp>

#include <string>

#include "anosov/conditions.hpp"
#include "anosov/groups.hpp"
#include "anosov/l2g.hpp"
#include "anosov/symspace.hpp"

namespace anosov {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

std::string dump_json(const Json& j, int indent = 2);

Json log_scalar_json(const LogScalar& x);
Json to_json(const Condition& c);
Json to_json(const std::vector<Condition>& conditions);
Json to_json(const CheckReport& r);
Json to_json(const ModelConstants& mc);
Json to_json(const MorseQIParams& p);
Json to_json(const StraightSpacedParams& p);
Json to_json(const QuadrupleParams& p);
Json to_json(const GlobalParams& g);
Json to_json(const L2GSolution& s);
Json to_json(const VerifyReport& r);

}  // namespace anosov
