#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmrt/bounds.hpp"
#include "cmrt/class_number.hpp"
#include "cmrt/cm_type.hpp"
#include "cmrt/example61.hpp"
#include "cmrt/integer_matrix.hpp"
#include "json.hpp"

namespace cmrt {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& v);

Json bound_report_json(const BoundInputs& inputs, const std::map<std::uint64_t, Integer>& deltas,
                       const BoundReport& report);

/// One row per CM type on `field`.
Json cmtypes_report_json(const CMFieldSymbol& field, const std::vector<CMType>& types);

Json reflex_report_json(const CMType& type);

Json verify61_report_json(const std::vector<CheckResult>& checks, const C12Result& c12);

Json classnumbers_report_json(const ClassNumberSearch& search);

Json snf_report_json(const IntegerMatrix& m, const SNFResult& snf);

/// Schema checks used for round-trip validation. Each throws InputError
/// naming the first offending key.
void validate_bound_report(const Json& j);
void validate_cmtypes_report(const Json& j);
void validate_reflex_report(const Json& j);
void validate_verify61_report(const Json& j);
void validate_classnumbers_report(const Json& j);
void validate_snf_report(const Json& j);

/// Dispatches on the subcommand name ("bound", "cmtypes", ...).
void validate_report(const std::string& kind, const Json& j);

}  // namespace cmrt
