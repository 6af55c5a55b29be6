#pragma once

// nlohmann/json builders shared by serialize.cpp and report.cpp.

#include <json.hpp>

#include "qmermin/report.hpp"
#include "qmermin/serialize.hpp"

namespace qmermin::detail {

using Json = nlohmann::ordered_json;

/// Integer as a JSON number when it fits in 64 bits, otherwise as a decimal string.
Json intJson(Int v);
Json cyclotomicJson(const Cyclotomic& value);
Json operatorJson(const MerminOperator& op);
Json outcomeJson(const HvOutcome& outcome, bool exactOnly = false);
Json eigencheckJson(const EigencheckReport& report);
Json tableRowJson(const TableRow& row, bool exactOnly = false);

}  // namespace qmermin::detail
