#pragma once

// JSON serialization of the exchanged records. The layouts are documented in
// docs/json-schema.md; all output is UTF-8 with keys in a fixed order.

#include <string>

#include "qmermin/cyclotomic.hpp"
#include "qmermin/ghz.hpp"
#include "qmermin/hv.hpp"
#include "qmermin/mermin.hpp"

namespace qmermin {

struct EigencheckReport {
  ObservableWord word;
  int k = 0;
  Phase weight;
  std::optional<Cyclotomic> eigenvalue;  ///< of the weighted word; nullopt if not an eigenstate
};

std::string toJson(const Cyclotomic& value);
std::string toJson(const MerminOperator& op);
std::string toJson(const HvOutcome& outcome);
std::string toJson(const EigencheckReport& report);

}  // namespace qmermin
