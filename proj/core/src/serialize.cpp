#include "qmermin/serialize.hpp"

#include <limits>

#include "json_io.hpp"

namespace qmermin {

namespace detail {

Json intJson(Int v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return toString(v);
}

Json cyclotomicJson(const Cyclotomic& value) {
  Json coeffs = Json::array();
  for (Int c : value.coeffs()) coeffs.push_back(intJson(c));
  const auto z = value.toComplex();
  return Json{{"coeffs", coeffs}, {"float", {z.real(), z.imag()}}};
}

Json operatorJson(const MerminOperator& op) {
  Json terms = Json::array();
  for (const auto& t : op.terms()) terms.push_back({{"word", t.word.str()}, {"weightExponent", t.weight.exponent()}});
  return Json{{"N", op.n()}, {"k", op.k()}, {"terms", terms}, {"quantumValue", op.quantumValue()}};
}

Json outcomeJson(const HvOutcome& o, bool exactOnly) {
  Json j;
  j["N"] = o.n;
  j["k"] = o.k;
  j["method"] = toString(o.method);
  if (const auto m = o.maxMagnitudeSquared.asInteger()) {
    j["maxMagnitudeSquared"] = intJson(*m);
  } else {
    j["maxMagnitudeSquared"] = cyclotomicJson(o.maxMagnitudeSquared)["coeffs"];
  }
  if (!exactOnly) j["maxMagnitude"] = o.maxMagnitude;
  j["quantumValue"] = o.quantumValue;
  if (!exactOnly) j["ratioA"] = o.ratioA;
  Json argmax = Json::array();
  for (const auto& a : o.argmax) argmax.push_back(a.exponents());
  j["argmax"] = argmax;
  j["argmaxCount"] = o.argmaxCount ? intJson(*o.argmaxCount) : Json(nullptr);
  j["convention"] = toString(o.convention);
  if (o.theorem) {
    Json t;
    t["uniformSquared"] = intJson(o.theorem->uniformSquared);
    t["singleDepartureSquared"] = intJson(o.theorem->singleDepartureSquared);
    t["winner"] = toString(o.theorem->winner);
    if (!exactOnly && o.theorem->collinearUniform) {
      t["collinearUniform"] = *o.theorem->collinearUniform;
      t["collinearSingleDeparture"] = *o.theorem->collinearSingleDeparture;
    }
    j["theorem"] = t;
  }
  return j;
}

Json eigencheckJson(const EigencheckReport& r) {
  Json j;
  j["word"] = r.word.str();
  j["k"] = r.k;
  j["weightExponent"] = r.weight.exponent();
  j["isEigenstate"] = r.eigenvalue.has_value();
  j["eigenvalue"] = r.eigenvalue ? cyclotomicJson(*r.eigenvalue) : Json(nullptr);
  return j;
}

Json tableRowJson(const TableRow& row, bool exactOnly) {
  Json j;
  j["N"] = row.n;
  j["kSet"] = row.kSet;
  j["M_Q"] = row.mQ;
  j["M_HVM_squared"] = intJson(row.mHvmSquared);
  j["M_HVM"] = row.mHvmExact;
  if (!exactOnly) {
    j["M_HVM_float"] = row.mHvm;
    j["ratioA"] = row.ratioA;
  }
  j["methods"] = row.methods;
  return j;
}

}  // namespace detail

std::string toJson(const Cyclotomic& value) { return detail::cyclotomicJson(value).dump(); }
std::string toJson(const MerminOperator& op) { return detail::operatorJson(op).dump(); }
std::string toJson(const HvOutcome& outcome) { return detail::outcomeJson(outcome).dump(); }
std::string toJson(const EigencheckReport& report) { return detail::eigencheckJson(report).dump(); }

}  // namespace qmermin
