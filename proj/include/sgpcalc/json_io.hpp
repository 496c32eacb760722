#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "ideal.hpp"
#include "invariants.hpp"
#include "propositions.hpp"
#include "semigroup.hpp"

namespace sgp {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

// {sporadic, threshold}: the unique normal form of an ideal.
inline json json_normal_form(const FractionalIdeal& e) {
  return json{{"sporadic", e.sporadic()}, {"threshold", e.threshold()}};
}

inline json json_ideal(const FractionalIdeal& e) {
  json j = json_normal_form(e);
  j["generators"] = e.minimal_generators();
  j["mu"] = e.mu();
  if (e.is_integral()) j["colength"] = e.colength();
  return j;
}

inline json json_semigroup(const NumericalSemigroup& s) {
  return json{{"generators", s.minimal_generators()},
              {"frobenius", s.frobenius()},
              {"gaps", s.gaps()},
              {"pf", s.pseudo_frobenius()},
              {"type", s.type()},
              {"symmetric", s.symmetric()},
              {"nearly_gorenstein", nearly_gorenstein(s)}};
}

inline json json_invariants(const InvariantReport& r) {
  json j{{"e", r.multiplicity},
         {"embdim", r.embedding_dimension},
         {"eli", r.elias},
         {"ulr", r.ulrich},
         {"gll_mono", r.gll.g},
         {"gll_exact_flag", r.gll_exact},
         {"gr_cm", r.gr_cm}};
  if (r.has_gorenstein_index) j["index"] = r.gorenstein_index;
  return j;
}

inline json json_classification(const ClassificationReport& r) {
  json colon = json::array();
  for (const auto& [x, ok] : r.colon_criteria)
    colon.push_back(json{{"x", x}, {"holds", ok}});
  json evidence{{"type_quotient", r.type_quotient},
                {"type_ideal", r.type_ideal},
                {"mu", r.mu},
                {"ulrich_witness_ok", r.witness_ok},
                {"socle_criterion", r.socle_criterion},
                {"colon_criteria", colon}};
  if (r.m_e) evidence["m_E"] = json_normal_form(*r.m_e);
  if (r.colon_rm) evidence["colon_E_m"] = json_normal_form(*r.colon_rm);
  if (r.m_colon) evidence["m_colon_E_m"] = json_normal_form(*r.m_colon);
  return json{{"elias", r.elias},
              {"burch", r.burch},
              {"ulrich", r.ulrich},
              {"evidence", evidence}};
}

inline json json_evidence(const Evidence& ev) {
  json j = json::object();
  for (const auto& [key, value] : ev) {
    if (std::holds_alternative<bool>(value))
      j[key] = std::get<bool>(value);
    else if (std::holds_alternative<Int>(value))
      j[key] = std::get<Int>(value);
    else if (std::holds_alternative<FractionalIdeal>(value))
      j[key] = json_normal_form(std::get<FractionalIdeal>(value));
    else
      j[key] = std::get<std::vector<Int>>(value);
  }
  return j;
}

inline json json_outcome(const PropOutcome& o) {
  return json{{"id", prop_name(o.id)},
              {"hypotheses_hold", o.hypotheses_hold},
              {"conclusion_holds", o.conclusion_holds},
              {"violation", o.violation()},
              {"evidence", json_evidence(o.evidence)}};
}

inline json json_instance(const PropInstance& inst) {
  json j = json::object();
  if (inst.i) j["I"] = json_normal_form(*inst.i);
  if (inst.j) j["J"] = json_normal_form(*inst.j);
  if (inst.k) j["K"] = json_normal_form(*inst.k);
  if (inst.x) j["x"] = *inst.x;
  return j;
}

// Reports are newline-terminated UTF-8 with keys in sorted order (objects
// are backed by std::map).
inline std::string json_text(const json& j, int indent = 2) {
  return j.dump(indent) + "\n";
}

inline std::string json_text_compact(const json& j) { return j.dump() + "\n"; }

}  // namespace sgp
