#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "semigroup.hpp"

namespace sgp {

// Elias: the socle of R/E is as large as duality allows, i.e. the two type
// counts agree.  Only meaningful for integral proper E.
inline bool is_elias(const FractionalIdeal& e) {
  return type_of_quotient(e) == type_of_ideal(e);
}

// Sufficient test for Elias: the whole quotient (E : m) stays inside the
// ring.
inline bool elias_socle_criterion(const FractionalIdeal& e) {
  if (!e.is_integral()) throw NotIntegralError();
  return colon_q(e, FractionalIdeal::maximal(e.parent())).is_integral();
}

// Sufficient test for Elias keyed to one member x: x lands back in
// m * ((x) : E).
inline bool elias_colon_criterion(const FractionalIdeal& e, Int x) {
  if (!e.is_integral()) throw NotIntegralError();
  const NumericalSemigroup& s = e.parent();
  if (x <= 0) throw NonPositiveError(x);
  if (!s.contains(x)) throw NotInSemigroupError(x);
  const FractionalIdeal q = colon_q(FractionalIdeal::principal(s, x), e);
  return product(FractionalIdeal::maximal(s), q).member(x);
}

// For a minimal generator x of S lying in E, the colon criterion holds
// exactly when E is the principal ideal on x; reports whether that
// equivalence comes out as stated.
inline bool criterion_3_14(const FractionalIdeal& e, Int x) {
  if (!e.is_integral()) throw NotIntegralError();
  const NumericalSemigroup& s = e.parent();
  const auto& mg = s.minimal_generators();
  if (!std::binary_search(mg.begin(), mg.end(), x))
    throw PreconditionFailedError("x must be a minimal generator of the semigroup");
  if (!e.member(x))
    throw PreconditionFailedError("x must be a member of the ideal");
  const bool criterion = elias_colon_criterion(e, x);
  const bool principal = (e == FractionalIdeal::principal(s, x));
  return criterion == principal;
}

// Burch comparison without the properness gate; total on integral ideals.
inline bool burch_raw(const FractionalIdeal& e) {
  const FractionalIdeal m = FractionalIdeal::maximal(e.parent());
  return product(m, e) != product(m, colon_r(e, m));
}

// Burch: m*E differs from m*(E : m), the colon taken inside the ring.
inline bool is_burch(const FractionalIdeal& e) {
  if (!e.is_integral()) throw NotIntegralError();
  if (!e.is_proper()) throw ImproperIdealError();
  return burch_raw(e);
}

// Ulrich: the module needs as many generators as the multiplicity allows.
inline bool is_ulrich(const FractionalIdeal& e) {
  if (!e.is_integral()) throw NotIntegralError();
  return e.mu() == e.parent().multiplicity();
}

// The multiplicity element witnesses Ulrich-ness: m*E == (e)*E.
inline bool ulrich_witness_ok(const FractionalIdeal& e) {
  const NumericalSemigroup& s = e.parent();
  return product(FractionalIdeal::maximal(s), e) ==
         product(FractionalIdeal::principal(s, s.multiplicity()), e);
}

struct ClassificationReport {
  bool elias = false;
  Int type_quotient = 0;
  Int type_ideal = 0;
  bool burch = false;
  bool ulrich = false;
  Int mu = 0;
  bool witness_ok = false;
  bool socle_criterion = false;
  std::vector<std::pair<Int, bool>> colon_criteria;  // (x, verdict)
  std::optional<FractionalIdeal> m_e;        // m * E
  std::optional<FractionalIdeal> colon_rm;   // (E : m) in the ring
  std::optional<FractionalIdeal> m_colon;    // m * (E : m)
};

// Full classification of an integral proper ideal.  The colon criterion is
// evaluated at each witness; when none are supplied, the minimal generators
// of E and of S are used.
inline ClassificationReport classify(const FractionalIdeal& e,
                                     std::vector<Int> witnesses = {}) {
  if (!e.is_integral()) throw NotIntegralError();
  if (!e.is_proper()) throw ImproperIdealError();
  const NumericalSemigroup& s = e.parent();
  ClassificationReport r;
  r.type_quotient = type_of_quotient(e);
  r.type_ideal = type_of_ideal(e);
  r.elias = (r.type_quotient == r.type_ideal);
  const FractionalIdeal m = FractionalIdeal::maximal(s);
  r.m_e = product(m, e);
  r.colon_rm = colon_r(e, m);
  r.m_colon = product(m, *r.colon_rm);
  r.burch = (*r.m_e != *r.m_colon);
  r.mu = e.mu();
  r.ulrich = (r.mu == s.multiplicity());
  r.witness_ok = ulrich_witness_ok(e);
  r.socle_criterion = elias_socle_criterion(e);
  if (witnesses.empty()) {
    witnesses = e.minimal_generators();
    const auto& mg = s.minimal_generators();
    witnesses.insert(witnesses.end(), mg.begin(), mg.end());
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()),
                    witnesses.end());
  }
  for (Int x : witnesses)
    r.colon_criteria.emplace_back(x, elias_colon_criterion(e, x));
  return r;
}

}  // namespace sgp
