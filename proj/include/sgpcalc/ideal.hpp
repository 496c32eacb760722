#pragma once

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "semigroup.hpp"

namespace sgp {

// A nonzero fractional ideal of a numerical semigroup S: a nonempty set E of
// integers, bounded below, with E + S contained in E.  Such a set is a finite
// "sporadic" part plus a full tail [threshold, oo).
//
// Normal form invariants:
//   * sporadic is strictly increasing and every entry is < threshold,
//   * threshold - 1 is not a member (threshold is minimal).
// The normal form is unique, so operator== is structural equality.  All
// arithmetic here is exact; nothing consults the parent's finite window.
class FractionalIdeal {
 public:
  static FractionalIdeal from_generators(const NumericalSemigroup& s,
                                         std::vector<Int> gens) {
    if (gens.empty()) throw EmptyGeneratorsError();
    std::sort(gens.begin(), gens.end());
    const Int lo = gens.front();
    const Int tail = lo + s.conductor();
    std::vector<Int> pts;
    for (Int z = lo; z < tail; ++z)
      for (Int g : gens) {
        if (g > z) break;
        if (s.contains(z - g)) {
          pts.push_back(z);
          break;
        }
      }
    return normalized(s, std::move(pts), tail);
  }

  // x + S for an arbitrary integer x.
  static FractionalIdeal principal(const NumericalSemigroup& s, Int x) {
    return from_generators(s, {x});
  }

  // S itself, viewed as the unit ideal.
  static FractionalIdeal unit(const NumericalSemigroup& s) {
    return principal(s, 0);
  }

  static FractionalIdeal maximal(const NumericalSemigroup& s) {
    return from_generators(s, s.minimal_generators());
  }

  // S ∩ [v, oo): the members from v on.  For v <= 0 this is the whole
  // semigroup.
  static FractionalIdeal truncation(const NumericalSemigroup& s, Int v) {
    const Int tail = std::max(s.conductor(), v);
    std::vector<Int> pts;
    for (Int z = std::max<Int>(v, 0); z < tail; ++z)
      if (s.contains(z)) pts.push_back(z);
    return normalized(s, std::move(pts), tail);
  }

  // The canonical ideal K = { z : F - z is not in S }, F the Frobenius
  // number.  Its tail starts at the conductor and 0 is always its minimum.
  static FractionalIdeal canonical(const NumericalSemigroup& s) {
    std::vector<Int> pts;
    for (Int z = 0; z < s.conductor(); ++z)
      if (!s.contains(s.frobenius() - z)) pts.push_back(z);
    return normalized(s, std::move(pts), s.conductor());
  }

  const NumericalSemigroup& parent() const { return *parent_; }
  const std::vector<Int>& sporadic() const { return sporadic_; }
  Int threshold() const { return threshold_; }
  Int min_element() const {
    return sporadic_.empty() ? threshold_ : sporadic_.front();
  }

  bool member(Int z) const {
    if (z >= threshold_) return true;
    return std::binary_search(sporadic_.begin(), sporadic_.end(), z);
  }

  bool is_integral() const {
    if (threshold_ < parent_->conductor()) return false;
    for (Int x : sporadic_)
      if (!parent_->contains(x)) return false;
    return true;
  }

  // Proper: integral and different from the whole semigroup.  An integral
  // ideal containing 0 is the whole semigroup, so this is "0 not a member".
  bool is_proper() const { return is_integral() && !member(0); }

  // Minimal generating set as a module: members g with g - a outside the
  // ideal for every minimal generator a of S.  Any g >= threshold +
  // multiplicity is redundant via g - multiplicity, so the scan is finite.
  std::vector<Int> minimal_generators() const {
    std::vector<Int> out;
    const Int hi = threshold_ + parent_->multiplicity();
    for (Int g = min_element(); g < hi; ++g) {
      if (!member(g)) continue;
      bool redundant = false;
      for (Int a : parent_->minimal_generators())
        if (member(g - a)) {
          redundant = true;
          break;
        }
      if (!redundant) out.push_back(g);
    }
    return out;
  }

  Int mu() const { return static_cast<Int>(minimal_generators().size()); }

  // |S \ E| for integral E.
  Int colength() const {
    if (!is_integral()) throw NotIntegralError();
    Int count = 0;
    const Int hi = std::max(parent_->conductor(), threshold_);
    for (Int z = 0; z < hi; ++z)
      if (parent_->contains(z) && !member(z)) ++count;
    return count;
  }

  friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b) {
    return a.threshold_ == b.threshold_ && a.sporadic_ == b.sporadic_;
  }
  friend bool operator!=(const FractionalIdeal& a, const FractionalIdeal& b) {
    return !(a == b);
  }

  // Builds the unique normal form from a candidate point list plus a valid
  // tail start (every z >= tail must belong to the ideal; pts lists all
  // members below tail, duplicates and overshoot allowed).
  static FractionalIdeal normalized(const NumericalSemigroup& s,
                                    std::vector<Int> pts, Int tail) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    while (!pts.empty() && pts.back() >= tail) pts.pop_back();
    while (!pts.empty() && pts.back() == tail - 1) {
      pts.pop_back();
      --tail;
    }
    return FractionalIdeal(s, std::move(pts), tail);
  }

 private:
  FractionalIdeal(const NumericalSemigroup& s, std::vector<Int> sporadic,
                  Int threshold)
      : parent_(&s), sporadic_(std::move(sporadic)), threshold_(threshold) {}

  const NumericalSemigroup* parent_;
  std::vector<Int> sporadic_;
  Int threshold_;
};

inline void require_same_parent(const FractionalIdeal& a,
                                const FractionalIdeal& b) {
  if (&a.parent() == &b.parent()) return;
  if (a.parent() == b.parent()) return;
  throw ParentMismatchError();
}

// Module sum E + F: the union of the two member sets.
inline FractionalIdeal sum(const FractionalIdeal& e, const FractionalIdeal& f) {
  require_same_parent(e, f);
  const Int tail = std::min(e.threshold(), f.threshold());
  std::vector<Int> pts(e.sporadic());
  pts.insert(pts.end(), f.sporadic().begin(), f.sporadic().end());
  return FractionalIdeal::normalized(e.parent(), std::move(pts), tail);
}

inline FractionalIdeal intersect(const FractionalIdeal& e,
                                 const FractionalIdeal& f) {
  require_same_parent(e, f);
  const Int tail = std::max(e.threshold(), f.threshold());
  const Int lo = std::max(e.min_element(), f.min_element());
  std::vector<Int> pts;
  for (Int z = lo; z < tail; ++z)
    if (e.member(z) && f.member(z)) pts.push_back(z);
  return FractionalIdeal::normalized(e.parent(), std::move(pts), tail);
}

// Product EF: all sums x + y.  Everything from
// min(thr(E) + min(F), thr(F) + min(E)) on is a sum, and a smaller z can
// only be sporadic(E) + F (or symmetrically), so a finite scan suffices.
inline FractionalIdeal product(const FractionalIdeal& e,
                               const FractionalIdeal& f) {
  require_same_parent(e, f);
  const Int tail = std::min(e.threshold() + f.min_element(),
                            f.threshold() + e.min_element());
  std::vector<Int> pts;
  for (Int z = e.min_element() + f.min_element(); z < tail; ++z) {
    for (Int x : e.sporadic()) {
      if (x > z - f.min_element()) break;
      if (f.member(z - x)) {
        pts.push_back(z);
        break;
      }
    }
  }
  return FractionalIdeal::normalized(e.parent(), std::move(pts), tail);
}

// Ideal quotient (E : F) inside the ambient group Z: all z with z + F ⊆ E.
inline FractionalIdeal colon_q(const FractionalIdeal& e,
                               const FractionalIdeal& f) {
  require_same_parent(e, f);
  const Int tail = e.threshold() - f.min_element();
  std::vector<Int> pts;
  for (Int z = e.min_element() - f.min_element(); z < tail; ++z) {
    bool ok = true;
    for (Int y : f.sporadic()) {
      if (z + y >= e.threshold()) break;
      if (!e.member(z + y)) {
        ok = false;
        break;
      }
    }
    for (Int y = f.threshold(); ok && z + y < e.threshold(); ++y)
      if (!e.member(z + y)) ok = false;
    if (ok) pts.push_back(z);
  }
  return FractionalIdeal::normalized(e.parent(), std::move(pts), tail);
}

// Ideal quotient taken inside the ring: (E : F) ∩ S.  E must be integral.
inline FractionalIdeal colon_r(const FractionalIdeal& e,
                               const FractionalIdeal& f) {
  require_same_parent(e, f);
  if (!e.is_integral()) throw NotIntegralError();
  return intersect(colon_q(e, f), FractionalIdeal::unit(e.parent()));
}

inline bool subset(const FractionalIdeal& e, const FractionalIdeal& f) {
  require_same_parent(e, f);
  // thr(F) - 1 is never a member of F, so a smaller threshold on E kills
  // containment outright.
  if (e.threshold() < f.threshold()) return false;
  for (Int x : e.sporadic())
    if (!f.member(x)) return false;
  return true;
}

inline FractionalIdeal power(const FractionalIdeal& e, Int n) {
  if (n < 0) throw PreconditionFailedError("negative ideal power");
  FractionalIdeal acc = FractionalIdeal::unit(e.parent());
  for (Int i = 0; i < n; ++i) acc = product(acc, e);
  return acc;
}

// mu(K : E) — the Cohen-Macaulay type of the module E.
inline Int type_of_ideal(const FractionalIdeal& e) {
  return colon_q(FractionalIdeal::canonical(e.parent()), e).mu();
}

// Socle dimension of R/E for integral proper E: members of S outside E that
// every minimal generator of S pushes into E.
inline Int type_of_quotient(const FractionalIdeal& e) {
  if (!e.is_integral()) throw NotIntegralError();
  if (!e.is_proper()) throw ImproperIdealError();
  const NumericalSemigroup& s = e.parent();
  Int count = 0;
  for (Int z = 0; z < e.threshold(); ++z) {
    if (!s.contains(z) || e.member(z)) continue;
    bool socle = true;
    for (Int a : s.minimal_generators())
      if (!e.member(z + a)) {
        socle = false;
        break;
      }
    if (socle) ++count;
  }
  return count;
}

// Trace of the canonical ideal: K · (R : K).
inline FractionalIdeal trace_of_canonical(const NumericalSemigroup& s) {
  const FractionalIdeal k = FractionalIdeal::canonical(s);
  return product(k, colon_q(FractionalIdeal::unit(s), k));
}

inline bool nearly_gorenstein(const NumericalSemigroup& s) {
  return subset(FractionalIdeal::maximal(s), trace_of_canonical(s));
}

}  // namespace sgp
