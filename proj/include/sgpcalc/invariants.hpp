#pragma once

#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "semigroup.hpp"

namespace sgp {

// m^n as an exponent set: { s in S : ord(s) >= n }.  Everything from
// c + n*e on qualifies (split off n copies of e; the remainder is >= c and
// so a member), which bounds the scan.  The ord table must cover one more
// multiple of e than the scan touches; callers wanting deep powers must
// construct the semigroup with a matching window_min.
inline FractionalIdeal power_of_maximal(const NumericalSemigroup& s, Int n) {
  if (n < 0) throw PreconditionFailedError("negative power of the maximal ideal");
  const Int c = s.conductor();
  const Int e = s.multiplicity();
  const Int need = c + (n + 1) * e;
  if (need > s.window()) throw OutOfWindowError(need, s.window());
  if (n == 0) return FractionalIdeal::unit(s);
  const Int tail = c + n * e;
  std::vector<Int> pts;
  for (Int z = n * e; z < tail; ++z)
    if (s.contains(z) && s.ord(z) >= n) pts.push_back(z);
  return FractionalIdeal::normalized(s, std::move(pts), tail);
}

// Length of R / m^n.
inline Int samuel_length(const NumericalSemigroup& s, Int n) {
  return power_of_maximal(s, n).colength();
}

// Whether ord(s + a) = ord(s) + ord(a) for every member s the window can
// see.  Failures cannot hide beyond any window that admits the scan: once
// both summands sit in their stable ranges the orders are forced.
inline bool is_ord_regular(const NumericalSemigroup& s, Int a) {
  if (a <= 0) throw NonPositiveError(a);
  if (!s.contains(a)) throw NotInSemigroupError(a);
  const Int t = s.ord(a);
  for (Int z = 0; z + a < s.window(); ++z) {
    if (!s.contains(z)) continue;
    if (s.ord(z + a) != s.ord(z) + t) return false;
  }
  return true;
}

// The associated graded ring of a numerical semigroup ring is
// Cohen-Macaulay exactly when the multiplicity element is ord-regular.
inline bool gr_is_cm(const NumericalSemigroup& s) {
  return is_ord_regular(s, s.multiplicity());
}

struct GllResult {
  Int g = 0;        // least n with m^n inside some (a) + S
  Int witness = 0;  // smallest such a
};

// Least n such that m^n fits inside a principal ideal (a) + S, together
// with the smallest witness a.  Terminates by n = ceil(c/e) + 1: from there
// every member of m^n is >= c + e, so a = e works.
inline GllResult gll_monomial(const NumericalSemigroup& s) {
  const Int c = s.conductor();
  for (Int n = 1;; ++n) {
    if (n > c + 2) throw BoundExceededError("monomial Loewy length search");
    const FractionalIdeal p = power_of_maximal(s, n);
    for (Int a = s.multiplicity(); a <= p.min_element(); ++a) {
      if (!s.contains(a)) continue;
      if (subset(p, FractionalIdeal::principal(s, a))) return {n, a};
    }
  }
}

// Least t with type_of_quotient(m^t) == type_of_ideal(m^t).
inline Int elias_index(const NumericalSemigroup& s) {
  const Int c = s.conductor();
  for (Int t = 1; t <= c + 2; ++t) {
    const FractionalIdeal p = power_of_maximal(s, t);
    if (type_of_quotient(p) == type_of_ideal(p)) return t;
  }
  throw BoundExceededError("Elias index search");
}

// Least t with mu(m^t) equal to the multiplicity.  Terminates by
// t = max(e - 1, 1): whenever ord(z) >= e, a block of summands sharing a
// residue mod e can be traded for copies of e, so z - e stays in m^(t-1);
// hence m^(t+1) = e + m^t from t = e - 1 on and the count of minimal
// generators reaches e.
inline Int ulrich_index(const NumericalSemigroup& s) {
  const Int c = s.conductor();
  const Int e = s.multiplicity();
  for (Int t = 1; t <= c + 2; ++t)
    if (power_of_maximal(s, t).mu() == e) return t;
  throw BoundExceededError("Ulrich index search");
}

// For symmetric semigroups the Gorenstein index agrees with the Elias
// index; everyone else has no Gorenstein index at all.
inline Int index_of_gorenstein(const NumericalSemigroup& s) {
  if (!s.symmetric()) throw NotGorensteinError();
  return elias_index(s);
}

// Least n >= 0 with m^(n+1) = ((a)+S) * m^n.  Only a = e can work: the
// minimum of m^(n+1) is (n+1)e while the minimum of a + m^n is a + ne.
inline Int reduction_number_of_m(const NumericalSemigroup& s, Int a) {
  if (a <= 0) throw NonPositiveError(a);
  if (!s.contains(a)) throw NotInSemigroupError(a);
  if (a != s.multiplicity()) throw NotAReductionError(a);
  const Int c = s.conductor();
  const FractionalIdeal gen = FractionalIdeal::principal(s, a);
  for (Int n = 0; n <= c + 2; ++n)
    if (power_of_maximal(s, n + 1) == product(gen, power_of_maximal(s, n)))
      return n;
  throw BoundExceededError("reduction number search");
}

// Superficiality of the monomial t^a, verified degree by degree over the
// window: (m^(n+1) : a) ∩ m^c == m^n for every c <= n <= n_max.
inline bool is_superficial_monomial(const NumericalSemigroup& s, Int a,
                                    Int n_max) {
  if (a <= 0) throw NonPositiveError(a);
  if (!s.contains(a)) throw NotInSemigroupError(a);
  const Int c = s.conductor();
  const FractionalIdeal pa = FractionalIdeal::principal(s, a);
  const FractionalIdeal deep = power_of_maximal(s, c);
  for (Int n = c; n <= n_max; ++n) {
    const FractionalIdeal lhs =
        intersect(colon_r(power_of_maximal(s, n + 1), pa), deep);
    if (lhs != power_of_maximal(s, n)) return false;
  }
  return true;
}

inline bool is_superficial_monomial(const NumericalSemigroup& s, Int a) {
  return is_superficial_monomial(s, a,
                                 s.conductor() + 2 * s.multiplicity());
}

// Record produced by check_thm_2_20: does adding a fixed member a shift
// orders injectively through the first `index` layers, and if so, do the
// advertised Loewy-length bound and principal containment follow.
struct Thm220Report {
  Int t = 0;                       // ord of the chosen member
  Int index = 0;                   // Elias index of the ring
  bool injective_up_to_index = false;
  bool gll_bound_holds = false;    // gll <= index + t - 1
  bool containment_holds = false;  // mu(m^(index+t-1)) > 1 implies
                                   // m^(index+t-1) inside (a) + S
};

inline Thm220Report check_thm_2_20(const NumericalSemigroup& s, Int a) {
  if (!s.symmetric()) throw NotGorensteinError();
  if (a <= 0) throw NonPositiveError(a);
  if (!s.contains(a)) throw NotInSemigroupError(a);
  Thm220Report rep;
  rep.t = s.ord(a);
  rep.index = elias_index(s);
  const Int c = s.conductor();
  const Int e = s.multiplicity();
  rep.injective_up_to_index = true;
  for (Int i = 1; i <= rep.index && rep.injective_up_to_index; ++i) {
    // every member of order i-1 lies below c + i*e
    for (Int z = 0; z < c + i * e; ++z) {
      if (!s.contains(z) || s.ord(z) != i - 1) continue;
      if (s.ord(z + a) != i + rep.t - 1) {
        rep.injective_up_to_index = false;
        break;
      }
    }
  }
  if (rep.injective_up_to_index) {
    const Int n = rep.index + rep.t - 1;
    rep.gll_bound_holds = gll_monomial(s).g <= n;
    const FractionalIdeal p = power_of_maximal(s, n);
    rep.containment_holds =
        p.mu() <= 1 || subset(p, FractionalIdeal::principal(s, a));
  }
  return rep;
}

// One-stop ring profile.  samuel[i] is the length of R / m^(i+1) for
// i = 0..n_max, where n_max is conductor+2 when the window allows it and
// degrades gracefully otherwise.
struct InvariantReport {
  Int multiplicity = 0;
  Int embedding_dimension = 0;
  Int ring_type = 0;
  bool symmetric = false;
  bool nearly_gorenstein_flag = false;
  Int elias = 0;
  Int ulrich = 0;
  GllResult gll;
  bool gll_exact = false;  // certified when the Elias index meets the
                           // monomial bound from above and below
  bool has_gorenstein_index = false;
  Int gorenstein_index = 0;
  bool gr_cm = false;
  std::vector<Int> samuel;
};

inline InvariantReport make_invariant_report(const NumericalSemigroup& s) {
  InvariantReport r;
  r.multiplicity = s.multiplicity();
  r.embedding_dimension = s.embedding_dimension();
  r.ring_type = s.type();
  r.symmetric = s.symmetric();
  r.nearly_gorenstein_flag = nearly_gorenstein(s);
  r.elias = elias_index(s);
  r.ulrich = ulrich_index(s);
  r.gll = gll_monomial(s);
  r.gll_exact = (r.elias == r.gll.g);
  r.has_gorenstein_index = r.symmetric;
  if (r.symmetric) r.gorenstein_index = r.elias;
  r.gr_cm = gr_is_cm(s);
  const Int c = s.conductor();
  const Int e = s.multiplicity();
  // largest n with samuel_length(s, n+1) inside the window
  const Int cap = (s.window() - c) / e - 2;
  const Int n_max = std::min<Int>(c + 2, cap);
  for (Int i = 0; i <= n_max; ++i) r.samuel.push_back(samuel_length(s, i + 1));
  return r;
}

}  // namespace sgp
