#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "semigroup.hpp"

namespace sgp {

// Default generator bound for ideal enumeration over S.
inline Int default_gen_bound(const NumericalSemigroup& s) {
  return s.conductor() + 2 * s.multiplicity();
}

// Window large enough for everything the corpus sweeps throw at a
// semigroup: Hilbert-Samuel lengths through conductor+3, the layer scans of
// the order-shift check with shifts up to the generator bound, and the deep
// powers those imply.
inline Int corpus_window_need(Int c, Int e) {
  const Int b = c + 2 * e;                   // generator bound
  const Int s = std::max<Int>(e, c / e + 2);  // index searches stop by here
  const Int w_samuel = c + (c + 4) * e;
  const Int w_scan = c + s * e + b + 1;
  const Int w_power = c + (s + b / e + 1) * e;
  return std::max({2 * (c + 4 * e), w_samuel, w_scan, w_power}) + 2 * e;
}

// Rebuilds S with a corpus-sized window when its current one is too small.
inline NumericalSemigroup widen_for_corpus(const NumericalSemigroup& s) {
  const Int need = corpus_window_need(s.conductor(), s.multiplicity());
  if (need <= s.window()) return s;
  return NumericalSemigroup(s.minimal_generators(), need);
}

// All numerical semigroups of genus <= max_genus, in depth-first order over
// the tree rooted at the full semigroup whose edges remove one minimal
// generator beyond the Frobenius number (each semigroup has exactly one
// parent there: put its Frobenius number back).  Children are visited in
// increasing order of the removed generator, so the order is canonical.
inline std::vector<NumericalSemigroup> enumerate_semigroups(Int max_genus) {
  if (max_genus < 0)
    throw PreconditionFailedError("negative genus bound");
  std::vector<NumericalSemigroup> out;
  struct Walk {
    Int max_genus;
    std::vector<NumericalSemigroup>* out;
    void visit(const NumericalSemigroup& s) {
      out->push_back(widen_for_corpus(s));
      if (s.genus() >= max_genus) return;
      for (Int a : s.minimal_generators()) {
        if (a <= s.frobenius()) continue;
        std::vector<Int> gaps = s.gaps();
        gaps.push_back(a);
        visit(NumericalSemigroup::from_gaps(gaps));
      }
    }
  };
  Walk walk{max_genus, &out};
  walk.visit(NumericalSemigroup({1}));
  return out;
}

// All distinct nonzero proper integral ideals generated by at most
// max_gens members of S drawn from [1, gen_bound].  Generating sets run in
// increasing size and lexicographic order; only the first set producing a
// given ideal emits it, so the order is deterministic.
inline std::vector<FractionalIdeal> enumerate_ideals(const NumericalSemigroup& s,
                                                     Int gen_bound,
                                                     Int max_gens) {
  std::vector<Int> pool;
  for (Int z = 1; z <= gen_bound; ++z)
    if (s.contains(z)) pool.push_back(z);
  std::vector<FractionalIdeal> out;
  std::set<std::pair<std::vector<Int>, Int>> seen;
  const Int n = static_cast<Int>(pool.size());
  std::vector<Int> idx;
  for (Int size = 1; size <= max_gens && size <= n; ++size) {
    idx.assign(static_cast<std::size_t>(size), 0);
    for (Int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<Int> gens;
      gens.reserve(static_cast<std::size_t>(size));
      for (Int i : idx) gens.push_back(pool[static_cast<std::size_t>(i)]);
      FractionalIdeal e = FractionalIdeal::from_generators(s, gens);
      if (seen.emplace(e.sporadic(), e.threshold()).second)
        out.push_back(std::move(e));
      // next combination
      Int pos = size - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos)
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (Int i = pos + 1; i < size; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return out;
}

}  // namespace sgp
