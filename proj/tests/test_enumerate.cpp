#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <sgpcalc/enumerate.hpp>

using sgp::FractionalIdeal;
using sgp::Int;
using sgp::NumericalSemigroup;

namespace {

// Every valid gap set inside {1..13} of size <= max_genus, found the dumb
// way: a subset G is a gap set iff the complement is closed under addition,
// which only needs checking for sums that land back inside [1,13].
std::map<Int, std::set<std::vector<Int>>> gap_sets_by_genus(Int max_genus) {
  std::map<Int, std::set<std::vector<Int>>> out;
  for (unsigned mask = 0; mask < (1u << 13); ++mask) {
    std::vector<Int> gaps;
    for (Int z = 1; z <= 13; ++z)
      if (mask >> (z - 1) & 1u) gaps.push_back(z);
    if (static_cast<Int>(gaps.size()) > max_genus) continue;
    bool ok = true;
    for (Int a = 1; ok && a <= 13; ++a) {
      if (mask >> (a - 1) & 1u) continue;
      for (Int b = a; ok && a + b <= 13; ++b) {
        if (mask >> (b - 1) & 1u) continue;
        if (mask >> (a + b - 1) & 1u) ok = false;
      }
    }
    if (ok) out[static_cast<Int>(gaps.size())].insert(gaps);
  }
  return out;
}

}  // namespace

TEST_CASE("semigroup counts by genus") {
  auto corpus = sgp::enumerate_semigroups(8);
  REQUIRE(corpus.size() == 156);
  std::map<Int, Int> by_genus;
  for (const auto& s : corpus) ++by_genus[s.genus()];
  const std::vector<Int> expect = {1, 1, 2, 4, 7, 12, 23, 39, 67};
  for (Int g = 0; g <= 8; ++g) CHECK(by_genus[g] == expect[static_cast<std::size_t>(g)]);
}

TEST_CASE("enumeration agrees with the subset sieve") {
  const Int max_genus = 7;
  auto corpus = sgp::enumerate_semigroups(max_genus);
  std::map<Int, std::set<std::vector<Int>>> seen;
  for (const auto& s : corpus) {
    auto gaps = s.gaps();
    CHECK(seen[s.genus()].insert(gaps).second);  // no duplicates
    // round trip through the gap representation
    CHECK(NumericalSemigroup::from_gaps(gaps) == s);
  }
  auto expected = gap_sets_by_genus(max_genus);
  for (Int g = 0; g <= max_genus; ++g) CHECK(seen[g] == expected[g]);
}

TEST_CASE("enumeration order is canonical") {
  auto a = sgp::enumerate_semigroups(5);
  auto b = sgp::enumerate_semigroups(5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i].minimal_generators() == b[i].minimal_generators());
  }
  // depth-first: the walk starts at the full semigroup and first dives down
  // the chain that keeps removing the new Frobenius candidate 1, 2, ...
  CHECK(a[0].minimal_generators() == std::vector<Int>{1});
  CHECK(a[1].minimal_generators() == std::vector<Int>{2, 3});
}

TEST_CASE("a known profile shows up at its genus") {
  auto corpus = sgp::enumerate_semigroups(5);
  const NumericalSemigroup probe({4, 6, 7});
  bool found = false;
  for (const auto& s : corpus)
    if (s == probe) {
      found = true;
      CHECK(s.genus() == 5);
    }
  CHECK(found);
}

TEST_CASE("corpus members come pre-widened") {
  for (const auto& s : sgp::enumerate_semigroups(6)) {
    CHECK(s.window() >=
          sgp::corpus_window_need(s.conductor(), s.multiplicity()));
    // widening is idempotent once the window is large enough
    CHECK(sgp::widen_for_corpus(s).window() == s.window());
  }
}

TEST_CASE("generator bound default") {
  NumericalSemigroup s({4, 6, 7});
  CHECK(sgp::default_gen_bound(s) == 18);  // conductor 10 + 2*4
  NumericalSemigroup t({2, 3});
  CHECK(sgp::default_gen_bound(t) == 6);
}

TEST_CASE("ideal enumeration over the cusp") {
  NumericalSemigroup s({2, 3}, 64);
  auto ideals = sgp::enumerate_ideals(s, 4, 2);
  REQUIRE(ideals.size() == 5);
  CHECK(ideals[0] == FractionalIdeal::principal(s, 2));
  CHECK(ideals[1] == FractionalIdeal::principal(s, 3));
  CHECK(ideals[2] == FractionalIdeal::principal(s, 4));
  CHECK(ideals[3] == FractionalIdeal::from_generators(s, {2, 3}));
  CHECK(ideals[4] == FractionalIdeal::from_generators(s, {3, 4}));
  // and the normal forms behind those:
  CHECK(ideals[0].sporadic() == std::vector<Int>{2});
  CHECK(ideals[0].threshold() == 4);
  CHECK(ideals[3].sporadic().empty());
  CHECK(ideals[3].threshold() == 2);
  CHECK(ideals[4].sporadic().empty());
  CHECK(ideals[4].threshold() == 3);
}

TEST_CASE("ideal enumeration emits each ideal once") {
  NumericalSemigroup s({4, 6, 7});
  auto ideals = sgp::enumerate_ideals(s, sgp::default_gen_bound(s), 3);
  std::set<std::pair<std::vector<Int>, Int>> nfs;
  for (const auto& e : ideals) {
    CHECK(e.is_integral());
    const Int least =
        e.sporadic().empty() ? e.threshold() : e.sporadic().front();
    CHECK(least > 0);  // proper and nonzero
    CHECK(nfs.emplace(e.sporadic(), e.threshold()).second);
  }
  // every <=2-generator ideal from the same pool is in the <=3 list
  auto smaller = sgp::enumerate_ideals(s, sgp::default_gen_bound(s), 2);
  std::set<std::pair<std::vector<Int>, Int>> big;
  for (const auto& e : ideals) big.emplace(e.sporadic(), e.threshold());
  for (const auto& e : smaller)
    CHECK(big.count({e.sporadic(), e.threshold()}) == 1);
}

TEST_CASE("negative genus bound is rejected") {
  CHECK_THROWS_AS(sgp::enumerate_semigroups(-1), sgp::PreconditionFailedError);
}
