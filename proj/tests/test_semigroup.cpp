#include <catch2/catch_amalgamated.hpp>

#include <sgpcalc/semigroup.hpp>

#include "oracle.hpp"

using sgp::Int;
using sgp::NumericalSemigroup;

TEST_CASE("profile of <4,6,7>") {
  NumericalSemigroup s({4, 6, 7});
  CHECK(s.multiplicity() == 4);
  CHECK(s.frobenius() == 9);
  CHECK(s.conductor() == 10);
  CHECK(s.genus() == 5);
  CHECK(s.gaps() == std::vector<Int>{1, 2, 3, 5, 9});
  CHECK(s.minimal_generators() == std::vector<Int>{4, 6, 7});
  CHECK(s.embedding_dimension() == 3);
  CHECK(s.pseudo_frobenius() == std::vector<Int>{9});
  CHECK(s.type() == 1);
  CHECK(s.symmetric());

  // membership is total: below zero, inside the window, above it
  CHECK(!s.contains(-3));
  CHECK(s.contains(0));
  CHECK(!s.contains(5));
  CHECK(s.contains(8));
  CHECK(!s.contains(9));
  CHECK(s.contains(123456789));
}

TEST_CASE("profile of <4,5,11>") {
  NumericalSemigroup s({4, 5, 11});
  CHECK(s.frobenius() == 7);
  CHECK(s.gaps() == std::vector<Int>{1, 2, 3, 6, 7});
  CHECK(s.pseudo_frobenius() == std::vector<Int>{6, 7});
  CHECK(s.type() == 2);
  CHECK(!s.symmetric());
  CHECK(s.genus() == 5);
}

TEST_CASE("two-generator semigroups are symmetric") {
  NumericalSemigroup a({2, 3});
  CHECK(a.frobenius() == 1);
  CHECK(a.type() == 1);
  CHECK(a.symmetric());

  NumericalSemigroup b({2, 17});
  CHECK(b.conductor() == 16);
  CHECK(b.genus() == 8);
  CHECK(b.symmetric());

  // classic three-generator value
  NumericalSemigroup c({6, 9, 20});
  CHECK(c.frobenius() == 43);
  CHECK(c.genus() == 22);
}

TEST_CASE("the full semigroup") {
  NumericalSemigroup s({1});
  CHECK(s.multiplicity() == 1);
  CHECK(s.frobenius() == -1);
  CHECK(s.conductor() == 0);
  CHECK(s.genus() == 0);
  CHECK(s.gaps().empty());
  // no gaps means no pseudo-Frobenius elements; the ring is regular and
  // counts as type 1
  CHECK(s.pseudo_frobenius().empty());
  CHECK(s.type() == 1);
  CHECK(s.symmetric());
  CHECK(s.contains(0));
  CHECK(!s.contains(-1));
  CHECK(s.apery(1) == std::vector<Int>{0});
}

TEST_CASE("generator lists are reduced") {
  NumericalSemigroup s({4, 6, 7, 10, 11, 14});
  CHECK(s.minimal_generators() == std::vector<Int>{4, 6, 7});
  CHECK(s == NumericalSemigroup({4, 6, 7}));
  CHECK(!(s == NumericalSemigroup({4, 5, 11})));
  // order of the input list does not matter
  CHECK(NumericalSemigroup({7, 4, 6}) == NumericalSemigroup({4, 6, 7}));
}

TEST_CASE("apery sets are value-sorted and complete") {
  NumericalSemigroup s({4, 6, 7});
  CHECK(s.apery(4) == std::vector<Int>{0, 6, 7, 13});
  CHECK(s.apery(6) == std::vector<Int>{0, 4, 7, 8, 11, 15});
  NumericalSemigroup t({4, 5, 11});
  CHECK(t.apery(4) == std::vector<Int>{0, 5, 10, 11});
  // w runs over residues exactly once
  auto ap = s.apery(7);
  REQUIRE(ap.size() == 7);
  std::vector<char> seen(7, 0);
  for (Int w : ap) {
    CHECK(s.contains(w));
    CHECK(!s.contains(w - 7));
    seen[w % 7] = 1;
  }
  for (char f : seen) CHECK(f == 1);

  CHECK_THROWS_AS(s.apery(0), sgp::NonPositiveError);
  CHECK_THROWS_AS(s.apery(-4), sgp::NonPositiveError);
  CHECK_THROWS_AS(s.apery(5), sgp::NotInSemigroupError);
}

TEST_CASE("constructor rejects bad generator data") {
  CHECK_THROWS_AS(NumericalSemigroup({}), sgp::EmptyGeneratorsError);
  CHECK_THROWS_AS(NumericalSemigroup({4, 6}), sgp::NonCoprimeError);
  CHECK_THROWS_AS(NumericalSemigroup({6, 9, 21}), sgp::NonCoprimeError);
  CHECK_THROWS_AS(NumericalSemigroup({0, 3}), sgp::NonPositiveError);
  CHECK_THROWS_AS(NumericalSemigroup({-2, 3}), sgp::NonPositiveError);
}

TEST_CASE("gap sets round-trip") {
  NumericalSemigroup s({4, 6, 7});
  CHECK(NumericalSemigroup::from_gaps(s.gaps()) == s);
  CHECK(NumericalSemigroup::from_gaps({}) == NumericalSemigroup({1}));
  CHECK(NumericalSemigroup::from_gaps({1, 2, 3, 6, 7}) ==
        NumericalSemigroup({4, 5, 11}));
  // complement of {2} is not closed under addition: 1 + 1 = 2
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps({2}),
                  sgp::PreconditionFailedError);
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps({1, 4}),
                  sgp::PreconditionFailedError);
}

TEST_CASE("orders match the all-members recursion") {
  for (auto gens : {std::vector<Int>{4, 6, 7}, std::vector<Int>{4, 5, 11},
                    std::vector<Int>{2, 3}, std::vector<Int>{5, 7, 9},
                    std::vector<Int>{3, 10, 17}}) {
    NumericalSemigroup s(gens, 128);
    const auto sset = oracle::semigroup_set(gens);
    const auto ord = oracle::ord_table(sset, 100);
    for (Int z = 0; z < 100; ++z) {
      if (!sset.contains(z)) {
        CHECK_THROWS_AS(s.ord(z), sgp::NotInSemigroupError);
        continue;
      }
      CHECK(s.ord(z) == ord[static_cast<std::size_t>(z)]);
    }
  }
}

TEST_CASE("ord beyond the window is an error, not a guess") {
  NumericalSemigroup s({4, 6, 7});
  const Int w = s.window();
  CHECK_THROWS_AS(s.ord(w + 4), sgp::OutOfWindowError);
  try {
    s.ord(w + 4);
  } catch (const sgp::OutOfWindowError& ex) {
    CHECK(ex.need > ex.have);
    CHECK(ex.have == w);
  }
}

TEST_CASE("window honors the caller hint") {
  NumericalSemigroup s({4, 6, 7}, 4000);
  CHECK(s.window() >= 4000);
  CHECK(s.conductor() == 10);  // invariants unaffected by the hint
  CHECK(s.contains(3999));
  CHECK(s.ord(3996) == 999);
}

TEST_CASE("conductor and gaps agree with the brute-force scan") {
  for (auto gens :
       {std::vector<Int>{2, 3}, std::vector<Int>{2, 17},
        std::vector<Int>{3, 5}, std::vector<Int>{6, 9, 20},
        std::vector<Int>{11, 13, 15, 17}, std::vector<Int>{4, 9, 14, 19}}) {
    NumericalSemigroup s(gens);
    CHECK(s.conductor() == oracle::conductor(gens));
    const auto sset = oracle::semigroup_set(gens);
    std::vector<Int> gaps;
    for (Int z = 1; z < s.conductor(); ++z)
      if (!sset.contains(z)) gaps.push_back(z);
    CHECK(s.gaps() == gaps);
  }
}

TEST_CASE("pseudo-Frobenius elements are the maximal gap shifts") {
  // f is pseudo-Frobenius iff f is a gap and f + s is a member for every
  // nonzero member s
  for (auto gens : {std::vector<Int>{4, 5, 11}, std::vector<Int>{5, 7, 9},
                    std::vector<Int>{4, 6, 7}}) {
    NumericalSemigroup s(gens, 128);
    std::vector<Int> pf;
    for (Int f : s.gaps()) {
      bool ok = true;
      for (Int z = 1; z <= s.conductor() && ok; ++z)
        if (s.contains(z) && !s.contains(f + z)) ok = false;
      if (ok) pf.push_back(f);
    }
    CHECK(s.pseudo_frobenius() == pf);
    CHECK(s.type() == static_cast<Int>(pf.size()));
  }
}

TEST_CASE("membership words expose the window bitset") {
  NumericalSemigroup s({4, 6, 7});
  const auto& words = s.membership_words();
  REQUIRE(!words.empty());
  auto bit = [&](Int z) {
    return (words[static_cast<std::size_t>(z) / 64] >>
            (static_cast<std::size_t>(z) % 64)) &
           1;
  };
  CHECK(bit(0) == 1);
  CHECK(bit(5) == 0);
  CHECK(bit(10) == 1);
}

TEST_CASE("oversized windows are refused") {
  CHECK_THROWS_AS(NumericalSemigroup({2, 3}, Int{1} << 27),
                  sgp::BoundExceededError);
  // a conductor too large for the cap is refused at construction
  CHECK_THROWS_AS(NumericalSemigroup({2, 100000001}),
                  sgp::BoundExceededError);
}
