#include <catch2/catch_amalgamated.hpp>

#include <sgpcalc/classify.hpp>
#include <sgpcalc/invariants.hpp>

#include "oracle.hpp"

using sgp::FractionalIdeal;
using sgp::Int;
using sgp::NumericalSemigroup;

TEST_CASE("the Elias chain over <4,5,11>") {
  NumericalSemigroup s({4, 5, 11});
  auto m = FractionalIdeal::maximal(s);
  auto m2 = product(m, m);

  CHECK(sgp::is_elias(m2));
  CHECK(!sgp::elias_colon_criterion(m2, 9));

  auto i = FractionalIdeal::from_generators(s, {8, 9, 15, 16, 22});
  CHECK(i.minimal_generators() == std::vector<Int>{8, 9, 15});
  CHECK(colon_q(FractionalIdeal::principal(s, 9), i).member(5));
  CHECK(sgp::elias_colon_criterion(i, 9));
  CHECK(sgp::is_elias(i));

  // the maximal ideal itself is not Elias here: types 1 vs 3
  CHECK(!sgp::is_elias(m));
  CHECK(sgp::elias_socle_criterion(m2));
  CHECK(!sgp::elias_socle_criterion(m));
}

TEST_CASE("colon criterion demands a nonzero member") {
  NumericalSemigroup s({4, 5, 11});
  auto m = FractionalIdeal::maximal(s);
  CHECK_THROWS_AS(sgp::elias_colon_criterion(m, 0), sgp::NonPositiveError);
  CHECK_THROWS_AS(sgp::elias_colon_criterion(m, 6),
                  sgp::NotInSemigroupError);
  CHECK_THROWS_AS(
      sgp::elias_colon_criterion(FractionalIdeal::canonical(s), 4),
      sgp::NotIntegralError);
}

TEST_CASE("ulrich ideals") {
  NumericalSemigroup s({4, 6, 7});
  auto m3 = power_of_maximal(s, 3);
  CHECK(sgp::is_ulrich(m3));
  CHECK(sgp::ulrich_witness_ok(m3));

  auto i = FractionalIdeal::from_generators(s, {4, 6});
  CHECK(!sgp::is_ulrich(i));
  CHECK(!sgp::ulrich_witness_ok(i));

  // the witness identity tracks mu == multiplicity on a spread of ideals
  for (auto gens : {std::vector<Int>{7, 8}, std::vector<Int>{8, 10, 11, 13},
                    std::vector<Int>{6, 8}, std::vector<Int>{4}}) {
    auto e = FractionalIdeal::from_generators(s, gens);
    CHECK(sgp::is_ulrich(e) == sgp::ulrich_witness_ok(e));
  }
}

TEST_CASE("burch ideals") {
  NumericalSemigroup s({4, 6, 7});
  auto m = FractionalIdeal::maximal(s);
  CHECK(sgp::is_burch(m));
  CHECK(sgp::is_burch(power_of_maximal(s, 2)));
  CHECK(sgp::is_burch(FractionalIdeal::truncation(s, 5)));

  auto e = FractionalIdeal::from_generators(s, {7, 8});
  CHECK(!sgp::is_burch(e));
  auto i = FractionalIdeal::from_generators(s, {4, 6});
  CHECK(!sgp::is_burch(i));
  // principal ideals are never Burch: (b)+S absorbs its colon
  for (Int b : {4, 6, 7, 8, 10}) {
    CHECK(!sgp::is_burch(FractionalIdeal::principal(s, b)));
  }

  CHECK_THROWS_AS(sgp::is_burch(FractionalIdeal::unit(s)),
                  sgp::ImproperIdealError);
  CHECK_THROWS_AS(sgp::is_burch(FractionalIdeal::canonical(
                      NumericalSemigroup({4, 5, 11}))),
                  sgp::NotIntegralError);
}

TEST_CASE("example ideal of the worked multiplication table") {
  NumericalSemigroup s({4, 6, 7});
  auto m = FractionalIdeal::maximal(s);
  auto i = FractionalIdeal::from_generators(s, {4, 6});
  auto cr = colon_r(i, m);
  CHECK(cr.member(7));
  CHECK(product(i, cr).member(11));
  auto i2 = product(i, i);
  CHECK(!i2.member(11));
  CHECK(i2.minimal_generators() == std::vector<Int>{8, 10});
  CHECK(i2.sporadic() == std::vector<Int>{8, 10, 12});
  CHECK(i2.threshold() == 14);
}

TEST_CASE("principality criterion") {
  NumericalSemigroup s({4, 6, 7});
  auto p4 = FractionalIdeal::principal(s, 4);
  auto e = FractionalIdeal::from_generators(s, {7, 8});
  // the biconditional (criterion <=> principal witness) holds either way
  CHECK(sgp::criterion_3_14(p4, 4));
  CHECK(sgp::criterion_3_14(e, 7));
  CHECK(sgp::criterion_3_14(sum(e, p4), 4));

  // witnesses must be minimal generators of the semigroup and lie in E
  CHECK_THROWS_AS(sgp::criterion_3_14(e, 8), sgp::PreconditionFailedError);
  CHECK_THROWS_AS(sgp::criterion_3_14(e, 4), sgp::PreconditionFailedError);
}

TEST_CASE("classification report for (7,8) over <4,6,7>") {
  NumericalSemigroup s({4, 6, 7});
  auto e = FractionalIdeal::from_generators(s, {7, 8});
  auto r = sgp::classify(e);
  CHECK(!r.elias);
  CHECK(r.type_quotient == 1);
  CHECK(r.type_ideal == 2);
  CHECK(!r.burch);
  CHECK(!r.ulrich);
  CHECK(r.mu == 2);
  CHECK(!r.witness_ok);
  CHECK(!r.socle_criterion);
  REQUIRE(r.m_e.has_value());
  CHECK(r.m_e->threshold() == 11);
  CHECK(r.m_e->sporadic().empty());
  REQUIRE(r.colon_rm.has_value());
  CHECK(r.colon_rm->sporadic() == std::vector<Int>{7, 8});
  CHECK(r.colon_rm->threshold() == 10);
  REQUIRE(r.m_colon.has_value());
  CHECK(*r.m_colon == *r.m_e);  // equal products: not Burch
  // default witnesses: minimal generators of E and of S, sorted, deduped
  REQUIRE(r.colon_criteria.size() == 4);
  CHECK(r.colon_criteria[0].first == 4);
  CHECK(r.colon_criteria[1].first == 6);
  CHECK(r.colon_criteria[2].first == 7);
  CHECK(r.colon_criteria[3].first == 8);
  for (auto& [x, holds] : r.colon_criteria) CHECK(!holds);
}

TEST_CASE("classification report for an Elias ideal") {
  NumericalSemigroup s({4, 5, 11});
  auto i = FractionalIdeal::from_generators(s, {8, 9, 15, 16, 22});
  auto r = sgp::classify(i, {9});
  CHECK(r.elias);
  CHECK(r.type_quotient == r.type_ideal);
  bool witness_9 = false;
  for (auto& [x, holds] : r.colon_criteria)
    if (x == 9) witness_9 = holds;
  CHECK(witness_9);

  CHECK_THROWS_AS(sgp::classify(FractionalIdeal::unit(s)),
                  sgp::ImproperIdealError);
}

TEST_CASE("classification verdicts match the oracle") {
  const std::vector<Int> gens{4, 5, 11};
  NumericalSemigroup s(gens);
  const auto sset = oracle::semigroup_set(gens);
  for (auto igens :
       {std::vector<Int>{8, 9, 15}, std::vector<Int>{4, 5},
        std::vector<Int>{9}, std::vector<Int>{8, 10}, std::vector<Int>{5, 8},
        std::vector<Int>{4, 11}, std::vector<Int>{10, 11, 13}}) {
    auto e = FractionalIdeal::from_generators(s, igens);
    const auto w = oracle::from_generators(sset, igens);
    CHECK(sgp::is_elias(e) == oracle::elias(w, sset, s.frobenius()));
    CHECK(sgp::is_burch(e) == oracle::burch(w, sset));
    CHECK(sgp::is_ulrich(e) == oracle::ulrich(w, sset));
    CHECK(sgp::type_of_quotient(e) == oracle::type_of_quotient(w, sset));
    CHECK(sgp::type_of_ideal(e) ==
          oracle::type_of_ideal(w, sset, s.frobenius()));
    CHECK(e.colength() == oracle::colength(w, sset));
  }
}
