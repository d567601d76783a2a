#include <gtest/gtest.h>

#include "graev/free_seminorm.hpp"
#include "graev/graev_norm.hpp"
#include "graev/random_instances.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace graev;
using support::q;

TEST(FreeSeminorm, DifferenceOfPointsIsDistance) {
  const auto space = support::fixture_space("line4.json");
  const auto r = free_seminorm(space, support::lincomb(space, {{"a", q(1)}, {"b", q(-1)}}));
  EXPECT_EQ(r.value, q(1, 4));
}

TEST(FreeSeminorm, HalfGenerator) {
  const auto space = support::fixture_space("line4.json");
  EXPECT_EQ(free_seminorm(space, support::lincomb(space, {{"c", q(1, 2)}})).value, q(1));
}

TEST(FreeSeminorm, TwoAMinusBMatchesTreeOracle) {
  const auto space = support::fixture_space("discrete3.json");
  const LinComb v = support::lincomb(space, {{"a", q(2)}, {"b", q(-1)}});
  EXPECT_EQ(free_seminorm(space, v).value, q(2));
  EXPECT_EQ(oracle::transshipment_by_trees(space, v), q(2));
}

TEST(FreeSeminorm, ZeroCombination) {
  const auto space = support::fixture_space("tree5.json");
  const auto r = free_seminorm(space, LinComb(space.size(), space.basepoint()));
  EXPECT_EQ(r.value, q(0));
  EXPECT_TRUE(witness_is_feasible(space, r.dual));
  EXPECT_EQ(dual_objective(LinComb(space.size(), space.basepoint()), r.dual), q(0));
}

TEST(FreeSeminorm, DualWitnessForDifference) {
  const auto space = support::fixture_space("tree5.json");
  const auto f = dual_witness(space, support::lincomb(space, {{"a", q(1)}, {"d", q(-1)}}));
  EXPECT_TRUE(witness_is_feasible(space, f));
  EXPECT_EQ(f.f[1] - f.f[4], space.dist(1, 4));
}

TEST(FreeSeminorm, MatchesSpanningTreeOracleWithExactDuality) {
  random::Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    const auto space = random::random_space(rng, 5, 12);
    const LinComb v = random::random_lincomb(rng, space);
    const auto r = free_seminorm(space, v);
    ASSERT_EQ(r.value, oracle::transshipment_by_trees(space, v));
    EXPECT_TRUE(flow_is_feasible(space, v, r.flow));
    EXPECT_TRUE(witness_is_feasible(space, r.dual));
    EXPECT_EQ(r.dual.f[space.basepoint()], q(0));
    EXPECT_EQ(dual_objective(v, r.dual), r.value);
  }
}

TEST(FreeSeminorm, WeakDualityForRandomLipschitzFunctions) {
  random::Rng rng(37);
  for (int t = 0; t < 200; ++t) {
    const auto space = random::random_space(rng, 5, 12);
    const LinComb v = random::random_lincomb(rng, space);
    const PointMap f = random::random_lipschitz_map(rng, space, 1);
    DualWitness w;
    for (const auto& value : f) w.f.push_back(value[0]);
    ASSERT_TRUE(witness_is_feasible(space, w));
    EXPECT_LE(dual_objective(v, w), free_seminorm(space, v).value);
  }
}

TEST(FreeSeminorm, SeminormAxioms) {
  random::Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto space = random::random_space(rng, 5, 12);
    const LinComb u = random::random_lincomb(rng, space), v = random::random_lincomb(rng, space);
    const Rational lambda = random::random_rational(rng, q(-3), q(3), 7);
    const Rational pu = free_seminorm(space, u).value;
    EXPECT_GE(pu, 0);
    EXPECT_EQ(free_seminorm(space, u.scaled(lambda)).value, abs(lambda) * pu);
    EXPECT_LE(free_seminorm(space, u + v).value, pu + free_seminorm(space, v).value);
  }
}

TEST(TuCheck, EqualityIntegralityAndIsometricEmbedding) {
  random::Rng rng(43);
  for (int t = 0; t < 300; ++t) {
    const auto space = random::random_space(rng, 5, 12);
    const Word w = random::random_word(rng, space, 6, 3);
    const TuReport r = tu_check(space, w);
    ASSERT_TRUE(r.equal) << "graev " << to_string(r.graev) << " seminorm " << to_string(r.seminorm);
    EXPECT_TRUE(r.seminorm_below_graev);
    EXPECT_TRUE(flow_is_integral(r.flow));
    const Word u = random::random_word(rng, space, 6, 3);
    EXPECT_EQ(graev_distance(space, w, u), free_seminorm(space, word_to_lincomb(w - u)).value);
  }
}

TEST(TuCheck, Examples) {
  const auto space = support::fixture_space("line4.json");
  const auto r = tu_check(space, support::word(space, {{"a", 1}, {"b", -1}}));
  EXPECT_EQ(r.graev, q(1, 4));
  EXPECT_TRUE(r.equal);
  const auto zero = tu_check(space, Word(space.size(), 0));
  EXPECT_EQ(zero.graev, q(0));
  EXPECT_TRUE(zero.equal);
}
