#include <gtest/gtest.h>

#include "graev/random_instances.hpp"
#include "graev/torus.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace graev;
using namespace graev::torus;
using support::q;

namespace {

Angle random_angle(random::Rng& rng) {
  Angle a = Angle::rational(random::random_rational(rng, q(0), q(1), 12));
  const auto symbols = random::uniform(rng, 0, 2);
  for (std::int64_t s = 0; s < symbols; ++s) {
    a = a + Angle::sqrt_prime(static_cast<std::size_t>(random::uniform(rng, 1, 5)),
                              random::random_rational(rng, q(-3), q(3), 7));
  }
  return a;
}

}  // namespace

TEST(CircleDistance, Examples) {
  EXPECT_EQ(circle_distance(Angle::rational(q(1, 3)), Angle::rational(q(1, 3))).value(), q(0));
  EXPECT_EQ(circle_distance(Angle::rational(q(0)), Angle::rational(q(1, 2))).value(), q(1, 2));
  EXPECT_EQ(circle_distance(Angle::rational(q(0)), Angle::rational(q(3, 4))).value(), q(1, 4));
}

TEST(CircleDistance, AgreesWithHighPrecisionOracle) {
  random::Rng rng(3);
  const mpf_class tolerance("1e-40", 512);
  for (int t = 0; t < 300; ++t) {
    const Angle a = random_angle(rng), b = random_angle(rng);
    const auto d = circle_distance(a, b);
    const mpf_class expected = oracle::circle_distance(oracle::angle_value(a), oracle::angle_value(b));
    mpf_class diff(mpf_class(d.value(), 512) - expected, 512);
    EXPECT_LT(abs(diff), tolerance);
    EXPECT_LT(d.error(), Rational(1, pow2(100)));
  }
}

TEST(CircleDistance, MetricOnRandomTriples) {
  random::Rng rng(4);
  for (int t = 0; t < 300; ++t) {
    const Angle a = random_angle(rng), b = random_angle(rng), c = random_angle(rng);
    const auto ab = circle_distance(a, b), bc = circle_distance(b, c), ac = circle_distance(a, c);
    EXPECT_EQ(ab.units, circle_distance(b, a).units);
    EXPECT_LE(ac.value(), ab.value() + bc.value() + ab.error() + bc.error() + ac.error());
    EXPECT_LE(ab.value(), q(1, 2));
  }
}

TEST(Precision, NumericEvaluationWithinBound) {
  EXPECT_GE(precision_digits(), 20u);
  const Angle s = Angle::sqrt_prime(1);
  mpf_class diff(mpf_class(s.value().units, 512) / mpf_class(pow2(precision_bits()), 512) - oracle::angle_value(s), 512);
  EXPECT_LT(abs(diff), mpf_class("1e-40", 512));
}

TEST(LessThan, InconclusiveInsideErrorBand) {
  CircleDistance d{Integer(100), Integer(5)};
  const Rational unit = Rational(1, pow2(precision_bits()));
  EXPECT_EQ(less_than(d, unit * 200), Decision::yes);
  EXPECT_EQ(less_than(d, unit * 50), Decision::no);
  EXPECT_EQ(less_than(d, unit * 102), Decision::inconclusive);
}

TEST(Independence, Examples) {
  EXPECT_TRUE(independence_check({Angle::sqrt_prime(1)}).independent);
  const auto rational = independence_check({Angle::rational(q(1, 4))});
  EXPECT_FALSE(rational.independent);
  EXPECT_EQ(rational.relation, (std::vector<Integer>{Integer(-1), Integer(4)}));
  const Angle s = Angle::sqrt_prime(1);
  const auto shifted = independence_check({s, s + Angle::rational(q(1, 3))});
  EXPECT_FALSE(shifted.independent);
  // c0 + c1 s + c2 (s + 1/3) = 0 with integers: (1, 3, -3).
  EXPECT_EQ(shifted.relation, (std::vector<Integer>{Integer(1), Integer(3), Integer(-3)}));
}

TEST(Independence, RelationIsAValidDependence) {
  random::Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    std::vector<Angle> angles;
    const auto count = random::uniform(rng, 1, 4);
    for (std::int64_t i = 0; i < count; ++i) angles.push_back(random_angle(rng));
    const auto r = independence_check(angles);
    if (r.independent) continue;
    ASSERT_EQ(r.relation.size(), angles.size() + 1);
    std::vector<Rational> sum(kBasisSize);
    sum[0] += Rational(r.relation[0]);
    for (std::size_t i = 0; i < angles.size(); ++i) {
      for (std::size_t c = 0; c < angles[i].coords().size(); ++c) sum[c] += Rational(r.relation[i + 1]) * angles[i].coords()[c];
    }
    for (const auto& s : sum) EXPECT_EQ(s, 0);
  }
}

TEST(Independence, InvariantUnderPermutationAndRationalShift) {
  random::Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    std::vector<Angle> angles;
    const auto count = random::uniform(rng, 1, 4);
    for (std::int64_t i = 0; i < count; ++i) angles.push_back(random_angle(rng));
    const bool base = independence_check(angles).independent;
    std::vector<Angle> other(angles.rbegin(), angles.rend());
    other.back() = other.back() + Angle::rational(random::random_rational(rng, q(-5), q(5), 9));
    EXPECT_EQ(independence_check(other).independent, base);
  }
}

TEST(Kronecker, Examples) {
  const TorusPoint quarter{Angle::rational(q(1, 4))};
  const auto hit = kronecker_search(quarter, {Angle::rational(q(1, 2))}, q(1, 100), 1000);
  EXPECT_EQ(hit.status, SearchStatus::found);
  EXPECT_EQ(hit.m, 2);
  const auto sqrt2 = kronecker_search({Angle::sqrt_prime(1)}, {Angle::rational(q(0))}, q(1, 20), 100);
  EXPECT_EQ(sqrt2.status, SearchStatus::found);
  EXPECT_EQ(sqrt2.m, 12);
  EXPECT_EQ(kronecker_search(quarter, {Angle::rational(q(1, 3))}, q(1, 100), 1000).status, SearchStatus::absent);
}

TEST(Kronecker, AgreesWithHighPrecisionScan) {
  random::Rng rng(12);
  for (int t = 0; t < 60; ++t) {
    const std::size_t dim = static_cast<std::size_t>(random::uniform(rng, 1, 2));
    TorusPoint x, z;
    for (std::size_t i = 0; i < dim; ++i) {
      x.push_back(Angle::sqrt_prime(i + 1, random::random_rational(rng, q(1, 5), q(3), 6)));
      z.push_back(random_angle(rng));
    }
    const Rational eps = random::random_rational(rng, q(1, 50), q(1, 5), 100);
    const auto r = kronecker_search(x, z, eps, 3000);
    ASSERT_NE(r.status, SearchStatus::inconclusive);
    const auto expected = oracle::kronecker_scan(x, z, eps, 3000);
    EXPECT_EQ(r.status == SearchStatus::found, expected.has_value());
    if (expected) EXPECT_EQ(*r.m, *expected);
  }
}

TEST(Kronecker, DensityRegression) {
  for (std::size_t dim = 1; dim <= 2; ++dim) {
    TorusPoint x, z;
    for (std::size_t i = 0; i < dim; ++i) {
      x.push_back(Angle::sqrt_prime(i + 1));
      z.push_back(Angle::rational(q(1, 3) + q(static_cast<long>(i), 5)));
    }
    for (long inv : {10L, 20L, 40L}) {
      const auto r = kronecker_search(x, z, q(1, inv), 200000);
      EXPECT_EQ(r.status, SearchStatus::found) << "dim " << dim << " eps 1/" << inv;
    }
  }
}

TEST(NetCheck, Examples) {
  std::vector<TorusPoint> quarters;
  for (int i = 0; i < 4; ++i) quarters.push_back({Angle::rational(q(i, 4))});
  const auto a = net_check(quarters, 1, q(1, 4) + q(1, 100), q(1, 1000));
  EXPECT_EQ(a.status, NetStatus::certified);
  EXPECT_EQ(*a.covering_radius_upper, q(1, 8));

  const auto b = net_check({{Angle::rational(q(0))}}, 1, q(1, 4), q(1, 1000));
  ASSERT_EQ(b.status, NetStatus::refuted);
  ASSERT_TRUE(b.witness.has_value());
  EXPECT_EQ((*b.witness)[0], q(1, 2));
}

TEST(NetCheck, OneDimensionalMatchesCoveringRadiusOracle) {
  random::Rng rng(14);
  int decided = 0;
  for (int t = 0; t < 200; ++t) {
    const Angle x = Angle::sqrt_prime(static_cast<std::size_t>(random::uniform(rng, 1, 5)),
                                      random::random_rational(rng, q(1, 4), q(4), 8));
    const auto count = random::uniform(rng, 1, 80);
    std::vector<TorusPoint> orbit;
    std::vector<mpf_class> values;
    for (std::int64_t m = 1; m <= count; ++m) {
      orbit.push_back({x.scaled(Rational(static_cast<long>(m)))});
      values.push_back(oracle::angle_value(orbit.back()[0]));
    }
    const Rational eps = random::random_rational(rng, q(1, 100), q(1, 4), 64);
    const auto r = net_check(orbit, 1, eps, q(1, 1024));
    const mpf_class radius = oracle::covering_radius(values);
    const mpf_class gap(mpf_class(eps, 512) - radius - mpf_class(r.slack, 512), 512);
    if (abs(gap) < mpf_class("1e-40", 512)) continue;
    ++decided;
    EXPECT_EQ(r.status == NetStatus::certified, gap > 0);
  }
  EXPECT_GT(decided, 150);
}

TEST(NetCheck, TwoDimensionalGridCertificate) {
  std::vector<TorusPoint> grid;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) grid.push_back({Angle::rational(q(i, 8)), Angle::rational(q(j, 8))});
  }
  EXPECT_EQ(net_check(grid, 2, q(1, 16) + q(1, 50), q(1, 256)).status, NetStatus::certified);
  const auto refuted = net_check(grid, 2, q(1, 20), q(1, 256));
  ASSERT_EQ(refuted.status, NetStatus::refuted);
  ASSERT_TRUE(refuted.witness.has_value());
  for (const auto& p : grid) {
    EXPECT_GE(std::max(circle_distance_double(p[0].to_double(), (*refuted.witness)[0].get_d()),
                       circle_distance_double(p[1].to_double(), (*refuted.witness)[1].get_d())),
              1.0 / 20 - 1e-12);
  }
}

TEST(NetCheck, CoarseGridIsInconclusive) {
  std::vector<TorusPoint> grid;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) grid.push_back({Angle::rational(q(i, 8)), Angle::rational(q(j, 8))});
  }
  // Covering radius 1/16 but slack 1/32 leaves no room below eps = 1/16 + 1/64.
  EXPECT_EQ(net_check(grid, 2, q(1, 16) + q(1, 64), q(1, 16)).status, NetStatus::inconclusive);
}

TEST(NetCheck, GridStepMustBeUnitFraction) {
  EXPECT_THROW(grid_resolution(q(2, 5)), InputError);
  EXPECT_EQ(grid_resolution(q(1, 512)), 512u);
}
