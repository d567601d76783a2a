#include <gtest/gtest.h>

#include <cmath>

#include "graev/embedding.hpp"
#include "graev/random_instances.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace graev;
using namespace graev::embedding;
using support::q;

namespace {

AmbientModel small_model(std::size_t m_count, std::size_t n_max, EMetric metric = EMetric::l1) {
  AmbientModel model;
  model.e_dim = 2;
  model.n_max = n_max;
  model.metric = metric;
  const std::vector<std::vector<Rational>> pool{{q(1, 2), q(0)}, {q(0), q(-1, 3)}, {q(1, 4), q(1, 5)}};
  for (std::size_t m = 0; m < m_count; ++m) model.x_points.push_back(pool[m]);
  return model;
}

std::vector<Rational> random_point(random::Rng& rng, std::size_t dim, const Rational& radius) {
  std::vector<Rational> y(dim);
  for (auto& c : y) c = random::random_rational(rng, -radius, radius, 9);
  return y;
}

}  // namespace

TEST(Xi, Definition) {
  const auto model = small_model(3, 3);
  const auto xi11 = xi_vector(model, 1, 1);
  EXPECT_EQ(xi11.e_part, model.x_points[0]);
  EXPECT_EQ(xi11.l2_part, (std::map<PairIndex, Rational>{{{1, 1}, q(1)}}));
  const auto xi13 = xi_vector(model, 1, 3);
  EXPECT_EQ(xi13.e_part, (std::vector<Rational>{q(3, 2), q(0)}));
  LatticeElement k;
  k.k[{1, 2}] = -1;
  const auto v = realize(model, k);
  EXPECT_EQ(v.e_part, (std::vector<Rational>{q(-1), q(0)}));
  EXPECT_EQ(v.l2_part, (std::map<PairIndex, Rational>{{{1, 2}, q(-1)}}));
  EXPECT_THROW(xi_vector(model, 4, 1), PreconditionError);
  EXPECT_THROW(xi_vector(model, 1, 0), PreconditionError);
}

TEST(TildeDistance, Examples) {
  const auto model = small_model(3, 3);
  const auto xi = xi_vector(model, 1, 1);
  EXPECT_EQ(tilde_distance(model, xi, xi).upper, 0);
  const auto d = tilde_distance(model, xi, AmbientVector::zero(model));
  ASSERT_TRUE(d.exact());
  EXPECT_EQ(d.e_part + *d.l2_exact, e_distance(model, model.x_points[0], {q(0), q(0)}) + 1);

  AmbientVector h = AmbientVector::zero(model);
  h.l2_part[{1, 1}] = 1;
  h.l2_part[{2, 1}] = 1;
  const auto root2 = tilde_distance(model, h, AmbientVector::zero(model));
  EXPECT_FALSE(root2.exact());
  EXPECT_EQ(root2.l2_squared, 2);
  EXPECT_LT(root2.lower * root2.lower, 2);
  EXPECT_GT(root2.upper * root2.upper, 2);
  EXPECT_LT(root2.upper - root2.lower, Rational(1, pow2(190)));
}

TEST(Separation, Examples) {
  const auto model = small_model(3, 3);
  LatticeElement unit;
  unit.k[{1, 1}] = 1;
  const auto a = separation_check(model, unit, {q(0), q(0)});
  EXPECT_EQ(a.coefficient_square_sum, 1);
  EXPECT_TRUE(a.certified);
  LatticeElement k;
  k.k[{1, 1}] = 2;
  k.k[{2, 3}] = -1;
  const auto b = separation_check(model, k, {q(7, 3), q(-1, 2)});
  EXPECT_EQ(b.coefficient_square_sum, 5);
  EXPECT_TRUE(b.certified);
  EXPECT_THROW(separation_check(model, LatticeElement{}, {q(0), q(0)}), PreconditionError);
}

TEST(Separation, RandomElementsStayAtLeastOneAway) {
  const auto model = small_model(3, 3);
  random::Rng rng(53);
  for (int t = 0; t < 500; ++t) {
    LatticeElement k;
    while (k.is_zero()) {
      for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) k.k[{m, n}] = random::uniform(rng, -3, 3);
      }
      k.reduce();
    }
    const auto y = random_point(rng, 2, q(6));
    const auto r = separation_check(model, k, y);
    EXPECT_TRUE(r.certified);
    EXPECT_GE(r.distance.lower, 1);
    // Independent recomputation of the distance in long double.
    const auto v = realize(model, k);
    long double e = 0, sq = 0;
    for (std::size_t c = 0; c < 2; ++c) e += std::fabs(Rational(v.e_part[c] - y[c]).get_d());
    for (const auto& [idx, c] : k.k) sq += static_cast<long double>(c) * c;
    EXPECT_NEAR(static_cast<double>(e + std::sqrt(sq)), r.distance.lower.get_d(), 1e-12);
  }
}

TEST(Separation, ExhaustiveSweepSmallBox) {
  const auto model = small_model(2, 2, EMetric::linf);
  const auto sweep = separation_sweep(model, {q(1, 3), q(-2)}, 2);
  EXPECT_EQ(sweep.elements, 5u * 5 * 5 * 5 - 1);
  EXPECT_TRUE(sweep.all_certified);
  EXPECT_GE(sweep.min_lower_bound, 1);
}

TEST(LatticeMinNorm, Examples) {
  const auto model = small_model(3, 3);
  EXPECT_EQ(lattice_min_norm(model, 1).value, 1);
  EXPECT_EQ(lattice_min_norm(model, 3).value, 1);
  const auto r = lattice_min_norm(small_model(2, 2), 2);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.attained_up_to_sign, 4u);
  const auto [square, hits] = oracle::lattice_min_square(4, 2);
  EXPECT_EQ(r.min_square, square);
  EXPECT_EQ(r.attained_up_to_sign * 2, hits);
  EXPECT_THROW(lattice_min_norm(model, 0), PreconditionError);
}

TEST(DensityWitness, Examples) {
  const auto model = small_model(3, 3);
  EXPECT_EQ(density_witness(model, 1, 1), 1);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(density_witness(model, m, n), q(1, n));
  }
  AmbientModel wide = small_model(2, 1000);
  EXPECT_EQ(density_witness(wide, 2, 4), q(1, 4));
  EXPECT_EQ(density_witness(wide, 1, 1000), q(1, 1000));
  EXPECT_THROW(density_witness(model, 1, 4), PreconditionError);
}

TEST(QuotientDistance, Examples) {
  const auto model = small_model(2, 2);
  const auto xi = xi_vector(model, 1, 1);
  const auto same = quotient_distance_bounds(model, xi, xi, 1);
  EXPECT_TRUE(same.certified);
  EXPECT_EQ(same.upper.upper, 0);
  const auto lattice = quotient_distance_bounds(model, xi, AmbientVector::zero(model), 1);
  EXPECT_TRUE(lattice.certified);
  EXPECT_EQ(lattice.upper.upper, 0);

  const auto x1 = AmbientVector::from_e(model, model.x_points[0]);
  const auto r = quotient_distance_bounds(model, x1, AmbientVector::zero(model), 2);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.upper.upper, e_distance(model, model.x_points[0], {q(0), q(0)}));
  EXPECT_NEAR(r.upper.upper.get_d(),
              static_cast<double>(oracle::quotient_distance_scan(model, x1, AmbientVector::zero(model), 2)), 1e-12);
}

TEST(QuotientDistance, AgreesWithPlainEnumeration) {
  random::Rng rng(59);
  for (EMetric metric : {EMetric::l1, EMetric::linf}) {
    const auto model = small_model(2, 2, metric);
    for (int t = 0; t < 40; ++t) {
      AmbientVector h1 = AmbientVector::from_e(model, random_point(rng, 2, q(3)));
      AmbientVector h2 = AmbientVector::from_e(model, random_point(rng, 2, q(3)));
      h1.l2_part[{1, 2}] = random::random_rational(rng, q(-3, 2), q(3, 2), 5);
      h2.l2_part[{2, 1}] = random::random_rational(rng, q(-3, 2), q(3, 2), 5);
      for (auto* h : {&h1, &h2}) {
        for (auto it = h->l2_part.begin(); it != h->l2_part.end();) it = sgn(it->second) == 0 ? h->l2_part.erase(it) : std::next(it);
      }
      const auto r = quotient_distance_bounds(model, h1, h2, 2);
      const double expected = static_cast<double>(oracle::quotient_distance_scan(model, h1, h2, 2));
      EXPECT_NEAR(r.upper.upper.get_d(), expected, 1e-9);
      EXPECT_LE(r.lower, r.upper.upper);
    }
  }
}

TEST(QuotientDistance, IsometryBelowScaleOne) {
  random::Rng rng(61);
  for (EMetric metric : {EMetric::l1, EMetric::linf}) {
    const auto model = small_model(3, 3, metric);
    for (int t = 0; t < 30; ++t) {
      std::vector<Rational> y1, y2;
      Rational d;
      do {
        y1 = random_point(rng, 2, q(2));
        y2 = y1;
        for (auto& c : y2) c += random::random_rational(rng, q(-1, 2), q(1, 2), 8);
        d = e_distance(model, y1, y2);
      } while (d >= 1);
      const auto r = quotient_distance_bounds(model, AmbientVector::from_e(model, y1), AmbientVector::from_e(model, y2), 1);
      EXPECT_TRUE(r.certified);
      EXPECT_EQ(r.upper.upper, d);
      EXPECT_EQ(r.lower, d);
    }
  }
}

TEST(CirclePeriod, AllPairsOfSmallModel) {
  const auto model = small_model(2, 2);
  for (std::size_t m = 1; m <= 2; ++m) {
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto r = circle_period_check(model, m, n, 4);
      EXPECT_TRUE(r.ok());
      EXPECT_GT(r.half_turn_lower, 0);
      EXPECT_EQ(r.samples.size(), 4u);
      EXPECT_EQ(r.samples[2].t, q(1, 2));
    }
  }
  EXPECT_THROW(circle_period_check(model, 1, 1, 1), PreconditionError);
}

TEST(EmbeddingModel, Validation) {
  AmbientModel model = small_model(1, 1);
  model.x_points[0].pop_back();
  EXPECT_THROW(validate_model(model), InputError);
  EXPECT_THROW(parse_metric("l3"), InputError);
}
