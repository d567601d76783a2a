#include <gtest/gtest.h>

#include "graev/random_instances.hpp"
#include "graev/rolewicz.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace graev;
using namespace graev::rolewicz;
using support::q;

namespace {

// Least n whose first n powers of x (times the weight) leave covering radius
// plus grid slack below r, from the high-precision sort-and-gap oracle.
std::int64_t least_one_dimensional_count(const torus::Angle& x, const Rational& weight, const Rational& r,
                                         const Rational& grid, PowerConvention convention) {
  std::vector<mpf_class> values;
  if (convention == PowerConvention::from_zero) values.push_back(mpf_class(0, 512));
  const mpf_class threshold(Rational((r - weight * grid / 2) / weight), 512);
  for (std::int64_t n = 1;; ++n) {
    values.push_back(oracle::angle_value(x.scaled(Rational(static_cast<long>(n)))));
    if (oracle::covering_radius(values) < threshold) return n;
  }
}

mpf_class oracle_weighted(const OmegaTorusModel& model, const GeneratorCertificate& cert, std::int64_t m,
                          const torus::TorusPoint& z) {
  mpf_class total(0, 512);
  for (std::size_t l = 0; l < z.size(); ++l) {
    const mpf_class xm = oracle::angle_value(cert.x[l].scaled(Rational(static_cast<long>(m))));
    total += mpf_class(model.weights[l], 512) * oracle::circle_distance(xm, oracle::angle_value(z[l]));
  }
  return total;
}

const GeneratorCertificate& depth_two() {
  static const GeneratorCertificate cert = construct_generator(OmegaTorusModel::with_defaults(2));
  return cert;
}

}  // namespace

TEST(Rolewicz, DepthOneDefaultWeights) {
  const auto model = OmegaTorusModel::with_defaults(1);
  const auto cert = construct_generator(model);
  ASSERT_EQ(cert.x.size(), 1u);
  EXPECT_EQ(cert.x[0], torus::Angle::sqrt_prime(1, q(1, 2)));
  EXPECT_FALSE(cert.x[0].is_rational());
  EXPECT_EQ(cert.n[0], least_one_dimensional_count(cert.x[0], model.weights[0], model.radii[0], cert.grid_step,
                                                   cert.convention));
  EXPECT_TRUE(verify_certificate(model, cert).ok());
}

TEST(Rolewicz, DepthOneUnitWeightMatchesCoveringRadiusOracle) {
  const auto model = OmegaTorusModel::with_weights({q(1)});
  for (auto convention : {PowerConvention::from_one, PowerConvention::from_zero}) {
    BuildOptions options;
    options.convention = convention;
    const auto cert = construct_generator(model, options);
    EXPECT_EQ(cert.x[0], torus::Angle::sqrt_prime(1, q(1, 4)));
    EXPECT_EQ(cert.n[0], least_one_dimensional_count(cert.x[0], q(1), q(1, 2), cert.grid_step, convention));
    EXPECT_TRUE(verify_certificate(model, cert).ok());
  }
}

TEST(Rolewicz, SinglePowerIsRefutedWithWitness) {
  const auto model = OmegaTorusModel::with_weights({q(1)});
  auto cert = construct_generator(model);
  ASSERT_GT(cert.n[0], 1);
  cert.n[0] = 1;
  const auto report = verify_certificate(model, cert);
  EXPECT_FALSE(report.ok());
  bool refuted = false;
  for (const auto& c : report.conditions) {
    if (c.condition == 2 && c.level == 1) {
      refuted = c.status == Status::fail && c.witness.has_value();
      if (c.witness) {
        const double gap = torus::circle_distance_double(cert.x[0].to_double(), (*c.witness)[0].get_d());
        EXPECT_GE(gap, 0.5 - 1e-12);
      }
    }
  }
  EXPECT_TRUE(refuted);
}

TEST(Rolewicz, DepthTwoCertificate) {
  const auto model = OmegaTorusModel::with_defaults(2);
  const auto& cert = depth_two();
  EXPECT_TRUE(std::is_sorted(cert.n.begin(), cert.n.end()));
  const auto report = verify_certificate(model, cert);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.independent);
  for (const auto& c : report.conditions) {
    EXPECT_EQ(c.status, Status::pass) << "condition " << c.condition << " level " << c.level;
    if (c.margin) EXPECT_GT(*c.margin, 0);
  }
  // Condition (1) and the choice of x_2: n_1 * w_2 * |x_2| < r_2.
  EXPECT_LT(Rational(cert.n[0]) * model.weights[1] * torus::circle_distance(cert.x[1], torus::Angle()).value(),
            model.radii[1]);
}

TEST(Rolewicz, DepthTwoGridTargetsAgainstOracle) {
  const auto model = OmegaTorusModel::with_defaults(2);
  const auto& cert = depth_two();
  random::Rng rng(19);
  const mpf_class eps(Rational(model.radii[1] + tail_bound(model, 2)), 512);
  for (int t = 0; t < 10; ++t) {
    const torus::TorusPoint z{torus::Angle::rational(q(random::uniform(rng, 0, 511), 512)),
                              torus::Angle::rational(q(random::uniform(rng, 0, 511), 512))};
    const auto best = nearest_power(model, cert, z, 2);
    const mpf_class exact = oracle_weighted(model, cert, best.m, z);
    EXPECT_LT(exact, eps);
    mpf_class diff(mpf_class(best.distance, 512) - exact, 512);
    EXPECT_LT(abs(diff), mpf_class("1e-30", 512));
  }
}

TEST(Rolewicz, ReplacingXWithRationalAngleRaisesIndependenceFlag) {
  const auto model = OmegaTorusModel::with_defaults(2);
  auto cert = depth_two();
  cert.x[1] = torus::Angle::rational(q(1, 1024));
  const auto report = verify_certificate(model, cert);
  EXPECT_FALSE(report.independent);
  ASSERT_EQ(report.relation.size(), 3u);
  EXPECT_EQ(report.relation[1], 0);
  EXPECT_NE(report.relation[2], 0);
}

TEST(Rolewicz, ApproximateTarget) {
  const auto model = OmegaTorusModel::with_defaults(2);
  const auto& cert = depth_two();
  const Rational floor = truncation_floor(model);
  EXPECT_EQ(floor, q(1, 2));
  const torus::TorusPoint zero{torus::Angle(), torus::Angle()};
  EXPECT_EQ(approximate_target(model, cert, zero, floor).status, torus::SearchStatus::found);
  const torus::TorusPoint half{torus::Angle::rational(q(1, 2)), torus::Angle::rational(q(1, 2))};
  const auto a = approximate_target(model, cert, half, q(1, 2));
  EXPECT_EQ(a.status, torus::SearchStatus::found);
  EXPECT_LE(a.m, cert.n[1]);
  EXPECT_THROW(approximate_target(model, cert, zero, q(1, 4)), PreconditionError);

  const std::int64_t m0 = std::min<std::int64_t>(cert.n[1], 7);
  const auto power = generator_power(cert, m0, 2);
  const auto hit = approximate_target(model, cert, power, floor);
  EXPECT_EQ(hit.status, torus::SearchStatus::found);
  EXPECT_LE(hit.m, m0);
  const auto exact = nearest_power(model, cert, power, 2);
  EXPECT_LE(exact.distance, exact.error);
}

TEST(Rolewicz, CoarseGridAbortsWithSuggestion) {
  const auto model = OmegaTorusModel::with_weights({q(1)});
  BuildOptions options;
  options.grid_step = q(1);
  try {
    construct_generator(model, options);
    FAIL() << "expected a construction error";
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.level(), 1u);
    EXPECT_EQ(e.suggested_grid(), q(1, 2));
  }
}

TEST(Rolewicz, ModelValidation) {
  OmegaTorusModel bad = OmegaTorusModel::with_defaults(2);
  bad.weights[1] = 0;
  EXPECT_THROW(validate_model(bad), InputError);
  bad = OmegaTorusModel::with_defaults(2);
  bad.radii.pop_back();
  EXPECT_THROW(validate_model(bad), InputError);
  EXPECT_THROW(construct_generator(OmegaTorusModel::with_defaults(5)), PreconditionError);
  EXPECT_THROW(parse_convention("powers-from-2"), InputError);
}

TEST(Rolewicz, TailBound) {
  const auto model = OmegaTorusModel::with_defaults(3);
  EXPECT_EQ(tail_bound(model, 1), q(1, 8) + q(1, 16));
  EXPECT_EQ(tail_bound(model, 3), 0);
}
