#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graev/errors.hpp"
#include "graev/rational.hpp"

namespace graev::torus {

/// Decimal digits carried by numeric evaluations (GRAEV_PRECISION_DIGITS,
/// default 50, minimum 20).
unsigned precision_digits();
/// Binary fixed-point width derived from precision_digits().
unsigned precision_bits();

/// A real number modulo 1 in fixed point: units / 2^P, units in [0, 2^P),
/// with |true value - units / 2^P| <= error_units / 2^P (modulo 1).
struct FixedValue {
  Integer units;
  Integer error_units;
};

/// m * x modulo 1; the error bound scales by |m|.
FixedValue multiply(const FixedValue& x, const Integer& m);
FixedValue add(const FixedValue& a, const FixedValue& b);
double to_double(const FixedValue& x);

/// Symbolic basis: index 0 is the number 1, index i >= 1 is sqrt(p_i) for the
/// i-th prime (sqrt2, sqrt3, sqrt5, ...).
inline constexpr std::size_t kBasisSize = 32;
unsigned basis_prime(std::size_t index);
std::string basis_label(std::size_t index);
/// Inverse of basis_label; throws InputError for unknown labels.
std::size_t basis_index(std::string_view label);

/// A point of the circle R/Z given exactly as a rational combination of the
/// basis, together with a fixed-point evaluation.
class Angle {
 public:
  Angle();
  explicit Angle(std::vector<Rational> coords);

  static Angle rational(const Rational& q);
  /// scale * sqrt(p) for the prime at basis_index.
  static Angle sqrt_prime(std::size_t basis_index, const Rational& scale = Rational(1));

  const std::vector<Rational>& coords() const { return coords_; }
  Rational coord(std::size_t index) const;
  const FixedValue& value() const { return value_; }
  double to_double() const { return torus::to_double(value_); }
  bool is_rational() const { return coords_.size() <= 1; }

  Angle operator+(const Angle& other) const;
  Angle operator-(const Angle& other) const;
  Angle operator-() const;
  Angle scaled(const Rational& factor) const;

  /// Exact symbolic equality (not modulo 1).
  friend bool operator==(const Angle& a, const Angle& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rational> coords_;
  FixedValue value_;
};

using TorusPoint = std::vector<Angle>;

/// Distance on R/Z with its tracked error, in fixed-point units.
struct CircleDistance {
  Integer units;
  Integer error_units;
  Rational value() const;
  Rational error() const;
  double to_double() const;
};

CircleDistance circle_distance(const FixedValue& a, const FixedValue& b);
CircleDistance circle_distance(const Angle& a, const Angle& b);

enum class Decision { yes, no, inconclusive };

/// Certified comparison distance < eps; inconclusive inside the error band.
Decision less_than(const CircleDistance& d, const Rational& eps);

struct IndependenceResult {
  bool independent = false;
  /// Integer relation c0*1 + c1*angle_1 + ... = 0 when dependent.
  std::vector<Integer> relation;
};

/// Decides whether {1} together with the angles is linearly independent over Q.
IndependenceResult independence_check(const std::vector<Angle>& angles);

/// Max over factors of circle_distance.
struct TorusDistance {
  std::vector<CircleDistance> factors;
};
Decision less_than(const TorusDistance& d, const Rational& eps);
TorusDistance torus_distance(const TorusPoint& a, const TorusPoint& b);

enum class SearchStatus { found, absent, inconclusive };

struct KroneckerResult {
  SearchStatus status = SearchStatus::absent;
  /// The hit when found; the first undecidable power when inconclusive.
  std::optional<std::int64_t> m;
};

/// Smallest m in 1..max_m with max-distance(m*x, target) < eps. The scan is
/// exhaustive, so `absent` is a proof for the given bound.
KroneckerResult kronecker_search(const TorusPoint& x, const TorusPoint& target, const Rational& eps,
                                 std::int64_t max_m);

/// Metric on a finite torus: the max over factors, or sum w_i * d_i.
class TorusMetric {
 public:
  static TorusMetric max_metric() { return TorusMetric(); }
  static TorusMetric weighted(std::vector<Rational> weights);

  bool is_weighted() const { return !weights_.empty(); }
  const std::vector<Rational>& weights() const { return weights_; }
  /// Factor weight used for the 1-D covering radius (1 for the max metric).
  Rational factor_weight(std::size_t index) const;
  /// Distance bound from any torus point to the nearest grid point.
  Rational grid_slack(const Rational& grid_step, std::size_t dim) const;

 private:
  std::vector<Rational> weights_;
};

enum class NetStatus { certified, refuted, inconclusive };
std::string to_string(NetStatus status);

struct NetCheckResult {
  NetStatus status = NetStatus::inconclusive;
  Rational slack;
  /// Refutation witness: a torus point at distance >= eps from every point.
  std::optional<std::vector<Rational>> witness;
  std::optional<double> witness_distance;
  /// Exact covering radius bounds (1-D only).
  std::optional<Rational> covering_radius_lower;
  std::optional<Rational> covering_radius_upper;
  std::uint64_t grid_points = 0;
  std::string detail;
};

/// Certifies that the points form an eps-net of the dim-torus. In dimension 1
/// the covering radius is computed exactly (sort and largest gap) and the
/// result is certified iff radius + slack < eps. In higher dimension every
/// grid point of spacing grid_step (which must be 1/G) has to lie within
/// eps - slack of some point; refuted carries a grid point at distance >= eps.
NetCheckResult net_check(const std::vector<TorusPoint>& points, std::size_t dim, const Rational& eps,
                         const Rational& grid_step, const TorusMetric& metric = TorusMetric::max_metric());

/// Absolute error budget for double-precision scans over fixed-point inputs.
inline constexpr double kScanError = 1e-12;

/// Circle distance between two doubles in [0, 1).
inline double circle_distance_double(double a, double b) {
  double d = a > b ? a - b : b - a;
  return d > 0.5 ? 1.0 - d : d;
}

/// Grid resolution G for grid_step = 1/G; throws InputError otherwise.
std::uint64_t grid_resolution(const Rational& grid_step);

}  // namespace graev::torus
