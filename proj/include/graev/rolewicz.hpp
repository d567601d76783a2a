#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graev/torus.hpp"

namespace graev::rolewicz {

/// Which powers count as "the first n powers" of an element.
enum class PowerConvention {
  from_one,   // x, x^2, ..., x^n
  from_zero,  // 1, x, ..., x^n
};
std::string to_string(PowerConvention c);
PowerConvention parse_convention(const std::string& text);

/// Depth-k truncation of an omega-torus T_1 x ... x T_k with the invariant
/// metric rho(a, b) = sum w_i * d(a_i, b_i). radii[i] is the scale used at
/// level i+1 by every per-level check.
struct OmegaTorusModel {
  std::size_t depth = 1;
  std::vector<Rational> weights;
  std::vector<Rational> radii;

  /// w_i = r_i = 2^-i.
  static OmegaTorusModel with_defaults(std::size_t depth);
  /// Given weights, radii 2^-i.
  static OmegaTorusModel with_weights(std::vector<Rational> weights);
};

/// Throws InputError when the model is malformed.
void validate_model(const OmegaTorusModel& model);

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

/// "small_generator", "net" or "ball".
std::string condition_name(int condition);

struct ConditionReport {
  int condition = 0;      // 1 small generator, 2 net, 3 ball
  std::size_t level = 0;  // i for conditions 1 and 2, j for condition 3
  Status status = Status::inconclusive;
  /// threshold minus the certified upper bound of the measured quantity.
  std::optional<Rational> margin;
  std::optional<std::vector<Rational>> witness;
  std::string detail;
};

struct GeneratorCertificate {
  std::vector<torus::Angle> x;  // x_i in T_i
  std::vector<std::int64_t> n;  // n_i
  Rational grid_step;
  PowerConvention convention = PowerConvention::from_one;
  std::vector<ConditionReport> conditions;
};

struct BuildOptions {
  Rational grid_step{1, 512};
  PowerConvention convention = PowerConvention::from_one;
  std::size_t max_depth = 4;
  std::int64_t max_powers = std::int64_t{1} << 20;
};

/// Raised when the construction cannot certify a level; carries the level and
/// a finer grid step to retry with.
class ConstructionError : public PreconditionError {
 public:
  ConstructionError(std::size_t level, Rational suggested_grid, const std::string& what)
      : PreconditionError(what), level_(level), suggested_grid_(std::move(suggested_grid)) {}
  std::size_t level() const { return level_; }
  const Rational& suggested_grid() const { return suggested_grid_; }

 private:
  std::size_t level_;
  Rational suggested_grid_;
};

/// Recursive generator construction. Level i picks x_i = sqrt(p_i) / L with L
/// the least power of two such that n_{i-1} * w_i * |x_i| < r_i, then takes
/// n_i as the least power count (not below n_{i-1}) whose powers of
/// x_1 ... x_i certify an r_i-net of T_1 x ... x T_i. Every returned
/// certificate has been re-verified.
GeneratorCertificate construct_generator(const OmegaTorusModel& model, const BuildOptions& options = {});

struct VerificationReport {
  std::vector<ConditionReport> conditions;
  bool independent = false;
  std::vector<Integer> relation;  // dependence relation when !independent
  bool ok() const;
};

/// Independently re-checks the small-generator, net and ball conditions and
/// the rational independence of the x_i (advisory).
VerificationReport verify_certificate(const OmegaTorusModel& model, const GeneratorCertificate& cert);

/// The i-th power of the truncated generator x = (x_1, ..., x_k).
torus::TorusPoint generator_power(const GeneratorCertificate& cert, std::int64_t m, std::size_t dims);

/// rho(a, b) with certified error.
struct WeightedDistance {
  Rational value;
  Rational error;
  torus::Decision less_than(const Rational& eps) const;
};
WeightedDistance weighted_distance(const OmegaTorusModel& model, const std::vector<torus::FixedValue>& a,
                                   const torus::TorusPoint& b);

struct Approximation {
  torus::SearchStatus status = torus::SearchStatus::absent;
  std::int64_t m = 0;
  Rational distance;
  Rational error;
};

/// Smallest eps a target can be requested at: 2 * r_k.
Rational truncation_floor(const OmegaTorusModel& model);

/// Raised when a certified net fails to deliver an approximation.
class ContradictionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// First power m <= n_k of x with rho(x^m, z) < eps. Refuses eps below
/// truncation_floor.
Approximation approximate_target(const OmegaTorusModel& model, const GeneratorCertificate& cert,
                                 const torus::TorusPoint& z, const Rational& eps);

/// Power m among the first n_level powers minimizing rho(x^m, z).
Approximation nearest_power(const OmegaTorusModel& model, const GeneratorCertificate& cert,
                            const torus::TorusPoint& z, std::size_t level);

/// sum over l > level of w_l / 2: the largest contribution of the coordinates
/// beyond a level.
Rational tail_bound(const OmegaTorusModel& model, std::size_t level);

}  // namespace graev::rolewicz
