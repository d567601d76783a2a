#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graev/errors.hpp"
#include "graev/rational.hpp"

namespace graev::embedding {

/// Translation-invariant metric on the finite-dimensional model of E.
enum class EMetric { l1, linf };
std::string to_string(EMetric metric);
EMetric parse_metric(const std::string& text);

/// Truncated model of H = E + l2: E = Q^e_dim with metric d, a sample
/// x_1..x_M of E, and the orthonormal directions e_{m,n}, 1 <= n <= n_max.
struct AmbientModel {
  std::size_t e_dim = 1;
  std::vector<std::vector<Rational>> x_points;
  std::size_t n_max = 1;
  EMetric metric = EMetric::l1;

  std::size_t m_count() const { return x_points.size(); }
};

/// Throws InputError for empty or ragged models.
void validate_model(const AmbientModel& model);

/// d on E.
Rational e_distance(const AmbientModel& model, const std::vector<Rational>& a, const std::vector<Rational>& b);

/// (m, n), both 1-based.
using PairIndex = std::pair<std::size_t, std::size_t>;

struct AmbientVector {
  std::vector<Rational> e_part;
  std::map<PairIndex, Rational> l2_part;  // no zero entries

  static AmbientVector zero(const AmbientModel& model);
  /// (y, 0) for a point y of E.
  static AmbientVector from_e(const AmbientModel& model, std::vector<Rational> y);

  AmbientVector operator+(const AmbientVector& other) const;
  AmbientVector operator-(const AmbientVector& other) const;
  AmbientVector scaled(const Rational& factor) const;
  friend bool operator==(const AmbientVector&, const AmbientVector&) = default;
};

/// Integer combination sum k_{m,n} xi_{m,n}; no zero entries.
struct LatticeElement {
  std::map<PairIndex, std::int64_t> k;
  bool is_zero() const;
  void reduce();
};

AmbientVector xi_vector(const AmbientModel& model, std::size_t m, std::size_t n);
AmbientVector realize(const AmbientModel& model, const LatticeElement& element);

/// d(e1, e2) + |y1 - y2|. The l2 term is exact when its square is a rational
/// square; otherwise [lower, upper] encloses the sum to within 2^-200.
struct TildeDistance {
  Rational e_part;
  Rational l2_squared;
  std::optional<Rational> l2_exact;
  Rational lower;
  Rational upper;
  bool exact() const { return l2_exact.has_value(); }
};
TildeDistance tilde_distance(const AmbientModel& model, const AmbientVector& h1, const AmbientVector& h2);

struct SeparationReport {
  std::int64_t coefficient_square_sum = 0;  // sum k^2, an integer >= 1
  TildeDistance distance;
  bool certified = false;  // distance >= 1 established exactly
};

/// d~(sum k xi, y) >= |sum k e| = sqrt(sum k^2) >= 1 for nonzero k.
SeparationReport separation_check(const AmbientModel& model, const LatticeElement& element,
                                  const std::vector<Rational>& y);

struct SeparationSweep {
  std::uint64_t elements = 0;
  bool all_certified = true;
  /// Least exact lower bound d(., y) + floor(sqrt(sum k^2)) over the sweep.
  Rational min_lower_bound;
  LatticeElement argmin;
};

/// Exhaustive separation over every nonzero lattice element with entries in
/// [-B, B], in exact integer arithmetic.
SeparationSweep separation_sweep(const AmbientModel& model, const std::vector<Rational>& y, std::int64_t bound);

struct MinNormReport {
  Rational value;                       // min |sum k e|
  std::int64_t min_square = 0;          // min sum k^2
  std::uint64_t attained_up_to_sign = 0;
  std::uint64_t enumerated = 0;
};

/// Least l2-projection norm over nonzero lattice elements with entries in [-B, B].
MinNormReport lattice_min_norm(const AmbientModel& model, std::int64_t bound);

/// d~((1/n) xi_{m,n}, (x_m, 0)), checked to equal 1/n exactly.
Rational density_witness(const AmbientModel& model, std::size_t m, std::size_t n);

struct QuotientBounds {
  TildeDistance upper;        // attained at argmin
  LatticeElement argmin;
  Rational lower;             // certified lower bound on the quotient distance
  Rational excluded_lower_bound;
  bool certified = false;     // minimum provably inside the box
};

/// min over k in [-B, B]^(M N) of d~(h1, h2 + sum k xi). Certified when every
/// element outside the box is provably farther than the minimum found.
QuotientBounds quotient_distance_bounds(const AmbientModel& model, const AmbientVector& h1,
                                        const AmbientVector& h2, std::int64_t bound);

struct PeriodSample {
  Rational t;
  bool zero_certified = false;
};

struct PeriodReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<PeriodSample> samples;
  Rational half_turn_lower;  // certified lower bound on dist((1/2) xi, D)
  bool nondegenerate = false;
  bool ok() const;
};

/// t -> t xi_{m,n} + D has period 1 and (1/2) xi_{m,n} is not in D.
PeriodReport circle_period_check(const AmbientModel& model, std::size_t m, std::size_t n, std::size_t samples);

}  // namespace graev::embedding
