#pragma once

#include <cstdint>
#include <vector>

#include "graev/core.hpp"

namespace graev {

/// One pair of an optimal representation w = sum(left_j - right_j). Indices
/// are point indices; the basepoint index stands for a padding copy of *.
struct MatchingPair {
  std::size_t left = 0;
  std::size_t right = 0;
  friend bool operator==(const MatchingPair&, const MatchingPair&) = default;
};

/// Basepoint-basepoint pairs are omitted since they cost nothing.
struct MatchingCertificate {
  std::vector<MatchingPair> pairs;
  Rational total_cost;
};

struct GraevNormResult {
  Rational value;
  MatchingCertificate certificate;
};

/// Largest letter count graev_norm accepts (the assignment is cubic in it).
inline constexpr std::int64_t kMaxMatchingLetters = 400;

/// Graev norm of w: the cheapest perfect matching between positive letter
/// occurrences padded with copies of * and negative occurrences padded the
/// same way. Solved exactly by the Hungarian method over rationals.
GraevNormResult graev_norm(const PointedSpace& space, const Word& w);

/// Translation-invariant Graev distance: graev_norm(u - v).
Rational graev_distance(const PointedSpace& space, const Word& u, const Word& v);

/// Exhaustive enumeration of every perfect matching of the padded instance.
/// Refuses (PreconditionError) when the letter count exceeds max_letters.
Rational brute_force_norm(const PointedSpace& space, const Word& w, std::int64_t max_letters = 10);

/// True when cert is a perfect matching for w whose recomputed cost equals
/// cert.total_cost.
bool certificate_is_valid(const PointedSpace& space, const Word& w, const MatchingCertificate& cert);

/// f(point) as a vector of rationals; f(*) must be the zero vector.
using PointMap = std::vector<std::vector<Rational>>;

struct ExtensionViolation {
  Word word;
  Rational extension_norm;  // |f(w)|_inf
  Rational bound;           // C * graev_norm(w)
};

struct ExtensionReport {
  std::size_t checked = 0;
  std::vector<ExtensionViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Max-norm of the difference of two vectors of equal length.
Rational max_norm_distance(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Checks |f(w)|_inf <= C * graev_norm(w) for every sampled word, where f is
/// extended additively. Throws PreconditionError if f(*) != 0 or f is not
/// C-Lipschitz on the points (naming the first violating pair).
ExtensionReport homomorphic_extension_check(const PointedSpace& space, const PointMap& f,
                                            const Rational& lipschitz_constant,
                                            const std::vector<Word>& sample);

}  // namespace graev
