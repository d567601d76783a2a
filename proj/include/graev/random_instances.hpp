#pragma once

#include <cstdint>
#include <random>

#include "graev/core.hpp"
#include "graev/graev_norm.hpp"

namespace graev::random {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Pointed pseudometric space with 2..max_points points ("*" first). All
/// distances share one denominator q <= max_denominator and come from a
/// shortest-path closure, so the triangle inequality holds by construction.
PointedSpace random_space(Rng& rng, std::size_t max_points = 5, std::int64_t max_denominator = 12);

/// Word with coefficients in [-max_coeff, max_coeff] and at most max_letters letters.
Word random_word(Rng& rng, const PointedSpace& space, std::int64_t max_letters = 6, std::int64_t max_coeff = 3);

/// Rational combination with small numerators and denominators.
LinComb random_lincomb(Rng& rng, const PointedSpace& space, std::int64_t max_denominator = 6);

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, std::int64_t max_denominator);

/// 1-Lipschitz map into Q^dim (max-norm) with f(*) = 0. Each coordinate is
/// built point by point, sometimes pinned to an end of the feasible interval.
PointMap random_lipschitz_map(Rng& rng, const PointedSpace& space, std::size_t dim);

}  // namespace graev::random
