#include "graev/random_instances.hpp"

#include <string>

namespace graev::random {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

PointedSpace random_space(Rng& rng, std::size_t max_points, std::int64_t max_denominator) {
  const auto n = static_cast<std::size_t>(uniform(rng, 2, static_cast<std::int64_t>(std::max<std::size_t>(2, max_points))));
  const std::int64_t q = uniform(rng, 1, max_denominator);
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Occasional zero edges keep genuine pseudometrics in the mix.
      w[i][j] = w[j][i] = uniform(rng, 0, 9) == 0 ? 0 : uniform(rng, 1, 3 * q);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) w[i][j] = std::min(w[i][j], w[i][k] + w[k][j]);
    }
  }
  std::vector<std::string> names{"*"};
  for (std::size_t i = 1; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[i][j] = ratio(Integer(static_cast<long>(w[i][j])), Integer(static_cast<unsigned long>(q)));
      dist[i][j].canonicalize();
    }
  }
  return PointedSpace(std::move(names), 0, std::move(dist));
}

Word random_word(Rng& rng, const PointedSpace& space, std::int64_t max_letters, std::int64_t max_coeff) {
  std::map<std::size_t, std::int64_t> coeffs;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i != space.basepoint()) coeffs[i] = uniform(rng, -max_coeff, max_coeff);
  }
  auto total = [&] {
    std::int64_t t = 0;
    for (const auto& [i, k] : coeffs) t += k < 0 ? -k : k;
    return t;
  };
  while (total() > max_letters) {
    std::vector<std::size_t> nonzero;
    for (const auto& [i, k] : coeffs) {
      if (k != 0) nonzero.push_back(i);
    }
    const std::size_t pick = nonzero[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(nonzero.size()) - 1))];
    coeffs[pick] += coeffs[pick] > 0 ? -1 : 1;
  }
  return Word::from_coeffs(space, coeffs);
}

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, std::int64_t max_denominator) {
  const std::int64_t q = uniform(rng, 1, max_denominator);
  const Integer a = ceil(Rational(lo * q));
  const Integer b = floor(Rational(hi * q));
  if (a > b) return lo;
  const std::int64_t span = Integer(b - a).get_si();
  Rational out(Integer(a + uniform(rng, 0, span)), Integer(static_cast<long>(q)));
  out.canonicalize();
  return out;
}

LinComb random_lincomb(Rng& rng, const PointedSpace& space, std::int64_t max_denominator) {
  LinComb v(space.size(), space.basepoint());
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i == space.basepoint() || uniform(rng, 0, 3) == 0) continue;
    v.add(i, random_rational(rng, Rational(-3), Rational(3), max_denominator));
  }
  return v;
}

PointMap random_lipschitz_map(Rng& rng, const PointedSpace& space, std::size_t dim) {
  PointMap f(space.size(), std::vector<Rational>(dim));
  const std::size_t base = space.basepoint();
  for (std::size_t c = 0; c < dim; ++c) {
    // Values are fixed one point at a time inside the interval left open by
    // the points already fixed, so every 1-Lipschitz map can come out.
    std::vector<std::size_t> fixed{base};
    for (std::size_t x = 0; x < space.size(); ++x) {
      if (x == base) continue;
      Rational lo = f[base][c] - space.dist(x, base);
      Rational hi = f[base][c] + space.dist(x, base);
      for (std::size_t y : fixed) {
        lo = std::max(lo, Rational(f[y][c] - space.dist(x, y)));
        hi = std::min(hi, Rational(f[y][c] + space.dist(x, y)));
      }
      const std::int64_t pick = uniform(rng, 0, 4);
      if (pick == 0) {
        f[x][c] = lo;
      } else if (pick == 1) {
        f[x][c] = hi;
      } else {
        f[x][c] = random_rational(rng, lo, hi, 12);
      }
      fixed.push_back(x);
    }
  }
  return f;
}

}  // namespace graev::random
