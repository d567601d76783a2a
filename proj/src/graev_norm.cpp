#include "graev/graev_norm.hpp"

#include <algorithm>
#include <functional>

namespace graev {

namespace {

struct PaddedInstance {
  std::vector<std::size_t> left;   // positive occurrences, then copies of *
  std::vector<std::size_t> right;  // negative occurrences, then copies of *
};

PaddedInstance pad(const PointedSpace& space, const Word& w) {
  PaddedInstance inst;
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;
  for (const auto& [index, k] : w.coeffs()) {
    auto& side = k > 0 ? positive : negative;
    for (std::int64_t c = 0; c < (k > 0 ? k : -k); ++c) side.push_back(index);
  }
  inst.left = positive;
  inst.left.insert(inst.left.end(), negative.size(), space.basepoint());
  inst.right = negative;
  inst.right.insert(inst.right.end(), positive.size(), space.basepoint());
  return inst;
}

// Hungarian method with potentials; a is n x n, 0-indexed. Returns the column
// assigned to each row.
std::vector<std::size_t> hungarian(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> u(n + 1), v(n + 1), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<bool> used(n + 1, false);
    std::vector<bool> finite(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      bool have_delta = false;
      Rational delta;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (!finite[j] || cur < minv[j]) {
          minv[j] = cur;
          finite[j] = true;
          way[j] = j0;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          have_delta = true;
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[p[j] - 1] = j - 1;
  return assignment;
}

}  // namespace

GraevNormResult graev_norm(const PointedSpace& space, const Word& w) {
  require_compatible(space, w);
  const std::int64_t letters = letter_count(w);
  if (letters > kMaxMatchingLetters) {
    throw PreconditionError("word has " + std::to_string(letters) + " letters; the limit is " +
                            std::to_string(kMaxMatchingLetters));
  }
  GraevNormResult result;
  if (w.is_zero()) return result;

  const PaddedInstance inst = pad(space, w);
  const std::size_t n = inst.left.size();
  std::vector<std::vector<Rational>> cost(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) cost[r][c] = space.dist(inst.left[r], inst.right[c]);
  }
  const auto assignment = hungarian(cost);
  const std::size_t base = space.basepoint();
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t left = inst.left[r];
    const std::size_t right = inst.right[assignment[r]];
    result.value += cost[r][assignment[r]];
    if (left == base && right == base) continue;
    result.certificate.pairs.push_back({left, right});
  }
  std::sort(result.certificate.pairs.begin(), result.certificate.pairs.end(),
            [](const MatchingPair& a, const MatchingPair& b) {
              return a.left != b.left ? a.left < b.left : a.right < b.right;
            });
  result.certificate.total_cost = result.value;
  return result;
}

Rational graev_distance(const PointedSpace& space, const Word& u, const Word& v) {
  require_compatible(space, u);
  require_compatible(space, v);
  return graev_norm(space, u - v).value;
}

Rational brute_force_norm(const PointedSpace& space, const Word& w, std::int64_t max_letters) {
  require_compatible(space, w);
  const std::int64_t letters = letter_count(w);
  if (letters > max_letters) {
    throw PreconditionError("brute force refused: " + std::to_string(letters) +
                            " letters exceed the bound " + std::to_string(max_letters));
  }
  if (w.is_zero()) return Rational(0);
  const PaddedInstance inst = pad(space, w);
  const std::size_t n = inst.left.size();

  std::vector<bool> used(n, false);
  bool have_best = false;
  Rational best;
  std::function<void(std::size_t, const Rational&)> enumerate = [&](std::size_t row,
                                                                    const Rational& partial) {
    if (row == n) {
      if (!have_best || partial < best) {
        best = partial;
        have_best = true;
      }
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      used[c] = true;
      enumerate(row + 1, partial + space.dist(inst.left[row], inst.right[c]));
      used[c] = false;
    }
  };
  enumerate(0, Rational(0));
  return best;
}

bool certificate_is_valid(const PointedSpace& space, const Word& w, const MatchingCertificate& cert) {
  if (!w.compatible_with(space)) return false;
  const std::size_t base = space.basepoint();
  std::map<std::size_t, std::int64_t> left_counts;
  std::map<std::size_t, std::int64_t> right_counts;
  Rational cost;
  for (const auto& pair : cert.pairs) {
    if (pair.left >= space.size() || pair.right >= space.size()) return false;
    if (pair.left == base && pair.right == base) return false;
    if (pair.left != base) ++left_counts[pair.left];
    if (pair.right != base) ++right_counts[pair.right];
    cost += space.dist(pair.left, pair.right);
  }
  for (const auto& [index, k] : w.coeffs()) {
    if (k > 0 && (left_counts[index] != k || right_counts[index] != 0)) return false;
    if (k < 0 && (right_counts[index] != -k || left_counts[index] != 0)) return false;
  }
  for (const auto& [index, count] : left_counts) {
    if (count != 0 && w.coeff(index) <= 0) return false;
  }
  for (const auto& [index, count] : right_counts) {
    if (count != 0 && w.coeff(index) >= 0) return false;
  }
  return cost == cert.total_cost;
}

Rational max_norm_distance(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw StructureError("vectors of different dimension");
  Rational best;
  for (std::size_t c = 0; c < a.size(); ++c) best = std::max<Rational>(best, abs(a[c] - b[c]));
  return best;
}

ExtensionReport homomorphic_extension_check(const PointedSpace& space, const PointMap& f,
                                            const Rational& lipschitz_constant,
                                            const std::vector<Word>& sample) {
  if (f.size() != space.size()) throw StructureError("map must assign a vector to every point");
  const std::size_t dim = f.empty() ? 0 : f.front().size();
  for (const auto& value : f) {
    if (value.size() != dim) throw StructureError("map values have inconsistent dimension");
  }
  for (const auto& c : f[space.basepoint()]) {
    if (c != 0) throw PreconditionError("map does not send the basepoint to zero");
  }
  if (sgn(lipschitz_constant) < 0) throw PreconditionError("Lipschitz constant must be nonnegative");
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      if (max_norm_distance(f[i], f[j]) > lipschitz_constant * space.dist(i, j)) {
        throw PreconditionError("map is not " + to_string(lipschitz_constant) + "-Lipschitz on pair (" +
                                space.name(i) + ", " + space.name(j) + ")");
      }
    }
  }

  ExtensionReport report;
  const std::vector<Rational> zero(dim);
  for (const auto& w : sample) {
    require_compatible(space, w);
    std::vector<Rational> image(dim);
    for (const auto& [index, k] : w.coeffs()) {
      for (std::size_t c = 0; c < dim; ++c) image[c] += f[index][c] * static_cast<long>(k);
    }
    const Rational lhs = max_norm_distance(image, zero);
    const Rational rhs = lipschitz_constant * graev_norm(space, w).value;
    ++report.checked;
    if (lhs > rhs) report.violations.push_back({w, lhs, rhs});
  }
  return report;
}

}  // namespace graev
