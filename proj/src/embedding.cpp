#include "graev/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace graev::embedding {

namespace {

std::vector<PairIndex> index_set(const AmbientModel& model) {
  std::vector<PairIndex> out;
  for (std::size_t m = 1; m <= model.m_count(); ++m) {
    for (std::size_t n = 1; n <= model.n_max; ++n) out.emplace_back(m, n);
  }
  return out;
}

void check_pair(const AmbientModel& model, std::size_t m, std::size_t n) {
  if (m < 1 || m > model.m_count() || n < 1 || n > model.n_max) {
    throw PreconditionError("index (" + std::to_string(m) + "," + std::to_string(n) + ") outside the truncation");
  }
}

void check_vector(const AmbientModel& model, const AmbientVector& h) {
  if (h.e_part.size() != model.e_dim) throw StructureError("vector has the wrong E dimension");
  for (const auto& [index, value] : h.l2_part) check_pair(model, index.first, index.second);
}

long double box_size(std::size_t coordinates, std::int64_t bound) {
  return std::pow(static_cast<long double>(2 * bound + 1), static_cast<long double>(coordinates));
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw PreconditionError("model coordinates too large for the integer sweep");
  return z.get_si();
}

}  // namespace

std::string to_string(EMetric metric) { return metric == EMetric::l1 ? "l1" : "linf"; }

EMetric parse_metric(const std::string& text) {
  if (text == "l1") return EMetric::l1;
  if (text == "linf") return EMetric::linf;
  throw InputError("unknown metric '" + text + "' (expected l1 or linf)");
}

void validate_model(const AmbientModel& model) {
  if (model.e_dim == 0) throw InputError("e_dim must be positive");
  if (model.x_points.empty()) throw InputError("model needs at least one point x_m");
  if (model.n_max == 0) throw InputError("n_max must be positive");
  for (const auto& x : model.x_points) {
    if (x.size() != model.e_dim) throw InputError("point x_m has the wrong dimension");
  }
}

Rational e_distance(const AmbientModel& model, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != model.e_dim || b.size() != model.e_dim) throw StructureError("vector has the wrong E dimension");
  Rational out;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const Rational d = abs(a[c] - b[c]);
    if (model.metric == EMetric::l1) {
      out += d;
    } else if (d > out) {
      out = d;
    }
  }
  return out;
}

AmbientVector AmbientVector::zero(const AmbientModel& model) {
  return {std::vector<Rational>(model.e_dim), {}};
}

AmbientVector AmbientVector::from_e(const AmbientModel& model, std::vector<Rational> y) {
  if (y.size() != model.e_dim) throw StructureError("point of E has the wrong dimension");
  return {std::move(y), {}};
}

AmbientVector AmbientVector::operator+(const AmbientVector& other) const {
  if (e_part.size() != other.e_part.size()) throw StructureError("vectors of different E dimension");
  AmbientVector out = *this;
  for (std::size_t c = 0; c < e_part.size(); ++c) out.e_part[c] += other.e_part[c];
  for (const auto& [index, value] : other.l2_part) {
    Rational& slot = out.l2_part[index];
    slot += value;
    if (sgn(slot) == 0) out.l2_part.erase(index);
  }
  return out;
}

AmbientVector AmbientVector::operator-(const AmbientVector& other) const { return *this + other.scaled(-1); }

AmbientVector AmbientVector::scaled(const Rational& factor) const {
  AmbientVector out{e_part, {}};
  for (auto& c : out.e_part) c *= factor;
  if (sgn(factor) != 0) {
    for (const auto& [index, value] : l2_part) out.l2_part.emplace(index, value * factor);
  }
  return out;
}

bool LatticeElement::is_zero() const {
  return std::all_of(k.begin(), k.end(), [](const auto& entry) { return entry.second == 0; });
}

void LatticeElement::reduce() { std::erase_if(k, [](const auto& entry) { return entry.second == 0; }); }

AmbientVector xi_vector(const AmbientModel& model, std::size_t m, std::size_t n) {
  validate_model(model);
  check_pair(model, m, n);
  AmbientVector out{model.x_points[m - 1], {}};
  for (auto& c : out.e_part) c *= static_cast<long>(n);
  out.l2_part.emplace(PairIndex{m, n}, Rational(1));
  return out;
}

AmbientVector realize(const AmbientModel& model, const LatticeElement& element) {
  AmbientVector out = AmbientVector::zero(model);
  for (const auto& [index, k] : element.k) {
    if (k == 0) continue;
    out = out + xi_vector(model, index.first, index.second).scaled(Rational(static_cast<long>(k)));
  }
  return out;
}

TildeDistance tilde_distance(const AmbientModel& model, const AmbientVector& h1, const AmbientVector& h2) {
  check_vector(model, h1);
  check_vector(model, h2);
  TildeDistance out;
  out.e_part = e_distance(model, h1.e_part, h2.e_part);
  const AmbientVector diff = h1 - h2;
  for (const auto& [index, value] : diff.l2_part) out.l2_squared += value * value;
  const auto root = sqrt_enclosure(out.l2_squared);
  if (root.exact) out.l2_exact = root.lo;
  out.lower = out.e_part + root.lo;
  out.upper = out.e_part + root.hi;
  return out;
}

SeparationReport separation_check(const AmbientModel& model, const LatticeElement& element,
                                  const std::vector<Rational>& y) {
  validate_model(model);
  LatticeElement k = element;
  k.reduce();
  if (k.is_zero()) throw PreconditionError("separation needs a nonzero lattice element");
  SeparationReport rep;
  for (const auto& [index, value] : k.k) {
    check_pair(model, index.first, index.second);
    rep.coefficient_square_sum += value * value;
  }
  rep.distance = tilde_distance(model, realize(model, k), AmbientVector::from_e(model, y));
  // d >= 0 and sum k^2 >= 1 give the bound without touching the enclosure.
  rep.certified = sgn(rep.distance.e_part) >= 0 && rep.coefficient_square_sum >= 1 && rep.distance.lower >= 1;
  return rep;
}

SeparationSweep separation_sweep(const AmbientModel& model, const std::vector<Rational>& y, std::int64_t bound) {
  validate_model(model);
  if (bound < 1) throw PreconditionError("coefficient bound must be at least 1");
  if (y.size() != model.e_dim) throw StructureError("point of E has the wrong dimension");
  const auto indices = index_set(model);
  const std::size_t count = indices.size();
  if (box_size(count, bound) > 1e11L) throw PreconditionError("lattice box too large for exhaustive enumeration");

  Integer den = 1;
  for (const auto& x : model.x_points) {
    for (const auto& c : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& c : y) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const std::int64_t scale = to_int64(den);
  const std::size_t dim = model.e_dim;

  std::vector<std::int64_t> step(count * dim);
  long double magnitude = 0;
  for (std::size_t j = 0; j < count; ++j) {
    const auto [m, n] = indices[j];
    for (std::size_t c = 0; c < dim; ++c) {
      const Rational v = model.x_points[m - 1][c] * static_cast<long>(n) * den;
      step[j * dim + c] = to_int64(v.get_num());
      magnitude += std::fabs(static_cast<long double>(step[j * dim + c])) * bound;
    }
  }
  std::vector<std::int64_t> target(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    target[c] = to_int64(Rational(y[c] * den).get_num());
    magnitude += std::fabs(static_cast<long double>(target[c]));
  }
  if (magnitude * static_cast<long double>(dim + 1) > 1e17L) {
    throw PreconditionError("model coordinates too large for the integer sweep");
  }

  std::vector<std::int64_t> k(count, -bound);
  std::vector<std::int64_t> e(dim, 0);
  std::int64_t square_sum = 0;
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t c = 0; c < dim; ++c) e[c] += k[j] * step[j * dim + c];
    square_sum += bound * bound;
  }

  SeparationSweep sweep;
  bool have = false;
  std::int64_t best_numerator = 0;
  std::vector<std::int64_t> best_k;
  while (true) {
    if (square_sum > 0) {
      std::int64_t d = 0;
      for (std::size_t c = 0; c < dim; ++c) {
        const std::int64_t diff = std::llabs(e[c] - target[c]);
        d = model.metric == EMetric::l1 ? d + diff : std::max(d, diff);
      }
      auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(square_sum)));
      while (root * root > square_sum) --root;
      while ((root + 1) * (root + 1) <= square_sum) ++root;
      const std::int64_t numerator = d + scale * root;  // lower bound times scale
      ++sweep.elements;
      if (numerator < scale) sweep.all_certified = false;
      if (!have || numerator < best_numerator) {
        have = true;
        best_numerator = numerator;
        best_k = k;
      }
    }
    std::size_t j = 0;
    for (; j < count; ++j) {
      if (k[j] < bound) {
        square_sum += 2 * k[j] + 1;
        ++k[j];
        for (std::size_t c = 0; c < dim; ++c) e[c] += step[j * dim + c];
        break;
      }
      k[j] = -bound;
      for (std::size_t c = 0; c < dim; ++c) e[c] -= 2 * bound * step[j * dim + c];
    }
    if (j == count) break;
  }
  sweep.min_lower_bound = ratio(Integer(static_cast<long>(best_numerator)), den);
  for (std::size_t j = 0; j < count; ++j) {
    if (best_k[j] != 0) sweep.argmin.k.emplace(indices[j], best_k[j]);
  }
  return sweep;
}

MinNormReport lattice_min_norm(const AmbientModel& model, std::int64_t bound) {
  validate_model(model);
  if (bound < 1) throw PreconditionError("coefficient bound must be at least 1");
  const std::size_t count = index_set(model).size();
  if (count == 0) throw PreconditionError("truncated index set is empty");
  if (box_size(count, bound) > 1e11L) throw PreconditionError("lattice box too large for exhaustive enumeration");

  MinNormReport rep;
  std::vector<std::int64_t> k(count, -bound);
  std::int64_t square_sum = static_cast<std::int64_t>(count) * bound * bound;
  std::uint64_t attained = 0;
  bool have = false;
  while (true) {
    if (square_sum > 0) {
      ++rep.enumerated;
      if (!have || square_sum < rep.min_square) {
        rep.min_square = square_sum;
        attained = 0;
        have = true;
      }
      if (square_sum == rep.min_square) ++attained;
    }
    std::size_t j = 0;
    for (; j < count; ++j) {
      if (k[j] < bound) {
        square_sum += 2 * k[j] + 1;
        ++k[j];
        break;
      }
      k[j] = -bound;
    }
    if (j == count) break;
  }
  rep.attained_up_to_sign = attained / 2;
  const auto root = exact_sqrt(Rational(static_cast<long>(rep.min_square)));
  if (!root) throw std::logic_error("integer lattice minimum is not a perfect square");
  rep.value = *root;
  return rep;
}

Rational density_witness(const AmbientModel& model, std::size_t m, std::size_t n) {
  validate_model(model);
  check_pair(model, m, n);
  const AmbientVector scaled = xi_vector(model, m, n).scaled(Rational(Integer(1), Integer(static_cast<unsigned long>(n))));
  const TildeDistance d = tilde_distance(model, scaled, AmbientVector::from_e(model, model.x_points[m - 1]));
  const Rational expected(Integer(1), Integer(static_cast<unsigned long>(n)));
  if (!d.exact() || d.e_part + *d.l2_exact != expected) {
    throw std::logic_error("density witness does not equal 1/n");
  }
  return d.e_part + *d.l2_exact;
}

QuotientBounds quotient_distance_bounds(const AmbientModel& model, const AmbientVector& h1, const AmbientVector& h2,
                                        std::int64_t bound) {
  validate_model(model);
  check_vector(model, h1);
  check_vector(model, h2);
  if (bound < 0) throw PreconditionError("radius bound must be nonnegative");
  const auto indices = index_set(model);
  const std::size_t count = indices.size();
  const std::size_t dim = model.e_dim;
  if (box_size(count, bound) > 1e15L) throw PreconditionError("lattice box too large");

  const AmbientVector diff = h1 - h2;
  std::vector<double> delta(count);
  std::vector<double> steps(count * dim);
  std::vector<double> e_diff(dim);
  double scale = 1;
  for (std::size_t j = 0; j < count; ++j) {
    auto it = diff.l2_part.find(indices[j]);
    delta[j] = it == diff.l2_part.end() ? 0.0 : it->second.get_d();
    const auto [m, n] = indices[j];
    for (std::size_t c = 0; c < dim; ++c) {
      steps[j * dim + c] = model.x_points[m - 1][c].get_d() * static_cast<double>(n);
      scale += std::fabs(steps[j * dim + c]) * static_cast<double>(bound);
    }
    scale += std::fabs(delta[j]);
  }
  for (std::size_t c = 0; c < dim; ++c) {
    e_diff[c] = diff.e_part[c].get_d();
    scale += std::fabs(e_diff[c]);
  }
  const double margin = 1e-9 * scale;

  // Depth-first search in doubles with l2 pruning; near-optimal leaves are
  // re-evaluated exactly below.
  std::vector<std::int64_t> k(count, 0);
  std::vector<double> e_cur(dim, 0.0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, std::vector<std::int64_t>>> candidates;
  auto leaf_value = [&](double square_sum) {
    double d = 0;
    for (std::size_t c = 0; c < dim; ++c) {
      const double x = std::fabs(e_diff[c] - e_cur[c]);
      d = model.metric == EMetric::l1 ? d + x : std::max(d, x);
    }
    return d + std::sqrt(square_sum);
  };
  auto search = [&](auto&& self, std::size_t j, double square_sum) -> void {
    if (std::sqrt(square_sum) > best + margin) return;
    if (j == count) {
      const double value = leaf_value(square_sum);
      if (value <= best + margin) {
        candidates.emplace_back(value, k);
        best = std::min(best, value);
      }
      return;
    }
    const double centre = std::clamp(std::round(delta[j]), static_cast<double>(-bound), static_cast<double>(bound));
    std::vector<std::int64_t> order;
    order.push_back(static_cast<std::int64_t>(centre));
    for (std::int64_t off = 1; off <= 2 * bound; ++off) {
      for (std::int64_t v : {static_cast<std::int64_t>(centre) + off, static_cast<std::int64_t>(centre) - off}) {
        if (v >= -bound && v <= bound) order.push_back(v);
      }
    }
    for (std::int64_t v : order) {
      const double r = delta[j] - static_cast<double>(v);
      k[j] = v;
      for (std::size_t c = 0; c < dim; ++c) e_cur[c] += static_cast<double>(v) * steps[j * dim + c];
      self(self, j + 1, square_sum + r * r);
      for (std::size_t c = 0; c < dim; ++c) e_cur[c] -= static_cast<double>(v) * steps[j * dim + c];
    }
    k[j] = 0;
  };
  search(search, 0, 0.0);

  QuotientBounds out;
  bool have = false;
  for (const auto& [value, ks] : candidates) {
    if (value > best + margin) continue;
    LatticeElement element;
    for (std::size_t j = 0; j < count; ++j) {
      if (ks[j] != 0) element.k.emplace(indices[j], ks[j]);
    }
    const TildeDistance d = tilde_distance(model, h1, h2 + realize(model, element));
    if (!have || d.upper < out.upper.upper) {
      out.upper = d;
      out.argmin = element;
    }
    out.lower = have ? std::min<Rational>(out.lower, d.lower) : d.lower;
    have = true;
  }
  if (!have) throw std::logic_error("quotient search found no candidate");

  bool first = true;
  for (std::size_t j = 0; j < count; ++j) {
    auto it = diff.l2_part.find(indices[j]);
    const Rational delta_j = it == diff.l2_part.end() ? Rational(0) : it->second;
    Rational gap = Rational(bound + 1) - abs(delta_j);
    if (sgn(gap) < 0) gap = 0;
    if (first || gap < out.excluded_lower_bound) out.excluded_lower_bound = gap;
    first = false;
  }
  out.certified = out.excluded_lower_bound >= out.upper.upper;
  if (out.excluded_lower_bound < out.lower) out.lower = out.excluded_lower_bound;
  return out;
}

bool PeriodReport::ok() const {
  return nondegenerate && std::all_of(samples.begin(), samples.end(), [](const PeriodSample& s) {
           return s.zero_certified;
         });
}

PeriodReport circle_period_check(const AmbientModel& model, std::size_t m, std::size_t n, std::size_t samples) {
  validate_model(model);
  check_pair(model, m, n);
  if (samples < 2) throw PreconditionError("at least two samples are needed");
  PeriodReport rep;
  rep.m = m;
  rep.n = n;
  const AmbientVector xi = xi_vector(model, m, n);
  for (std::size_t s = 0; s < samples; ++s) {
    const Rational t = ratio(Integer(static_cast<unsigned long>(s)), Integer(static_cast<unsigned long>(samples)));
    const auto q = quotient_distance_bounds(model, xi.scaled(t + 1), xi.scaled(t), 2);
    rep.samples.push_back({t, q.certified && sgn(q.upper.upper) == 0});
  }
  const auto half = quotient_distance_bounds(model, xi.scaled(Rational(1, 2)), AmbientVector::zero(model), 2);
  rep.half_turn_lower = half.lower;
  rep.nondegenerate = sgn(half.lower) > 0;
  return rep;
}

}  // namespace graev::embedding
