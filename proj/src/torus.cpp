#include "graev/torus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace graev::torus {

namespace {

const std::vector<unsigned>& primes() {
  static const std::vector<unsigned> table = [] {
    std::vector<unsigned> out;
    for (unsigned c = 2; out.size() < kBasisSize - 1; ++c) {
      bool prime = true;
      for (unsigned p : out) {
        if (p * p > c) break;
        if (c % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(c);
    }
    return out;
  }();
  return table;
}

const Integer& modulus() {
  static const Integer m = pow2(precision_bits());
  return m;
}

Integer reduce(const Integer& z) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), modulus().get_mpz_t());
  return r;
}

// floor(c * sqrt(p) * 2^P) up to an error below 2 units (c = a/b).
Integer scaled_sqrt_term(const Rational& c, unsigned p) {
  const Integer a = abs(c.get_num());
  const Integer& b = c.get_den();
  const Integer t = isqrt(Integer(Integer(p) * a * a * modulus() * modulus()));
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), b.get_mpz_t());
  return sgn(c) < 0 ? Integer(-q) : q;
}

FixedValue evaluate(const std::vector<Rational>& coords) {
  FixedValue v;
  if (!coords.empty()) {
    const Rational scaled = coords[0] * modulus();
    v.units = floor(scaled);
    v.error_units = scaled.get_den() == 1 ? 0 : 1;
  }
  for (std::size_t i = 1; i < coords.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    v.units += scaled_sqrt_term(coords[i], basis_prime(i));
    v.error_units += 2;
  }
  v.units = reduce(v.units);
  return v;
}

void trim(std::vector<Rational>& coords) {
  while (!coords.empty() && sgn(coords.back()) == 0) coords.pop_back();
}

Integer ceil_scaled(const Rational& eps) { return ceil(Rational(eps * modulus())); }

}  // namespace

unsigned precision_digits() {
  static const unsigned digits = [] {
    unsigned d = 50;
    if (const char* env = std::getenv("GRAEV_PRECISION_DIGITS")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) d = static_cast<unsigned>(parsed);
    }
    return std::max(d, 20u);
  }();
  return digits;
}

unsigned precision_bits() {
  static const unsigned bits = static_cast<unsigned>(std::ceil(precision_digits() * std::log2(10.0))) + 16;
  return bits;
}

FixedValue multiply(const FixedValue& x, const Integer& m) {
  return {reduce(Integer(x.units * m)), Integer(x.error_units * abs(m))};
}

FixedValue add(const FixedValue& a, const FixedValue& b) {
  return {reduce(Integer(a.units + b.units)), Integer(a.error_units + b.error_units)};
}

double to_double(const FixedValue& x) {
  return mpz_get_d(x.units.get_mpz_t()) / mpz_get_d(modulus().get_mpz_t());
}

unsigned basis_prime(std::size_t index) {
  if (index == 0 || index >= kBasisSize) throw InputError("basis index out of range");
  return primes()[index - 1];
}

std::string basis_label(std::size_t index) {
  if (index == 0) return "1";
  return "sqrt" + std::to_string(basis_prime(index));
}

std::size_t basis_index(std::string_view label) {
  if (label == "1") return 0;
  if (label.substr(0, 4) == "sqrt") {
    for (std::size_t i = 1; i < kBasisSize; ++i) {
      if (label == basis_label(i)) return i;
    }
  }
  throw InputError("unknown basis symbol '" + std::string(label) + "'");
}

Angle::Angle() : value_(evaluate({})) {}

Angle::Angle(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.size() > kBasisSize) throw InputError("angle has more coordinates than the basis");
  trim(coords_);
  value_ = evaluate(coords_);
}

Angle Angle::rational(const Rational& q) { return Angle(std::vector<Rational>{q}); }

Angle Angle::sqrt_prime(std::size_t basis_index, const Rational& scale) {
  if (basis_index == 0 || basis_index >= kBasisSize) throw InputError("basis index out of range");
  std::vector<Rational> coords(basis_index + 1);
  coords[basis_index] = scale;
  return Angle(std::move(coords));
}

Rational Angle::coord(std::size_t index) const {
  return index < coords_.size() ? coords_[index] : Rational(0);
}

Angle Angle::operator+(const Angle& other) const {
  std::vector<Rational> out(std::max(coords_.size(), other.coords_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coord(i) + other.coord(i);
  return Angle(std::move(out));
}

Angle Angle::operator-(const Angle& other) const { return *this + (-other); }

Angle Angle::operator-() const { return scaled(Rational(-1)); }

Angle Angle::scaled(const Rational& factor) const {
  std::vector<Rational> out(coords_);
  for (auto& c : out) c *= factor;
  return Angle(std::move(out));
}

Rational CircleDistance::value() const { return ratio(units, modulus()); }
Rational CircleDistance::error() const { return ratio(error_units, modulus()); }
double CircleDistance::to_double() const {
  return mpz_get_d(units.get_mpz_t()) / mpz_get_d(modulus().get_mpz_t());
}

CircleDistance circle_distance(const FixedValue& a, const FixedValue& b) {
  const Integer r = reduce(Integer(a.units - b.units));
  const Integer other = modulus() - r;
  return {r < other ? r : other, Integer(a.error_units + b.error_units)};
}

CircleDistance circle_distance(const Angle& a, const Angle& b) { return circle_distance(a.value(), b.value()); }

Decision less_than(const CircleDistance& d, const Rational& eps) {
  const Integer threshold = ceil_scaled(eps);
  if (d.units + d.error_units < threshold) return Decision::yes;
  if (d.units - d.error_units >= threshold) return Decision::no;
  return Decision::inconclusive;
}

IndependenceResult independence_check(const std::vector<Angle>& angles) {
  std::size_t width = 1;
  for (const auto& a : angles) width = std::max(width, a.coords().size());
  const std::size_t rows = angles.size() + 1;

  // Each row carries its coordinates and the combination of inputs producing it.
  struct Row {
    std::vector<Rational> coords;
    std::vector<Rational> combo;
  };
  std::vector<Row> basis;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t r = 0; r < rows; ++r) {
    Row row{std::vector<Rational>(width), std::vector<Rational>(rows)};
    if (r == 0) {
      row.coords[0] = 1;
    } else {
      for (std::size_t c = 0; c < width; ++c) row.coords[c] = angles[r - 1].coord(c);
    }
    row.combo[r] = 1;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational factor = row.coords[pivot_cols[b]];
      if (sgn(factor) == 0) continue;
      for (std::size_t c = 0; c < width; ++c) row.coords[c] -= factor * basis[b].coords[c];
      for (std::size_t c = 0; c < rows; ++c) row.combo[c] -= factor * basis[b].combo[c];
    }
    auto pivot = std::find_if(row.coords.begin(), row.coords.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (pivot == row.coords.end()) {
      Integer lcm = 1;
      for (const auto& q : row.combo) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
      std::vector<Integer> relation(rows);
      Integer gcd = 0;
      for (std::size_t c = 0; c < rows; ++c) {
        relation[c] = Integer(row.combo[c].get_num() * (lcm / row.combo[c].get_den()));
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), relation[c].get_mpz_t());
      }
      Integer sign = 1;
      for (std::size_t c = 1; c < rows; ++c) {
        if (sgn(relation[c]) != 0) {
          sign = sgn(relation[c]) < 0 ? -1 : 1;
          break;
        }
      }
      for (auto& z : relation) z = z * sign / gcd;
      return {false, relation};
    }
    const std::size_t col = static_cast<std::size_t>(pivot - row.coords.begin());
    const Rational inv = 1 / row.coords[col];
    for (auto& q : row.coords) q *= inv;
    for (auto& q : row.combo) q *= inv;
    // Keep the basis fully reduced in the new pivot column.
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational factor = basis[b].coords[col];
      if (sgn(factor) == 0) continue;
      for (std::size_t c = 0; c < width; ++c) basis[b].coords[c] -= factor * row.coords[c];
      for (std::size_t c = 0; c < rows; ++c) basis[b].combo[c] -= factor * row.combo[c];
    }
    basis.push_back(std::move(row));
    pivot_cols.push_back(col);
  }
  return {true, {}};
}

TorusDistance torus_distance(const TorusPoint& a, const TorusPoint& b) {
  if (a.size() != b.size()) throw StructureError("torus points of different dimension");
  TorusDistance d;
  for (std::size_t i = 0; i < a.size(); ++i) d.factors.push_back(circle_distance(a[i], b[i]));
  return d;
}

Decision less_than(const TorusDistance& d, const Rational& eps) {
  bool all_yes = true;
  for (const auto& f : d.factors) {
    const Decision x = less_than(f, eps);
    if (x == Decision::no) return Decision::no;
    if (x == Decision::inconclusive) all_yes = false;
  }
  return all_yes ? Decision::yes : Decision::inconclusive;
}

KroneckerResult kronecker_search(const TorusPoint& x, const TorusPoint& target, const Rational& eps,
                                 std::int64_t max_m) {
  if (x.size() != target.size()) throw StructureError("point and target of different dimension");
  if (sgn(eps) <= 0) throw PreconditionError("eps must be positive");
  if (max_m < 1) throw PreconditionError("max_m must be at least 1");

  const Integer threshold = ceil_scaled(eps);
  std::vector<FixedValue> power(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) power[i] = {0, 0};
  std::optional<std::int64_t> first_unclear;
  for (std::int64_t m = 1; m <= max_m; ++m) {
    bool hit = true;
    bool miss = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      power[i] = add(power[i], x[i].value());
      const CircleDistance d = circle_distance(power[i], target[i].value());
      if (d.units - d.error_units >= threshold) {
        miss = true;
      } else if (d.units + d.error_units >= threshold) {
        hit = false;
      }
    }
    if (miss) continue;
    if (hit) {
      if (first_unclear) return {SearchStatus::inconclusive, first_unclear};
      return {SearchStatus::found, m};
    }
    if (!first_unclear) first_unclear = m;
  }
  if (first_unclear) return {SearchStatus::inconclusive, first_unclear};
  return {SearchStatus::absent, std::nullopt};
}

TorusMetric TorusMetric::weighted(std::vector<Rational> weights) {
  for (const auto& w : weights) {
    if (sgn(w) <= 0) throw InputError("metric weights must be positive");
  }
  TorusMetric m;
  m.weights_ = std::move(weights);
  return m;
}

Rational TorusMetric::factor_weight(std::size_t index) const {
  if (!is_weighted()) return Rational(1);
  if (index >= weights_.size()) throw StructureError("metric has fewer weights than the torus dimension");
  return weights_[index];
}

Rational TorusMetric::grid_slack(const Rational& grid_step, std::size_t dim) const {
  if (!is_weighted()) return grid_step / 2;
  Rational total;
  for (std::size_t i = 0; i < dim; ++i) total += factor_weight(i) * grid_step / 2;
  return total;
}

std::string to_string(NetStatus status) {
  switch (status) {
    case NetStatus::certified: return "certified";
    case NetStatus::refuted: return "refuted";
    case NetStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::uint64_t grid_resolution(const Rational& grid_step) {
  if (sgn(grid_step) <= 0 || grid_step.get_num() != 1 || !grid_step.get_den().fits_ulong_p()) {
    throw InputError("grid step must have the form 1/G, got " + graev::to_string(grid_step));
  }
  return grid_step.get_den().get_ui();
}

namespace {

NetCheckResult net_check_1d(const std::vector<TorusPoint>& points, const Rational& eps, const Rational& slack,
                            const Rational& weight) {
  NetCheckResult result;
  result.slack = slack;
  if (points.empty()) {
    result.status = NetStatus::refuted;
    result.witness = std::vector<Rational>{Rational(0)};
    result.detail = "empty point set";
    return result;
  }
  std::vector<Integer> units;
  Integer error = 0;
  for (const auto& p : points) {
    units.push_back(p[0].value().units);
    error = std::max(error, p[0].value().error_units);
  }
  std::sort(units.begin(), units.end());
  units.erase(std::unique(units.begin(), units.end()), units.end());

  Integer best_gap = units.front() + modulus() - units.back();
  Integer gap_start = units.back();
  for (std::size_t i = 1; i < units.size(); ++i) {
    const Integer gap = units[i] - units[i - 1];
    if (gap > best_gap) {
      best_gap = gap;
      gap_start = units[i - 1];
    }
  }
  const Rational radius = ratio(best_gap, Integer(2 * modulus()));
  const bool single = std::all_of(points.begin(), points.end(), [&](const TorusPoint& p) { return p[0] == points[0][0]; });
  const Rational radius_error = single ? Rational(0) : ratio(error, modulus());
  result.covering_radius_lower = weight * (radius - radius_error);
  result.covering_radius_upper = weight * (radius + radius_error);

  Rational midpoint = ratio(Integer(2 * gap_start + best_gap), Integer(2 * modulus()));
  midpoint -= Rational(floor(midpoint));
  if (*result.covering_radius_upper + slack < eps) {
    result.status = NetStatus::certified;
  } else if (*result.covering_radius_lower >= eps) {
    result.status = NetStatus::refuted;
    result.witness = std::vector<Rational>{midpoint};
    result.witness_distance = Rational(weight * radius).get_d();
  } else {
    result.status = NetStatus::inconclusive;
    result.detail = "covering radius within slack and error of eps";
  }
  return result;
}

}  // namespace

NetCheckResult net_check(const std::vector<TorusPoint>& points, std::size_t dim, const Rational& eps,
                         const Rational& grid_step, const TorusMetric& metric) {
  if (dim == 0) throw PreconditionError("torus dimension must be positive");
  if (sgn(eps) <= 0) throw PreconditionError("eps must be positive");
  for (const auto& p : points) {
    if (p.size() != dim) throw StructureError("net point of wrong dimension");
  }
  if (metric.is_weighted() && metric.weights().size() < dim) {
    throw StructureError("metric has fewer weights than the torus dimension");
  }
  const std::uint64_t resolution = grid_resolution(grid_step);
  const Rational slack = metric.grid_slack(grid_step, dim);

  if (dim == 1) return net_check_1d(points, eps, slack, metric.factor_weight(0));

  NetCheckResult result;
  result.slack = slack;
  if (slack >= eps) {
    result.status = NetStatus::inconclusive;
    result.detail = "grid too coarse: slack " + graev::to_string(slack) + " >= eps";
    return result;
  }
  long double total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= static_cast<long double>(resolution);
  if (total > 4e9L) throw PreconditionError("grid has too many points; choose a coarser grid step");
  if (points.empty()) {
    result.status = NetStatus::refuted;
    result.witness = std::vector<Rational>(dim);
    result.detail = "empty point set";
    return result;
  }

  std::vector<double> weights(dim, 1.0);
  for (std::size_t i = 0; i < dim; ++i) weights[i] = metric.factor_weight(i).get_d();
  const std::size_t count = points.size();
  std::vector<double> coords(count * dim);
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t i = 0; i < dim; ++i) coords[p * dim + i] = points[p][i].to_double();
  }
  auto distance = [&](const double* g, std::size_t p) {
    const double* x = &coords[p * dim];
    double acc = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double d = weights[i] * circle_distance_double(g[i], x[i]);
      acc = metric.is_weighted() ? acc + d : std::max(acc, d);
    }
    return acc;
  };

  const double cover = Rational(eps - slack).get_d() - kScanError;
  const double refute = eps.get_d() + kScanError;
  std::vector<std::uint64_t> index(dim, 0);
  std::vector<double> g(dim, 0.0);
  std::size_t last_hit = 0;
  bool unclear = false;
  const double step = 1.0 / static_cast<double>(resolution);
  while (true) {
    for (std::size_t i = 0; i < dim; ++i) g[i] = static_cast<double>(index[i]) * step;
    ++result.grid_points;
    bool covered = false;
    double best = 2.0;
    for (std::size_t s = 0; s < count; ++s) {
      const std::size_t p = (last_hit + s) % count;
      const double d = distance(g.data(), p);
      if (d < cover) {
        covered = true;
        last_hit = p;
        break;
      }
      best = std::min(best, d);
    }
    if (!covered) {
      if (best >= refute) {
        result.status = NetStatus::refuted;
        std::vector<Rational> w(dim);
        for (std::size_t i = 0; i < dim; ++i) w[i] = ratio(Integer(index[i]), Integer(resolution));
        result.witness = w;
        result.witness_distance = best;
        return result;
      }
      unclear = true;
    }
    std::size_t axis = 0;
    while (axis < dim && ++index[axis] == resolution) index[axis++] = 0;
    if (axis == dim) break;
  }
  result.status = unclear ? NetStatus::inconclusive : NetStatus::certified;
  if (unclear) result.detail = "some grid points lie between eps - slack and eps";
  return result;
}

}  // namespace graev::torus
