#include "graev/rolewicz.hpp"

#include <algorithm>

namespace graev::rolewicz {

using torus::Angle;
using torus::Decision;
using torus::FixedValue;
using torus::TorusMetric;
using torus::TorusPoint;

namespace {

std::int64_t first_power(PowerConvention c) { return c == PowerConvention::from_zero ? 0 : 1; }

std::vector<TorusPoint> power_points(const std::vector<Angle>& x, std::int64_t first, std::int64_t last,
                                     std::size_t dims) {
  std::vector<TorusPoint> points;
  points.reserve(static_cast<std::size_t>(std::max<std::int64_t>(0, last - first + 1)));
  for (std::int64_t m = first; m <= last; ++m) {
    TorusPoint p;
    for (std::size_t l = 0; l < dims; ++l) p.push_back(x[l].scaled(Rational(static_cast<long>(m))));
    points.push_back(std::move(p));
  }
  return points;
}

TorusMetric level_metric(const OmegaTorusModel& model, std::size_t dims) {
  return TorusMetric::weighted(std::vector<Rational>(model.weights.begin(), model.weights.begin() + dims));
}

ConditionReport check_condition_one(const OmegaTorusModel& model, const Angle& x, std::size_t level) {
  const auto d = torus::circle_distance(x, Angle());
  const Rational& w = model.weights[level - 1];
  const Rational& r = model.radii[level - 1];
  WeightedDistance rho{w * d.value(), w * d.error()};
  ConditionReport rep{1, level, Status::inconclusive, r - (rho.value + rho.error), std::nullopt, ""};
  const Decision dec = rho.less_than(r);
  rep.status = dec == Decision::yes ? Status::pass : dec == Decision::no ? Status::fail : Status::inconclusive;
  rep.detail = "rho(x_i, 0) = " + std::to_string(rho.value.get_d());
  return rep;
}

ConditionReport check_condition_two(const OmegaTorusModel& model, const GeneratorCertificate& cert,
                                    std::size_t level) {
  const auto points = power_points(cert.x, first_power(cert.convention), cert.n[level - 1], level);
  const auto net = torus::net_check(points, level, model.radii[level - 1], cert.grid_step,
                                    level_metric(model, level));
  ConditionReport rep{2, level, Status::inconclusive, std::nullopt, net.witness, net.detail};
  rep.status = net.status == torus::NetStatus::certified ? Status::pass
               : net.status == torus::NetStatus::refuted ? Status::fail
                                                         : Status::inconclusive;
  if (net.covering_radius_upper) rep.margin = model.radii[level - 1] - (*net.covering_radius_upper + net.slack);
  if (rep.detail.empty()) {
    rep.detail = "net of " + std::to_string(points.size()) + " powers, slack " + std::to_string(net.slack.get_d());
  }
  return rep;
}

ConditionReport check_condition_three(const OmegaTorusModel& model, const GeneratorCertificate& cert,
                                      std::size_t level) {
  std::int64_t count = 0;
  for (std::size_t i = 1; i < level; ++i) count = std::max(count, cert.n[i - 1]);
  const Rational& w = model.weights[level - 1];
  const Rational& r = model.radii[level - 1];
  const FixedValue zero{0, 0};
  bool all_yes = true;
  bool any_no = false;
  Rational worst;
  for (std::int64_t m = first_power(cert.convention); m <= count; ++m) {
    const auto d = torus::circle_distance(torus::multiply(cert.x[level - 1].value(), Integer(static_cast<long>(m))), zero);
    WeightedDistance rho{w * d.value(), w * d.error()};
    worst = std::max<Rational>(worst, rho.value + rho.error);
    const Decision dec = rho.less_than(r);
    if (dec == Decision::no) any_no = true;
    if (dec != Decision::yes) all_yes = false;
  }
  ConditionReport rep{3, level, Status::inconclusive, r - worst, std::nullopt, ""};
  rep.status = any_no ? Status::fail : all_yes ? Status::pass : Status::inconclusive;
  rep.detail = "first " + std::to_string(count) + " powers of x_j";
  return rep;
}

// Smallest n whose powers certify the level-1 net (exact 1-D covering radius).
std::int64_t search_one_dimensional(const OmegaTorusModel& model, const std::vector<Angle>& x,
                                    PowerConvention convention, const Rational& grid_step,
                                    std::int64_t cap) {
  const auto metric = level_metric(model, 1);
  std::vector<TorusPoint> points;
  if (convention == PowerConvention::from_zero) points.push_back({Angle()});
  for (std::int64_t n = 1; n <= cap; ++n) {
    points.push_back({x[0].scaled(Rational(static_cast<long>(n)))});
    const auto net = torus::net_check(points, 1, model.radii[0], grid_step, metric);
    if (net.status == torus::NetStatus::certified) return n;
  }
  throw ConstructionError(1, grid_step / 2,
                          "level 1: no certified net within " + std::to_string(cap) + " powers");
}

// Least n such that every grid point is covered by one of the first n powers,
// using the same double-precision distance and threshold as net_check.
std::int64_t search_grid(const OmegaTorusModel& model, const std::vector<Angle>& x, std::size_t dims,
                         PowerConvention convention, const Rational& grid_step, std::int64_t cap) {
  const auto metric = level_metric(model, dims);
  const Rational slack = metric.grid_slack(grid_step, dims);
  const std::uint64_t resolution = torus::grid_resolution(grid_step);
  const double cover = Rational(model.radii[dims - 1] - slack).get_d() - torus::kScanError;
  std::vector<double> weights(dims);
  for (std::size_t l = 0; l < dims; ++l) weights[l] = model.weights[l].get_d();

  const std::int64_t first = first_power(convention);
  std::vector<double> table;  // row m - first holds the power's coordinates
  auto ensure = [&](std::int64_t m) {
    while (static_cast<std::int64_t>(table.size() / dims) + first <= m) {
      const std::int64_t next = static_cast<std::int64_t>(table.size() / dims) + first;
      for (std::size_t l = 0; l < dims; ++l) table.push_back(x[l].scaled(Rational(static_cast<long>(next))).to_double());
    }
  };

  std::int64_t needed = 1;
  std::vector<std::uint64_t> index(dims, 0);
  std::vector<double> g(dims, 0.0);
  const double step = 1.0 / static_cast<double>(resolution);
  while (true) {
    for (std::size_t l = 0; l < dims; ++l) g[l] = static_cast<double>(index[l]) * step;
    std::int64_t m = first;
    while (true) {
      if (m > cap) {
        throw ConstructionError(dims, grid_step / 2,
                                "level " + std::to_string(dims) + ": grid point not covered within " +
                                    std::to_string(cap) + " powers");
      }
      ensure(m);
      const double* p = &table[static_cast<std::size_t>(m - first) * dims];
      double acc = 0;
      for (std::size_t l = 0; l < dims; ++l) acc = acc + weights[l] * torus::circle_distance_double(g[l], p[l]);
      if (acc < cover) break;
      ++m;
    }
    needed = std::max(needed, m);
    std::size_t axis = 0;
    while (axis < dims && ++index[axis] == resolution) index[axis++] = 0;
    if (axis == dims) break;
  }
  return needed;
}

}  // namespace

std::string to_string(PowerConvention c) {
  return c == PowerConvention::from_zero ? "powers-from-0" : "powers-from-1";
}

PowerConvention parse_convention(const std::string& text) {
  if (text == "powers-from-1") return PowerConvention::from_one;
  if (text == "powers-from-0") return PowerConvention::from_zero;
  throw InputError("unknown power convention '" + text + "'");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string condition_name(int condition) {
  switch (condition) {
    case 1: return "small_generator";
    case 2: return "net";
    case 3: return "ball";
  }
  throw PreconditionError("unknown condition " + std::to_string(condition));
}

OmegaTorusModel OmegaTorusModel::with_defaults(std::size_t depth) {
  OmegaTorusModel m;
  m.depth = depth;
  for (std::size_t i = 1; i <= depth; ++i) {
    m.weights.emplace_back(Integer(1), pow2(static_cast<unsigned>(i)));
    m.radii.emplace_back(Integer(1), pow2(static_cast<unsigned>(i)));
  }
  return m;
}

OmegaTorusModel OmegaTorusModel::with_weights(std::vector<Rational> weights) {
  OmegaTorusModel m = with_defaults(weights.size());
  m.weights = std::move(weights);
  return m;
}

void validate_model(const OmegaTorusModel& model) {
  if (model.depth == 0) throw InputError("model depth must be at least 1");
  if (model.weights.size() != model.depth || model.radii.size() != model.depth) {
    throw InputError("model needs exactly one weight and one radius per level");
  }
  if (model.depth >= torus::kBasisSize) throw InputError("model depth exceeds the symbolic basis");
  for (std::size_t i = 0; i < model.depth; ++i) {
    if (sgn(model.weights[i]) <= 0) throw InputError("weights must be positive");
    if (sgn(model.radii[i]) <= 0) throw InputError("radii must be positive");
  }
}

Decision WeightedDistance::less_than(const Rational& eps) const {
  if (value + error < eps) return Decision::yes;
  if (value - error >= eps) return Decision::no;
  return Decision::inconclusive;
}

WeightedDistance weighted_distance(const OmegaTorusModel& model, const std::vector<FixedValue>& a,
                                   const TorusPoint& b) {
  if (a.size() != b.size() || a.size() > model.weights.size()) {
    throw StructureError("torus point does not match the model depth");
  }
  WeightedDistance out;
  for (std::size_t l = 0; l < a.size(); ++l) {
    const auto d = torus::circle_distance(a[l], b[l].value());
    out.value += model.weights[l] * d.value();
    out.error += model.weights[l] * d.error();
  }
  return out;
}

TorusPoint generator_power(const GeneratorCertificate& cert, std::int64_t m, std::size_t dims) {
  TorusPoint p;
  for (std::size_t l = 0; l < dims; ++l) p.push_back(cert.x.at(l).scaled(Rational(static_cast<long>(m))));
  return p;
}

bool VerificationReport::ok() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionReport& c) { return c.status == Status::pass; });
}

VerificationReport verify_certificate(const OmegaTorusModel& model, const GeneratorCertificate& cert) {
  validate_model(model);
  if (cert.x.size() != model.depth || cert.n.size() != model.depth) {
    throw StructureError("certificate shape does not match the model depth");
  }
  for (auto n : cert.n) {
    if (n < 1) throw StructureError("power counts must be positive");
  }
  torus::grid_resolution(cert.grid_step);

  VerificationReport report;
  for (std::size_t i = 1; i <= model.depth; ++i) {
    report.conditions.push_back(check_condition_one(model, cert.x[i - 1], i));
    report.conditions.push_back(check_condition_two(model, cert, i));
    if (i >= 2) report.conditions.push_back(check_condition_three(model, cert, i));
  }
  const auto independence = torus::independence_check(cert.x);
  report.independent = independence.independent;
  report.relation = independence.relation;
  return report;
}

GeneratorCertificate construct_generator(const OmegaTorusModel& model, const BuildOptions& options) {
  validate_model(model);
  if (model.depth > options.max_depth) {
    throw PreconditionError("depth " + std::to_string(model.depth) + " exceeds the depth limit " +
                            std::to_string(options.max_depth));
  }
  torus::grid_resolution(options.grid_step);

  GeneratorCertificate cert;
  cert.grid_step = options.grid_step;
  cert.convention = options.convention;
  std::int64_t previous = 1;
  for (std::size_t i = 1; i <= model.depth; ++i) {
    const Rational& w = model.weights[i - 1];
    const Rational& r = model.radii[i - 1];
    const Rational p(static_cast<long>(torus::basis_prime(i)));
    const Rational lhs = Rational(previous) * Rational(previous) * w * w * p;
    Integer scale = 1;
    while (!(lhs < r * r * Rational(scale * scale))) scale *= 2;
    cert.x.push_back(Angle::sqrt_prime(i, Rational(Integer(1), scale)));

    const Rational slack = level_metric(model, i).grid_slack(options.grid_step, i);
    if (slack >= r) {
      throw ConstructionError(i, options.grid_step / 2,
                              "level " + std::to_string(i) + ": grid slack exceeds the net radius");
    }
    const std::int64_t found =
        i == 1 ? search_one_dimensional(model, cert.x, options.convention, options.grid_step, options.max_powers)
               : search_grid(model, cert.x, i, options.convention, options.grid_step, options.max_powers);
    cert.n.push_back(std::max(found, previous));
    const auto net = check_condition_two(model, cert, i);
    if (net.status != Status::pass) {
      throw ConstructionError(i, options.grid_step / 2,
                              "level " + std::to_string(i) + ": net check " + to_string(net.status) +
                                  " for the chosen power count");
    }
    previous = cert.n.back();
  }

  const auto report = verify_certificate(model, cert);
  if (!report.ok()) {
    for (const auto& c : report.conditions) {
      if (c.status != Status::pass) {
        throw ConstructionError(c.level, options.grid_step / 2,
                                condition_name(c.condition) + " condition at level " +
                                    std::to_string(c.level) + " did not verify");
      }
    }
  }
  cert.conditions = report.conditions;
  return cert;
}

Rational truncation_floor(const OmegaTorusModel& model) { return 2 * model.radii.back(); }

Rational tail_bound(const OmegaTorusModel& model, std::size_t level) {
  Rational total;
  for (std::size_t l = level; l < model.depth; ++l) total += model.weights[l] / 2;
  return total;
}

namespace {

void check_target(const OmegaTorusModel& model, const GeneratorCertificate& cert, const TorusPoint& z) {
  validate_model(model);
  if (cert.x.size() != model.depth || cert.n.size() != model.depth) {
    throw StructureError("certificate shape does not match the model depth");
  }
  if (z.size() != model.depth) throw StructureError("target dimension does not match the model depth");
}

std::vector<FixedValue> power_values(const GeneratorCertificate& cert, std::int64_t m) {
  std::vector<FixedValue> out;
  for (const auto& x : cert.x) out.push_back(torus::multiply(x.value(), Integer(static_cast<long>(m))));
  return out;
}

}  // namespace

Approximation approximate_target(const OmegaTorusModel& model, const GeneratorCertificate& cert,
                                 const TorusPoint& z, const Rational& eps) {
  check_target(model, cert, z);
  const Rational floor_eps = truncation_floor(model);
  if (eps < floor_eps) {
    throw PreconditionError("eps " + graev::to_string(eps) + " is below the truncation floor " +
                            graev::to_string(floor_eps) +
                            ": beyond depth k the tail estimate is unavailable, so finer targets are not guaranteed");
  }
  std::optional<std::int64_t> unclear;
  for (std::int64_t m = first_power(cert.convention); m <= cert.n.back(); ++m) {
    const auto rho = weighted_distance(model, power_values(cert, m), z);
    const Decision dec = rho.less_than(eps);
    if (dec == Decision::yes) return {torus::SearchStatus::found, m, rho.value, rho.error};
    if (dec == Decision::inconclusive && !unclear) unclear = m;
  }
  if (unclear) return {torus::SearchStatus::inconclusive, *unclear, Rational(0), Rational(0)};
  throw ContradictionError("no power within n_k approximates the target although the level-k net is certified; "
                           "the certificate or the implementation is wrong");
}

Approximation nearest_power(const OmegaTorusModel& model, const GeneratorCertificate& cert, const TorusPoint& z,
                            std::size_t level) {
  check_target(model, cert, z);
  if (level < 1 || level > model.depth) throw PreconditionError("level out of range");
  Approximation best;
  bool have = false;
  for (std::int64_t m = first_power(cert.convention); m <= cert.n[level - 1]; ++m) {
    const auto rho = weighted_distance(model, power_values(cert, m), z);
    if (!have || rho.value < best.distance) {
      best = {torus::SearchStatus::found, m, rho.value, rho.error};
      have = true;
    }
  }
  return best;
}

}  // namespace graev::rolewicz
