#include "graev/suites.hpp"

#include <algorithm>
#include <functional>

#include "graev/embedding.hpp"
#include "graev/free_seminorm.hpp"
#include "graev/graev_norm.hpp"
#include "graev/torus.hpp"

namespace graev::suites {

namespace {

using nlohmann::json;

/// Aggregates many cases of one property into a single check that keeps the
/// first failing witness.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void pass() { ++cases_; }
  void fail(json witness) {
    ++cases_;
    ++failures_;
    if (failures_ == 1) witness_ = std::move(witness);
  }
  void inconclusive(json witness) {
    ++cases_;
    ++inconclusive_;
    if (inconclusive_ == 1 && failures_ == 0) witness_ = std::move(witness);
  }
  void record(bool ok, const std::function<json()>& witness) {
    if (ok) {
      pass();
    } else {
      fail(witness());
    }
  }

  CheckOutcome outcome() const {
    CheckOutcome c;
    c.name = name_;
    c.status = failures_ ? CheckStatus::fail : inconclusive_ ? CheckStatus::inconclusive : CheckStatus::pass;
    c.detail["cases"] = cases_;
    if (failures_) c.detail["failures"] = failures_;
    if (inconclusive_) c.detail["inconclusive"] = inconclusive_;
    if (!witness_.is_null()) c.detail["witness"] = witness_;
    return c;
  }

 private:
  std::string name_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::size_t inconclusive_ = 0;
  json witness_;
};

CheckOutcome single(const std::string& name, bool ok, json detail = json::object()) {
  CheckOutcome c;
  c.name = name;
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  c.detail = std::move(detail);
  return c;
}

Rational abs_value(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

/// Largest value of |sum k_x (d(x,a) - d(*,a))| over anchors a: an invariant
/// pseudometric extending d, hence bounded by the Graev norm.
Rational kantorovich_norm(const PointedSpace& space, const Word& w) {
  Rational best = 0;
  for (std::size_t a = 0; a < space.size(); ++a) {
    Rational total = 0;
    for (const auto& [x, k] : w.coeffs()) {
      total += Rational(static_cast<long>(k)) * (space.dist(x, a) - space.dist(space.basepoint(), a));
    }
    best = std::max(best, abs_value(total));
  }
  return best;
}

json rational_vector_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::vector<Rational> random_e_point(random::Rng& rng, std::size_t dim, const Rational& radius) {
  std::vector<Rational> y(dim);
  for (auto& c : y) c = random::random_rational(rng, Rational(-radius), radius, 8);
  return y;
}

}  // namespace

random::Rng section_rng(std::uint64_t seed, const std::string& section) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char ch : section) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return random::Rng(seq);
}

void space_checks(RunReport& report, const PointedSpace& space, const std::string& label, const SuiteOptions& options) {
  const std::string prefix = "space:" + label + ":";
  const ValidationReport validation = validate_space(space);
  if (!validation.ok()) {
    json violations = json::array();
    for (const auto& v : validation.violations) violations.push_back(v.message);
    report.add_check(single(prefix + "validate", false, {{"violations", violations}}));
    return;
  }
  report.add_check(single(prefix + "validate", true));

  Tally extension(prefix + "norm_extends_metric");
  Tally kantorovich_extends(prefix + "maximality_witness_extends_metric");
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (i == j) continue;
      const Word w = Word::generator(space, i) - Word::generator(space, j);
      const Rational graev = graev_norm(space, w).value;
      const Rational seminorm = free_seminorm(space, word_to_lincomb(w)).value;
      const json pair{space.name(i), space.name(j)};
      extension.record(graev == space.dist(i, j) && seminorm == space.dist(i, j), [&] {
        return json{{"pair", pair}, {"dist", to_string(space.dist(i, j))}, {"graev", to_string(graev)},
                    {"seminorm", to_string(seminorm)}};
      });
      kantorovich_extends.record(kantorovich_norm(space, w) == space.dist(i, j), [&] { return json{{"pair", pair}}; });
    }
  }

  random::Rng rng = section_rng(options.seed, prefix);
  Tally equality(prefix + "graev_equals_seminorm");
  Tally brute(prefix + "matching_equals_brute_force");
  Tally duality(prefix + "lp_strong_duality");
  Tally integrality(prefix + "integral_flow_for_words");
  Tally axioms(prefix + "seminorm_axioms");
  Tally isometry(prefix + "words_embed_isometrically");
  Tally maximality(prefix + "graev_norm_is_maximal");
  Tally lipschitz(prefix + "lipschitz_extension");

  for (std::size_t t = 0; t < options.trials; ++t) {
    const Word w = random::random_word(rng, space, 6, 3);
    const json wj = io::to_json(w, space);

    const TuReport tu = tu_check(space, w);
    equality.record(tu.equal && tu.seminorm_below_graev, [&] {
      return json{{"word", wj}, {"graev", to_string(tu.graev)}, {"seminorm", to_string(tu.seminorm)}};
    });
    const Rational oracle = brute_force_norm(space, w);
    brute.record(oracle == tu.graev && certificate_is_valid(space, w, tu.matching), [&] {
      return json{{"word", wj}, {"graev", to_string(tu.graev)}, {"brute_force", to_string(oracle)}};
    });

    const LinComb v = random::random_lincomb(rng, space);
    for (const LinComb& c : {word_to_lincomb(w), v}) {
      const FreeSeminormResult r = free_seminorm(space, c);
      const bool ok = dual_objective(c, r.dual) == r.value && witness_is_feasible(space, r.dual) &&
                      flow_is_feasible(space, c, r.flow) && r.flow.value == r.value;
      duality.record(ok, [&] { return json{{"combination", io::to_json(c, space)}, {"value", to_string(r.value)}}; });
    }
    integrality.record(flow_is_integral(tu.flow), [&] { return json{{"word", wj}}; });

    const LinComb u = random::random_lincomb(rng, space);
    const Rational lambda = random::random_rational(rng, Rational(-3), Rational(3), 6);
    const Rational pu = free_seminorm(space, u).value;
    const Rational pv = free_seminorm(space, v).value;
    const Rational puv = free_seminorm(space, u + v).value;
    const Rational plu = free_seminorm(space, u.scaled(lambda)).value;
    axioms.record(sgn(pu) >= 0 && plu == abs_value(lambda) * pu && puv <= pu + pv, [&] {
      return json{{"u", io::to_json(u, space)}, {"v", io::to_json(v, space)}, {"lambda", to_string(lambda)}};
    });

    const Word w2 = random::random_word(rng, space, 6, 3);
    const Rational distance = graev_distance(space, w, w2);
    const Rational embedded = free_seminorm(space, word_to_lincomb(w - w2)).value;
    isometry.record(distance == embedded, [&] {
      return json{{"u", wj}, {"v", io::to_json(w2, space)}, {"graev", to_string(distance)},
                  {"seminorm", to_string(embedded)}};
    });

    const Rational kantorovich = kantorovich_norm(space, w);
    maximality.record(kantorovich <= tu.graev, [&] {
      return json{{"word", wj}, {"other", to_string(kantorovich)}, {"graev", to_string(tu.graev)}};
    });

    const PointMap f = random::random_lipschitz_map(rng, space, 2);
    const ExtensionReport ext = homomorphic_extension_check(space, f, Rational(1), {w, w2, w - w2});
    lipschitz.record(ext.ok(), [&] {
      const auto& bad = ext.violations.front();
      return json{{"word", io::to_json(bad.word, space)}, {"extension_norm", to_string(bad.extension_norm)},
                  {"bound", to_string(bad.bound)}};
    });
  }

  for (const Tally* t : {&extension, &kantorovich_extends, &equality, &brute, &duality, &integrality, &axioms,
                         &isometry, &maximality, &lipschitz}) {
    report.add_check(t->outcome());
  }
}

void torus_checks(RunReport& report, const SuiteOptions& options) {
  using torus::Angle;
  random::Rng rng = section_rng(options.seed, "torus");

  auto random_angle = [&] {
    Angle a = Angle::rational(random::random_rational(rng, Rational(0), Rational(1), 12));
    const auto symbols = random::uniform(rng, 0, 2);
    for (std::int64_t s = 0; s < symbols; ++s) {
      const auto index = static_cast<std::size_t>(random::uniform(rng, 1, 4));
      a = a + Angle::sqrt_prime(index, random::random_rational(rng, Rational(-2), Rational(2), 7));
    }
    return a;
  };

  Tally metric("torus:circle_metric");
  for (std::size_t t = 0; t < options.trials; ++t) {
    const Angle a = random_angle(), b = random_angle(), c = random_angle();
    const auto ab = torus::circle_distance(a, b), ba = torus::circle_distance(b, a);
    const auto ac = torus::circle_distance(a, c), bc = torus::circle_distance(b, c);
    const bool symmetric = ab.units == ba.units;
    const bool triangle = ac.value() <= ab.value() + bc.value() + ac.error() + ab.error() + bc.error();
    const bool bounded = ab.value() <= Rational(1, 2) + ab.error();
    metric.record(symmetric && triangle && bounded, [&] {
      return json{{"a", io::to_json(a)}, {"b", io::to_json(b)}, {"c", io::to_json(c)}};
    });
  }
  report.add_check(metric.outcome());

  {
    const auto r1 = torus::independence_check({Angle::sqrt_prime(1)});
    const auto r2 = torus::independence_check({Angle::rational(Rational(1, 4))});
    const Angle s2 = Angle::sqrt_prime(1);
    const auto r3 = torus::independence_check({s2, s2 + Angle::rational(Rational(1, 3))});
    const auto r4 = torus::independence_check({Angle::sqrt_prime(1), Angle::sqrt_prime(2)});
    const bool ok = r1.independent && !r2.independent && !r3.independent && r4.independent &&
                    r2.relation == std::vector<Integer>{Integer(-1), Integer(4)};
    report.add_check(single("torus:independence_examples", ok));
  }

  Tally invariance("torus:independence_invariance");
  for (std::size_t t = 0; t < options.trials; ++t) {
    std::vector<Angle> angles;
    const auto count = random::uniform(rng, 1, 3);
    for (std::int64_t i = 0; i < count; ++i) angles.push_back(random_angle());
    const bool base = torus::independence_check(angles).independent;
    std::vector<Angle> shifted = angles;
    std::reverse(shifted.begin(), shifted.end());
    shifted.front() = shifted.front() + Angle::rational(random::random_rational(rng, Rational(-2), Rational(2), 9));
    invariance.record(torus::independence_check(shifted).independent == base, [&] {
      json a = json::array();
      for (const auto& x : angles) a.push_back(io::to_json(x));
      return json{{"angles", a}};
    });
  }
  report.add_check(invariance.outcome());

  {
    const torus::TorusPoint quarter{Angle::rational(Rational(1, 4))};
    const auto k1 = torus::kronecker_search(quarter, {Angle::rational(Rational(1, 2))}, Rational(1, 100), 1000);
    const auto k2 = torus::kronecker_search({Angle::sqrt_prime(1)}, {Angle::rational(Rational(0))}, Rational(1, 20), 100);
    const auto k3 = torus::kronecker_search(quarter, {Angle::rational(Rational(1, 3))}, Rational(1, 100), 1000);
    const bool ok = k1.status == torus::SearchStatus::found && k1.m == 2 && k2.status == torus::SearchStatus::found &&
                    k3.status == torus::SearchStatus::absent;
    report.add_check(single("torus:kronecker_examples", ok));
  }

  Tally hits("torus:kronecker_hits_are_close");
  for (std::size_t t = 0; t < options.trials; ++t) {
    const torus::TorusPoint x{Angle::sqrt_prime(1, ratio(Integer(static_cast<long>(random::uniform(rng, 1, 9))), Integer(8))),
                              Angle::sqrt_prime(2, ratio(Integer(static_cast<long>(random::uniform(rng, 1, 9))), Integer(8)))};
    const torus::TorusPoint z{random_angle(), random_angle()};
    const Rational eps(1, 10);
    const auto r = torus::kronecker_search(x, z, eps, 5000);
    if (r.status == torus::SearchStatus::inconclusive) {
      hits.inconclusive(json{{"trial", t}});
      continue;
    }
    bool ok = r.status == torus::SearchStatus::found;
    if (ok) {
      torus::TorusPoint p;
      for (const auto& a : x) p.push_back(a.scaled(Rational(static_cast<long>(*r.m))));
      ok = torus::less_than(torus::torus_distance(p, z), eps) == torus::Decision::yes;
    }
    hits.record(ok, [&] { return json{{"target", io::to_json(z)}, {"x", io::to_json(x)}}; });
  }
  report.add_check(hits.outcome());

  {
    std::vector<torus::TorusPoint> quarters;
    for (int i = 0; i < 4; ++i) quarters.push_back({Angle::rational(ratio(Integer(i), Integer(4)))});
    const auto a = torus::net_check(quarters, 1, Rational(1, 4) + Rational(1, 100), Rational(1, 1000));
    const auto b = torus::net_check({{Angle::rational(Rational(0))}}, 1, Rational(1, 4), Rational(1, 1000));
    const bool ok = a.status == torus::NetStatus::certified && b.status == torus::NetStatus::refuted;
    report.add_check(single("torus:net_examples", ok,
                            {{"quarters", torus::to_string(a.status)}, {"single_point", torus::to_string(b.status)}}));
  }

  Tally net("torus:net_matches_covering_radius");
  for (std::size_t t = 0; t < options.trials; ++t) {
    const Angle x = Angle::sqrt_prime(static_cast<std::size_t>(random::uniform(rng, 1, 5)),
                                      random::random_rational(rng, Rational(1, 4), Rational(4), 8));
    const auto count = random::uniform(rng, 1, 60);
    std::vector<torus::TorusPoint> orbit;
    for (std::int64_t m = 1; m <= count; ++m) orbit.push_back({x.scaled(Rational(static_cast<long>(m)))});
    const Rational eps = random::random_rational(rng, Rational(1, 100), Rational(1, 4), 64);
    const auto r = torus::net_check(orbit, 1, eps, options.grid);
    const Rational& lo = *r.covering_radius_lower;
    const Rational& hi = *r.covering_radius_upper;
    bool ok = true;
    switch (r.status) {
      case torus::NetStatus::certified: ok = hi + r.slack < eps; break;
      case torus::NetStatus::refuted: ok = lo >= eps && r.witness.has_value(); break;
      case torus::NetStatus::inconclusive: ok = !(hi + r.slack < eps) && lo < eps; break;
    }
    net.record(ok, [&] {
      return json{{"x", io::to_json(x)}, {"count", count}, {"eps", to_string(eps)}, {"status", torus::to_string(r.status)}};
    });
  }
  report.add_check(net.outcome());
}

void rolewicz_checks(RunReport& report, const SuiteOptions& options, std::size_t max_depth) {
  random::Rng rng = section_rng(options.seed, "rolewicz");
  rolewicz::BuildOptions build;
  build.grid_step = options.grid;
  build.convention = options.convention;
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    const std::string prefix = "rolewicz:depth=" + std::to_string(depth) + ":";
    const auto model = rolewicz::OmegaTorusModel::with_defaults(depth);
    rolewicz::GeneratorCertificate cert;
    try {
      cert = rolewicz::construct_generator(model, build);
    } catch (const rolewicz::ConstructionError& e) {
      report.add_check(single(prefix + "construct", false,
                              {{"level", e.level()}, {"suggested_grid", to_string(e.suggested_grid())},
                               {"reason", e.what()}}));
      continue;
    }
    report.add_check(single(prefix + "construct", true, {{"n", cert.n}}));

    const auto verification = rolewicz::verify_certificate(model, cert);
    json conditions = json::array();
    for (const auto& c : verification.conditions) conditions.push_back(io::to_json(c));
    report.add_check(single(prefix + "verify", verification.ok(), {{"conditions", conditions}}));
    CheckOutcome independence = single(prefix + "independence", verification.independent);
    independence.advisory = true;
    report.add_check(independence);
    report.add_check(single(prefix + "powers_nondecreasing", std::is_sorted(cert.n.begin(), cert.n.end())));

    if (depth != max_depth) continue;
    const std::uint64_t g = torus::grid_resolution(options.grid);
    const Rational target_eps = model.radii[depth - 1] + rolewicz::tail_bound(model, depth);
    Tally targets(prefix + "grid_targets_approximated");
    Tally contradiction(prefix + "approximation_consistent");
    for (std::size_t t = 0; t < options.trials; ++t) {
      torus::TorusPoint z;
      for (std::size_t i = 0; i < depth; ++i) {
        z.push_back(torus::Angle::rational(
            ratio(Integer(static_cast<long>(random::uniform(rng, 0, static_cast<std::int64_t>(g) - 1))), Integer(static_cast<unsigned long>(g)))));
      }
      const auto best = rolewicz::nearest_power(model, cert, z, depth);
      const rolewicz::WeightedDistance wd{best.distance, best.error};
      const auto decision = wd.less_than(target_eps);
      if (decision == torus::Decision::inconclusive) {
        targets.inconclusive(json{{"target", io::to_json(z)}});
      } else {
        targets.record(decision == torus::Decision::yes, [&] {
          return json{{"target", io::to_json(z)}, {"m", best.m}, {"distance", best.distance.get_d()}};
        });
      }
      try {
        rolewicz::approximate_target(model, cert, z, rolewicz::truncation_floor(model));
        contradiction.pass();
      } catch (const rolewicz::ContradictionError& e) {
        contradiction.fail(json{{"target", io::to_json(z)}, {"reason", e.what()}});
      }
    }
    report.add_check(targets.outcome());
    report.add_check(contradiction.outcome());
  }
}

void embedding_checks(RunReport& report, const io::EmbeddingModelFile& file, const std::string& label,
                      const SuiteOptions& options) {
  namespace em = embedding;
  for (const em::EMetric metric : file.metrics) {
    em::AmbientModel model = file.model;
    model.metric = metric;
    const std::string prefix = "embedding:" + label + ":" + em::to_string(metric) + ":";
    random::Rng rng = section_rng(options.seed, prefix);
    const std::int64_t bound = std::max<std::int64_t>(1, options.coeff_bound);

    {
      // Operational form of the separation property: every enumerated lattice
      // element stays at distance >= |sum k e| >= 1 from E.
      json sweeps = json::array();
      bool ok = true;
      for (const auto& y : {std::vector<Rational>(model.e_dim), random_e_point(rng, model.e_dim, Rational(3))}) {
        const auto sweep = em::separation_sweep(model, y, bound);
        ok = ok && sweep.all_certified && sweep.min_lower_bound >= 1;
        json s{{"y", rational_vector_json(y)}, {"elements", sweep.elements}, {"min_lower_bound", to_string(sweep.min_lower_bound)}};
        if (!sweep.all_certified) s["witness"] = io::to_json(sweep.argmin);
        sweeps.push_back(s);
      }
      report.add_check(single(prefix + "separation_exhaustive", ok,
                              {{"coeff_bound", bound}, {"sweeps", sweeps},
                               {"scope", "checks the distance inequality from which the neighbourhood statement follows"}}));
    }

    Tally separation(prefix + "separation_random");
    for (std::size_t t = 0; t < options.trials; ++t) {
      em::LatticeElement k;
      while (k.is_zero()) {
        for (std::size_t m = 1; m <= model.m_count(); ++m) {
          for (std::size_t n = 1; n <= model.n_max; ++n) {
            if (random::uniform(rng, 0, 2) == 0) k.k[{m, n}] = random::uniform(rng, -3, 3);
          }
        }
        k.reduce();
      }
      const auto y = random_e_point(rng, model.e_dim, Rational(5));
      const auto r = em::separation_check(model, k, y);
      separation.record(r.certified, [&] { return json{{"k", io::to_json(k)}, {"y", rational_vector_json(y)}}; });
    }
    report.add_check(separation.outcome());

    const auto min_norm = em::lattice_min_norm(model, bound);
    report.add_check(single(prefix + "lattice_min_norm", min_norm.value == 1,
                            {{"value", to_string(min_norm.value)}, {"enumerated", min_norm.enumerated},
                             {"attained_up_to_sign", min_norm.attained_up_to_sign}}));

    Tally density(prefix + "density_witness");
    Tally period(prefix + "circle_period");
    for (std::size_t m = 1; m <= model.m_count(); ++m) {
      for (std::size_t n = 1; n <= model.n_max; ++n) {
        const json pair{m, n};
        try {
          const Rational d = em::density_witness(model, m, n);
          density.record(d == ratio(Integer(1), Integer(static_cast<unsigned long>(n))), [&] { return json{{"pair", pair}, {"value", to_string(d)}}; });
        } catch (const std::logic_error& e) {
          density.fail(json{{"pair", pair}, {"reason", e.what()}});
        }
        const auto p = em::circle_period_check(model, m, n, 4);
        period.record(p.ok(), [&] {
          return json{{"pair", pair}, {"nondegenerate", p.nondegenerate}, {"half_turn_lower", to_string(p.half_turn_lower)}};
        });
      }
    }
    report.add_check(density.outcome());
    report.add_check(period.outcome());

    Tally isometry(prefix + "quotient_isometry_below_scale_one");
    for (std::size_t t = 0; t < options.trials; ++t) {
      std::vector<Rational> y1, y2;
      Rational d;
      do {
        y1 = random_e_point(rng, model.e_dim, Rational(2));
        y2 = y1;
        for (auto& c : y2) c += random::random_rational(rng, Rational(-1, 2), Rational(1, 2), 8);
        d = em::e_distance(model, y1, y2);
      } while (d >= 1);
      const auto q = em::quotient_distance_bounds(model, em::AmbientVector::from_e(model, y1),
                                                  em::AmbientVector::from_e(model, y2), 1);
      isometry.record(q.certified && q.upper.exact() && q.upper.upper == d && q.lower == d, [&] {
        return json{{"y1", rational_vector_json(y1)}, {"y2", rational_vector_json(y2)}, {"distance", to_string(d)},
                    {"quotient_upper", q.upper.upper.get_d()}, {"quotient_lower", q.lower.get_d()}};
      });
    }
    report.add_check(isometry.outcome());
  }
}

}  // namespace graev::suites
