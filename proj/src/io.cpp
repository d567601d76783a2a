#include "graev/io.hpp"

#include <fstream>
#include <sstream>

namespace graev::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& message) {
  throw InputError(where + ": " + message);
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) fail(where, "expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) fail(where, std::string("missing field '") + name + "'");
  return *it;
}

std::int64_t integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  const Rational q = rational_from_json(j, where);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) fail(where, "expected an integer");
  return q.get_num().get_si();
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  const std::int64_t v = integer_from_json(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::vector<Rational> rational_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json rational_list_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

template <typename Scalar>
Combination<Scalar> combination_from_json(const Json& j, const PointedSpace& space, const std::string& source,
                                          bool integral) {
  const std::string where = source + ": field 'coeffs'";
  const Json& coeffs = field(j, "coeffs", source);
  if (!coeffs.is_object()) fail(where, "expected an object mapping point names to coefficients");
  Combination<Scalar> out(space.size(), space.basepoint());
  for (const auto& [name, value] : coeffs.items()) {
    std::size_t index = 0;
    try {
      index = space.index_of(name);
    } catch (const InputError&) {
      fail(where, "unknown point '" + name + "'");
    }
    if (index == space.basepoint()) fail(where, "the basepoint '" + name + "' cannot carry a coefficient");
    if constexpr (std::is_same_v<Scalar, std::int64_t>) {
      (void)integral;
      out.add(index, integer_from_json(value, where + "['" + name + "']"));
    } else {
      out.add(index, rational_from_json(value, where + "['" + name + "']"));
    }
  }
  return out;
}

template <typename Scalar>
Json combination_json(const Combination<Scalar>& c, const PointedSpace& space) {
  Json coeffs = Json::object();
  for (const auto& [index, value] : c.coeffs()) {
    if constexpr (std::is_same_v<Scalar, std::int64_t>) {
      coeffs[space.name(index)] = std::to_string(value);
    } else {
      coeffs[space.name(index)] = to_string(value);
    }
  }
  return Json{{"coeffs", coeffs}};
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
}

Json json_argument(const std::string& text, const std::string& what) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError(what + ": invalid JSON: " + e.what());
    }
  }
  return read_json_file(text);
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) fail(where, "expected a rational as a string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

Json to_json(const Rational& q) { return to_string(q); }

PointedSpace space_from_json(const Json& j, const std::string& source) {
  const Json& points = field(j, "points", source);
  if (!points.is_array() || points.empty()) fail(source + ": field 'points'", "expected a nonempty array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].is_string()) fail(source + ": field 'points'[" + std::to_string(i) + "]", "expected a string");
    names.push_back(points[i].get<std::string>());
    for (std::size_t k = 0; k + 1 < names.size(); ++k) {
      if (names[k] == names.back()) fail(source + ": field 'points'", "duplicate point '" + names.back() + "'");
    }
  }
  const Json& base = field(j, "basepoint", source);
  if (!base.is_string()) fail(source + ": field 'basepoint'", "expected a point name");
  std::size_t basepoint = names.size();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == base.get<std::string>()) basepoint = i;
  }
  if (basepoint == names.size()) fail(source + ": field 'basepoint'", "not one of the points");

  const Json& dist = field(j, "dist", source);
  if (!dist.is_array()) fail(source + ": field 'dist'", "expected a square array");
  std::vector<std::vector<Rational>> matrix;
  for (std::size_t r = 0; r < dist.size(); ++r) {
    matrix.push_back(rational_list(dist[r], source + ": field 'dist'[" + std::to_string(r) + "]"));
  }
  return PointedSpace(std::move(names), basepoint, std::move(matrix));
}

Json to_json(const PointedSpace& space) {
  Json dist = Json::array();
  for (const auto& row : space.matrix()) dist.push_back(rational_list_json(row));
  return Json{{"points", space.names()}, {"basepoint", space.name(space.basepoint())}, {"dist", dist}};
}

Word word_from_json(const Json& j, const PointedSpace& space, const std::string& source) {
  return combination_from_json<std::int64_t>(j, space, source, true);
}

LinComb lincomb_from_json(const Json& j, const PointedSpace& space, const std::string& source) {
  return combination_from_json<Rational>(j, space, source, false);
}

Json to_json(const Word& w, const PointedSpace& space) { return combination_json(w, space); }
Json to_json(const LinComb& v, const PointedSpace& space) { return combination_json(v, space); }

Json to_json(const MatchingCertificate& cert, const PointedSpace& space) {
  Json pairs = Json::array();
  for (const auto& p : cert.pairs) pairs.push_back({space.name(p.left), space.name(p.right)});
  return Json{{"pairs", pairs}, {"total_cost", to_json(cert.total_cost)}};
}

Json to_json(const FlowCertificate& cert, const PointedSpace& space) {
  Json arcs = Json::array();
  for (const auto& [arc, amount] : cert.flow) {
    arcs.push_back({{"from", space.name(arc.first)}, {"to", space.name(arc.second)}, {"amount", to_json(amount)}});
  }
  return Json{{"arcs", arcs}, {"value", to_json(cert.value)}};
}

Json to_json(const DualWitness& witness, const PointedSpace& space) {
  Json f = Json::object();
  for (std::size_t i = 0; i < witness.f.size(); ++i) f[space.name(i)] = to_json(witness.f[i]);
  return f;
}

torus::Angle angle_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an angle object {\"rat\": ...} or {\"coords\": {...}}");
  if (j.contains("rat")) return torus::Angle::rational(rational_from_json(j["rat"], where + ".rat"));
  const Json& coords = field(j, "coords", where);
  if (!coords.is_object()) fail(where + ".coords", "expected an object keyed by basis symbols");
  std::vector<Rational> values;
  for (const auto& [label, value] : coords.items()) {
    std::size_t index = 0;
    try {
      index = torus::basis_index(label);
    } catch (const InputError& e) {
      fail(where + ".coords", e.what());
    }
    if (values.size() <= index) values.resize(index + 1);
    values[index] = rational_from_json(value, where + ".coords['" + label + "']");
  }
  return torus::Angle(std::move(values));
}

Json to_json(const torus::Angle& a) {
  if (a.is_rational()) return Json{{"rat", to_json(a.coord(0))}};
  Json coords = Json::object();
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (sgn(a.coords()[i]) != 0 || i == 0) coords[torus::basis_label(i)] = to_json(a.coords()[i]);
  }
  return Json{{"coords", coords}};
}

torus::TorusPoint torus_point_from_json(const Json& j, const std::string& where) {
  if (j.is_object()) return {angle_from_json(j, where)};
  if (!j.is_array()) fail(where, "expected an angle or an array of angles");
  torus::TorusPoint p;
  for (std::size_t i = 0; i < j.size(); ++i) p.push_back(angle_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return p;
}

Json to_json(const torus::TorusPoint& p) {
  Json out = Json::array();
  for (const auto& a : p) out.push_back(to_json(a));
  return out;
}

Json to_json(const torus::NetCheckResult& r) {
  Json out{{"status", torus::to_string(r.status)}, {"slack", to_json(r.slack)}, {"grid_points", r.grid_points}};
  if (r.witness) out["witness"] = rational_list_json(*r.witness);
  if (r.witness_distance) out["witness_distance"] = *r.witness_distance;
  if (r.covering_radius_lower) out["covering_radius_lower"] = r.covering_radius_lower->get_d();
  if (r.covering_radius_upper) out["covering_radius_upper"] = r.covering_radius_upper->get_d();
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

Json to_json(const rolewicz::ConditionReport& c) {
  Json out{{"condition", c.condition},
           {"name", rolewicz::condition_name(c.condition)},
           {"level", c.level},
           {"status", rolewicz::to_string(c.status)}};
  if (c.margin) out["margin"] = c.margin->get_d();
  if (c.witness) out["witness"] = rational_list_json(*c.witness);
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

Json to_json(const rolewicz::OmegaTorusModel& model, const rolewicz::GeneratorCertificate& cert) {
  Json x = Json::array();
  for (const auto& a : cert.x) x.push_back(to_json(a));
  Json conditions = Json::array();
  for (const auto& c : cert.conditions) conditions.push_back(to_json(c));
  return Json{{"depth", model.depth},
              {"weights", rational_list_json(model.weights)},
              {"radii", rational_list_json(model.radii)},
              {"grid", to_json(cert.grid_step)},
              {"convention", rolewicz::to_string(cert.convention)},
              {"x", x},
              {"n", cert.n},
              {"conditions", conditions}};
}

std::pair<rolewicz::OmegaTorusModel, rolewicz::GeneratorCertificate> certificate_from_json(const Json& j,
                                                                                         const std::string& source) {
  rolewicz::OmegaTorusModel model;
  model.depth = count_from_json(field(j, "depth", source), source + ": field 'depth'");
  model.weights = rational_list(field(j, "weights", source), source + ": field 'weights'");
  model.radii = rational_list(field(j, "radii", source), source + ": field 'radii'");
  try {
    rolewicz::validate_model(model);
  } catch (const InputError& e) {
    fail(source, e.what());
  }
  rolewicz::GeneratorCertificate cert;
  cert.grid_step = rational_from_json(field(j, "grid", source), source + ": field 'grid'");
  if (j.contains("convention")) {
    if (!j["convention"].is_string()) fail(source + ": field 'convention'", "expected a string");
    try {
      cert.convention = rolewicz::parse_convention(j["convention"].get<std::string>());
    } catch (const InputError& e) {
      fail(source + ": field 'convention'", e.what());
    }
  }
  const Json& x = field(j, "x", source);
  if (!x.is_array()) fail(source + ": field 'x'", "expected an array of angles");
  for (std::size_t i = 0; i < x.size(); ++i) {
    cert.x.push_back(angle_from_json(x[i], source + ": field 'x'[" + std::to_string(i) + "]"));
  }
  const Json& n = field(j, "n", source);
  if (!n.is_array()) fail(source + ": field 'n'", "expected an array of integers");
  for (std::size_t i = 0; i < n.size(); ++i) {
    cert.n.push_back(integer_from_json(n[i], source + ": field 'n'[" + std::to_string(i) + "]"));
  }
  if (cert.x.size() != model.depth || cert.n.size() != model.depth) {
    fail(source, "x and n must have one entry per level");
  }
  return {model, cert};
}

EmbeddingModelFile embedding_model_from_json(const Json& j, const std::string& source) {
  EmbeddingModelFile file;
  auto& model = file.model;
  model.e_dim = count_from_json(field(j, "e_dim", source), source + ": field 'e_dim'");
  model.n_max = count_from_json(field(j, "n_max", source), source + ": field 'n_max'");
  const Json& xs = field(j, "x_points", source);
  if (!xs.is_array()) fail(source + ": field 'x_points'", "expected an array of vectors");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    model.x_points.push_back(rational_list(xs[i], source + ": field 'x_points'[" + std::to_string(i) + "]"));
  }
  auto metric_at = [&](const Json& value, const std::string& where) {
    if (!value.is_string()) fail(where, "expected \"l1\" or \"linf\"");
    try {
      return embedding::parse_metric(value.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  };
  if (j.contains("metrics")) {
    const Json& ms = j["metrics"];
    if (!ms.is_array() || ms.empty()) fail(source + ": field 'metrics'", "expected a nonempty array");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      file.metrics.push_back(metric_at(ms[i], source + ": field 'metrics'[" + std::to_string(i) + "]"));
    }
  } else if (j.contains("metric")) {
    file.metrics.push_back(metric_at(j["metric"], source + ": field 'metric'"));
  } else {
    file.metrics.push_back(embedding::EMetric::l1);
  }
  model.metric = file.metrics.front();
  try {
    embedding::validate_model(model);
  } catch (const InputError& e) {
    fail(source, e.what());
  }
  return file;
}

Json to_json(const embedding::LatticeElement& k) {
  Json out = Json::array();
  for (const auto& [index, value] : k.k) out.push_back({index.first, index.second, value});
  return out;
}

Json to_json(const embedding::TildeDistance& d) {
  Json out{{"e_part", to_json(d.e_part)}, {"l2_squared", to_json(d.l2_squared)},
           {"lower", d.lower.get_d()}, {"upper", d.upper.get_d()}};
  if (d.l2_exact) out["value"] = to_json(d.e_part + *d.l2_exact);
  return out;
}

}  // namespace graev::io
