#include "graev/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "graev/embedding.hpp"
#include "graev/free_seminorm.hpp"
#include "graev/graev_norm.hpp"
#include "graev/io.hpp"
#include "graev/report.hpp"
#include "graev/rolewicz.hpp"
#include "graev/suites.hpp"
#include "graev/torus.hpp"

#ifndef GRAEV_FIXTURES_DIR
#define GRAEV_FIXTURES_DIR "fixtures"
#endif

namespace graev::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct GlobalFlags {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::int64_t coeff_bound = 2;
  std::string grid = "1/512";
  std::string csv;
  std::string convention = "powers-from-1";
  std::string fixtures;
};

/// Input given on the command line: inline JSON or a path to a JSON file.
struct LoadedInput {
  json value;
  std::string source;
};

LoadedInput load_input(RunReport& report, const std::string& label, const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && (text[first] == '{' || text[first] == '[');
  std::string bytes;
  std::string source;
  if (inline_json) {
    bytes = text;
    source = "--" + label;
  } else {
    std::ifstream in(text, std::ios::binary);
    if (!in) throw InputError(text + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    bytes = buffer.str();
    source = text;
  }
  report.add_input(label, bytes);
  try {
    return {json::parse(bytes), source};
  } catch (const json::parse_error& e) {
    throw InputError(source + ": invalid JSON: " + e.what());
  }
}

Rational parse_flag_rational(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const InputError& e) {
    throw InputError(flag + ": " + e.what());
  }
}

CheckOutcome outcome(const std::string& name, CheckStatus status, json detail = json::object()) {
  CheckOutcome c;
  c.name = name;
  c.status = status;
  c.detail = std::move(detail);
  return c;
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

suites::SuiteOptions suite_options(const GlobalFlags& flags) {
  suites::SuiteOptions options;
  options.seed = flags.seed;
  options.trials = flags.trials;
  options.coeff_bound = flags.coeff_bound;
  options.grid = parse_flag_rational(flags.grid, "--grid");
  torus::grid_resolution(options.grid);
  options.convention = rolewicz::parse_convention(flags.convention);
  return options;
}

void command_norm(RunReport& report, const std::string& space_arg, const std::string& word_arg) {
  const auto s = load_input(report, "space", space_arg);
  const PointedSpace space = io::space_from_json(s.value, s.source);
  const auto w_in = load_input(report, "word", word_arg);
  const Word w = io::word_from_json(w_in.value, space, w_in.source);
  const auto r = graev_norm(space, w);
  report.set_result({{"value", to_string(r.value)}, {"certificate", io::to_json(r.certificate, space)}});
  report.add_check(outcome("certificate_achieves_value", pass_if(certificate_is_valid(space, w, r.certificate))));
  if (letter_count(w) <= 10) {
    const Rational oracle = brute_force_norm(space, w);
    report.add_check(outcome("brute_force_agrees", pass_if(oracle == r.value), {{"brute_force", to_string(oracle)}}));
  }
}

void command_seminorm(RunReport& report, const std::string& space_arg, const std::string& lincomb_arg) {
  const auto s = load_input(report, "space", space_arg);
  const PointedSpace space = io::space_from_json(s.value, s.source);
  const auto v_in = load_input(report, "lincomb", lincomb_arg);
  const LinComb v = io::lincomb_from_json(v_in.value, space, v_in.source);
  const auto r = free_seminorm(space, v);
  report.set_result({{"value", to_string(r.value)},
                     {"flow", io::to_json(r.flow, space)},
                     {"dual", io::to_json(r.dual, space)},
                     {"pivots", r.pivots}});
  report.add_check(outcome("flow_feasible", pass_if(flow_is_feasible(space, v, r.flow))));
  report.add_check(outcome("dual_feasible", pass_if(witness_is_feasible(space, r.dual))));
  report.add_check(outcome("strong_duality", pass_if(dual_objective(v, r.dual) == r.value),
                           {{"dual_objective", to_string(dual_objective(v, r.dual))}}));
}

void command_tu_check(RunReport& report, const std::string& space_arg, const std::string& word_arg) {
  const auto s = load_input(report, "space", space_arg);
  const PointedSpace space = io::space_from_json(s.value, s.source);
  const auto w_in = load_input(report, "word", word_arg);
  const Word w = io::word_from_json(w_in.value, space, w_in.source);
  const TuReport r = tu_check(space, w);
  report.set_result({{"graev", to_string(r.graev)},
                     {"seminorm", to_string(r.seminorm)},
                     {"equal", r.equal},
                     {"matching", io::to_json(r.matching, space)},
                     {"flow", io::to_json(r.flow, space)},
                     {"dual", io::to_json(r.dual, space)}});
  report.add_check(outcome("seminorm_at_most_graev", pass_if(r.seminorm_below_graev)));
  report.add_check(outcome("graev_equals_seminorm", pass_if(r.equal),
                           r.equal ? json::object() : json{{"word", io::to_json(w, space)}}));
}

void command_check(RunReport& report, const GlobalFlags& flags, const std::string& space_arg) {
  const auto s = load_input(report, "space", space_arg);
  const PointedSpace space = io::space_from_json(s.value, s.source);
  report.set_seed(flags.seed);
  suites::space_checks(report, space, fs::path(s.source).stem().string(), suite_options(flags));
}

torus::TorusPoint torus_point_input(RunReport& report, const std::string& label, const std::string& text) {
  const auto in = load_input(report, label, text);
  return io::torus_point_from_json(in.value, in.source);
}

void command_kronecker(RunReport& report, const std::string& x_arg, const std::string& target_arg,
                       const std::string& eps_arg, std::int64_t max_m) {
  const auto x = torus_point_input(report, "x", x_arg);
  const auto target = torus_point_input(report, "target", target_arg);
  const Rational eps = parse_flag_rational(eps_arg, "--eps");
  if (sgn(eps) <= 0) throw InputError("--eps: must be positive");
  if (max_m < 1) throw InputError("--max-m: must be at least 1");
  if (x.size() != target.size()) throw InputError("--target: dimension differs from --x");
  const auto r = torus::kronecker_search(x, target, eps, max_m);
  json result{{"max_m", max_m}};
  switch (r.status) {
    case torus::SearchStatus::found: result["status"] = "found"; break;
    case torus::SearchStatus::absent: result["status"] = "absent"; break;
    case torus::SearchStatus::inconclusive: result["status"] = "inconclusive"; break;
  }
  if (r.m) result["m"] = *r.m;
  report.set_result(result);
  report.add_check(outcome("kronecker_search",
                           r.status == torus::SearchStatus::inconclusive ? CheckStatus::inconclusive : CheckStatus::pass,
                           {{"status", result["status"]}}));
}

void command_net(RunReport& report, const GlobalFlags& flags, const std::string& points_arg, const std::string& x_arg,
                 std::int64_t count, const std::string& eps_arg) {
  std::vector<torus::TorusPoint> points;
  if (!points_arg.empty()) {
    const auto in = load_input(report, "points", points_arg);
    if (!in.value.is_array()) throw InputError(in.source + ": expected an array of torus points");
    for (std::size_t i = 0; i < in.value.size(); ++i) {
      points.push_back(io::torus_point_from_json(in.value[i], in.source + "[" + std::to_string(i) + "]"));
    }
  } else if (!x_arg.empty()) {
    if (count < 1) throw InputError("--count: must be at least 1");
    const auto x = torus_point_input(report, "x", x_arg);
    for (std::int64_t m = 1; m <= count; ++m) {
      torus::TorusPoint p;
      for (const auto& a : x) p.push_back(a.scaled(Rational(static_cast<long>(m))));
      points.push_back(p);
    }
  } else {
    throw InputError("torus net: give --points or --x with --count");
  }
  if (points.empty()) throw InputError("torus net: no points");
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) throw InputError("torus net: points of different dimension");
  }
  const Rational eps = parse_flag_rational(eps_arg, "--eps");
  if (sgn(eps) <= 0) throw InputError("--eps: must be positive");
  const Rational grid = parse_flag_rational(flags.grid, "--grid");
  const auto r = torus::net_check(points, dim, eps, grid);
  report.set_result(io::to_json(r));
  const CheckStatus status = r.status == torus::NetStatus::certified ? CheckStatus::pass
                             : r.status == torus::NetStatus::refuted ? CheckStatus::fail
                                                                     : CheckStatus::inconclusive;
  json detail{{"status", torus::to_string(r.status)}};
  if (r.witness) detail["witness"] = io::to_json(r).at("witness");
  report.add_check(outcome("eps_net", status, detail));
}

std::vector<Rational> rational_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(io::rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void command_build(RunReport& report, const GlobalFlags& flags, std::size_t depth, const std::string& weights_arg,
                   const std::string& out_path) {
  if (depth < 1) throw InputError("--depth: must be at least 1");
  rolewicz::OmegaTorusModel model = rolewicz::OmegaTorusModel::with_defaults(depth);
  if (!weights_arg.empty()) {
    const auto in = load_input(report, "weights", weights_arg);
    model = rolewicz::OmegaTorusModel::with_weights(rational_array(in.value, in.source));
    if (model.depth != depth) throw InputError(in.source + ": expected one weight per level");
  }
  rolewicz::validate_model(model);
  rolewicz::BuildOptions options;
  options.grid_step = parse_flag_rational(flags.grid, "--grid");
  options.convention = rolewicz::parse_convention(flags.convention);
  try {
    const auto cert = rolewicz::construct_generator(model, options);
    const json cert_json = io::to_json(model, cert);
    report.set_result({{"certificate", cert_json}});
    for (const auto& c : cert.conditions) {
      report.add_check(outcome(rolewicz::condition_name(c.condition) + ":level=" + std::to_string(c.level),
                               c.status == rolewicz::Status::pass ? CheckStatus::pass
                               : c.status == rolewicz::Status::fail ? CheckStatus::fail
                                                                    : CheckStatus::inconclusive,
                               io::to_json(c)));
    }
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw InputError(out_path + ": cannot write certificate");
      out << cert_json.dump(2) << '\n';
    }
  } catch (const rolewicz::ConstructionError& e) {
    report.add_check(outcome("construct", CheckStatus::inconclusive,
                             {{"level", e.level()}, {"suggested_grid", to_string(e.suggested_grid())},
                              {"reason", e.what()}}));
  }
}

std::pair<rolewicz::OmegaTorusModel, rolewicz::GeneratorCertificate> certificate_input(RunReport& report,
                                                                                      const std::string& text) {
  const auto in = load_input(report, "cert", text);
  // A full build report is accepted as well as the bare certificate.
  if (in.value.is_object() && in.value.contains("result") && in.value["result"].contains("certificate")) {
    return io::certificate_from_json(in.value["result"]["certificate"], in.source + ": result.certificate");
  }
  return io::certificate_from_json(in.value, in.source);
}

void command_verify(RunReport& report, const std::string& cert_arg) {
  const auto [model, cert] = certificate_input(report, cert_arg);
  const auto v = rolewicz::verify_certificate(model, cert);
  json conditions = json::array();
  for (const auto& c : v.conditions) {
    conditions.push_back(io::to_json(c));
    report.add_check(outcome(rolewicz::condition_name(c.condition) + ":level=" + std::to_string(c.level),
                             c.status == rolewicz::Status::pass ? CheckStatus::pass
                             : c.status == rolewicz::Status::fail ? CheckStatus::fail
                                                                  : CheckStatus::inconclusive,
                             io::to_json(c)));
  }
  json independence{{"independent", v.independent}};
  if (!v.independent) {
    json relation = json::array();
    for (const auto& c : v.relation) relation.push_back(to_string(c));
    independence["relation"] = relation;
  }
  CheckOutcome advisory = outcome("independence", pass_if(v.independent), independence);
  advisory.advisory = true;
  report.add_check(advisory);
  report.set_result({{"ok", v.ok()}, {"conditions", conditions}, {"independence", independence}});
}

void command_approx(RunReport& report, const std::string& cert_arg, const std::string& target_arg,
                    const std::string& eps_arg) {
  const auto [model, cert] = certificate_input(report, cert_arg);
  const auto z = torus_point_input(report, "target", target_arg);
  if (z.size() != model.depth) throw InputError("--target: expected one angle per level");
  const Rational eps = parse_flag_rational(eps_arg, "--eps");
  try {
    const auto a = rolewicz::approximate_target(model, cert, z, eps);
    json result{{"m", a.m}, {"distance", a.distance.get_d()}, {"error", a.error.get_d()}};
    CheckStatus status = CheckStatus::pass;
    if (a.status == torus::SearchStatus::inconclusive) {
      result["status"] = "inconclusive";
      status = CheckStatus::inconclusive;
    } else {
      result["status"] = a.status == torus::SearchStatus::found ? "found" : "absent";
      status = pass_if(a.status == torus::SearchStatus::found);
    }
    report.set_result(result);
    report.add_check(outcome("approximation", status, {{"eps", to_string(eps)}}));
  } catch (const rolewicz::ContradictionError& e) {
    report.add_check(outcome("approximation", CheckStatus::fail, {{"reason", e.what()}, {"target", io::to_json(z)}}));
  }
}

void command_embed(RunReport& report, const GlobalFlags& flags, const std::string& model_arg) {
  const auto in = load_input(report, "model", model_arg);
  const auto file = io::embedding_model_from_json(in.value, in.source);
  report.set_seed(flags.seed);
  report.set_result({{"m_count", file.model.m_count()}, {"n_max", file.model.n_max}, {"e_dim", file.model.e_dim}});
  suites::embedding_checks(report, file, "model", suite_options(flags));
}

std::vector<fs::path> json_files(const fs::path& dir) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

json read_fixture(RunReport& report, const fs::path& root, const fs::path& file) {
  const std::string label = fs::relative(file, root).generic_string();
  return load_input(report, label, file.string()).value;
}

void command_suite(RunReport& report, const GlobalFlags& flags) {
  const fs::path root = flags.fixtures.empty() ? fs::path(default_fixtures_dir()) : fs::path(flags.fixtures);
  if (!fs::is_directory(root)) throw InputError(root.string() + ": fixtures directory not found");
  const auto options = suite_options(flags);
  report.set_seed(options.seed);

  std::map<std::string, PointedSpace> spaces;
  for (const auto& file : json_files(root / "spaces")) {
    const PointedSpace space = io::space_from_json(read_fixture(report, root, file), file.string());
    spaces.emplace(file.filename().string(), space);
    suites::space_checks(report, space, file.stem().string(), options);
  }

  for (const auto& file : json_files(root / "invalid")) {
    const json j = read_fixture(report, root, file);
    const std::string expected = j.value("expect_violation", "");
    const auto validation = validate_space(io::space_from_json(j, file.string()));
    bool ok = !validation.ok();
    json found = json::array();
    for (const auto& v : validation.violations) {
      static const char* kinds[] = {"negative", "nonzero_diagonal", "asymmetric", "triangle"};
      found.push_back(kinds[static_cast<int>(v.kind)]);
    }
    if (!expected.empty()) ok = ok && std::find(found.begin(), found.end(), expected) != found.end();
    report.add_check(outcome("fixture:" + file.stem().string() + ":rejected", pass_if(ok), {{"violations", found}}));
  }

  auto space_for = [&](const json& j, const fs::path& file) -> const PointedSpace& {
    const std::string name = j.value("space", "");
    auto it = spaces.find(name);
    if (it == spaces.end()) throw InputError(file.string() + ": field 'space': unknown fixture space '" + name + "'");
    return it->second;
  };

  for (const auto& file : json_files(root / "words")) {
    const json j = read_fixture(report, root, file);
    const PointedSpace& space = space_for(j, file);
    const Word w = io::word_from_json(j, space, file.string());
    const TuReport tu = tu_check(space, w);
    bool ok = tu.equal;
    json detail{{"graev", to_string(tu.graev)}, {"seminorm", to_string(tu.seminorm)}};
    if (j.contains("expected_norm")) {
      const Rational expected = io::rational_from_json(j["expected_norm"], file.string() + ": field 'expected_norm'");
      ok = ok && tu.graev == expected;
      detail["expected"] = to_string(expected);
    }
    report.add_check(outcome("fixture:" + file.stem().string() + ":tu_check", pass_if(ok), detail));
  }

  for (const auto& file : json_files(root / "lincombs")) {
    const json j = read_fixture(report, root, file);
    const PointedSpace& space = space_for(j, file);
    const LinComb v = io::lincomb_from_json(j, space, file.string());
    const auto r = free_seminorm(space, v);
    bool ok = dual_objective(v, r.dual) == r.value && witness_is_feasible(space, r.dual);
    json detail{{"value", to_string(r.value)}};
    if (j.contains("expected_seminorm")) {
      const Rational expected =
          io::rational_from_json(j["expected_seminorm"], file.string() + ": field 'expected_seminorm'");
      ok = ok && r.value == expected;
      detail["expected"] = to_string(expected);
    }
    report.add_check(outcome("fixture:" + file.stem().string() + ":seminorm", pass_if(ok), detail));
  }

  for (const auto& file : json_files(root / "torus")) {
    const json j = read_fixture(report, root, file);
    const std::string where = file.string();
    const auto x = io::torus_point_from_json(j.at("x"), where + ": field 'x'");
    const auto target = io::torus_point_from_json(j.at("target"), where + ": field 'target'");
    const Rational eps = io::rational_from_json(j.at("eps"), where + ": field 'eps'");
    const std::int64_t max_m = j.at("max_m").get<std::int64_t>();
    const auto r = torus::kronecker_search(x, target, eps, max_m);
    const std::string status = r.status == torus::SearchStatus::found    ? "found"
                               : r.status == torus::SearchStatus::absent ? "absent"
                                                                          : "inconclusive";
    bool ok = status == j.value("expected_status", status);
    if (j.contains("expected_m")) ok = ok && r.m && *r.m == j["expected_m"].get<std::int64_t>();
    json detail{{"status", status}};
    if (r.m) detail["m"] = *r.m;
    report.add_check(outcome("fixture:" + file.stem().string() + ":kronecker", pass_if(ok), detail));
  }

  suites::torus_checks(report, options);
  suites::rolewicz_checks(report, options, 2);

  for (const auto& file : json_files(root / "models")) {
    const auto model = io::embedding_model_from_json(read_fixture(report, root, file), file.string());
    suites::embedding_checks(report, model, file.stem().string(), options);
  }
}

void emit(const RunReport& report, const GlobalFlags& flags, std::ostream& out) {
  out << report.to_json().dump(2) << '\n';
  if (!flags.csv.empty()) {
    std::ofstream csv(flags.csv);
    if (!csv) throw InputError(flags.csv + ": cannot write CSV summary");
    csv << report.to_csv();
  }
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

std::string default_fixtures_dir() { return GRAEV_FIXTURES_DIR; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Graev norms, free seminorms, torus generators and lattice quotients", "graev"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "seed for property sweeps");
  app.add_option("--trials", flags.trials, "random cases per property");
  app.add_option("--coeff-bound", flags.coeff_bound, "lattice coefficient bound");
  app.add_option("--grid", flags.grid, "grid step 1/G for net certification");
  app.add_option("--csv", flags.csv, "also write a CSV summary to this path");
  app.add_option("--convention", flags.convention, "powers-from-1 or powers-from-0")
      ->check(CLI::IsMember({"powers-from-0", "powers-from-1"}));
  app.add_option("--fixtures", flags.fixtures, "fixtures directory for suite");

  std::string space_arg, word_arg, lincomb_arg, x_arg, target_arg, eps_arg, points_arg, weights_arg, out_path,
      cert_arg, model_arg;
  std::int64_t max_m = 1000, count = 0;
  std::size_t depth = 1;

  auto* norm = app.add_subcommand("norm", "Graev norm of a word with its matching certificate");
  norm->add_option("--space", space_arg)->required();
  norm->add_option("--word", word_arg)->required();

  auto* seminorm = app.add_subcommand("seminorm", "free seminorm of a combination with flow and dual witness");
  seminorm->add_option("--space", space_arg)->required();
  seminorm->add_option("--lincomb", lincomb_arg)->required();

  auto* tu = app.add_subcommand("tu-check", "compare the Graev norm and the free seminorm of a word");
  tu->add_option("--space", space_arg)->required();
  tu->add_option("--word", word_arg)->required();

  auto* check = app.add_subcommand("check", "seeded property sweep on one space");
  check->add_option("--space", space_arg)->required();

  auto* torus_cmd = app.add_subcommand("torus", "circle and torus tools");
  torus_cmd->require_subcommand(1);
  auto* kronecker = torus_cmd->add_subcommand("kronecker", "least power of x close to a target");
  kronecker->add_option("--x", x_arg)->required();
  kronecker->add_option("--target", target_arg)->required();
  kronecker->add_option("--eps", eps_arg)->required();
  kronecker->add_option("--max-m", max_m);
  auto* net = torus_cmd->add_subcommand("net", "certify or refute an eps-net of the torus");
  net->add_option("--points", points_arg, "array of torus points");
  net->add_option("--x", x_arg, "generator whose first --count powers are checked");
  net->add_option("--count", count);
  net->add_option("--eps", eps_arg)->required();

  auto* role = app.add_subcommand("rolewicz", "generators of truncated omega-tori");
  role->require_subcommand(1);
  auto* build = role->add_subcommand("build", "construct a certified generator");
  build->add_option("--depth", depth)->required();
  build->add_option("--weights", weights_arg, "array of per-level weights (radii stay 2^-i)");
  build->add_option("--out", out_path, "write the bare certificate here");
  auto* verify = role->add_subcommand("verify", "re-verify a certificate");
  verify->add_option("--cert", cert_arg)->required();
  auto* approx = role->add_subcommand("approx", "approximate a target by a power of the generator");
  approx->add_option("--cert", cert_arg)->required();
  approx->add_option("--target", target_arg)->required();
  approx->add_option("--eps", eps_arg)->required();

  auto* embed = app.add_subcommand("embed", "lattice quotient model");
  embed->require_subcommand(1);
  auto* embed_check = embed->add_subcommand("check", "run every lattice check on a model");
  embed_check->add_option("--model", model_arg)->required();

  auto* suite = app.add_subcommand("suite", "run every property sweep on the bundled fixtures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  std::string echo = "graev";
  for (const auto& a : args) echo += " " + a;
  RunReport report(echo);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (norm->parsed()) {
      command_norm(report, space_arg, word_arg);
    } else if (seminorm->parsed()) {
      command_seminorm(report, space_arg, lincomb_arg);
    } else if (tu->parsed()) {
      command_tu_check(report, space_arg, word_arg);
    } else if (check->parsed()) {
      command_check(report, flags, space_arg);
    } else if (kronecker->parsed()) {
      command_kronecker(report, x_arg, target_arg, eps_arg, max_m);
    } else if (net->parsed()) {
      command_net(report, flags, points_arg, x_arg, count, eps_arg);
    } else if (build->parsed()) {
      command_build(report, flags, depth, weights_arg, out_path);
    } else if (verify->parsed()) {
      command_verify(report, cert_arg);
    } else if (approx->parsed()) {
      command_approx(report, cert_arg, target_arg, eps_arg);
    } else if (embed_check->parsed()) {
      command_embed(report, flags, model_arg);
    } else if (suite->parsed()) {
      command_suite(report, flags);
    }
    report.set_wall_time_ms(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    emit(report, flags, out);
  } catch (const InputError& e) {
    print_error(err, "input", e.what());
    return kExitInputError;
  } catch (const StructureError& e) {
    print_error(err, "structure", e.what());
    return kExitInputError;
  } catch (const PreconditionError& e) {
    print_error(err, "precondition", e.what());
    return kExitInputError;
  } catch (const json::exception& e) {
    print_error(err, "input", e.what());
    return kExitInputError;
  }
  return report.exit_code();
}

}  // namespace graev::cli
