#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "bicomplex/analysis.hpp"
#include "bicomplex/error.hpp"
#include "bicomplex/io.hpp"
#include "bicomplex/metric.hpp"

namespace bcx::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

struct Flags {
  std::string config;
  std::string points;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  int threads = 1;
};

struct Outcome {
  Json result;
  int code = kOk;
  std::string summary;
  /// file name -> CSV text
  std::vector<std::pair<std::string, std::string>> csv;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
  out << text;
}

const Json& required(const Json& cfg, const char* key) {
  if (!cfg.contains(key)) throw Error(Errc::ParseError, std::string("/") + key + ": missing");
  return cfg[key];
}

double real_or(const Json& cfg, const char* key, double fallback) {
  if (!cfg.contains(key)) return fallback;
  if (!cfg[key].is_number()) throw Error(Errc::ParseError, std::string("/") + key + ": expected a number");
  return cfg[key].get<double>();
}

std::optional<IndexWindow> optional_window(const Json& cfg) {
  if (!cfg.contains("window")) return std::nullopt;
  return io::window_from_json(cfg["window"], "/window");
}

SamplingGrid grid_for(const Json& cfg, const Discus& d, const Flags& flags) {
  io::GridParams g;
  if (cfg.contains("grid")) g = io::grid_from_json(cfg["grid"], "/grid");
  g.options.seed = flags.seed;
  return exhaustion(d, g.fraction, g.n, g.options);
}

std::vector<LabeledValue> labeled_values(const Json& cfg, std::size_t min_count, std::size_t max_count) {
  const Json& list = required(cfg, "values");
  if (!list.is_array() || list.size() < min_count || list.size() > max_count)
    throw Error(Errc::ParseError, "/values: expected " + std::to_string(min_count) +
                                      (min_count == max_count ? "" : " or " + std::to_string(max_count)) + " values");
  static const char* labels[] = {"alpha", "beta", "gamma"};
  std::vector<LabeledValue> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back({labels[i], io::extended_from_json(list[i], "/values/" + std::to_string(i))});
  return out;
}

std::string csv_text(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  io::write_csv_row(out, header);
  for (const auto& r : rows) io::write_csv_row(out, r);
  return out.str();
}

Outcome cmd_metric(const Flags& flags) {
  if (flags.points.empty()) throw Error(Errc::ParseError, "metric requires --points");
  const auto points = io::parse_points(read_file(flags.points));
  Outcome o;
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back({{"label", p.label}, {"value", io::to_json(p.value)}});
  Json pairs = Json::array();
  std::vector<std::vector<std::string>> rows;
  std::ostringstream summary;
  summary << "pair chi_e chi_e^2 chi_j(e1) chi_j(e2)\n";
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const double e = bichordal(points[a].value, points[b].value);
      const Hyperbolicd h = hyperchordal(points[a].value, points[b].value);
      pairs.push_back({{"a", points[a].label},
                       {"b", points[b].label},
                       {"chi_e", io::number(e)},
                       {"chi_e_squared", io::number(e * e)},
                       {"chi_j", Json::array({io::number(h.a1), io::number(h.a2)})}});
      rows.push_back({points[a].label, points[b].label, io::csv_number(e), io::csv_number(e * e),
                      io::csv_number(h.a1), io::csv_number(h.a2)});
      summary << points[a].label << "-" << points[b].label << " " << io::short_number(e) << " "
              << io::short_number(e * e) << " " << io::short_number(h.a1) << " " << io::short_number(h.a2) << "\n";
    }
  }
  o.result = {{"points", pts}, {"pairs", pairs}};
  o.summary = summary.str();
  o.csv.emplace_back("metric.csv", csv_text({"a", "b", "chi_e", "chi_e_squared", "chi_j_e1", "chi_j_e2"}, rows));
  return o;
}

Outcome cmd_eval(const Json& cfg, const Flags&) {
  io::require_keys(cfg, {"function", "points"}, "");
  const BicomplexMeromorphic f = io::function_from_json(required(cfg, "function"), "/function");
  const Json& list = required(cfg, "points");
  if (!list.is_array()) throw Error(Errc::ParseError, "/points: expected an array");
  Outcome o;
  Json values = Json::array();
  std::ostringstream summary;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Bicomplexd w = io::bicomplex_from_json(list[i], "/points/" + std::to_string(i));
    const ExtendedBicomplexd v = f(w);
    static const char* strength[] = {"none", "weak", "strong"};
    const char* s = strength[static_cast<int>(pole_strength(f, w))];
    values.push_back({{"point", io::to_json(w)}, {"value", io::to_json(v)}, {"norm", io::number(extended_norm(v))},
                      {"pole", s}});
    summary << i << ": norm " << io::short_number(extended_norm(v)) << ", pole " << s << "\n";
  }
  o.result = {{"values", values}};
  o.summary = summary.str();
  return o;
}

Outcome cmd_poles(const Json& cfg, const Flags&) {
  io::require_keys(cfg, {"function", "discus", "pole_limit"}, "");
  const BicomplexMeromorphic f = io::function_from_json(required(cfg, "function"), "/function");
  const Discus d = io::discus_from_json(required(cfg, "discus"), "/discus");
  const PoleSet set = poles_in(f, d);
  Outcome o;
  Json poles = Json::array();
  for (const auto& p : set.poles)
    poles.push_back({{"component", static_cast<int>(p.component)}, {"location", io::to_json(p.location)}, {"order", p.order}});
  o.result = {{"discus", io::to_json(d)}, {"poles", poles}, {"holomorphic", set.empty()}, {"pole_limit", nullptr}};
  std::ostringstream summary;
  summary << set.poles.size() << " component pole(s) in the discus\n";
  if (cfg.contains("pole_limit")) {
    const Json& pl = cfg["pole_limit"];
    io::require_keys(pl, {"w0", "radii", "samples_per_angle"}, "/pole_limit");
    const Bicomplexd w0 = io::bicomplex_from_json(required(pl, "w0"), "/pole_limit/w0");
    const Json& rj = required(pl, "radii");
    if (!rj.is_array()) throw Error(Errc::ParseError, "/pole_limit/radii: expected an array");
    std::vector<double> radii;
    for (const auto& r : rj) {
      if (!r.is_number()) throw Error(Errc::ParseError, "/pole_limit/radii: expected numbers");
      radii.push_back(r.get<double>());
    }
    const int m = pl.contains("samples_per_angle") ? pl["samples_per_angle"].get<int>() : 16;
    const auto mins = pole_limit_check(f, w0, radii, m);
    Json rows = Json::array();
    for (std::size_t i = 0; i < radii.size(); ++i) {
      rows.push_back({{"radius", io::number(radii[i])}, {"min_norm", io::number(mins[i])}});
      summary << "r = " << io::short_number(radii[i]) << ": min ||f|| = " << io::short_number(mins[i]) << "\n";
    }
    o.result["pole_limit"] = rows;
  }
  o.summary = summary.str();
  return o;
}

Outcome cmd_converge(const Json& cfg, const Flags& flags) {
  io::require_keys(cfg, {"family", "discus", "grid", "eps", "window", "infinity_threshold", "target"}, "");
  const FamilySpec family = io::family_from_json(required(cfg, "family"), "/family");
  const Discus d = io::discus_from_json(required(cfg, "discus"), "/discus");
  const SamplingGrid grid = grid_for(cfg, d, flags);
  const double eps = real_or(cfg, "eps", 0.05);
  AnalysisOptions options;
  options.threads = flags.threads;
  options.infinity_threshold = real_or(cfg, "infinity_threshold", options.infinity_threshold);
  const auto window = optional_window(cfg);

  const ConvergenceReport r = uniform_cauchy(family, grid, eps, window, options);
  Outcome o;
  o.result = io::to_json(r);
  o.result["discus"] = io::to_json(d);
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : r.sup_table) rows.push_back({std::to_string(e.m), std::to_string(e.n), io::csv_number(e.sup)});
  o.csv.emplace_back("converge_sup_table.csv", csv_text({"m", "n", "sup_chi_e"}, rows));

  if (cfg.contains("target")) {
    const ExtendedBicomplexd target = io::extended_from_json(cfg["target"], "/target");
    Json sups = Json::array();
    std::vector<std::vector<std::string>> trows;
    for (const auto& [n, s] : sup_distance_to(family, grid, target, window, options)) {
      sups.push_back(Json::array({n, io::number(s)}));
      trows.push_back({std::to_string(n), io::csv_number(s)});
    }
    o.result["sup_to_target"] = {{"target", io::to_json(target)}, {"sups", sups}};
    o.csv.emplace_back("converge_sup_to_target.csv", csv_text({"n", "sup_chi_e"}, trows));
  }
  std::ostringstream summary;
  summary << "grid " << r.grid_points << " points, delta " << io::short_number(r.grid_delta) << "\n"
          << "tail sup " << io::short_number(r.cauchy_epsilon_achieved) << " vs eps " << io::short_number(eps)
          << (r.cauchy_passed ? ": Cauchy" : ": not Cauchy") << "\n"
          << "limit class " << to_string(r.limit_class) << "\n";
  o.summary = summary.str();
  return o;
}

Outcome cmd_montel(const Json& cfg, const Flags& flags) {
  io::require_keys(cfg, {"family", "discus", "grid", "deltas", "window", "metric", "thresholds", "crosscheck"}, "");
  const FamilySpec family = io::family_from_json(required(cfg, "family"), "/family");
  const Discus d = io::discus_from_json(required(cfg, "discus"), "/discus");
  const SamplingGrid grid = grid_for(cfg, d, flags);
  const auto window = optional_window(cfg);

  std::vector<double> deltas;
  if (cfg.contains("deltas")) {
    if (!cfg["deltas"].is_array()) throw Error(Errc::ParseError, "/deltas: expected an array");
    for (const auto& x : cfg["deltas"]) {
      if (!x.is_number()) throw Error(Errc::ParseError, "/deltas: expected numbers");
      deltas.push_back(x.get<double>());
    }
  } else {
    deltas = {grid.delta / 4, grid.delta / 2, grid.delta};
  }
  ModulusMetric metric = ModulusMetric::Bichordal;
  if (cfg.contains("metric")) {
    const std::string m = cfg["metric"].is_string() ? cfg["metric"].get<std::string>() : "";
    if (m == "euclidean")
      metric = ModulusMetric::Euclidean;
    else if (m != "bichordal")
      throw Error(Errc::ParseError, "/metric: expected \"bichordal\" or \"euclidean\"");
  }
  VerdictThresholds t;
  if (cfg.contains("thresholds")) {
    const Json& tj = cfg["thresholds"];
    io::require_keys(tj, {"vanishing", "floor", "ratio"}, "/thresholds");
    t.vanishing = real_or(tj, "vanishing", t.vanishing);
    t.floor = real_or(tj, "floor", t.floor);
    t.ratio = real_or(tj, "ratio", t.ratio);
  }
  const bool crosscheck = cfg.contains("crosscheck") && cfg["crosscheck"].is_boolean() && cfg["crosscheck"].get<bool>();
  if (cfg.contains("crosscheck") && !cfg["crosscheck"].is_boolean())
    throw Error(Errc::ParseError, "/crosscheck: expected true or false");
  AnalysisOptions options;
  options.threads = flags.threads;

  const EquicontinuityReport r = equicontinuity_modulus(family, grid, deltas, window, options, metric, t);
  Outcome o;
  o.result = {{"discus", io::to_json(d)},
              {"grid", {{"points", grid.points.size()}, {"delta", io::number(grid.delta)}}},
              {"metric", metric == ModulusMetric::Bichordal ? "bichordal" : "euclidean"},
              {"equicontinuity", io::to_json(r)},
              {"crosscheck", nullptr}};
  std::vector<std::vector<std::string>> rows;
  std::ostringstream summary;
  for (std::size_t i = 0; i < r.deltas.size(); ++i) {
    rows.push_back({io::csv_number(r.deltas[i]), io::csv_number(r.modulus[i]), std::to_string(r.pair_counts[i])});
    summary << "omega(" << io::short_number(r.deltas[i]) << ") = " << io::short_number(r.modulus[i]) << " over "
            << r.pair_counts[i] << " pairs\n";
  }
  summary << "verdict " << to_string(r.verdict) << "\n";
  o.csv.emplace_back("montel_modulus.csv", csv_text({"delta", "omega", "pairs"}, rows));
  o.code = r.verdict == Verdict::EvidenceAgainstNormal ? kNegative : kOk;
  if (crosscheck) {
    const CrosscheckReport c = projection_crosscheck(family, grid, deltas, window, options, t);
    o.result["crosscheck"] = io::to_json(c);
    summary << "components " << to_string(c.first.verdict) << " / " << to_string(c.second.verdict)
            << (c.coherent ? ", coherent" : ", NOT coherent") << "\n";
  }
  o.summary = summary.str();
  return o;
}

Outcome cmd_fnt(const Json& cfg, const Flags&) {
  io::require_keys(cfg, {"family", "discus", "values", "window"}, "");
  const FamilySpec family = io::family_from_json(required(cfg, "family"), "/family");
  const Discus d = io::discus_from_json(required(cfg, "discus"), "/discus");
  const auto values = labeled_values(cfg, 2, 3);
  const auto window = optional_window(cfg);

  FNTReport r;
  if (values.size() == 2) {
    for (const auto& v : values)
      if (!v.value.is_finite())
        throw Error(Errc::ParseError, "/values: two-value test takes finite values; give three for meromorphic");
    r = fnt_holomorphic(family, d, values[0].value.to_bicomplex(), values[1].value.to_bicomplex(), window);
  } else {
    r = fnt_meromorphic(family, d, values[0].value, values[1].value, values[2].value, window);
  }
  Outcome o;
  o.result = io::to_json(r);
  o.result["variant"] = values.size() == 2 ? "holomorphic" : "meromorphic";
  o.result["discus"] = io::to_json(d);
  o.code = r.conclusion == Conclusion::HypothesesSatisfied ? kOk : kNegative;
  std::ostringstream summary;
  summary << to_string(r.conclusion) << "\n";
  if (r.witness)
    summary << "member " << r.witness->member << " attains " << r.witness->value_label << " in component "
            << static_cast<int>(r.witness->component) << " at " << io::short_number(r.witness->root.real()) << " + "
            << io::short_number(r.witness->root.imag()) << " i1\n";
  o.summary = summary.str();
  return o;
}

Outcome cmd_picard(const Json& cfg, const Flags&) {
  io::require_keys(cfg, {"function", "values"}, "");
  const BicomplexMeromorphic f = io::function_from_json(required(cfg, "function"), "/function");
  const auto values = labeled_values(cfg, 3, 3);
  const PicardReport r = picard_check(f, values[0].value, values[1].value, values[2].value);
  Outcome o;
  o.result = io::to_json(r);
  o.code = r.verdict == PicardVerdict::Constant ? kOk : kNegative;
  o.summary = std::string(to_string(r.verdict)) + "\n";
  return o;
}

Outcome cmd_sphere(const Json& cfg, const Flags&) {
  io::require_keys(cfg, {"points"}, "");
  const Json& list = required(cfg, "points");
  if (!list.is_array()) throw Error(Errc::ParseError, "/points: expected an array");
  Outcome o;
  Json pts = Json::array();
  std::vector<std::vector<std::string>> rows;
  auto vec = [](const Vector3<double>& v) { return Json::array({io::number(v.x()), io::number(v.y()), io::number(v.z())}); };
  for (std::size_t i = 0; i < list.size(); ++i) {
    const ExtendedBicomplexd w = io::extended_from_json(list[i], "/points/" + std::to_string(i));
    const SpherePoint6d s = sphere_embed(w);
    pts.push_back({{"value", io::to_json(w)}, {"p1", vec(s.p1)}, {"p2", vec(s.p2)}});
    std::vector<std::string> row{std::to_string(i)};
    for (const auto* v : {&s.p1, &s.p2})
      for (int c = 0; c < 3; ++c) row.push_back(io::csv_number((*v)[c]));
    rows.push_back(row);
  }
  o.result = {{"points", pts}};
  o.csv.emplace_back("sphere.csv", csv_text({"index", "x1", "y1", "z1", "x2", "y2", "z2"}, rows));
  o.summary = std::to_string(list.size()) + " point(s) embedded\n";
  return o;
}

int execute(const std::string& command, const Flags& flags, std::ostream& out) {
  Outcome o;
  if (command == "metric") {
    o = cmd_metric(flags);
  } else {
    if (flags.config.empty()) throw Error(Errc::ParseError, command + " requires --config");
    const Json cfg = io::parse_document(read_file(flags.config));
    if (!cfg.is_object()) throw Error(Errc::ParseError, "config must be a JSON object");
    static const std::map<std::string, std::function<Outcome(const Json&, const Flags&)>> handlers{
        {"eval", cmd_eval},     {"poles", cmd_poles}, {"converge", cmd_converge}, {"montel", cmd_montel},
        {"fnt", cmd_fnt},       {"picard", cmd_picard}, {"sphere", cmd_sphere}};
    o = handlers.at(command)(cfg, flags);
  }
  const Json report = io::make_report(command, o.result);
  const std::string text = io::dump(report);
  io::validate_report(io::parse_document(text));

  fs::create_directories(flags.out_dir);
  write_file(fs::path(flags.out_dir) / (command + ".json"), text);
  for (const auto& [name, csv] : o.csv) write_file(fs::path(flags.out_dir) / name, csv);
  out << o.summary;
  return o.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bicomplex chordal metric and normal-family diagnostics"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"metric", "Pairwise chi_e / chi_j tables for a points file"},
      {"eval", "Evaluate a meromorphic function at points"},
      {"poles", "Poles inside a discus and the strong-pole limit check"},
      {"converge", "Bispherical uniform Cauchy test and limit classification"},
      {"montel", "Equicontinuity modulus and normality evidence"},
      {"fnt", "Fundamental normality test hypotheses (2 or 3 values)"},
      {"picard", "Picard hypotheses for a single function"},
      {"sphere", "Riemann-sphere coordinates of points"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "metric")
      sub->add_option("--points", flags.points, "Points file")->required();
    else
      sub->add_option("--config", flags.config, "JSON config")->required();
    sub->add_option("--out-dir", flags.out_dir, "Output directory");
    sub->add_option("--seed", flags.seed, "Grid subsampler seed");
    sub->add_option("--threads", flags.threads, "Worker threads")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, flags, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kConfigError;
}

}  // namespace bcx::cli
