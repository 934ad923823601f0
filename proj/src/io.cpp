#include "bicomplex/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "bicomplex/error.hpp"

namespace bcx::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(Errc::ParseError, (path.empty() ? std::string("<root>") : path) + ": " + msg);
}

double real_from_json(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(path, "number is not finite");
  return x;
}

double positive_from_json(const Json& j, const std::string& path) {
  const double x = real_from_json(j, path);
  if (!(x > 0.0)) fail(path, "expected a positive number");
  return x;
}

int int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

bool bool_from_json(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

ComplexPolynomiald polynomial_from_json(const Json& j, const std::string& path) {
  std::vector<Complexd> c;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) c.push_back(complex_from_json(j[i], child(path, i)));
  return ComplexPolynomiald(c);
}

CoefficientTemplate coefficient_template_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) return {complex_from_json(j, path), {}, {}};
  require_keys(j, {"c0", "c1", "c2"}, path);
  CoefficientTemplate t{};
  if (j.contains("c0")) t.c0 = complex_from_json(j["c0"], child(path, "c0"));
  if (j.contains("c1")) t.c1 = complex_from_json(j["c1"], child(path, "c1"));
  if (j.contains("c2")) t.c2 = complex_from_json(j["c2"], child(path, "c2"));
  return t;
}

RationalTemplate rational_template_from_json(const Json& j, const std::string& path) {
  require_keys(j, {"num", "den"}, path);
  if (!j.contains("num")) fail(path, "missing key \"num\"");
  RationalTemplate t;
  const auto& num = array_at(j["num"], child(path, "num"));
  for (std::size_t i = 0; i < num.size(); ++i)
    t.num.push_back(coefficient_template_from_json(num[i], child(child(path, "num"), i)));
  if (j.contains("den")) {
    const auto& den = array_at(j["den"], child(path, "den"));
    for (std::size_t i = 0; i < den.size(); ++i)
      t.den.push_back(coefficient_template_from_json(den[i], child(child(path, "den"), i)));
  }
  return t;
}

std::string format_g(double x, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

void dump_to(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(k).dump() + ": ";
        dump_to(v, out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short arrays of scalars stay on one line.
      const bool flat = j.size() <= 8 && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      out += flat ? "[" : "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += flat ? ", " : ",\n";
        if (!flat) out += inner;
        dump_to(j[i], out, indent + 1);
      }
      out += flat ? "]" : "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_g(x, 17) : Json(std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf")).dump();
      return;
    }
    default:
      out += j.dump();
  }
}

Json sup_table_json(const std::vector<SupEntry>& table) {
  Json rows = Json::array();
  for (const auto& e : table) rows.push_back(Json::array({e.m, e.n, number(e.sup)}));
  return rows;
}

Json separations_json(const std::vector<SeparationCheck>& seps) {
  Json out = Json::array();
  for (const auto& s : seps) out.push_back({{"first", s.first}, {"second", s.second}, {"invertible", s.invertible}});
  return out;
}

Json omissions_json(const std::vector<OmissionCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json roots = Json::array();
    for (const auto& r : c.roots_inside) roots.push_back(to_json(r));
    out.push_back({{"member", c.member},
                   {"component", static_cast<int>(c.component)},
                   {"value_label", c.value_label},
                   {"value", to_json(c.value)},
                   {"omitted", c.omitted},
                   {"nearest_root_distance", number(c.nearest_root_distance)},
                   {"roots_inside", roots},
                   {"identically", c.identically},
                   {"attained_at_infinity", c.attained_at_infinity}});
  }
  return out;
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"member", w->member},
          {"component", static_cast<int>(w->component)},
          {"value_label", w->value_label},
          {"root", to_json(w->root)},
          {"point", to_json(w->point)}};
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

bool parse_real_token(std::string_view tok, double& out) {
  const char* end = tok.data() + tok.size();
  const auto res = std::from_chars(tok.data(), end, out);
  return res.ec == std::errc() && res.ptr == end && std::isfinite(out);
}

}  // namespace

void require_keys(const Json& j, std::initializer_list<std::string_view> allowed, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : j.items())
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) fail(path, "unknown key \"" + k + "\"");
}

Complexd complex_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return {real_from_json(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) fail(path, "expected a number or [re, im]");
  return {real_from_json(j[0], child(path, 0)), real_from_json(j[1], child(path, 1))};
}

ExtendedComplexd extended_complex_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") fail(path, "the only string allowed here is \"inf\"");
    return ExtendedComplexd::infinity();
  }
  return complex_from_json(j, path);
}

ExtendedBicomplexd extended_from_json(const Json& j, const std::string& path) {
  if (j.is_number() || j.is_array()) return Bicomplexd(complex_from_json(j, path));
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") fail(path, "the only string allowed here is \"inf\"");
    return ExtendedBicomplexd::infinity();
  }
  if (!j.is_object()) fail(path, "expected a bicomplex value");
  if (j.contains("u1") || j.contains("u2")) {
    require_keys(j, {"u1", "u2"}, path);
    if (!j.contains("u1") || !j.contains("u2")) fail(path, "both \"u1\" and \"u2\" are required");
    return {extended_complex_from_json(j["u1"], child(path, "u1")),
            extended_complex_from_json(j["u2"], child(path, "u2"))};
  }
  require_keys(j, {"z1", "z2"}, path);
  const Complexd z1 = j.contains("z1") ? complex_from_json(j["z1"], child(path, "z1")) : Complexd{};
  const Complexd z2 = j.contains("z2") ? complex_from_json(j["z2"], child(path, "z2")) : Complexd{};
  return Bicomplexd::from_cartesian(z1, z2);
}

Bicomplexd bicomplex_from_json(const Json& j, const std::string& path) {
  const ExtendedBicomplexd w = extended_from_json(j, path);
  if (!w.is_finite()) fail(path, "value must be finite");
  return w.to_bicomplex();
}

Discus discus_from_json(const Json& j, const std::string& path) {
  require_keys(j, {"center", "r1", "r2", "radius", "closed", "lie_ball"}, path);
  const bool closed = j.contains("closed") && bool_from_json(j["closed"], child(path, "closed"));
  if (j.contains("lie_ball")) {
    if (j.size() != (j.contains("closed") ? 2u : 1u)) fail(path, "\"lie_ball\" only combines with \"closed\"");
    return lie_ball(positive_from_json(j["lie_ball"], child(path, "lie_ball")), closed);
  }
  const Bicomplexd center = j.contains("center") ? bicomplex_from_json(j["center"], child(path, "center")) : Bicomplexd{};
  double r1 = 0.0;
  double r2 = 0.0;
  if (j.contains("radius")) {
    if (j.contains("r1") || j.contains("r2")) fail(path, "give either \"radius\" or \"r1\"/\"r2\"");
    r1 = r2 = positive_from_json(j["radius"], child(path, "radius"));
  } else {
    if (!j.contains("r1") || !j.contains("r2")) fail(path, "missing \"r1\"/\"r2\" or \"radius\"");
    r1 = positive_from_json(j["r1"], child(path, "r1"));
    r2 = positive_from_json(j["r2"], child(path, "r2"));
  }
  return Discus(center, r1, r2, closed);
}

IndexWindow window_from_json(const Json& j, const std::string& path) {
  require_keys(j, {"from", "to"}, path);
  if (!j.contains("from") || !j.contains("to")) fail(path, "window needs \"from\" and \"to\"");
  IndexWindow w{int_from_json(j["from"], child(path, "from")), int_from_json(j["to"], child(path, "to"))};
  if (w.from > w.to) fail(path, "window has from > to");
  return w;
}

ComplexRational rational_from_json(const Json& j, const std::string& path) {
  require_keys(j, {"num", "den"}, path);
  if (!j.contains("num")) fail(path, "missing key \"num\"");
  const ComplexPolynomiald num = polynomial_from_json(j["num"], child(path, "num"));
  ComplexPolynomiald den{Complexd(1, 0)};
  if (j.contains("den")) den = polynomial_from_json(j["den"], child(path, "den"));
  if (den.is_zero()) fail(child(path, "den"), "denominator is the zero polynomial");
  return ComplexRational(num, den);
}

BicomplexMeromorphic function_from_json(const Json& j, const std::string& path) {
  require_keys(j, {"f1", "f2", "diagonal"}, path);
  if (j.contains("diagonal")) {
    if (j.size() != 1) fail(path, "\"diagonal\" excludes \"f1\"/\"f2\"");
    return BicomplexMeromorphic::diagonal(rational_from_json(j["diagonal"], child(path, "diagonal")));
  }
  if (!j.contains("f1") || !j.contains("f2")) fail(path, "function needs \"f1\" and \"f2\", or \"diagonal\"");
  return {rational_from_json(j["f1"], child(path, "f1")), rational_from_json(j["f2"], child(path, "f2"))};
}

FamilySpec family_from_json(const Json& j, const std::string& path) {
  require_keys(j, {"members", "template", "builtin", "window"}, path);
  const int kinds = int(j.contains("members")) + int(j.contains("template")) + int(j.contains("builtin"));
  if (kinds != 1) fail(path, "family needs exactly one of \"members\", \"template\", \"builtin\"");
  std::optional<IndexWindow> window;
  if (j.contains("window")) window = window_from_json(j["window"], child(path, "window"));

  if (j.contains("members")) {
    if (window) fail(path, "an explicit member list takes no window");
    const auto& list = array_at(j["members"], child(path, "members"));
    if (list.empty()) fail(child(path, "members"), "member list is empty");
    std::vector<BicomplexMeromorphic> fs;
    for (std::size_t i = 0; i < list.size(); ++i) fs.push_back(function_from_json(list[i], child(child(path, "members"), i)));
    return FamilySpec::explicit_list(std::move(fs));
  }
  if (j.contains("builtin")) {
    const Json& b = j["builtin"];
    if (!b.is_string()) fail(child(path, "builtin"), "expected \"n_over_w\" or \"w_pow_n\"");
    const std::string name = b.get<std::string>();
    if (name == "n_over_w") return FamilySpec::builtin(Builtin::NOverW, window);
    if (name == "w_pow_n") {
      if (window && window->from < 0) fail(child(path, "window"), "w_pow_n requires nonnegative indices");
      return FamilySpec::builtin(Builtin::WPowN, window);
    }
    fail(child(path, "builtin"), "unknown builtin \"" + name + "\"");
  }
  const Json& t = j["template"];
  const std::string tp = child(path, "template");
  require_keys(t, {"f1", "f2", "diagonal"}, tp);
  FunctionTemplate ft;
  if (t.contains("diagonal")) {
    if (t.size() != 1) fail(tp, "\"diagonal\" excludes \"f1\"/\"f2\"");
    ft.f1 = ft.f2 = rational_template_from_json(t["diagonal"], child(tp, "diagonal"));
  } else {
    if (!t.contains("f1") || !t.contains("f2")) fail(tp, "template needs \"f1\" and \"f2\", or \"diagonal\"");
    ft.f1 = rational_template_from_json(t["f1"], child(tp, "f1"));
    ft.f2 = rational_template_from_json(t["f2"], child(tp, "f2"));
  }
  return FamilySpec::indexed(std::move(ft), window);
}

GridParams grid_from_json(const Json& j, const std::string& path) {
  require_keys(j, {"fraction", "n", "center_rings", "max_points"}, path);
  GridParams g;
  if (j.contains("fraction")) {
    g.fraction = real_from_json(j["fraction"], child(path, "fraction"));
    if (!(g.fraction > 0.0 && g.fraction < 1.0)) fail(child(path, "fraction"), "fraction must lie in (0, 1)");
  }
  if (j.contains("n")) {
    g.n = int_from_json(j["n"], child(path, "n"));
    if (g.n < 2) fail(child(path, "n"), "n must be >= 2");
  }
  if (j.contains("center_rings")) {
    g.options.center_rings = int_from_json(j["center_rings"], child(path, "center_rings"));
    if (g.options.center_rings < 0) fail(child(path, "center_rings"), "must be >= 0");
  }
  if (j.contains("max_points")) {
    const int m = int_from_json(j["max_points"], child(path, "max_points"));
    if (m < 1) fail(child(path, "max_points"), "must be >= 1");
    g.options.max_points = static_cast<std::size_t>(m);
  }
  return g;
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                      ": malformed JSON");
  }
}

std::vector<LabeledPoint> parse_points(std::string_view text) {
  std::vector<LabeledPoint> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;

    auto bad = [&](const std::string& msg) {
      throw Error(Errc::ParseError, "line " + std::to_string(number) + ": " + msg);
    };
    std::size_t at = 1;
    auto component = [&](const char* name) -> ExtendedComplexd {
      if (at < tok.size() && tok[at] == "inf") {
        ++at;
        return ExtendedComplexd::infinity();
      }
      double re = 0.0;
      double im = 0.0;
      if (at >= tok.size()) bad(std::string("missing component ") + name);
      if (at + 1 >= tok.size()) bad(std::string("component ") + name + " needs `re im` or `inf`");
      if (!parse_real_token(tok[at], re) || !parse_real_token(tok[at + 1], im))
        bad(std::string("malformed component ") + name + ": `" + tok[at] + " " + tok[at + 1] + "`");
      at += 2;
      return Complexd(re, im);
    };
    LabeledPoint p{tok[0], {}};
    const ExtendedComplexd u1 = component("u1");
    const ExtendedComplexd u2 = component("u2");
    if (at != tok.size()) bad("unexpected trailing token `" + tok[at] + "`");
    p.value = ExtendedBicomplexd(u1, u2);
    out.push_back(std::move(p));
  }
  return out;
}

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json to_json(const Complexd& z) { return Json::array({number(z.real()), number(z.imag())}); }

Json to_json(const ExtendedComplexd& u) { return u.is_infinite() ? Json("inf") : to_json(u.value()); }

Json to_json(const ExtendedBicomplexd& w) { return {{"u1", to_json(w.u1())}, {"u2", to_json(w.u2())}}; }

Json to_json(const Bicomplexd& w) { return to_json(ExtendedBicomplexd(w)); }

Json to_json(const Discus& d) {
  return {{"center", to_json(d.center)}, {"r1", number(d.r1)}, {"r2", number(d.r2)}, {"closed", d.closed}};
}

Json to_json(const ConvergenceReport& r) {
  Json j{{"grid", {{"points", r.grid_points}, {"delta", number(r.grid_delta)}}},
         {"window", {{"from", r.window.from}, {"to", r.window.to}}},
         {"eps", number(r.eps)},
         {"sup_table", sup_table_json(r.sup_table)},
         {"tail_from", r.tail_from},
         {"cauchy_epsilon_achieved", number(r.cauchy_epsilon_achieved)},
         {"cauchy_passed", r.cauchy_passed},
         {"limit_class", std::string(to_string(r.limit_class))}};
  j["first_index_below_eps"] = r.first_index_below_eps ? Json(*r.first_index_below_eps) : Json(nullptr);
  if (r.limit_class == LimitClass::WeakInfinityValued)
    j["limit_note"] =
        "one component tends to infinity at every sample: the limit takes values in the weak infinity set; "
        "whether it is a constant weak-infinity value depends on the other component, which is not tested";
  if (r.euclidean_check) {
    const auto& e = *r.euclidean_check;
    j["euclidean_check"] = {{"bound", number(e.bound)},
                            {"bispherical_sup", number(e.bispherical_sup)},
                            {"euclidean_sup", number(e.euclidean_sup)},
                            {"pointwise_bound", number(e.pointwise_bound)},
                            {"uniform_bound", number(e.uniform_bound)}};
  } else {
    j["euclidean_check"] = nullptr;
  }
  return j;
}

Json to_json(const EquicontinuityReport& r) {
  Json modulus = Json::array();
  for (double m : r.modulus) modulus.push_back(number(m));
  Json deltas = Json::array();
  for (double d : r.deltas) deltas.push_back(number(d));
  return {{"deltas", deltas},
          {"modulus", modulus},
          {"pair_counts", r.pair_counts},
          {"verdict", std::string(to_string(r.verdict))}};
}

Json to_json(const CrosscheckReport& r) {
  return {{"joint", to_json(r.joint)}, {"first", to_json(r.first)}, {"second", to_json(r.second)}, {"coherent", r.coherent}};
}

Json to_json(const FNTReport& r) {
  return {{"separations", separations_json(r.separations)},
          {"checks", omissions_json(r.omitted)},
          {"conclusion", std::string(to_string(r.conclusion))},
          {"witness", witness_json(r.witness)}};
}

Json to_json(const PicardReport& r) {
  return {{"separations", separations_json(r.separations)},
          {"checks", omissions_json(r.omitted)},
          {"verdict", std::string(to_string(r.verdict))},
          {"components_constant", r.components_constant},
          {"witness", witness_json(r.witness)}};
}

std::string dump(const Json& j) {
  std::string out;
  dump_to(j, out, 0);
  out += '\n';
  return out;
}

Json make_report(std::string_view command, Json result) {
  return {{"schema_version", kSchemaVersion}, {"command", std::string(command)}, {"result", std::move(result)}};
}

void validate_report(const Json& report) {
  require_keys(report, {"schema_version", "command", "result"}, "");
  if (!report.contains("schema_version") || !report["schema_version"].is_number_integer() ||
      report["schema_version"].get<int>() != kSchemaVersion)
    fail("/schema_version", "expected " + std::to_string(kSchemaVersion));
  if (!report.contains("command") || !report["command"].is_string()) fail("/command", "expected a string");
  if (!report.contains("result") || !report["result"].is_object()) fail("/result", "expected an object");

  static const std::map<std::string, std::vector<std::string>> required{
      {"metric", {"points", "pairs"}},
      {"eval", {"values"}},
      {"poles", {"poles", "holomorphic"}},
      {"converge", {"sup_table", "cauchy_passed", "limit_class", "window", "grid"}},
      {"montel", {"equicontinuity"}},
      {"fnt", {"separations", "checks", "conclusion", "witness"}},
      {"picard", {"separations", "checks", "verdict", "components_constant", "witness"}},
      {"sphere", {"points"}},
  };
  const std::string command = report["command"].get<std::string>();
  const auto it = required.find(command);
  if (it == required.end()) fail("/command", "unknown command \"" + command + "\"");
  for (const auto& key : it->second)
    if (!report["result"].contains(key)) fail("/result", "missing key \"" + key + "\"");
}

std::string short_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return format_g(x, 6);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return format_g(x, 17);
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_field(fields[i]);
  }
  out << "\r\n";
}

}  // namespace bcx::io
