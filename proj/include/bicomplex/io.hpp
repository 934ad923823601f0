#pragma once

// JSON configs and reports, CSV exports, and the text points format.
//
// Complex numbers are [re, im] (a bare number is real); an extended component
// may be "inf". A bicomplex value is a number, [re, im] (an element of C(i1)),
// {"z1": c, "z2": c} or {"u1": c, "u2": c}. Parsers reject unknown keys and
// throw Error(ParseError) with a JSON-pointer-like path in the message.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bicomplex/analysis.hpp"
#include "bicomplex/domains.hpp"
#include "bicomplex/extended.hpp"
#include "bicomplex/functions.hpp"

namespace bcx::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Parsing

/// Throws ParseError if `j` is not an object or has a key outside `allowed`.
void require_keys(const Json& j, std::initializer_list<std::string_view> allowed, const std::string& path);

Complexd complex_from_json(const Json& j, const std::string& path);
ExtendedComplexd extended_complex_from_json(const Json& j, const std::string& path);
ExtendedBicomplexd extended_from_json(const Json& j, const std::string& path);
/// As extended_from_json, but every component must be finite.
Bicomplexd bicomplex_from_json(const Json& j, const std::string& path);
Discus discus_from_json(const Json& j, const std::string& path);
IndexWindow window_from_json(const Json& j, const std::string& path);
ComplexRational rational_from_json(const Json& j, const std::string& path);
/// {"f1": r, "f2": r} or {"diagonal": r}.
BicomplexMeromorphic function_from_json(const Json& j, const std::string& path);
/// {"members": [...]}, {"template": {...}, "window"?} or {"builtin": name, "window"?}.
FamilySpec family_from_json(const Json& j, const std::string& path);

struct GridParams {
  double fraction = 0.9;
  int n = 8;
  ExhaustionOptions options;
};

GridParams grid_from_json(const Json& j, const std::string& path);

/// Parses a whole document; syntax errors report line and column.
Json parse_document(std::string_view text);

/// One point per line: `label u1 u2`, each component either `re im` or
/// `inf`. Blank lines and lines starting with '#' are skipped.
struct LabeledPoint {
  std::string label;
  ExtendedBicomplexd value;
};

std::vector<LabeledPoint> parse_points(std::string_view text);

// ---------------------------------------------------------------------------
// Emitting

Json to_json(const Complexd& z);
Json to_json(const ExtendedComplexd& u);
Json to_json(const ExtendedBicomplexd& w);
Json to_json(const Bicomplexd& w);
Json to_json(const Discus& d);
Json to_json(const ConvergenceReport& r);
Json to_json(const EquicontinuityReport& r);
Json to_json(const CrosscheckReport& r);
Json to_json(const FNTReport& r);
Json to_json(const PicardReport& r);

/// Real number, with non-finite values as the strings "inf", "-inf", "nan".
Json number(double x);

/// Deterministic text: sorted keys, two-space indent, 17 significant digits.
std::string dump(const Json& j);

/// {"schema_version", "command", "result"}.
Json make_report(std::string_view command, Json result);

/// Structural check of an emitted report. Throws ParseError.
void validate_report(const Json& report);

/// %.6g, for human-readable summaries.
std::string short_number(double x);

// ---------------------------------------------------------------------------
// CSV (RFC 4180)

std::string csv_field(std::string_view s);
std::string csv_number(double x);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace bcx::io
