#include "zinbiel/io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <tuple>

namespace zinbiel {

std::string to_string(ParseIssue issue) {
  switch (issue) {
    case ParseIssue::malformed_json: return "malformed-json";
    case ParseIssue::missing_key: return "missing-key";
    case ParseIssue::wrong_type: return "wrong-type";
    case ParseIssue::bad_field: return "bad-field";
    case ParseIssue::non_prime_modulus: return "non-prime-modulus";
    case ParseIssue::bad_dimension: return "bad-dimension";
    case ParseIssue::index_out_of_range: return "index-out-of-range";
    case ParseIssue::invalid_scalar: return "invalid-scalar";
    case ParseIssue::non_reduced_scalar: return "non-reduced-scalar";
    case ParseIssue::duplicate_entry: return "duplicate-entry";
    case ParseIssue::io_error: return "io-error";
  }
  return "unknown";
}

Json field_to_json(const FieldSpec& f) {
  if (!f.is_finite()) return "Q";
  Json j;
  j["p"] = f.p;
  return j;
}

FieldSpec field_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec::rationals();
    throw FormatError(ParseIssue::bad_field, "field must be \"Q\" or {\"p\": prime}");
  }
  if (!j.is_object() || !j.contains("p") || j.size() != 1)
    throw FormatError(ParseIssue::bad_field, "field must be \"Q\" or {\"p\": prime}");
  const Json& p = j["p"];
  if (!p.is_number_integer() || p.get<std::int64_t>() < 0)
    throw FormatError(ParseIssue::bad_field, "modulus must be a positive integer");
  try {
    return FieldSpec::prime(p.get<std::uint64_t>());
  } catch (const PreconditionError& e) {
    throw FormatError(ParseIssue::non_prime_modulus, e.what());
  }
}

Json scalar_to_json(const Rational& x) { return ScalarTraits<Rational>::to_string(x); }

Json scalar_to_json(const Modp& x) { return x.value(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string())
    throw FormatError(ParseIssue::invalid_scalar, "rational scalars are strings \"a\" or \"a/b\"");
  static const std::regex literal(R"((-?[0-9]+)(?:/([0-9]+))?)");
  const std::string s = j.get<std::string>();
  std::smatch m;
  if (!std::regex_match(s, m, literal))
    throw FormatError(ParseIssue::invalid_scalar, "\"" + s + "\" is not a rational literal");
  const BigInt num(m[1].str());
  const BigInt den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw FormatError(ParseIssue::invalid_scalar, "\"" + s + "\" has zero denominator");
  if (gcd(abs(num), den) != 1)
    throw FormatError(ParseIssue::non_reduced_scalar, "\"" + s + "\" is not in lowest terms");
  return Rational(num, den);
}

Modp modp_from_json(const Json& j, const FieldSpec& f) {
  if (!j.is_number_integer())
    throw FormatError(ParseIssue::invalid_scalar, "GF(p) scalars are integers");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v >= static_cast<std::int64_t>(f.p))
    throw FormatError(ParseIssue::non_reduced_scalar,
                      std::to_string(v) + " is not a residue in [0," + std::to_string(f.p) + ")");
  return Modp(v, f.p);
}

namespace {

template <class S>
Algebra<S> read_constants(const Json& j, const FieldSpec& f, Index d) {
  Algebra<S> a(f, d, j.contains("label") ? j["label"].get<std::string>() : std::string());
  std::set<std::tuple<Index, Index, Index>> seen;
  for (const Json& e : j["constants"]) {
    if (!e.is_object()) throw FormatError(ParseIssue::wrong_type, "constant entries are objects");
    for (const char* key : {"i", "j", "k", "v"})
      if (!e.contains(key))
        throw FormatError(ParseIssue::missing_key, std::string("constant entry lacks \"") + key + "\"");
    std::array<Index, 3> idx{};
    const char* names[3] = {"i", "j", "k"};
    for (int t = 0; t < 3; ++t) {
      const Json& x = e[names[t]];
      if (!x.is_number_integer())
        throw FormatError(ParseIssue::wrong_type, std::string("index \"") + names[t] + "\" must be an integer");
      const auto v = x.get<std::int64_t>();
      if (v < 0 || v >= d)
        throw FormatError(ParseIssue::index_out_of_range,
                          std::string(names[t]) + "=" + std::to_string(v) + " outside [0," +
                              std::to_string(d) + ")");
      idx[static_cast<std::size_t>(t)] = static_cast<Index>(v);
    }
    if (!seen.emplace(idx[0], idx[1], idx[2]).second)
      throw FormatError(ParseIssue::duplicate_entry,
                        "entry (" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                            std::to_string(idx[2]) + ") given twice");
    a.set(idx[0], idx[1], idx[2], scalar_from_json<S>(e["v"], f));
  }
  return a;
}

}  // namespace

AnyAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError(ParseIssue::wrong_type, "algebra file must hold an object");
  for (const char* key : {"field", "dim", "constants"})
    if (!j.contains(key)) throw FormatError(ParseIssue::missing_key, std::string("missing \"") + key + "\"");
  const FieldSpec f = field_from_json(j["field"]);
  const Json& dim = j["dim"];
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 0 || dim.get<std::int64_t>() > kMaxFileDim)
    throw FormatError(ParseIssue::bad_dimension,
                      "dim must be an integer in [0," + std::to_string(kMaxFileDim) + "]");
  if (!j["constants"].is_array()) throw FormatError(ParseIssue::wrong_type, "\"constants\" must be a list");
  if (j.contains("label") && !j["label"].is_string())
    throw FormatError(ParseIssue::wrong_type, "\"label\" must be a string");
  const auto d = static_cast<Index>(dim.get<std::int64_t>());
  if (f.is_finite()) return read_constants<Modp>(j, f, d);
  return read_constants<Rational>(j, f, d);
}

AnyAlgebra parse_algebra_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(ParseIssue::malformed_json, e.what());
  }
  return algebra_from_json(j);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(ParseIssue::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(ParseIssue::malformed_json, path.string() + ": " + e.what());
  }
}

AnyAlgebra parse_algebra_file(const std::filesystem::path& path) {
  return algebra_from_json(read_json_file(path));
}

std::string emit_algebra(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return emit_algebra(alg); }, a);
}

Json series_to_json(const SeriesReport& s) {
  Json j;
  j["lcs_dims"] = s.lcs_dims;
  j["derived_dims"] = s.derived_dims;
  j["nilpotent"] = s.nilpotency_index.has_value();
  j["nilpotency_index"] = s.nilpotency_index ? Json(*s.nilpotency_index) : Json(nullptr);
  j["solvable"] = s.solvability_index.has_value();
  j["solvability_index"] = s.solvability_index ? Json(*s.solvability_index) : Json(nullptr);
  return j;
}

}  // namespace zinbiel
