#pragma once

// JSON formats.
//
// Algebra file:
//   {"field": "Q" | {"p": <prime>}, "dim": d, "label": "...",
//    "constants": [{"i": 0, "j": 0, "k": 1, "v": <scalar>}, ...]}
// where c(i,j,k) is the e_k-coefficient of e_i∘e_j, omitted entries are zero,
// and a scalar is a string "a" or "a/b" in lowest terms over Q, or an integer
// in [0,p) over GF(p). "label" is optional.
//
// Certificate file (central flag):
//   {"field": ..., "dim": d, "chain": [<basis>, ...]}
// where each basis is a list of rows and each row a list of scalars.

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "zinbiel/structure.hpp"

namespace zinbiel {

using Json = nlohmann::ordered_json;

/// Largest dimension accepted from a file.
inline constexpr Index kMaxFileDim = 200;

using AnyAlgebra = std::variant<Algebra<Rational>, Algebra<Modp>>;

/// Distinct diagnostics for rejected input.
enum class ParseIssue {
  malformed_json,
  missing_key,
  wrong_type,
  bad_field,
  non_prime_modulus,
  bad_dimension,
  index_out_of_range,
  invalid_scalar,
  non_reduced_scalar,
  duplicate_entry,
  io_error,
};

std::string to_string(ParseIssue issue);

class FormatError : public ParseError {
 public:
  FormatError(ParseIssue issue, const std::string& what)
      : ParseError(to_string(issue) + ": " + what), issue_(issue) {}
  ParseIssue issue() const { return issue_; }

 private:
  ParseIssue issue_;
};

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json scalar_to_json(const Rational& x);
Json scalar_to_json(const Modp& x);
Rational rational_from_json(const Json& j);
Modp modp_from_json(const Json& j, const FieldSpec& f);

template <class S>
S scalar_from_json(const Json& j, const FieldSpec& f) {
  if constexpr (std::is_same_v<S, Rational>) {
    return rational_from_json(j);
  } else {
    return modp_from_json(j, f);
  }
}

template <class S>
Json vector_to_json(const Vector<S>& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.cols(); ++i) out.push_back(scalar_to_json(v(i)));
  return out;
}

template <class S>
Json subspace_to_json(const Subspace<S>& u) {
  Json rows = Json::array();
  for (Index r = 0; r < u.dim(); ++r) rows.push_back(vector_to_json<S>(u.basis().row(r)));
  return rows;
}

template <class S>
Subspace<S> subspace_from_json(const Json& j, const FieldSpec& f, Index d) {
  if (!j.is_array()) throw FormatError(ParseIssue::wrong_type, "basis must be a list of rows");
  Matrix<S> m = zero_matrix<S>(f, static_cast<Index>(j.size()), d);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<Index>(row.size()) != d)
      throw FormatError(ParseIssue::wrong_type, "basis row must list " + std::to_string(d) + " scalars");
    for (std::size_t c = 0; c < row.size(); ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) = scalar_from_json<S>(row[c], f);
  }
  return Subspace<S>::span(f, d, m);
}

template <class S>
Json algebra_to_json(const Algebra<S>& a) {
  Json j;
  j["field"] = field_to_json(a.field());
  j["dim"] = a.dim();
  if (!a.label().empty()) j["label"] = a.label();
  Json entries = Json::array();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index jj = 0; jj < a.dim(); ++jj)
      for (Index k = 0; k < a.dim(); ++k)
        if (!ScalarTraits<S>::is_zero(a(i, jj, k))) {
          Json e;
          e["i"] = i;
          e["j"] = jj;
          e["k"] = k;
          e["v"] = scalar_to_json(a(i, jj, k));
          entries.push_back(std::move(e));
        }
  j["constants"] = std::move(entries);
  return j;
}

AnyAlgebra algebra_from_json(const Json& j);
AnyAlgebra parse_algebra_text(const std::string& text);
AnyAlgebra parse_algebra_file(const std::filesystem::path& path);

/// Canonical text: two-space indented JSON followed by a newline.
std::string emit_algebra(const AnyAlgebra& a);

template <class S>
std::string emit_algebra(const Algebra<S>& a) {
  return algebra_to_json(a).dump(2) + "\n";
}

template <class S>
Json flag_to_json(const Algebra<S>& a, const CentralFlag<S>& f) {
  Json j;
  j["field"] = field_to_json(a.field());
  j["dim"] = a.dim();
  Json chain = Json::array();
  for (const auto& t : f.chain) chain.push_back(subspace_to_json(t));
  j["chain"] = std::move(chain);
  return j;
}

/// Reads a certificate for `a`; its field and dim must match the algebra.
template <class S>
CentralFlag<S> flag_from_json(const Algebra<S>& a, const Json& j) {
  if (!j.is_object()) throw FormatError(ParseIssue::wrong_type, "certificate must be an object");
  for (const char* key : {"field", "dim", "chain"})
    if (!j.contains(key)) throw FormatError(ParseIssue::missing_key, std::string("certificate lacks \"") + key + "\"");
  if (!(field_from_json(j["field"]) == a.field()))
    throw FormatError(ParseIssue::bad_field, "certificate field differs from the algebra's");
  if (!j["dim"].is_number_integer() || j["dim"].get<Index>() != a.dim())
    throw FormatError(ParseIssue::bad_dimension, "certificate dim differs from the algebra's");
  if (!j["chain"].is_array()) throw FormatError(ParseIssue::wrong_type, "\"chain\" must be a list");
  CentralFlag<S> f;
  for (const Json& t : j["chain"]) f.chain.push_back(subspace_from_json<S>(t, a.field(), a.dim()));
  return f;
}

template <class S>
Json violation_to_json(const Violation<S>& v) {
  Json j;
  j["i"] = v.i;
  j["j"] = v.j;
  j["k"] = v.k;
  j["lhs"] = vector_to_json(v.lhs);
  j["rhs"] = vector_to_json(v.rhs);
  return j;
}

Json series_to_json(const SeriesReport& s);

Json read_json_file(const std::filesystem::path& path);

}  // namespace zinbiel
