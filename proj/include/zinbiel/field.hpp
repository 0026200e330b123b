#pragma once

// Exact scalar fields: the rationals (GMP-backed) and prime fields GF(p) with
// a runtime modulus. Both are usable as Eigen scalars.

#include <cstdint>
#include <ostream>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "zinbiel/errors.hpp"

namespace zinbiel {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

bool is_prime(std::uint64_t n);

/// Which base field an algebra lives over.
struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;  // nonzero iff kind == prime_field

  static FieldSpec rationals() { return {}; }
  /// Throws PreconditionError unless 2 <= p < 2^31 and p is prime.
  static FieldSpec prime(std::uint64_t p);

  bool is_finite() const { return kind == Kind::prime_field; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

std::ostream& operator<<(std::ostream& os, const FieldSpec& f);

/// Element of GF(p), p carried at runtime.
///
/// A default-constructed or int-constructed value is an "unbound literal"
/// (modulus 0). It adopts the modulus of whatever bound value it meets, which
/// is what lets Eigen build Scalar(0) and Scalar(1) internally. Combining two
/// bound values with different moduli throws FieldMismatch.
class Modp {
 public:
  Modp() = default;
  Modp(int literal) : raw_(literal) {}  // NOLINT(google-explicit-constructor)
  Modp(std::int64_t value, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  /// Residue in [0,p); for unbound literals the literal itself.
  std::int64_t value() const { return raw_; }

  Modp inverse() const;

  Modp& operator+=(const Modp& o);
  Modp& operator-=(const Modp& o);
  Modp& operator*=(const Modp& o);
  Modp& operator/=(const Modp& o) { return *this *= o.inverse(); }

  friend Modp operator+(Modp a, const Modp& b) { return a += b; }
  friend Modp operator-(Modp a, const Modp& b) { return a -= b; }
  friend Modp operator*(Modp a, const Modp& b) { return a *= b; }
  friend Modp operator/(Modp a, const Modp& b) { return a /= b; }
  Modp operator-() const;
  Modp operator+() const { return *this; }

  friend bool operator==(const Modp& a, const Modp& b);
  friend bool operator!=(const Modp& a, const Modp& b) { return !(a == b); }

 private:
  static std::uint32_t common_modulus(const Modp& a, const Modp& b);
  static std::int64_t reduce(std::int64_t v, std::uint32_t p);

  std::int64_t raw_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Modp& x);

/// Per-scalar glue: construction from integers in a given field, field checks,
/// and textual form (the same literal syntax the JSON format uses).
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool accepts(const FieldSpec& f) { return f.kind == FieldSpec::Kind::rationals; }
  static Rational from_int(const FieldSpec&, long long v) { return Rational(v); }
  static Rational from_big(const FieldSpec&, const BigInt& v) { return Rational(v); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational inverse(const Rational& x);
  static void check_field(const FieldSpec& f, const Rational&);
  static std::string to_string(const Rational& x);
};

template <>
struct ScalarTraits<Modp> {
  static bool accepts(const FieldSpec& f) { return f.kind == FieldSpec::Kind::prime_field; }
  static Modp from_int(const FieldSpec& f, long long v) { return Modp(v, f.p); }
  static Modp from_big(const FieldSpec& f, const BigInt& v);
  static bool is_zero(const Modp& x) { return x.value() == 0; }
  static Modp inverse(const Modp& x) { return x.inverse(); }
  static void check_field(const FieldSpec& f, const Modp& x);
  static std::string to_string(const Modp& x) { return std::to_string(x.value()); }
};

template <class S>
S zero(const FieldSpec& f) {
  return ScalarTraits<S>::from_int(f, 0);
}

template <class S>
S one(const FieldSpec& f) {
  return ScalarTraits<S>::from_int(f, 1);
}

template <class S>
void require_field(const FieldSpec& f) {
  if (!ScalarTraits<S>::accepts(f))
    throw FieldMismatch("scalar type does not match field " + f.to_string());
}

}  // namespace zinbiel

namespace Eigen {

template <>
struct NumTraits<zinbiel::Modp> {
  using Real = zinbiel::Modp;
  using NonInteger = zinbiel::Modp;
  using Literal = zinbiel::Modp;
  using Nested = zinbiel::Modp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static zinbiel::Modp epsilon() { return 0; }
  static zinbiel::Modp dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
