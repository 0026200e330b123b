#include "zinbiel/field.hpp"

#include <sstream>

namespace zinbiel {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31))
    throw PreconditionError("modulus " + std::to_string(p) + " outside [2, 2^31)");
  if (!is_prime(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{Kind::prime_field, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::to_string() const {
  return is_finite() ? "GF(" + std::to_string(p) + ")" : "Q";
}

std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.to_string(); }

// ---------------------------------------------------------------- Modp

std::int64_t Modp::reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

Modp::Modp(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p == 0) throw PreconditionError("GF(p) element needs a modulus");
  raw_ = reduce(value, p);
}

std::uint32_t Modp::common_modulus(const Modp& a, const Modp& b) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
    throw FieldMismatch("GF(" + std::to_string(a.p_) + ") and GF(" + std::to_string(b.p_) +
                        ") elements combined");
  return a.p_ != 0 ? a.p_ : b.p_;
}

Modp& Modp::operator+=(const Modp& o) {
  p_ = common_modulus(*this, o);
  raw_ = p_ ? reduce(raw_ + o.raw_, p_) : raw_ + o.raw_;
  return *this;
}

Modp& Modp::operator-=(const Modp& o) {
  p_ = common_modulus(*this, o);
  raw_ = p_ ? reduce(raw_ - o.raw_, p_) : raw_ - o.raw_;
  return *this;
}

Modp& Modp::operator*=(const Modp& o) {
  p_ = common_modulus(*this, o);
  if (p_) {
    // operands reduced below 2^31, so the product fits in 62 bits
    raw_ = reduce(reduce(raw_, p_) * reduce(o.raw_, p_), p_);
  } else {
    raw_ *= o.raw_;
  }
  return *this;
}

Modp Modp::operator-() const {
  Modp r = *this;
  r.raw_ = p_ ? reduce(-raw_, p_) : -raw_;
  return r;
}

Modp Modp::inverse() const {
  if (p_ == 0) {
    if (raw_ == 1 || raw_ == -1) return *this;
    throw PreconditionError("cannot invert an unbound GF(p) literal");
  }
  if (raw_ == 0) throw PreconditionError("division by zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = p_, new_r = raw_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return Modp(t, p_);
}

bool operator==(const Modp& a, const Modp& b) {
  std::uint32_t p = Modp::common_modulus(a, b);
  if (p == 0) return a.raw_ == b.raw_;
  return Modp::reduce(a.raw_, p) == Modp::reduce(b.raw_, p);
}

std::ostream& operator<<(std::ostream& os, const Modp& x) { return os << x.value(); }

// ---------------------------------------------------------------- traits

Rational ScalarTraits<Rational>::inverse(const Rational& x) {
  if (x == 0) throw PreconditionError("division by zero in Q");
  return Rational(1) / x;
}

void ScalarTraits<Rational>::check_field(const FieldSpec& f, const Rational&) {
  if (!accepts(f)) throw FieldMismatch("rational scalar used over " + f.to_string());
}

std::string ScalarTraits<Rational>::to_string(const Rational& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << '/' << denominator(x);
  return os.str();
}

Modp ScalarTraits<Modp>::from_big(const FieldSpec& f, const BigInt& v) {
  BigInt r = v % f.p;
  if (r < 0) r += f.p;
  return Modp(r.convert_to<std::int64_t>(), f.p);
}

void ScalarTraits<Modp>::check_field(const FieldSpec& f, const Modp& x) {
  if (!accepts(f)) throw FieldMismatch("GF(p) scalar used over " + f.to_string());
  if (x.bound() && x.modulus() != f.p)
    throw FieldMismatch("GF(" + std::to_string(x.modulus()) + ") scalar used over " +
                        f.to_string());
}

}  // namespace zinbiel
