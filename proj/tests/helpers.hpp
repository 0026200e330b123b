#pragma once

// Shared fixtures and test-only oracles.

#include <random>
#include <vector>

#include "zinbiel/algebra.hpp"

namespace zinbiel::testing {

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec GF(std::uint32_t p) { return FieldSpec::prime(p); }

template <class S>
S lit(const FieldSpec& f, long long v) {
  return ScalarTraits<S>::from_int(f, v);
}

/// Two-dimensional algebra with e₁∘e₁ = e₂ and every other product zero.
template <class S>
Algebra<S> nil2(const FieldSpec& f) {
  Algebra<S> a(f, 2, "nil2");
  a.set(0, 0, 1, one<S>(f));
  return a;
}

/// One-dimensional algebra with e∘e = e.
template <class S>
Algebra<S> idempotent1(const FieldSpec& f) {
  Algebra<S> a(f, 1, "idem1");
  a.set(0, 0, 0, one<S>(f));
  return a;
}

template <class S>
Vector<S> vec(const FieldSpec& f, std::initializer_list<long long> xs) {
  Vector<S> v = zero_vector<S>(f, static_cast<Index>(xs.size()));
  Index i = 0;
  for (long long x : xs) v(i++) = lit<S>(f, x);
  return v;
}

template <class S>
Subspace<S> span_of(const FieldSpec& f, Index d, std::vector<Vector<S>> vs) {
  return Subspace<S>::span(f, d, vs);
}

template <class S>
S random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
  if constexpr (std::is_same_v<S, Rational>) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    return Rational(num(rng)) / Rational(den(rng));
  } else {
    std::uniform_int_distribution<std::int64_t> d(0, f.p - 1);
    return Modp(d(rng), f.p);
  }
}

template <class S>
Vector<S> random_vector(std::mt19937_64& rng, const FieldSpec& f, Index n) {
  Vector<S> v = zero_vector<S>(f, n);
  for (Index i = 0; i < n; ++i) v(i) = random_scalar<S>(rng, f);
  return v;
}

template <class S>
Matrix<S> random_matrix(std::mt19937_64& rng, const FieldSpec& f, Index r, Index c) {
  Matrix<S> m = zero_matrix<S>(f, r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = random_scalar<S>(rng, f);
  return m;
}

/// Random subspace of F^d of dimension at most `max_rows`.
template <class S>
Subspace<S> random_subspace(std::mt19937_64& rng, const FieldSpec& f, Index d, Index max_rows) {
  std::uniform_int_distribution<Index> rows(0, max_rows);
  return Subspace<S>::span(f, d, random_matrix<S>(rng, f, rows(rng), d));
}

/// Gaussian binomial [d choose k]_q by its product formula.
inline std::uint64_t gaussian_binomial(int d, int k, std::uint64_t q) {
  if (k < 0 || k > d) return 0;
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (int t = 0; t < d - i; ++t) a *= q;
    for (int t = 0; t < i + 1; ++t) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace zinbiel::testing
