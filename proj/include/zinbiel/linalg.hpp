#pragma once

// Exact dense linear algebra over ℚ and GF(p): reduced row echelon form,
// canonical subspaces, and the subspace lattice operations built on them.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "zinbiel/errors.hpp"
#include "zinbiel/field.hpp"

namespace zinbiel {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Row vector. Vectors are rows throughout so that subspace bases stack.
template <class S>
using Vector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

template <class S>
Matrix<S> zero_matrix(const FieldSpec& f, Index rows, Index cols) {
  return Matrix<S>::Constant(rows, cols, zero<S>(f));
}

template <class S>
Vector<S> zero_vector(const FieldSpec& f, Index n) {
  return Vector<S>::Constant(n, zero<S>(f));
}

template <class S>
Vector<S> unit_vector(const FieldSpec& f, Index n, Index i) {
  Vector<S> v = zero_vector<S>(f, n);
  v(i) = one<S>(f);
  return v;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (!ScalarTraits<S>::is_zero(m(r, c))) return false;
  return true;
}

namespace detail {

/// Ensures all entries belong to one field and rebinds unbound GF(p) literals.
/// Returns the detected modulus (0 for ℚ, or for GF(p) matrices holding only
/// unbound literals).
template <class S>
std::uint32_t unify_field(Matrix<S>& m) {
  if constexpr (std::is_same_v<S, Modp>) {
    std::uint32_t p = 0;
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c) {
        const Modp& x = m(r, c);
        if (!x.bound()) continue;
        if (p == 0) {
          p = x.modulus();
        } else if (x.modulus() != p) {
          throw FieldMismatch("matrix mixes GF(" + std::to_string(p) + ") and GF(" +
                              std::to_string(x.modulus()) + ") entries");
        }
      }
    if (p != 0)
      for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
          if (!m(r, c).bound()) m(r, c) = Modp(m(r, c).value(), p);
    return p;
  } else {
    return 0;
  }
}

}  // namespace detail

template <class S>
struct RrefResult {
  Matrix<S> matrix;  // nonzero rows only
  Index rank = 0;
  std::vector<Index> pivots;
};

/// Unique reduced row echelon form of `m`, zero rows dropped.
/// Throws FieldMismatch if the entries do not share one field.
template <class S>
RrefResult<S> rref(Matrix<S> m) {
  detail::unify_field(m);
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = r;
    while (sel < rows && ScalarTraits<S>::is_zero(m(sel, c))) ++sel;
    if (sel == rows) continue;
    if (sel != r) m.row(sel).swap(m.row(r));
    const S inv = ScalarTraits<S>::inverse(m(r, c));
    for (Index k = c; k < cols; ++k) m(r, k) = m(r, k) * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || ScalarTraits<S>::is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (Index k = c; k < cols; ++k) m(i, k) = m(i, k) - f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {Matrix<S>(m.topRows(r)), r, std::move(pivots)};
}

/// Subspace of F^d held as the RREF of a row basis, so equality is equality of
/// basis matrices.
template <class S>
class Subspace {
 public:
  static Subspace zero(const FieldSpec& f, Index d) {
    require_field<S>(f);
    return Subspace(f, d, Matrix<S>(0, d), {});
  }

  static Subspace whole(const FieldSpec& f, Index d) {
    require_field<S>(f);
    Matrix<S> id = zero_matrix<S>(f, d, d);
    std::vector<Index> piv(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) {
      id(i, i) = one<S>(f);
      piv[static_cast<std::size_t>(i)] = i;
    }
    return Subspace(f, d, std::move(id), std::move(piv));
  }

  /// Row span of `rows` (any spanning set, possibly dependent or empty).
  static Subspace span(const FieldSpec& f, Index d, const Matrix<S>& rows) {
    require_field<S>(f);
    if (rows.cols() != d)
      throw DimensionMismatch("spanning set has " + std::to_string(rows.cols()) +
                              " columns, ambient dimension is " + std::to_string(d));
    Matrix<S> m = rows;
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c) ScalarTraits<S>::check_field(f, m(r, c));
    auto res = rref<S>(std::move(m));
    return Subspace(f, d, std::move(res.matrix), std::move(res.pivots));
  }

  static Subspace span(const FieldSpec& f, Index d, const std::vector<Vector<S>>& vectors) {
    Matrix<S> m = zero_matrix<S>(f, static_cast<Index>(vectors.size()), d);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].cols() != d) throw DimensionMismatch("vector length differs from ambient");
      m.row(static_cast<Index>(i)) = vectors[i];
    }
    return span(f, d, m);
  }

  /// Wraps a matrix already known to be in RREF (no checks beyond shape).
  static Subspace from_rref(const FieldSpec& f, Index d, Matrix<S> basis,
                            std::vector<Index> pivots) {
    return Subspace(f, d, std::move(basis), std::move(pivots));
  }

  const FieldSpec& field() const { return field_; }
  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Matrix<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_; }

  /// Remainder of `v` after elimination against the basis: zero exactly when
  /// `v` lies in the subspace, and zero at every pivot coordinate otherwise.
  Vector<S> reduce(const Vector<S>& v) const {
    if (v.cols() != ambient_) throw DimensionMismatch("vector length differs from ambient");
    Vector<S> w = v;
    for (Index r = 0; r < dim(); ++r) {
      const Index c = pivots_[static_cast<std::size_t>(r)];
      if (ScalarTraits<S>::is_zero(w(c))) continue;
      const S f = w(c);
      w -= f * basis_.row(r);
    }
    return w;
  }

  bool contains(const Vector<S>& v) const { return zinbiel::is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    check_compatible(other);
    if (other.dim() > dim()) return false;
    for (Index r = 0; r < other.dim(); ++r)
      if (!contains(Vector<S>(other.basis_.row(r)))) return false;
    return true;
  }

  void check_compatible(const Subspace& other) const {
    if (!(field_ == other.field_))
      throw FieldMismatch("subspaces over " + field_.to_string() + " and " +
                          other.field_.to_string());
    if (ambient_ != other.ambient_)
      throw DimensionMismatch("subspaces of F^" + std::to_string(ambient_) + " and F^" +
                              std::to_string(other.ambient_));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ &&
           a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(const FieldSpec& f, Index d, Matrix<S> basis, std::vector<Index> pivots)
      : field_(f), ambient_(d), basis_(std::move(basis)), pivots_(std::move(pivots)) {
    if (basis_.cols() != d) basis_.resize(basis_.rows(), d);
  }

  FieldSpec field_;
  Index ambient_ = 0;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

/// Smallest subspace containing both.
template <class S>
Subspace<S> sum(const Subspace<S>& u, const Subspace<S>& v) {
  u.check_compatible(v);
  if (v.is_zero() || u.is_whole()) return u;
  if (u.is_zero() || v.is_whole()) return v;
  Matrix<S> stacked(u.dim() + v.dim(), u.ambient_dim());
  stacked << u.basis(), v.basis();
  return Subspace<S>::span(u.field(), u.ambient_dim(), stacked);
}

/// Largest subspace contained in both (Zassenhaus: row-reduce [[U U];[V 0]];
/// rows whose left half vanishes span U∩V on the right).
template <class S>
Subspace<S> intersect(const Subspace<S>& u, const Subspace<S>& v) {
  u.check_compatible(v);
  const Index d = u.ambient_dim();
  if (u.is_zero() || v.is_whole()) return u;
  if (v.is_zero() || u.is_whole()) return v;
  Matrix<S> z = zero_matrix<S>(u.field(), u.dim() + v.dim(), 2 * d);
  z.topLeftCorner(u.dim(), d) = u.basis();
  z.topRightCorner(u.dim(), d) = u.basis();
  z.bottomLeftCorner(v.dim(), d) = v.basis();
  auto red = rref<S>(std::move(z));
  std::vector<Vector<S>> rows;
  for (Index r = 0; r < red.rank; ++r)
    if (red.pivots[static_cast<std::size_t>(r)] >= d) rows.emplace_back(red.matrix.row(r).tail(d));
  return Subspace<S>::span(u.field(), d, rows);
}

template <class S>
bool contains(const Subspace<S>& u, const Subspace<S>& v) {
  return u.contains(v);
}

template <class S>
bool contains(const Subspace<S>& u, const Vector<S>& v) {
  return u.contains(v);
}

/// Largest ambient dimension enumerate_subspaces accepts.
inline constexpr Index kMaxEnumerationDim = 6;

/// Visits every subspace of GF(p)^d of dimension `k` (all dimensions when `k`
/// is empty) exactly once. Order: dimension, then pivot columns
/// lexicographically, then free entries lexicographically (row-major, last
/// entry fastest). The visitor returns false to stop early.
template <class S>
void for_each_subspace(const FieldSpec& f, Index d, std::optional<Index> k,
                       const std::function<bool(const Subspace<S>&)>& visit) {
  if (!f.is_finite()) throw UnsupportedOracle("subspace enumeration needs a finite field");
  require_field<S>(f);
  if (d < 0 || d > kMaxEnumerationDim)
    throw UnsupportedOracle("subspace enumeration limited to ambient dimension <= " +
                            std::to_string(kMaxEnumerationDim));
  const Index lo = k ? *k : 0;
  const Index hi = k ? *k : d;
  if (lo < 0 || hi > d) return;
  const std::uint32_t q = f.p;

  for (Index dim = lo; dim <= hi; ++dim) {
    // pivot sets in lexicographic order
    std::vector<Index> piv(static_cast<std::size_t>(dim));
    for (Index i = 0; i < dim; ++i) piv[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<std::pair<Index, Index>> free;
      std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
      for (Index c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
      for (Index r = 0; r < dim; ++r)
        for (Index c = piv[static_cast<std::size_t>(r)] + 1; c < d; ++c)
          if (!is_pivot[static_cast<std::size_t>(c)]) free.emplace_back(r, c);

      std::vector<std::uint32_t> digits(free.size(), 0);
      while (true) {
        Matrix<S> b = zero_matrix<S>(f, dim, d);
        for (Index r = 0; r < dim; ++r) b(r, piv[static_cast<std::size_t>(r)]) = one<S>(f);
        for (std::size_t t = 0; t < free.size(); ++t)
          b(free[t].first, free[t].second) = ScalarTraits<S>::from_int(f, digits[t]);
        if (!visit(Subspace<S>::from_rref(f, d, std::move(b), piv))) return;

        std::size_t pos = digits.size();
        while (pos > 0 && ++digits[pos - 1] == q) digits[--pos] = 0;
        if (pos == 0) break;
      }

      // next combination
      Index i = dim - 1;
      while (i >= 0 && piv[static_cast<std::size_t>(i)] == d - dim + i) --i;
      if (i < 0) break;
      ++piv[static_cast<std::size_t>(i)];
      for (Index j = i + 1; j < dim; ++j)
        piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

template <class S>
std::vector<Subspace<S>> enumerate_subspaces(const FieldSpec& f, Index d,
                                             std::optional<Index> k = std::nullopt) {
  std::vector<Subspace<S>> out;
  for_each_subspace<S>(f, d, k, [&](const Subspace<S>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace zinbiel
