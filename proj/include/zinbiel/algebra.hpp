#pragma once

// Finite-dimensional algebras given by structure constants.
//
// Convention: c(i,j,k) is the e_k-coefficient of e_i∘e_j, and the bracket
// [x,y] of the Zinbiel identity is the product x∘y.

#include <string>
#include <utility>
#include <vector>

#include "zinbiel/linalg.hpp"

namespace zinbiel {

template <class S>
class Algebra {
 public:
  /// The zero algebra of dimension `dim` (all products vanish).
  Algebra(const FieldSpec& field, Index dim, std::string label = {})
      : field_(field), dim_(dim), label_(std::move(label)) {
    require_field<S>(field);
    if (dim < 0) throw PreconditionError("negative algebra dimension");
    left_.assign(static_cast<std::size_t>(dim), zero_matrix<S>(field, dim, dim));
  }

  const FieldSpec& field() const { return field_; }
  Index dim() const { return dim_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const S& operator()(Index i, Index j, Index k) const { return table(i)(j, k); }

  void set(Index i, Index j, Index k, const S& v) {
    check_index(i);
    check_index(j);
    check_index(k);
    ScalarTraits<S>::check_field(field_, v);
    left_[static_cast<std::size_t>(i)](j, k) = ScalarTraits<S>::is_zero(v) ? zero<S>(field_) : v;
  }

  /// d×d matrix whose row j is e_i∘e_j.
  const Matrix<S>& table(Index i) const { return left_[static_cast<std::size_t>(i)]; }

  Vector<S> basis_product(Index i, Index j) const { return table(i).row(j); }

  Subspace<S> whole() const { return Subspace<S>::whole(field_, dim_); }
  Subspace<S> zero_subspace() const { return Subspace<S>::zero(field_, dim_); }
  Vector<S> unit(Index i) const { return unit_vector<S>(field_, dim_, i); }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.left_ == b.left_;
  }

 private:
  void check_index(Index i) const {
    if (i < 0 || i >= dim_)
      throw DimensionMismatch("basis index " + std::to_string(i) + " outside [0," +
                              std::to_string(dim_) + ")");
  }

  FieldSpec field_;
  Index dim_ = 0;
  std::string label_;
  std::vector<Matrix<S>> left_;
};

template <class S>
void check_vector(const Algebra<S>& a, const Vector<S>& x) {
  if (x.cols() != a.dim())
    throw DimensionMismatch("vector of length " + std::to_string(x.cols()) + " for algebra of dim " +
                            std::to_string(a.dim()));
  for (Index i = 0; i < x.cols(); ++i) ScalarTraits<S>::check_field(a.field(), x(i));
}

template <class S>
void check_subspace(const Algebra<S>& a, const Subspace<S>& u) {
  if (!(u.field() == a.field()))
    throw FieldMismatch("subspace over " + u.field().to_string() + ", algebra over " +
                        a.field().to_string());
  if (u.ambient_dim() != a.dim())
    throw DimensionMismatch("subspace of F^" + std::to_string(u.ambient_dim()) +
                            " for algebra of dim " + std::to_string(a.dim()));
}

namespace detail {

// x∘y without argument checks: Σ_i x_i (y · T_i).
template <class S>
Vector<S> product_unchecked(const Algebra<S>& a, const Vector<S>& x, const Vector<S>& y) {
  Vector<S> out = zero_vector<S>(a.field(), a.dim());
  for (Index i = 0; i < a.dim(); ++i) {
    if (ScalarTraits<S>::is_zero(x(i))) continue;
    for (Index j = 0; j < a.dim(); ++j) {
      if (ScalarTraits<S>::is_zero(y(j))) continue;
      const S xy = x(i) * y(j);
      out += xy * a.table(i).row(j);
    }
  }
  return out;
}

}  // namespace detail

/// Bilinear extension of the structure constants.
template <class S>
Vector<S> product(const Algebra<S>& a, const Vector<S>& x, const Vector<S>& y) {
  check_vector(a, x);
  check_vector(a, y);
  return detail::product_unchecked(a, x, y);
}

/// [U,V] = span{x∘y : x∈U, y∈V}, from the pairwise products of basis rows.
template <class S>
Subspace<S> product(const Algebra<S>& a, const Subspace<S>& u, const Subspace<S>& v) {
  check_subspace(a, u);
  check_subspace(a, v);
  if (u.is_zero() || v.is_zero()) return a.zero_subspace();
  std::vector<Vector<S>> rows;
  rows.reserve(static_cast<std::size_t>(u.dim() * v.dim()));
  for (Index r = 0; r < u.dim(); ++r) {
    const Vector<S> x = u.basis().row(r);
    for (Index s = 0; s < v.dim(); ++s) {
      Vector<S> xy = detail::product_unchecked(a, x, Vector<S>(v.basis().row(s)));
      if (!is_zero(xy)) rows.push_back(std::move(xy));
    }
  }
  return Subspace<S>::span(a.field(), a.dim(), rows);
}

/// One failing basis triple of the Zinbiel identity
/// (e_i∘e_j)∘e_k = e_i∘(e_j∘e_k) + e_i∘(e_k∘e_j).
template <class S>
struct Violation {
  Index i = 0, j = 0, k = 0;
  Vector<S> lhs;
  Vector<S> rhs;
};

/// Every basis triple on which the Zinbiel identity fails. By trilinearity an
/// empty result means the identity holds on all elements.
template <class S>
std::vector<Violation<S>> check_zinbiel(const Algebra<S>& a, std::size_t max_reported = 0) {
  std::vector<Violation<S>> out;
  const Index d = a.dim();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) {
        const Vector<S> ij = a.basis_product(i, j);
        Vector<S> lhs = zero_vector<S>(a.field(), d);
        for (Index m = 0; m < d; ++m)
          if (!ScalarTraits<S>::is_zero(ij(m))) lhs += ij(m) * a.table(m).row(k);
        const Vector<S> sym = a.basis_product(j, k) + a.basis_product(k, j);
        Vector<S> rhs = sym * a.table(i);
        if (lhs != rhs) {
          out.push_back({i, j, k, std::move(lhs), std::move(rhs)});
          if (max_reported != 0 && out.size() >= max_reported) return out;
        }
      }
  return out;
}

template <class S>
bool is_zinbiel(const Algebra<S>& a) {
  return check_zinbiel(a, 1).empty();
}

/// [U,Z] ⊆ U.
template <class S>
bool is_right_ideal(const Algebra<S>& a, const Subspace<S>& u) {
  return u.contains(product(a, u, a.whole()));
}

/// [Z,U] ⊆ U.
template <class S>
bool is_left_ideal(const Algebra<S>& a, const Subspace<S>& u) {
  return u.contains(product(a, a.whole(), u));
}

template <class S>
bool is_ideal(const Algebra<S>& a, const Subspace<S>& u) {
  return is_right_ideal(a, u) && is_left_ideal(a, u);
}

/// [U,U] ⊆ U.
template <class S>
bool is_subalgebra(const Algebra<S>& a, const Subspace<S>& u) {
  return u.contains(product(a, u, u));
}

/// Smallest ideal containing `u`: least fixed point of U ↦ U + [Z,U] + [U,Z].
template <class S>
Subspace<S> ideal_closure(const Algebra<S>& a, const Subspace<S>& u) {
  check_subspace(a, u);
  const Subspace<S> z = a.whole();
  Subspace<S> cur = u;
  while (true) {
    Subspace<S> next = sum(sum(cur, product(a, z, cur)), product(a, cur, z));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

/// [Z,B] for a right ideal B; the result is checked to be a two-sided ideal.
/// Throws PreconditionError if B is not a right ideal and PropertyViolation if
/// the result is not an ideal.
template <class S>
Subspace<S> left_multiplication_ideal(const Algebra<S>& a, const Subspace<S>& b) {
  check_subspace(a, b);
  if (!is_right_ideal(a, b)) throw PreconditionError("subspace is not a right ideal");
  Subspace<S> zb = product(a, a.whole(), b);
  if (!is_ideal(a, zb)) throw PropertyViolation("[Z,B] is not an ideal for a right ideal B");
  return zb;
}

/// Map F^d → F^d / I in the coordinates of the quotient basis: cosets of the
/// unit vectors at the non-pivot coordinates of I's RREF basis.
template <class S>
class Projection {
 public:
  explicit Projection(Subspace<S> ideal) : ideal_(std::move(ideal)) {
    std::vector<bool> piv(static_cast<std::size_t>(ideal_.ambient_dim()), false);
    for (Index c : ideal_.pivots()) piv[static_cast<std::size_t>(c)] = true;
    for (Index c = 0; c < ideal_.ambient_dim(); ++c)
      if (!piv[static_cast<std::size_t>(c)]) reps_.push_back(c);
  }

  const Subspace<S>& kernel() const { return ideal_; }
  /// Coordinates (in the parent) of the quotient basis representatives.
  const std::vector<Index>& representatives() const { return reps_; }
  Index source_dim() const { return ideal_.ambient_dim(); }
  Index target_dim() const { return static_cast<Index>(reps_.size()); }

  Vector<S> apply(const Vector<S>& x) const {
    const Vector<S> r = ideal_.reduce(x);
    Vector<S> out = zero_vector<S>(ideal_.field(), target_dim());
    for (std::size_t t = 0; t < reps_.size(); ++t) out(static_cast<Index>(t)) = r(reps_[t]);
    return out;
  }

  /// Representative in the parent of a quotient vector.
  Vector<S> lift(const Vector<S>& y) const {
    if (y.cols() != target_dim()) throw DimensionMismatch("quotient vector length mismatch");
    Vector<S> out = zero_vector<S>(ideal_.field(), source_dim());
    for (std::size_t t = 0; t < reps_.size(); ++t) out(reps_[t]) = y(static_cast<Index>(t));
    return out;
  }

  /// Full preimage of a quotient subspace: lift(W) + I.
  Subspace<S> preimage(const Subspace<S>& w) const {
    if (w.ambient_dim() != target_dim()) throw DimensionMismatch("quotient subspace mismatch");
    std::vector<Vector<S>> rows;
    for (Index r = 0; r < w.dim(); ++r) rows.push_back(lift(w.basis().row(r)));
    for (Index r = 0; r < ideal_.dim(); ++r) rows.emplace_back(ideal_.basis().row(r));
    return Subspace<S>::span(ideal_.field(), source_dim(), rows);
  }

  Subspace<S> image(const Subspace<S>& u) const {
    std::vector<Vector<S>> rows;
    for (Index r = 0; r < u.dim(); ++r) rows.push_back(apply(u.basis().row(r)));
    return Subspace<S>::span(ideal_.field(), target_dim(), rows);
  }

 private:
  Subspace<S> ideal_;
  std::vector<Index> reps_;
};

template <class S>
struct QuotientResult {
  Algebra<S> algebra;
  Projection<S> projection;
};

/// Z/I with constants induced on the unit-vector coset representatives.
/// Throws PreconditionError if `ideal` is not an ideal.
template <class S>
QuotientResult<S> quotient_algebra(const Algebra<S>& a, const Subspace<S>& ideal) {
  check_subspace(a, ideal);
  if (!is_ideal(a, ideal)) throw PreconditionError("quotient by a subspace that is not an ideal");
  Projection<S> proj(ideal);
  const auto& reps = proj.representatives();
  Algebra<S> q(a.field(), proj.target_dim(), a.label().empty() ? "" : a.label() + "/I");
  for (std::size_t s = 0; s < reps.size(); ++s)
    for (std::size_t t = 0; t < reps.size(); ++t) {
      const Vector<S> img = proj.apply(a.basis_product(reps[s], reps[t]));
      for (Index k = 0; k < img.cols(); ++k)
        if (!ScalarTraits<S>::is_zero(img(k)))
          q.set(static_cast<Index>(s), static_cast<Index>(t), k, img(k));
    }
  return {std::move(q), std::move(proj)};
}

/// Block-diagonal constants; cross products vanish.
template <class S>
Algebra<S> direct_sum(const Algebra<S>& a, const Algebra<S>& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatch("direct sum of algebras over " + a.field().to_string() + " and " +
                        b.field().to_string());
  const Index n = a.dim();
  Algebra<S> out(a.field(), n + b.dim());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (!ScalarTraits<S>::is_zero(a(i, j, k))) out.set(i, j, k, a(i, j, k));
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j)
      for (Index k = 0; k < b.dim(); ++k)
        if (!ScalarTraits<S>::is_zero(b(i, j, k))) out.set(n + i, n + j, n + k, b(i, j, k));
  if (!a.label().empty() || !b.label().empty()) out.set_label(a.label() + "+" + b.label());
  return out;
}

}  // namespace zinbiel
