#pragma once

// Series, nilpotency, minimal ideals, central-flag certificates, maximal
// subalgebras and the Frattini subalgebra/ideal.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

/// Z¹ = Z, Zᵏ⁺¹ = [Z,Zᵏ]. Stops at the first zero term or when a term
/// repeats (the repeat is not stored), so a nonzero last term means the series
/// diverged.
template <class S>
std::vector<Subspace<S>> lower_central_series(const Algebra<S>& a) {
  const Subspace<S> z = a.whole();
  std::vector<Subspace<S>> terms{z};
  while (!terms.back().is_zero()) {
    Subspace<S> next = product(a, z, terms.back());
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

/// Z⁽¹⁾ = Z, Z⁽ᵏ⁺¹⁾ = [Z⁽ᵏ⁾,Z⁽ᵏ⁾], with the same stopping rule.
template <class S>
std::vector<Subspace<S>> derived_series(const Algebra<S>& a) {
  std::vector<Subspace<S>> terms{a.whole()};
  while (!terms.back().is_zero()) {
    Subspace<S> next = product(a, terms.back(), terms.back());
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

template <class S>
std::vector<Index> dims_of(const std::vector<Subspace<S>>& terms) {
  std::vector<Index> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

/// Index n of the first zero term (1-based), or nullopt if the series
/// stabilised at a nonzero subspace.
template <class S>
std::optional<std::size_t> terminal_index(const std::vector<Subspace<S>>& terms) {
  if (terms.back().is_zero()) return terms.size();
  return std::nullopt;
}

struct SeriesReport {
  std::vector<Index> lcs_dims;
  std::vector<Index> derived_dims;
  std::optional<std::size_t> nilpotency_index;   // nullopt: diverged
  std::optional<std::size_t> solvability_index;  // nullopt: diverged
};

template <class S>
SeriesReport series_report(const Algebra<S>& a) {
  const auto lcs = lower_central_series(a);
  const auto der = derived_series(a);
  return {dims_of(lcs), dims_of(der), terminal_index(lcs), terminal_index(der)};
}

/// Least n with Zⁿ = 0, or nullopt when the algebra is not nilpotent.
template <class S>
std::optional<std::size_t> nilpotency_index(const Algebra<S>& a) {
  return terminal_index(lower_central_series(a));
}

/// Least n with Z⁽ⁿ⁾ = 0, or nullopt when the algebra is not solvable.
template <class S>
std::optional<std::size_t> solvability_index(const Algebra<S>& a) {
  return terminal_index(derived_series(a));
}

template <class S>
bool is_nilpotent(const Algebra<S>& a) {
  return nilpotency_index(a).has_value();
}

template <class S>
bool is_solvable(const Algebra<S>& a) {
  return solvability_index(a).has_value();
}

inline constexpr std::size_t kMaxProductLength = 7;

/// True iff every parenthesisation of every n-tuple of basis elements
/// multiplies to zero.
///
/// For a bracketing tree T the products over all basis tuples span W(T), where
/// W(leaf) = Z and W(L·R) = [W(L), W(R)] by multilinearity, so all products
/// vanish exactly when W(T) = 0 for every tree with n leaves. W is memoised on
/// the tree's shape.
template <class S>
bool all_products_vanish(const Algebra<S>& a, std::size_t n) {
  if (n == 0) throw PreconditionError("products of zero elements are undefined");
  if (n > kMaxProductLength)
    throw ResourceLimit("all_products_vanish limited to n <= " + std::to_string(kMaxProductLength));
  // spans[m] = distinct W(T) over trees with m leaves
  std::vector<std::vector<Subspace<S>>> spans(n + 1);
  spans[1] = {a.whole()};
  auto insert_unique = [](std::vector<Subspace<S>>& v, Subspace<S> s) {
    for (const auto& t : v)
      if (t == s) return;
    v.push_back(std::move(s));
  };
  for (std::size_t m = 2; m <= n; ++m)
    for (std::size_t left = 1; left < m; ++left)
      for (const auto& l : spans[left])
        for (const auto& r : spans[m - left]) insert_unique(spans[m], product(a, l, r));
  for (const auto& w : spans[n])
    if (!w.is_zero()) return false;
  return true;
}

/// A one-dimensional ideal A with [Z,A] = [A,Z] = 0: the span of the first
/// RREF basis row of the last nonzero lower-central term.
///
/// Throws PreconditionError for dim 0 and NotApplicable if the series does not
/// reach zero or the chosen line is not central (possible only for
/// non-Zinbiel inputs; for Zinbiel inputs the latter is a PropertyViolation).
template <class S>
Subspace<S> minimal_ideal(const Algebra<S>& a) {
  if (a.dim() == 0) throw PreconditionError("the zero-dimensional algebra has no minimal ideal");
  const auto lcs = lower_central_series(a);
  if (!lcs.back().is_zero())
    throw NotApplicable("lower central series stabilises at dimension " +
                        std::to_string(lcs.back().dim()) + "; no central minimal ideal derived");
  const Subspace<S>& last = lcs[lcs.size() - 2];
  Subspace<S> line = Subspace<S>::span(a.field(), a.dim(), Matrix<S>(last.basis().topRows(1)));
  const Subspace<S> z = a.whole();
  if (!product(a, z, line).is_zero() || !product(a, line, z).is_zero()) {
    if (is_zinbiel(a))
      throw PropertyViolation("last nonzero lower-central term of a Zinbiel algebra is not central");
    throw NotApplicable("last nonzero lower-central term is not central");
  }
  return line;
}

/// Chain {0} = A₀ ⊂ A₁ ⊂ … ⊂ A_m = Z of ideals with one-dimensional central
/// steps: a witness of nilpotency.
template <class S>
struct CentralFlag {
  std::vector<Subspace<S>> chain;
};

/// Builds a central flag by repeatedly taking a minimal ideal of Z/A_i and
/// pulling it back to Z. Requires a Zinbiel input.
template <class S>
CentralFlag<S> central_flag(const Algebra<S>& a) {
  if (!is_zinbiel(a)) throw NotApplicable("central_flag requires an algebra satisfying the Zinbiel identity");
  CentralFlag<S> flag;
  flag.chain.push_back(a.zero_subspace());
  while (flag.chain.back().dim() < a.dim()) {
    auto q = quotient_algebra(a, flag.chain.back());
    Subspace<S> line = minimal_ideal(q.algebra);
    flag.chain.push_back(q.projection.preimage(line));
  }
  return flag;
}

/// Reason the chain fails to be a central flag of `a`, or nullopt if valid.
/// Uses only subspace arithmetic and products.
template <class S>
std::optional<std::string> flag_defect(const Algebra<S>& a, const CentralFlag<S>& f) {
  const auto& c = f.chain;
  if (c.empty()) return "empty chain";
  for (const auto& t : c)
    if (!(t.field() == a.field()) || t.ambient_dim() != a.dim()) return "term not in the algebra's space";
  if (!c.front().is_zero()) return "first term is not zero";
  if (!c.back().is_whole()) return "last term is not the whole algebra";
  const Subspace<S> z = a.whole();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const std::string at = " at step " + std::to_string(i + 1);
    if (c[i + 1].dim() != c[i].dim() + 1) return "dimension does not increase by one" + at;
    if (!c[i + 1].contains(c[i])) return "chain is not nested" + at;
    if (!c[i].contains(product(a, z, c[i + 1]))) return "[Z,A_{i+1}] not inside A_i" + at;
    if (!c[i].contains(product(a, c[i + 1], z))) return "[A_{i+1},Z] not inside A_i" + at;
    if (!is_ideal(a, c[i + 1])) return "term is not an ideal" + at;
  }
  return std::nullopt;
}

template <class S>
bool verify_flag(const Algebra<S>& a, const CentralFlag<S>& f) {
  return !flag_defect(a, f).has_value();
}

inline constexpr Index kMaxSubalgebraOracleDim = 4;
inline constexpr Index kMaxRightIdealOracleDim = 3;

namespace detail {

template <class S>
void require_oracle(const Algebra<S>& a, Index max_dim, const char* what) {
  if (!a.field().is_finite())
    throw UnsupportedOracle(std::string(what) + " oracle needs a finite field");
  if (a.dim() > max_dim)
    throw UnsupportedOracle(std::string(what) + " oracle limited to dimension <= " +
                            std::to_string(max_dim));
}

}  // namespace detail

/// Brute force: every proper subspace closed under the product, kept when no
/// other proper subalgebra strictly contains it. Prime field, dim <= 4.
template <class S>
std::vector<Subspace<S>> maximal_subalgebras(const Algebra<S>& a) {
  detail::require_oracle(a, kMaxSubalgebraOracleDim, "maximal subalgebra");
  std::vector<Subspace<S>> closed;
  for_each_subspace<S>(a.field(), a.dim(), std::nullopt, [&](const Subspace<S>& u) {
    if (!u.is_whole() && is_subalgebra(a, u)) closed.push_back(u);
    return true;
  });
  std::vector<Subspace<S>> out;
  for (const auto& u : closed) {
    bool maximal = true;
    for (const auto& v : closed)
      if (v.dim() > u.dim() && v.contains(u)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(u);
  }
  return out;
}

/// Every ideal of `a` by lattice enumeration (prime field, dim <= 4).
template <class S>
std::vector<Subspace<S>> all_ideals(const Algebra<S>& a) {
  detail::require_oracle(a, kMaxSubalgebraOracleDim, "ideal lattice");
  std::vector<Subspace<S>> out;
  for_each_subspace<S>(a.field(), a.dim(), std::nullopt, [&](const Subspace<S>& u) {
    if (is_ideal(a, u)) out.push_back(u);
    return true;
  });
  return out;
}

/// Every right ideal by lattice enumeration (prime field, dim <= 3).
template <class S>
std::vector<Subspace<S>> all_right_ideals(const Algebra<S>& a) {
  detail::require_oracle(a, kMaxRightIdealOracleDim, "right ideal lattice");
  std::vector<Subspace<S>> out;
  for_each_subspace<S>(a.field(), a.dim(), std::nullopt, [&](const Subspace<S>& u) {
    if (is_right_ideal(a, u)) out.push_back(u);
    return true;
  });
  return out;
}

/// Nonzero ideals containing no proper nonzero ideal, by lattice enumeration.
template <class S>
std::vector<Subspace<S>> minimal_ideals_by_lattice(const Algebra<S>& a) {
  const auto ideals = all_ideals(a);
  std::vector<Subspace<S>> out;
  for (const auto& u : ideals) {
    if (u.is_zero()) continue;
    bool minimal = true;
    for (const auto& v : ideals)
      if (!v.is_zero() && v.dim() < u.dim() && u.contains(v)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(u);
  }
  return out;
}

enum class FrattiniMode { formula, oracle };

template <class S>
struct FrattiniResult {
  Subspace<S> subalgebra;  // F(Z)
  Subspace<S> ideal;       // φ(Z)
};

/// Formula mode returns (Z², Z²) and requires a Zinbiel input. Oracle mode
/// intersects the enumerated maximal subalgebras for F(Z) and takes the sum of
/// all ideals inside F(Z) for φ(Z).
template <class S>
FrattiniResult<S> frattini(const Algebra<S>& a, FrattiniMode mode) {
  if (mode == FrattiniMode::formula) {
    if (!is_zinbiel(a)) throw NotApplicable("formula-mode Frattini requires a Zinbiel algebra");
    Subspace<S> z2 = product(a, a.whole(), a.whole());
    return {z2, z2};
  }
  detail::require_oracle(a, kMaxSubalgebraOracleDim, "Frattini");
  Subspace<S> f = a.whole();
  for (const auto& m : maximal_subalgebras(a)) f = intersect(f, m);
  Subspace<S> phi = a.zero_subspace();
  for_each_subspace<S>(a.field(), a.dim(), std::nullopt, [&](const Subspace<S>& u) {
    if (f.contains(u) && is_ideal(a, u)) phi = sum(phi, u);
    return true;
  });
  return {f, phi};
}

/// Brute force: a nonzero right ideal of Z inside the minimal ideal `ideal`,
/// of least dimension (first in enumeration order). Prime field, dim <= 3.
/// Throws PreconditionError unless `ideal` is a minimal ideal.
template <class S>
Subspace<S> minimal_right_ideal_inside(const Algebra<S>& a, const Subspace<S>& ideal) {
  detail::require_oracle(a, kMaxRightIdealOracleDim, "minimal right ideal");
  check_subspace(a, ideal);
  if (ideal.is_zero() || !is_ideal(a, ideal))
    throw PreconditionError("subspace is not a nonzero ideal");
  std::optional<Subspace<S>> best;
  for_each_subspace<S>(a.field(), a.dim(), std::nullopt, [&](const Subspace<S>& u) {
    if (u.is_zero() || !ideal.contains(u)) return true;
    if (u != ideal && is_ideal(a, u))
      throw PreconditionError("subspace is not a minimal ideal");
    if (!best && is_right_ideal(a, u)) best = u;
    return true;
  });
  return *best;  // `ideal` itself is a right ideal, so best is set
}

}  // namespace zinbiel
