#pragma once

// Machine checks of the structure theory on a single algebra: the Zinbiel
// identity, series facts, nilpotency with certificate, total vanishing of
// products, and (over small prime fields) the lattice-enumeration oracles for
// right ideals, minimal ideals, maximal subalgebras and the Frattini ideal.

#include <string>
#include <vector>

#include "zinbiel/structure.hpp"

namespace zinbiel {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct PropertyCheck {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
  const PropertyCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

inline PropertyCheck outcome(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, ok ? std::string() : std::move(detail)};
}

inline PropertyCheck skipped(std::string name, std::string why) {
  return {std::move(name), CheckStatus::skipped, std::move(why)};
}

}  // namespace detail

/// Series facts that hold for Zinbiel algebras: monotone terms, each Zᵏ an
/// ideal with [Zᵏ,Z] ⊆ Zᵏ⁺¹, and Z⁽ᵏ⁾ ⊆ Zᵏ. Empty string on success.
template <class S>
std::string series_defect(const Algebra<S>& a) {
  const auto lcs = lower_central_series(a);
  const auto der = derived_series(a);
  const Subspace<S> z = a.whole();
  auto lcs_term = [&](std::size_t k) {  // Zᵏ⁺¹ for 0-based k, zero past a vanishing end
    if (k < lcs.size()) return lcs[k];
    return lcs.back().is_zero() ? a.zero_subspace() : lcs.back();
  };
  for (std::size_t k = 0; k + 1 < lcs.size(); ++k)
    if (!lcs[k].contains(lcs[k + 1])) return "Z^" + std::to_string(k + 2) + " not inside Z^" + std::to_string(k + 1);
  for (std::size_t k = 0; k + 1 < der.size(); ++k)
    if (!der[k].contains(der[k + 1])) return "derived term " + std::to_string(k + 2) + " not inside its predecessor";
  for (std::size_t k = 0; k < lcs.size(); ++k) {
    if (!lcs[k].contains(product(a, z, lcs[k])))
      return "[Z,Z^" + std::to_string(k + 1) + "] not inside Z^" + std::to_string(k + 1);
    if (!lcs_term(k + 1).contains(product(a, lcs[k], z)))
      return "[Z^" + std::to_string(k + 1) + ",Z] not inside Z^" + std::to_string(k + 2);
  }
  for (std::size_t k = 0; k < der.size(); ++k)
    if (!lcs_term(k).contains(der[k]))
      return "Z^(" + std::to_string(k + 1) + ") not inside Z^" + std::to_string(k + 1);
  return {};
}

/// Every right ideal B found by lattice enumeration has [Z,B] an ideal.
template <class S>
std::string right_ideal_product_defect(const Algebra<S>& a) {
  for (const auto& b : all_right_ideals(a))
    if (!is_ideal(a, product(a, a.whole(), b))) return "[Z,B] not an ideal for a right ideal B";
  return {};
}

/// Every lattice-minimal ideal is one-dimensional and central.
template <class S>
std::string minimal_ideals_defect(const Algebra<S>& a) {
  const Subspace<S> z = a.whole();
  for (const auto& m : minimal_ideals_by_lattice(a)) {
    if (m.dim() != 1) return "minimal ideal of dimension " + std::to_string(m.dim());
    if (!product(a, z, m).is_zero() || !product(a, m, z).is_zero()) return "minimal ideal is not central";
  }
  return {};
}

/// For every lattice-minimal ideal A the minimal right ideal inside A is A.
template <class S>
std::string minimal_right_ideal_defect(const Algebra<S>& a) {
  for (const auto& m : minimal_ideals_by_lattice(a))
    if (minimal_right_ideal_inside(a, m) != m) return "minimal right ideal strictly inside a minimal ideal";
  return {};
}

template <class S>
std::string maximal_defect(const Algebra<S>& a) {
  for (const auto& m : maximal_subalgebras(a))
    if (!is_ideal(a, m)) return "maximal subalgebra of dimension " + std::to_string(m.dim()) + " is not an ideal";
  return {};
}

/// Formula and oracle modes agree and F(Z) = φ(Z) = Z².
template <class S>
std::string frattini_defect(const Algebra<S>& a) {
  const auto formula = frattini(a, FrattiniMode::formula);
  const auto oracle = frattini(a, FrattiniMode::oracle);
  const Subspace<S> z2 = product(a, a.whole(), a.whole());
  if (oracle.subalgebra != z2) return "F(Z) differs from Z^2";
  if (oracle.ideal != z2) return "phi(Z) differs from Z^2";
  if (formula.subalgebra != oracle.subalgebra || formula.ideal != oracle.ideal)
    return "formula and oracle modes disagree";
  return {};
}

/// Runs every applicable check. Later checks are skipped (not failed) for
/// inputs violating the Zinbiel identity; lattice oracles are skipped outside
/// their field/dimension range.
template <class S>
PropertyReport run_property_suite(const Algebra<S>& a) {
  using detail::outcome;
  using detail::skipped;
  PropertyReport rep;
  const auto violations = check_zinbiel(a, 1);
  rep.checks.push_back(outcome("zinbiel-identity", violations.empty(),
                               violations.empty() ? "" : "identity fails on a basis triple"));
  if (!violations.empty()) return rep;

  auto guarded = [&](const std::string& name, auto&& defect) {
    try {
      const std::string d = defect();
      rep.checks.push_back(outcome(name, d.empty(), d));
    } catch (const PropertyViolation& e) {
      rep.checks.push_back(outcome(name, false, e.what()));
    } catch (const NotApplicable& e) {
      rep.checks.push_back(outcome(name, false, e.what()));
    }
  };

  guarded("series", [&] { return series_defect(a); });

  const auto index = nilpotency_index(a);
  rep.checks.push_back(outcome("nilpotent", index.has_value(), "lower central series does not reach zero"));

  guarded("central-flag", [&] {
    const auto d = flag_defect(a, central_flag(a));
    return d ? *d : std::string();
  });

  if (a.dim() >= 1)
    guarded("minimal-ideal", [&] {
      const Subspace<S> m = minimal_ideal(a);
      const Subspace<S> z = a.whole();
      if (m.dim() != 1) return std::string("minimal ideal is not one-dimensional");
      if (!product(a, z, m).is_zero() || !product(a, m, z).is_zero()) return std::string("not central");
      return std::string();
    });

  if (index && *index <= 6)
    guarded("products-vanish", [&] {
      return all_products_vanish(a, *index) ? std::string()
                                            : "some product of " + std::to_string(*index) + " elements is nonzero";
    });
  else
    rep.checks.push_back(skipped("products-vanish", "nilpotency index above 6"));

  const bool finite = a.field().is_finite();
  auto oracle = [&](const std::string& name, Index max_dim, auto&& defect) {
    if (!finite || a.dim() > max_dim) {
      rep.checks.push_back(skipped(name, "oracle needs a prime field and dim <= " + std::to_string(max_dim)));
      return;
    }
    guarded(name, defect);
  };
  oracle("left-multiplication-ideal", kMaxRightIdealOracleDim, [&] { return right_ideal_product_defect(a); });
  oracle("minimal-ideals-central", kMaxRightIdealOracleDim, [&] { return minimal_ideals_defect(a); });
  oracle("minimal-right-ideal", kMaxRightIdealOracleDim, [&] { return minimal_right_ideal_defect(a); });
  oracle("maximal-subalgebras-ideals", kMaxSubalgebraOracleDim, [&] { return maximal_defect(a); });
  oracle("frattini", kMaxSubalgebraOracleDim, [&] { return frattini_defect(a); });
  return rep;
}

}  // namespace zinbiel
