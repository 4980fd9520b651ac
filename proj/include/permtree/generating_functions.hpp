#pragma once

#include "permtree/big_number.hpp"
#include "permtree/series.hpp"
#include "permtree/succession.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permtree {

/// Values assigned to u and v; nullopt keeps the variable symbolic.
struct Substitution {
    std::optional<Rational> u;
    std::optional<Rational> v;

    static Substitution symbolic() { return {}; }
    static Substitution at_one() { return {Rational(1), Rational(1)}; }
};

enum class GfKind { Rational, Radical, Algebraic, Sum };

struct GfInfo {
    std::string name;
    GfKind kind;
    bool uses_u;
    bool uses_v;
    /// Registered class whose succession-rule series this function counts.
    std::optional<ClassId> paired_class;
    /// Substitution applied to the class series before comparing.
    Substitution pairing;
    std::string description;
};

/// D, J, J_formula, Q, Q_formula, K1, M, N, K2, H, F, P, R, T.
const std::vector<GfInfo>& gf_registry();
/// Throws std::invalid_argument for unknown names.
const GfInfo& gf_info(std::string_view name);
/// The generating function paired with a class.
const GfInfo& gf_for_class(ClassId id);

/// Expansion to order N. Direct when the denominator's leading t-coefficient
/// is an invertible constant after substitution; otherwise the succession-rule
/// series of the paired class, returned only after verify_identity accepts it.
/// Throws SeriesError when neither route applies.
Series closed_form(std::string_view name, int order, const Substitution& subst = {});

struct IdentityResidual {
    int t_order;
    Poly coeff;
    /// "direct", "squared", "equation" or "sum".
    std::string check;
};

struct IdentityResult {
    bool ok = true;
    /// Highest t-order compared (N plus the denominator's t-valuation and, for
    /// the squared check, the valuation of the isolated radical).
    int checked_order = 0;
    std::optional<IdentityResidual> residual;
};

/// Checks `candidate` against the function by cross-multiplication, exactly in
/// Q[u, v]. Never divides by a non-unit. The candidate must have order >= N.
IdentityResult verify_identity(std::string_view name, const Series& candidate, int order,
                               const Substitution& subst = {});

/// Succession-rule series of a class as sum_n poly_n t^n with `subst` applied.
Series candidate_series(ClassId id, int order, const Substitution& subst = {});

/// motzkin, cat3, even_formula, pow2, west, fib_odd, b_rec.
BigInt formula_value(std::string_view name, int n);

} // namespace permtree
