#include "permtree/generating_functions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace permtree {

namespace {

// Every registered closed form has t-degree below this in its pieces.
constexpr int form_degree_bound = 16;

const Poly U = Poly::u();
const Poly V = Poly::v();

// (a + b * sqrt(radicand)) / c with a, b, c polynomials in t, u, v and the
// radicand a polynomial in t alone.
struct RadicalForm {
    Series a;
    Series b;
    Series c;
    Series radicand;
};

struct RationalForm {
    Series num;
    Series den;
};

using RadicalBuilder = std::function<RadicalForm(int)>;
using RationalBuilder = std::function<RationalForm(int)>;
using EquationBuilder = std::function<std::vector<Series>(int)>;
using SumBuilder = std::function<Series(int, const Substitution&)>;

Series poly_t(std::initializer_list<Poly> coeffs, int order)
{
    Series s(order);
    int k = 0;
    for (const auto& c : coeffs) {
        if (k <= order) {
            s.coeff(k) = c;
        }
        ++k;
    }
    return s;
}

Series extend(const Series& s, int order)
{
    std::vector<Poly> c = s.coeffs();
    c.resize(static_cast<std::size_t>(order) + 1);
    return Series::from_coeffs(std::move(c));
}

Series apply(const Series& s, const Substitution& subst)
{
    return s.substitute(subst.u, subst.v);
}

// 1 / prod (1 - j t)^power over j in [from, to].
Series inverse_linear_product(int from, int to, int power, int order)
{
    Series out = Series::constant(1, order);
    for (int j = from; j <= to; ++j) {
        // 1/(1 - j t) is geometric
        Series g(order);
        Rational x = 1;
        for (int k = 0; k <= order; ++k) {
            g.coeff(k) = Poly(x);
            x *= j;
        }
        for (int p = 0; p < power; ++p) {
            out = out * g;
        }
    }
    return out;
}

RadicalForm d_form(int o)
{
    const Series t = Series::t(o);
    return {poly_t({1, -1}, o), Series::constant(-1, o), t * Poly(2), poly_t({1, -2, -3}, o)};
}

RadicalForm k1_form(int o)
{
    // numerator and denominator multiplied by u to clear 1/u
    return {poly_t({U, -U - 2 * U * U}, o), Series::constant(-U, o),
            poly_t({-2 * U, 2 * (1 + U + U * U)}, o), poly_t({1, -2, -3}, o)};
}

RadicalForm m_form(int o)
{
    const Poly c1 = 2 - U - V - U * V + 2 * U * U * V;
    const Poly c2 = U * (-1 + (2 - U) * V + 2 * (U - 1) * V * V);
    const Poly c3 = U * U * V * (-3 + 2 * V - 2 * U * V);
    const Poly c4 = -2 * U * U * U * V * V;
    const Poly pre = U * U * V;
    const Series a = poly_t({(1 - U) * V, c1, c2, c3, c4}, o) * pre;
    const Series b = poly_t({(1 - U) * V, U, U * U * V}, o) * (-pre);
    const Series c = poly_t({1 - U, -U * (1 - U), U * U}, o) * poly_t({1 - U * V, U * V, U * U * V * V}, o) * Poly(2);
    return {a, b, c, poly_t({1, -2, -3}, o)};
}

RadicalForm f_form(int o)
{
    const Poly u2 = U * U;
    const Poly v2 = V * V;
    const Poly p1_0 = (1 - U) * V;
    const Poly p1_1 = 2 - U - 4 * V + 2 * U * V + v2 + 2 * u2 * V - U * v2;
    const Poly p1_2 = -4 + U + 6 * V + U * V - 3 * v2 - 6 * u2 * V + 3 * u2 * v2;
    const Poly p1_3 = 2 + U - 4 * V - 5 * U * V + 3 * v2 + 4 * u2 * V + 4 * U * v2 - 4 * u2 * v2 - 2 * U * v2 * V -
                      2 * u2 * U * v2 + 2 * u2 * v2 * V;
    const Poly p1_4 = -U + V + 4 * U * V - v2 - 4 * U * v2 - u2 * v2 + 2 * U * v2 * V + 2 * u2 * U * v2 -
                      2 * u2 * U * v2 * V;
    const Poly p1_5 = -U * V * (V - 1) * (2 * U * V - 1);
    const Poly p2_0 = (U - 1) * V;
    const Poly p2_1 = (U - 1) * V * (V - 2) - U;
    const Poly p2_2 = U - V + v2 - u2 * v2;
    const Poly p2_3 = U * V * (1 - V);
    const Poly pre = u2 * V;
    const Series a = poly_t({p1_0, p1_1, p1_2, p1_3, p1_4, p1_5}, o) * pre;
    const Series b = poly_t({p2_0, p2_1, p2_2, p2_3}, o) * pre;
    // (1 + tuv)^2 - uv - t - uv t^2  and  1 + (u + t)(tu - 1)
    const Series c1 = poly_t({1 - U * V, 2 * U * V - 1, u2 * v2 - U * V}, o);
    const Series c2 = poly_t({1 - U, u2 - 1, U}, o);
    return {a, b, c1 * c2 * Poly(2), poly_t({1, -4, 2, 0, 1}, o)};
}

RationalForm n_form(int o)
{
    return {poly_t({0, V, V * (U - 1 - U * V)}, o), poly_t({1, -V}, o) * poly_t({1, -1 - U * V}, o)};
}

RationalForm k2_form(int o)
{
    const Series num = poly_t({0, V, -V * (1 + U + U * V), V * (U * U + U * V + U * U * V)}, o);
    const Series den = poly_t({1, -1 - U}, o) * poly_t({1, -1 - U * V}, o) * poly_t({1, -U * V}, o);
    return {num, den};
}

RationalForm h_form(int o)
{
    const Poly pre = U * U * V;
    const Series num = poly_t({0, 1, V - 3, 1 + U - V - U * V + V * V, U * V * (1 - V)}, o) * pre;
    const Series den = poly_t({1, -3, 1}, o) * poly_t({1, -U}, o);
    return {num, den};
}

std::vector<Series> cubic(int o, int slope)
{
    // t Y^3 + (slope t - 2) Y^2 + (slope t - 1) Y + t
    return {poly_t({0, 1}, o), poly_t({-1, slope}, o), poly_t({-2, slope}, o), poly_t({0, 1}, o)};
}

Series p_sum(int o, const Substitution&)
{
    Series out(o);
    for (int k = 1; 2 * k - 1 <= o; ++k) {
        const Series num = poly_t({1, -(k - 1)}, o).shift(2 * k - 1);
        out += num * inverse_linear_product(1, k, 2, o);
    }
    return out;
}

Series r_sum(int o, const Substitution& subst)
{
    const Poly u = subst.u ? Poly(*subst.u) : U;
    Series out(o);
    for (int k = 0; 2 * k <= o; ++k) {
        Poly uk = 1;
        for (int i = 0; i < k; ++i) {
            uk *= u;
        }
        const Series num = poly_t({uk, k * uk * u}, o).shift(2 * k);
        out += num * inverse_linear_product(k + 1, k + 1, 1, o) * inverse_linear_product(1, k - 1, 1, o);
    }
    // the summed form counts the empty permutation too
    out.coeff(0) -= Poly(1);
    return out;
}

Series t_sum(int o, const Substitution& subst)
{
    const Poly u = subst.u ? Poly(*subst.u) : U;
    const Series inv_1_tu = poly_t({1, u}, o).reciprocal();
    Series out(o);
    Series inv_power = Series::constant(1, o);
    for (int k = 0; k + 1 <= o; ++k) {
        Poly uk = 1;
        for (int i = 0; i < k; ++i) {
            uk *= u;
        }
        const Series num = poly_t({uk, k * uk * u}, o).shift(k + 1);
        Series term = num * inv_power * inverse_linear_product(k + 1, k + 1, 1, o);
        if (k > 0) {
            term = term * inverse_linear_product(k, k, 1, o);
        }
        out += term;
        inv_power = inv_power * inv_1_tu;
    }
    return out;
}

Series coefficient_sum(int o, const char* formula)
{
    Series out(o);
    for (int n = 1; n <= o; ++n) {
        out.coeff(n) = Poly(formula_value(formula, n));
    }
    return out;
}

struct Entry {
    GfInfo info;
    RationalBuilder rational;
    RadicalBuilder radical;
    EquationBuilder equation;
    SumBuilder sum;
};

std::vector<Entry> build_entries()
{
    const Substitution none;
    const Substitution u1{Rational(1), std::nullopt};
    const Substitution v1{std::nullopt, Rational(1)};
    std::vector<Entry> out;
    auto add = [&](GfInfo info) -> Entry& {
        out.push_back(Entry{std::move(info), {}, {}, {}, {}});
        return out.back();
    };
    add({"D", GfKind::Radical, false, false, ClassId::C1, u1, "Motzkin numbers shifted by one"}).radical = d_form;
    add({"J", GfKind::Algebraic, false, false, ClassId::C2, u1, "root of t J^3 + (3t-2) J^2 + (3t-1) J + t"})
        .equation = [](int o) { return cubic(o, 3); };
    add({"J_formula", GfKind::Sum, false, false, ClassId::C2, u1, "coefficients from the cat3 formula"}).sum =
        [](int o, const Substitution&) { return coefficient_sum(o, "cat3"); };
    add({"Q", GfKind::Algebraic, false, false, ClassId::C2e, u1, "root of t Q^3 + (4t-2) Q^2 + (4t-1) Q + t"})
        .equation = [](int o) { return cubic(o, 4); };
    add({"Q_formula", GfKind::Sum, false, false, ClassId::C2e, u1, "coefficients from the even_formula sum"}).sum =
        [](int o, const Substitution&) { return coefficient_sum(o, "even_formula"); };
    add({"K1", GfKind::Radical, true, false, ClassId::C3, none, "u marks the last entry"}).radical = k1_form;
    add({"M", GfKind::Radical, true, true, ClassId::C4, none, "u, v mark l and r"}).radical = m_form;
    add({"N", GfKind::Rational, true, true, ClassId::C5, none, "u, v mark h and r"}).rational = n_form;
    add({"K2", GfKind::Rational, true, true, ClassId::C6, none, "u, v mark s and r"}).rational = k2_form;
    add({"H", GfKind::Rational, true, true, ClassId::C7, none, "u, v mark m and r"}).rational = h_form;
    add({"F", GfKind::Radical, true, true, ClassId::C8, none, "u, v mark l and r"}).radical = f_form;
    add({"P", GfKind::Sum, false, false, ClassId::C9, u1, "sum over k of t^(2k-1)(1-(k-1)t)/prod (1-jt)^2"}).sum =
        p_sum;
    add({"R", GfKind::Sum, true, false, ClassId::C10, v1, "R(t,u,1), u marks s"}).sum = r_sum;
    add({"T", GfKind::Sum, true, false, ClassId::C11, v1, "T(t,u,1), u marks s"}).sum = t_sum;
    return out;
}

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> all = build_entries();
    return all;
}

const Entry& entry(std::string_view name)
{
    for (const auto& e : entries()) {
        if (e.info.name == name) {
            return e;
        }
    }
    throw std::invalid_argument("unknown generating function '" + std::string(name) + "'");
}

bool invertible_leading(const Series& s, int& valuation)
{
    const auto v = s.valuation();
    if (!v) {
        return false;
    }
    valuation = *v;
    return s[*v].is_constant();
}

std::optional<Series> direct_expansion(const Entry& e, int order, const Substitution& subst)
{
    switch (e.info.kind) {
    case GfKind::Rational: {
        int vd = 0;
        if (!invertible_leading(apply(e.rational(form_degree_bound).den, subst), vd)) {
            return std::nullopt;
        }
        const RationalForm f = e.rational(order + vd);
        return expand_rational(apply(f.num, subst), apply(f.den, subst), order);
    }
    case GfKind::Radical: {
        int vc = 0;
        if (!invertible_leading(apply(e.radical(form_degree_bound).c, subst), vc)) {
            return std::nullopt;
        }
        const RadicalForm f = e.radical(order + vc);
        const Series num = apply(f.a, subst) + apply(f.b, subst) * f.radicand.sqrt();
        return (num / apply(f.c, subst)).truncate(order);
    }
    case GfKind::Algebraic: return algebraic_root(e.equation(order), order);
    case GfKind::Sum: return e.sum(order, subst);
    }
    return std::nullopt;
}

IdentityResult first_nonzero(const Series& residual, int upto, const std::string& check)
{
    IdentityResult out;
    out.checked_order = upto;
    for (int k = 0; k <= std::min(upto, residual.order()); ++k) {
        if (!residual[k].is_zero()) {
            out.ok = false;
            out.residual = IdentityResidual{k, residual[k], check};
            return out;
        }
    }
    return out;
}

Substitution merged(const Substitution& base, const Substitution& over)
{
    return {over.u ? over.u : base.u, over.v ? over.v : base.v};
}

} // namespace

const std::vector<GfInfo>& gf_registry()
{
    static const std::vector<GfInfo> infos = [] {
        std::vector<GfInfo> out;
        for (const auto& e : entries()) {
            out.push_back(e.info);
        }
        return out;
    }();
    return infos;
}

const GfInfo& gf_info(std::string_view name)
{
    return entry(name).info;
}

const GfInfo& gf_for_class(ClassId id)
{
    for (const auto& e : entries()) {
        if (e.info.paired_class == id && e.info.name.find('_') == std::string::npos) {
            return e.info;
        }
    }
    throw std::invalid_argument("no generating function paired with " + class_name(id));
}

Series candidate_series(ClassId id, int order, const Substitution& subst)
{
    Series out(order);
    for (const auto& rc : refined_by_rule(class_spec(id), order)) {
        out.coeff(rc.n) = rc.poly.substitute(subst.u, subst.v);
    }
    return out;
}

Series closed_form(std::string_view name, int order, const Substitution& subst)
{
    if (order < 0) {
        throw SeriesError("negative expansion order");
    }
    const Entry& e = entry(name);
    if (auto direct = direct_expansion(e, order, subst)) {
        return *direct;
    }
    if (!e.info.paired_class) {
        throw SeriesError(e.info.name + " has a non-invertible denominator and no paired class");
    }
    Series candidate = candidate_series(*e.info.paired_class, order, merged(e.info.pairing, subst));
    const IdentityResult check = verify_identity(name, candidate, order, subst);
    if (!check.ok) {
        throw SeriesError(e.info.name + " does not match the succession-rule series at t^" +
                          std::to_string(check.residual->t_order));
    }
    return candidate;
}

IdentityResult verify_identity(std::string_view name, const Series& candidate, int order, const Substitution& subst)
{
    if (candidate.order() < order) {
        throw SeriesError("candidate known only to order " + std::to_string(candidate.order()));
    }
    const Entry& e = entry(name);
    const Series x = candidate.truncate(order);
    switch (e.info.kind) {
    case GfKind::Rational: {
        const int vd = apply(e.rational(form_degree_bound).den, subst).valuation().value_or(0);
        const int top = order + vd;
        const RationalForm f = e.rational(top);
        const Series residual = apply(f.den, subst) * extend(x, top) - apply(f.num, subst);
        return first_nonzero(residual, top, "direct");
    }
    case GfKind::Radical: {
        const int vc = apply(e.radical(form_degree_bound).c, subst).valuation().value_or(0);
        const int top = order + vc;
        const RadicalForm f = e.radical(top);
        const Series a = apply(f.a, subst);
        const Series b = apply(f.b, subst);
        const Series c = apply(f.c, subst);
        const Series cx = c * extend(x, top);
        IdentityResult direct = first_nonzero(cx - (a + b * f.radicand.sqrt()), top, "direct");

        // (c x - a)^2 = radicand * b^2, checked past the valuation of c x - a
        const Series isolated = cx - a;
        const int w = isolated.valuation().value_or(0);
        const int top2 = top + w;
        const RadicalForm g = e.radical(top2);
        const Series iso2 = extend(isolated, top2);
        const Series b2 = apply(g.b, subst);
        IdentityResult squared = first_nonzero(iso2 * iso2 - g.radicand * b2 * b2, top2, "squared");
        if (!direct.ok) {
            direct.checked_order = std::max(top, top2);
            return direct;
        }
        squared.checked_order = std::max(top, top2);
        return squared;
    }
    case GfKind::Algebraic: {
        const auto coeffs = e.equation(order);
        Series value(order);
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            value = value * x + coeffs[i];
        }
        return first_nonzero(value, order, "equation");
    }
    case GfKind::Sum: return first_nonzero(x - e.sum(order, subst), order, "sum");
    }
    return {};
}

BigInt formula_value(std::string_view name, int n)
{
    const auto require = [&](int least) {
        if (n < least) {
            throw std::invalid_argument(std::string(name) + " is defined for n >= " + std::to_string(least));
        }
    };
    if (name == "motzkin") {
        require(0);
        BigInt sum = 0;
        for (int k = 0; 2 * k <= n; ++k) {
            sum += binomial(n, 2 * k) * binomial(2 * k, k) / (k + 1);
        }
        return sum;
    }
    if (name == "cat3") {
        require(1);
        const int k = n / 2;
        if (n % 2 == 0) {
            return binomial(3 * k, k) / (2 * k + 1);
        }
        return binomial(3 * k + 1, k + 1) / (2 * k + 1);
    }
    if (name == "even_formula") {
        require(1);
        Rational sum = 0;
        for (int k = 0; 2 * k <= n; ++k) {
            sum += Rational(2 * binomial(n, 2 * k) * binomial(n - k, k - 1));
            sum += Rational(n * binomial(n, 2 * k + 1) * binomial(n - k, k)) / (n - k);
        }
        sum /= n;
        if (boost::multiprecision::denominator(sum) != 1) {
            throw std::logic_error("even_formula produced a non-integer at n = " + std::to_string(n));
        }
        return boost::multiprecision::numerator(sum);
    }
    if (name == "pow2") {
        require(1);
        return BigInt(1) << (n - 1);
    }
    if (name == "west") {
        require(1);
        if (n == 1) {
            return 1;
        }
        return BigInt(n - 1) * (BigInt(1) << (n - 2)) + 1;
    }
    if (name == "fib_odd") {
        require(1);
        BigInt a = 1; // F_1
        BigInt b = 1; // F_2
        for (int i = 2; i < 2 * n - 1; ++i) {
            BigInt c = a + b;
            a = std::move(b);
            b = std::move(c);
        }
        return n == 1 ? BigInt(1) : b;
    }
    if (name == "b_rec") {
        require(0);
        std::vector<BigInt> b{1, 1};
        for (int m = 2; m <= n; ++m) {
            // b_m = b_{m-1} + sum_{k=0}^{m-2} C(m-2, k) b_k
            BigInt next = b[m - 1];
            for (int k = 0; k <= m - 2; ++k) {
                next += binomial(m - 2, k) * b[k];
            }
            b.push_back(next);
        }
        return b[n];
    }
    throw std::invalid_argument("unknown formula '" + std::string(name) + "'");
}

} // namespace permtree
