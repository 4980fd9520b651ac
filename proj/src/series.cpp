#include "permtree/series.hpp"

#include <algorithm>

namespace permtree {

namespace {

bool is_invertible_constant(const Poly& p)
{
    return p.is_constant() && !p.is_zero();
}

std::string t_power(int k)
{
    if (k == 1) {
        return "t";
    }
    return "t^" + std::to_string(k);
}

} // namespace

Series::Series(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1)
{
    if (order < 0) {
        throw SeriesError("negative series order");
    }
}

Series Series::from_coeffs(std::vector<Poly> coeffs)
{
    if (coeffs.empty()) {
        throw SeriesError("series needs at least one coefficient");
    }
    Series s;
    s.coeffs_ = std::move(coeffs);
    return s;
}

Series Series::constant(const Poly& c, int order)
{
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::t(int order)
{
    return monomial(1, 1, order);
}

Series Series::monomial(const Poly& c, int k, int order)
{
    Series s(order);
    if (k >= 0 && k <= order) {
        s.coeffs_[k] = c;
    }
    return s;
}

Series Series::truncate(int order) const
{
    if (order > this->order()) {
        throw SeriesError("cannot extend a truncated series from order " + std::to_string(this->order()) +
                          " to " + std::to_string(order));
    }
    return from_coeffs(std::vector<Poly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::shift(int k) const
{
    Series s(order());
    for (int i = 0; i + k <= order(); ++i) {
        if (i + k >= 0) {
            s.coeffs_[i + k] = coeffs_[i];
        }
    }
    return s;
}

std::optional<int> Series::valuation() const
{
    for (int i = 0; i <= order(); ++i) {
        if (!coeffs_[i].is_zero()) {
            return i;
        }
    }
    return std::nullopt;
}

bool Series::is_univariate() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& p) { return p.is_constant(); });
}

Series Series::substitute(const std::optional<Rational>& u_value, const std::optional<Rational>& v_value) const
{
    Series s(order());
    for (int i = 0; i <= order(); ++i) {
        s.coeffs_[i] = coeffs_[i].substitute(u_value, v_value);
    }
    return s;
}

Series& Series::operator+=(const Series& other)
{
    if (other.order() < order()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (int i = 0; i <= order(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

Series& Series::operator-=(const Series& other)
{
    return *this += -other;
}

Series Series::operator-() const
{
    Series s = *this;
    for (auto& c : s.coeffs_) {
        c = -c;
    }
    return s;
}

Series& Series::operator*=(const Poly& c)
{
    for (auto& x : coeffs_) {
        x = x * c;
    }
    return *this;
}

Series operator+(const Series& a, const Series& b)
{
    Series s = a;
    s += b;
    return s;
}

Series operator-(const Series& a, const Series& b)
{
    Series s = a;
    s -= b;
    return s;
}

Series operator*(const Series& a, const Series& b)
{
    const int order = std::min(a.order(), b.order());
    Series s(order);
    const auto va = a.valuation();
    const auto vb = b.valuation();
    if (!va || !vb) {
        return s;
    }
    for (int i = *va; i <= order; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (int j = *vb; i + j <= order; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return s;
}

Series operator*(const Series& a, const Poly& c)
{
    Series s = a;
    s *= c;
    return s;
}

Series operator+(const Series& a, const Poly& c)
{
    Series s = a;
    s.coeffs_[0] += c;
    return s;
}

Series Series::reciprocal() const
{
    if (!is_invertible_constant(coeffs_[0])) {
        throw SeriesError("reciprocal needs a nonzero constant term free of u and v, got " +
                          coeffs_[0].to_string());
    }
    const Rational inv = 1 / coeffs_[0].constant_term();
    Series s(order());
    s.coeffs_[0] = Poly(inv);
    for (int n = 1; n <= order(); ++n) {
        Poly acc;
        for (int i = 1; i <= n; ++i) {
            if (!coeffs_[i].is_zero() && !s.coeffs_[n - i].is_zero()) {
                acc += coeffs_[i] * s.coeffs_[n - i];
            }
        }
        s.coeffs_[n] = acc * Poly(-inv);
    }
    return s;
}

Series operator/(const Series& a, const Series& b)
{
    const auto vb = b.valuation();
    if (!vb) {
        throw SeriesError("division by the zero series");
    }
    const int k = *vb;
    if (!is_invertible_constant(b.coeffs_[k])) {
        throw SeriesError("divisor's leading coefficient " + b.coeffs_[k].to_string() +
                          " is not an invertible constant");
    }
    for (int i = 0; i < k && i <= a.order(); ++i) {
        if (!a.coeffs_[i].is_zero()) {
            throw SeriesError("numerator does not vanish to the divisor's t-valuation");
        }
    }
    const int order = std::min(a.order(), b.order()) - k;
    if (order < 0) {
        throw SeriesError("not enough terms to divide");
    }
    Series num(order);
    Series den(order);
    for (int i = 0; i <= order; ++i) {
        num.coeffs_[i] = a.coeffs_[i + k];
        den.coeffs_[i] = b.coeffs_[i + k];
    }
    return num * den.reciprocal();
}

Series Series::pow(int e) const
{
    if (e < 0) {
        return reciprocal().pow(-e);
    }
    Series result = constant(1, order());
    Series base = *this;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Series Series::sqrt() const
{
    if (!is_univariate()) {
        throw SeriesError("square root only supported for series free of u and v");
    }
    if (coeffs_[0].constant_term() != 1) {
        throw SeriesError("square root needs constant term 1");
    }
    // r^2 = s  =>  2 r_n = s_n - sum_{i=1}^{n-1} r_i r_{n-i}
    std::vector<Rational> r(coeffs_.size());
    r[0] = 1;
    for (int n = 1; n <= order(); ++n) {
        Rational acc = coeffs_[n].constant_term();
        for (int i = 1; i < n; ++i) {
            acc -= r[i] * r[n - i];
        }
        r[n] = acc / 2;
    }
    Series out(order());
    for (int n = 0; n <= order(); ++n) {
        out.coeffs_[n] = Poly(r[n]);
    }
    return out;
}

std::string Series::to_string() const
{
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        const Poly& c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        std::string term;
        bool negative = false;
        if (c.is_constant()) {
            Rational x = c.constant_term();
            negative = x < 0;
            if (negative) {
                x = -x;
            }
            if (k == 0) {
                term = permtree::to_string(x);
            } else if (x == 1) {
                term = t_power(k);
            } else if (boost::multiprecision::denominator(x) == 1) {
                term = permtree::to_string(x) + t_power(k);
            } else {
                term = "(" + permtree::to_string(x) + ")" + t_power(k);
            }
        } else {
            term = "(" + c.to_string() + ")";
            if (k > 0) {
                term += t_power(k);
            }
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

Series sqrt_series(const Series& s)
{
    return s.sqrt();
}

namespace {

// sum_i coeffs[i] Y^i and its Y-derivative, by Horner, at the given order.
std::pair<Series, Series> evaluate_with_derivative(const std::vector<Series>& coeffs, const Series& y, int order)
{
    Series value(order);
    Series deriv(order);
    const Series yy = y.truncate(order);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        deriv = deriv * yy + value;
        value = value * yy + coeffs[i].truncate(order);
    }
    return {value, deriv};
}

Series pad(const Series& s, int order)
{
    std::vector<Poly> c = s.coeffs();
    c.resize(static_cast<std::size_t>(order) + 1);
    return Series::from_coeffs(std::move(c));
}

} // namespace

Series algebraic_root(const std::vector<Series>& coeffs, int order)
{
    if (coeffs.size() < 2) {
        throw SeriesError("equation must have degree at least 1 in the unknown");
    }
    for (const auto& c : coeffs) {
        if (c.order() < order) {
            throw SeriesError("equation coefficients known only to order " + std::to_string(c.order()));
        }
    }
    if (!coeffs[0][0].is_zero()) {
        throw SeriesError("no root with zero constant term: equation does not vanish at t = 0, Y = 0");
    }
    if (!is_invertible_constant(coeffs[1][0])) {
        throw SeriesError("linear coefficient not invertible at t = 0; root is not unique");
    }
    Series y(0);
    int precision = 1; // y is correct modulo t^precision
    while (precision < order + 1) {
        precision = std::min(2 * precision, order + 1);
        const int o = precision - 1;
        y = pad(y, o);
        auto [value, deriv] = evaluate_with_derivative(coeffs, y, o);
        y = y - value / deriv;
    }
    y = pad(y, order);
    auto [residual, unused] = evaluate_with_derivative(coeffs, y, order);
    if (!residual.is_zero()) {
        throw SeriesError("Newton iteration did not converge to a series root");
    }
    return y;
}

Series expand_rational(const Series& num, const Series& den, int order)
{
    const auto vd = den.valuation();
    if (!vd) {
        throw SeriesError("zero denominator");
    }
    if (num.order() < order + *vd || den.order() < order + *vd) {
        throw SeriesError("rational expansion needs inputs to order " + std::to_string(order + *vd));
    }
    return (num / den).truncate(order);
}

} // namespace permtree
