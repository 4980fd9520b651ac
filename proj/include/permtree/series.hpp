#pragma once

#include "permtree/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permtree {

class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Power series in t truncated after t^order, with coefficients in Q[u, v].
///
/// Binary operations truncate to the smaller of the two orders. Division is
/// only defined when the divisor's leading coefficient is a nonzero rational
/// constant; anything else raises SeriesError.
class Series {
public:
    explicit Series(int order = 0);

    static Series from_coeffs(std::vector<Poly> coeffs);
    static Series constant(const Poly& c, int order);
    /// The variable t.
    static Series t(int order);
    /// c * t^k truncated to `order`.
    static Series monomial(const Poly& c, int k, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Poly& operator[](int k) const { return coeffs_.at(k); }
    Poly& coeff(int k) { return coeffs_.at(k); }
    const std::vector<Poly>& coeffs() const { return coeffs_; }

    Series truncate(int order) const;
    /// Multiplies by t^k.
    Series shift(int k) const;
    /// Index of the first nonzero coefficient, or nullopt for the zero series.
    std::optional<int> valuation() const;
    bool is_zero() const { return !valuation().has_value(); }
    /// No u or v anywhere.
    bool is_univariate() const;

    Series substitute(const std::optional<Rational>& u_value, const std::optional<Rational>& v_value) const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series operator-() const;
    Series& operator*=(const Poly& c);

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Poly& c);
    friend Series operator*(const Poly& c, const Series& a) { return a * c; }
    friend Series operator+(const Series& a, const Poly& c);
    friend Series operator+(const Poly& c, const Series& a) { return a + c; }
    friend Series operator-(const Series& a, const Poly& c) { return a + (-c); }
    friend Series operator-(const Poly& c, const Series& a) { return (-a) + c; }

    /// 1/s; the constant term must be a nonzero rational.
    Series reciprocal() const;

    /// a/b. A leading factor t^k of b is cancelled against a, which must vanish
    /// to the same order; the result then has order min(a, b) - k.
    friend Series operator/(const Series& a, const Series& b);

    /// Integer power by repeated multiplication.
    Series pow(int e) const;

    /// Square root with constant term 1. Requires s(0) = 1 and no u, v.
    Series sqrt() const;

    friend bool operator==(const Series&, const Series&) = default;

    /// "t + 2t^2 + (u + v)t^3"; zero terms omitted, unit coefficients implicit.
    std::string to_string() const;

private:
    std::vector<Poly> coeffs_;
};

/// Free-function form of Series::sqrt.
Series sqrt_series(const Series& s);

/// Unique power-series root Y with Y(0) = 0 of sum_i coeffs[i] * Y^i = 0,
/// to order `order`, by Newton iteration.
/// Throws SeriesError unless coeffs[0](0) = 0 and coeffs[1](0) is an invertible constant.
Series algebraic_root(const std::vector<Series>& coeffs, int order);

/// num/den with den(0) invertible (a leading t^k in den is cancelled as in operator/).
Series expand_rational(const Series& num, const Series& den, int order);

} // namespace permtree
