#pragma once

#include "permtree/big_number.hpp"

#include <optional>
#include <string>
#include <vector>

namespace permtree {

/// Polynomial in the catalytic variables u and v with exact rational coefficients.
///
/// Terms are kept sorted by (u-degree, v-degree) with no zero coefficients, so
/// structural equality is mathematical equality.
class Poly {
public:
    struct Term {
        int u_deg;
        int v_deg;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    Poly(const Rational& c);
    Poly(const BigInt& c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}

    static Poly monomial(const Rational& c, int u_deg, int v_deg);
    static Poly u() { return monomial(1, 1, 0); }
    static Poly v() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of u^0 v^0.
    Rational constant_term() const;
    Rational coeff(int u_deg, int v_deg) const;
    const std::vector<Term>& terms() const { return terms_; }
    int u_degree() const;
    int v_degree() const;

    /// Substitutes u and/or v; a missing value leaves the variable symbolic.
    Poly substitute(const std::optional<Rational>& u_value, const std::optional<Rational>& v_value) const;
    Rational evaluate(const Rational& u_value, const Rational& v_value) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Canonical monomial order (u-degree, then v-degree), e.g. "2 + u*v^2 - 1/3*u^2".
    std::string to_string() const;

    /// Adds c * u^a v^b in place.
    void add_term(const Rational& c, int u_deg, int v_deg);

private:
    std::vector<Term> terms_;
};

} // namespace permtree
