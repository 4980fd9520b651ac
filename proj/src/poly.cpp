#include "permtree/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace permtree {

namespace {

bool term_less(const Poly::Term& a, int u_deg, int v_deg)
{
    return a.u_deg < u_deg || (a.u_deg == u_deg && a.v_deg < v_deg);
}

Rational power(const Rational& x, int e)
{
    Rational out = 1;
    for (int i = 0; i < e; ++i) {
        out *= x;
    }
    return out;
}

} // namespace

Poly::Poly(const Rational& c)
{
    if (c != 0) {
        terms_.push_back({0, 0, c});
    }
}

Poly Poly::monomial(const Rational& c, int u_deg, int v_deg)
{
    if (u_deg < 0 || v_deg < 0) {
        throw std::invalid_argument("negative exponent in monomial");
    }
    Poly p;
    if (c != 0) {
        p.terms_.push_back({u_deg, v_deg, c});
    }
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].u_deg == 0 && terms_[0].v_deg == 0);
}

Rational Poly::constant_term() const
{
    return coeff(0, 0);
}

Rational Poly::coeff(int u_deg, int v_deg) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{u_deg, v_deg},
                               [](const Term& t, const std::pair<int, int>& key) {
                                   return term_less(t, key.first, key.second);
                               });
    if (it != terms_.end() && it->u_deg == u_deg && it->v_deg == v_deg) {
        return it->coeff;
    }
    return 0;
}

int Poly::u_degree() const
{
    int d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.u_deg);
    }
    return d;
}

int Poly::v_degree() const
{
    int d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.v_deg);
    }
    return d;
}

void Poly::add_term(const Rational& c, int u_deg, int v_deg)
{
    if (c == 0) {
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{u_deg, v_deg},
                               [](const Term& t, const std::pair<int, int>& key) {
                                   return term_less(t, key.first, key.second);
                               });
    if (it != terms_.end() && it->u_deg == u_deg && it->v_deg == v_deg) {
        it->coeff += c;
        if (it->coeff == 0) {
            terms_.erase(it);
        }
    } else {
        terms_.insert(it, Term{u_deg, v_deg, c});
    }
}

Poly Poly::substitute(const std::optional<Rational>& u_value, const std::optional<Rational>& v_value) const
{
    if (!u_value && !v_value) {
        return *this;
    }
    Poly out;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        int a = t.u_deg;
        int b = t.v_deg;
        if (u_value) {
            c *= power(*u_value, a);
            a = 0;
        }
        if (v_value) {
            c *= power(*v_value, b);
            b = 0;
        }
        out.add_term(c, a, b);
    }
    return out;
}

Rational Poly::evaluate(const Rational& u_value, const Rational& v_value) const
{
    Rational sum = 0;
    for (const auto& t : terms_) {
        sum += t.coeff * power(u_value, t.u_deg) * power(v_value, t.v_deg);
    }
    return sum;
}

Poly& Poly::operator+=(const Poly& other)
{
    if (other.terms_.empty()) {
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && term_less(*a, b->u_deg, b->v_deg))) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || term_less(*b, a->u_deg, a->v_deg)) {
            merged.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (c != 0) {
                merged.push_back({a->u_deg, a->v_deg, std::move(c)});
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    return *this += -other;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& t : out.terms_) {
        t.coeff = -t.coeff;
    }
    return out;
}

Poly& Poly::operator*=(const Poly& other)
{
    *this = *this * other;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly out;
    if (a.terms_.empty() || b.terms_.empty()) {
        return out;
    }
    if (b.terms_.size() == 1) {
        const auto& bt = b.terms_[0];
        out.terms_.reserve(a.terms_.size());
        for (const auto& at : a.terms_) {
            out.terms_.push_back({at.u_deg + bt.u_deg, at.v_deg + bt.v_deg, at.coeff * bt.coeff});
        }
        return out;
    }
    if (a.terms_.size() == 1) {
        return b * a;
    }
    // dense accumulation over the product's bounding box
    const int du = a.u_degree() + b.u_degree() + 1;
    const int dv = a.v_degree() + b.v_degree() + 1;
    std::vector<Rational> grid(static_cast<std::size_t>(du) * dv);
    std::vector<bool> touched(grid.size(), false);
    for (const auto& at : a.terms_) {
        for (const auto& bt : b.terms_) {
            const std::size_t idx = static_cast<std::size_t>(at.u_deg + bt.u_deg) * dv + (at.v_deg + bt.v_deg);
            grid[idx] += at.coeff * bt.coeff;
            touched[idx] = true;
        }
    }
    for (int i = 0; i < du; ++i) {
        for (int j = 0; j < dv; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * dv + j;
            if (touched[idx] && grid[idx] != 0) {
                out.terms_.push_back({i, j, std::move(grid[idx])});
            }
        }
    }
    return out;
}

std::string Poly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    // printed by total degree, then higher u-degree first
    std::vector<Term> printed = terms_;
    std::ranges::sort(printed, [](const Term& a, const Term& b) {
        const int da = a.u_deg + a.v_deg;
        const int db = b.u_deg + b.v_deg;
        return da != db ? da < db : a.u_deg > b.u_deg;
    });
    std::string out;
    bool first = true;
    for (const auto& t : printed) {
        Rational c = t.coeff;
        const bool negative = c < 0;
        if (negative) {
            c = -c;
        }
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        if (t.u_deg > 0) {
            mono += t.u_deg == 1 ? "u" : "u^" + std::to_string(t.u_deg);
        }
        if (t.v_deg > 0) {
            if (!mono.empty()) {
                mono += '*';
            }
            mono += t.v_deg == 1 ? "v" : "v^" + std::to_string(t.v_deg);
        }
        if (mono.empty()) {
            out += permtree::to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += permtree::to_string(c) + "*" + mono;
        }
    }
    return out;
}

} // namespace permtree
