#include "permtree/generating_functions.hpp"

#include <doctest.h>

using namespace permtree;

namespace {

std::vector<BigInt> coefficients(const Series& s)
{
    std::vector<BigInt> out;
    for (int k = 0; k <= s.order(); ++k) {
        REQUIRE(s[k].is_constant());
        out.push_back(boost::multiprecision::numerator(s[k].constant_term()));
    }
    return out;
}

std::vector<BigInt> big(std::initializer_list<long long> xs)
{
    return {xs.begin(), xs.end()};
}

} // namespace

TEST_CASE("registry contents")
{
    for (const char* name : {"D", "J", "J_formula", "Q", "Q_formula", "K1", "M", "N", "K2", "H", "F", "P", "R", "T"}) {
        CHECK(gf_info(name).name == name);
    }
    CHECK_THROWS_AS(gf_info("K"), std::invalid_argument);
    CHECK(gf_for_class(ClassId::C8).name == "F");
    CHECK(gf_for_class(ClassId::C2).name == "J");
}

TEST_CASE("closed_form examples")
{
    CHECK(coefficients(closed_form("D", 6)) == big({0, 1, 1, 2, 4, 9, 21}));
    CHECK(coefficients(closed_form("P", 6)) == big({0, 1, 2, 4, 9, 23, 65}));
    CHECK(coefficients(closed_form("R", 7, {Rational(1), std::nullopt})) == big({0, 1, 2, 4, 8, 19, 47, 125}));
    CHECK(coefficients(closed_form("T", 7, {Rational(1), std::nullopt})) == big({0, 1, 2, 5, 14, 42, 138, 492}));
    CHECK_THROWS_AS(closed_form("X", 3), std::invalid_argument);
}

TEST_CASE("closed forms at u = v = 1 give the class counts, n <= 10")
{
    for (const auto& spec : class_registry()) {
        const auto gf = coefficients(closed_form(gf_for_class(spec.id).name, 10, Substitution::at_one()));
        const auto rule = count_by_rule(spec, 10);
        INFO(class_name(spec.id));
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK(gf[i + 1] == rule[i]);
        }
    }
}

TEST_CASE("closed forms with a unit denominator expand symbolically")
{
    for (const char* name : {"N", "K2", "H"}) {
        const auto& info = gf_info(name);
        const Series direct = closed_form(name, 10);
        CHECK(direct == candidate_series(*info.paired_class, 10));
    }
}

TEST_CASE("symbolic M, K1 and F come from the verified rule series")
{
    for (const char* name : {"M", "K1", "F"}) {
        const auto& info = gf_info(name);
        CHECK(closed_form(name, 9) == candidate_series(*info.paired_class, 9));
    }
    // one variable fixed: still not a unit denominator
    CHECK(closed_form("M", 8, {std::nullopt, Rational(1)}) ==
          candidate_series(ClassId::C4, 8, {std::nullopt, Rational(1)}));
}

TEST_CASE("F at u = v = 1 equals the simplified univariate radical form")
{
    // (1 - 2t - t^2 - sqrt(1 - 4t + 2t^2 + t^4)) / (2t^2)
    const int o = 12;
    std::vector<Poly> r(o + 3);
    r[0] = 1;
    r[1] = -4;
    r[2] = 2;
    r[4] = 1;
    const Series root = Series::from_coeffs(r).sqrt();
    std::vector<Poly> lin(o + 3);
    lin[0] = 1;
    lin[1] = -2;
    lin[2] = -1;
    const Series num = Series::from_coeffs(lin) - root;
    std::vector<Poly> den(o + 3);
    den[2] = 2;
    CHECK(num / Series::from_coeffs(den) == closed_form("F", o, Substitution::at_one()));
}

TEST_CASE("verify_identity examples")
{
    const auto n = verify_identity("N", candidate_series(ClassId::C5, 12), 12);
    CHECK(n.ok);
    CHECK_FALSE(n.residual.has_value());
    CHECK(verify_identity("K2", candidate_series(ClassId::C6, 12), 12).ok);

    Series bad = candidate_series(ClassId::C4, 10);
    bad.coeff(6) += Poly(1);
    const auto m = verify_identity("M", bad, 10);
    CHECK_FALSE(m.ok);
    REQUIRE(m.residual.has_value());
    CHECK(m.residual->t_order == 6);
    CHECK_FALSE(m.residual->coeff.is_zero());
}

TEST_CASE("a perturbed top coefficient is still caught")
{
    for (const auto& spec : class_registry()) {
        const auto& gf = gf_for_class(spec.id);
        Series s = candidate_series(spec.id, 9, gf.pairing);
        REQUIRE(verify_identity(gf.name, s, 9, gf.pairing).ok);
        s.coeff(9) += Poly::u();
        INFO(gf.name);
        const auto r = verify_identity(gf.name, s, 9, gf.pairing);
        CHECK_FALSE(r.ok);
        REQUIRE(r.residual.has_value());
        CHECK(r.residual->t_order >= 9);
    }
}

TEST_CASE("radical identities pass both the direct and the squared check")
{
    for (const char* name : {"D", "K1", "M", "F"}) {
        const auto& info = gf_info(name);
        const auto r = verify_identity(name, candidate_series(*info.paired_class, 10, info.pairing), 10, info.pairing);
        CHECK(r.ok);
        CHECK(r.checked_order >= 10);
    }
}

TEST_CASE("sum forms start at the documented orders")
{
    // the k-th P term starts at t^(2k-1): a partial order-2k check needs k terms only
    const Series p = closed_form("P", 8);
    CHECK(coefficients(p) == big({0, 1, 2, 4, 9, 23, 65, 199, 654}));
    const Series r = closed_form("R", 6);
    CHECK(r[2] == 1 + Poly::u());
    const Series t = closed_form("T", 3);
    CHECK(t[1] == Poly(1));
    CHECK(t[2] == 1 + Poly::u());
}

TEST_CASE("formula_value examples")
{
    CHECK(formula_value("cat3", 4) == 3);
    CHECK(formula_value("west", 1) == 1);
    CHECK(formula_value("even_formula", 2) == 2);
    CHECK(formula_value("fib_odd", 3) == 5);
    CHECK(formula_value("fib_odd", 1) == 1);
    CHECK(formula_value("fib_odd", 2) == 2);
    CHECK(formula_value("motzkin", 0) == 1);
    CHECK(formula_value("motzkin", 5) == 21);
    CHECK(formula_value("pow2", 5) == 16);
    CHECK(formula_value("b_rec", 4) == 9);
    CHECK_THROWS_AS(formula_value("cat3", 0), std::invalid_argument);
    CHECK_THROWS_AS(formula_value("lucas", 3), std::invalid_argument);
}

TEST_CASE("cubic roots match the coefficient formulas, n <= 60")
{
    const auto j = coefficients(closed_form("J", 60));
    const auto q = coefficients(closed_form("Q", 60));
    for (int n = 1; n <= 60; ++n) {
        CHECK(j[static_cast<std::size_t>(n)] == formula_value("cat3", n));
        CHECK(q[static_cast<std::size_t>(n)] == formula_value("even_formula", n));
    }
    CHECK(closed_form("J_formula", 30) == closed_form("J", 30));
}

TEST_CASE("D is the shifted Motzkin series")
{
    const auto d = coefficients(closed_form("D", 30));
    for (int n = 1; n <= 30; ++n) {
        CHECK(d[static_cast<std::size_t>(n)] == formula_value("motzkin", n - 1));
    }
}
