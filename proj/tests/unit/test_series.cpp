#include "permtree/series.hpp"

#include <doctest.h>

using namespace permtree;

namespace {

const Poly u = Poly::u();
const Poly v = Poly::v();

Series ser(std::initializer_list<Poly> coeffs, int order)
{
    std::vector<Poly> c(coeffs);
    c.resize(static_cast<std::size_t>(order) + 1);
    return Series::from_coeffs(std::move(c));
}

Series ints(std::initializer_list<int> coeffs)
{
    std::vector<Poly> c;
    for (int x : coeffs) {
        c.emplace_back(x);
    }
    return Series::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("poly arithmetic is exact and canonical")
{
    const Poly p = (1 + u) * (1 - u);
    CHECK(p == 1 - u * u);
    CHECK((u + v) * (u - v) == u * u - v * v);
    CHECK((u - u).is_zero());
    CHECK(Poly(Rational(1, 3)) * 3 == Poly(1));
    CHECK((2 + u * v * v - Poly(Rational(1, 3)) * u * u).to_string() == "2 - 1/3*u^2 + u*v^2");
    CHECK(p.evaluate(2, 0) == -3);
    CHECK(p.substitute(Rational(1), std::nullopt).is_zero());
    CHECK((u * v).substitute(std::nullopt, Rational(2)) == 2 * u);
    CHECK(Poly().to_string() == "0");
    CHECK((u * u * v).u_degree() == 2);
}

TEST_CASE("series printing")
{
    CHECK(ints({0, 1, 2, 4}).to_string() == "t + 2t^2 + 4t^3");
    CHECK(ints({1, -1, -2}).to_string() == "1 - t - 2t^2");
    CHECK(ser({0, 0, u + v}, 3).to_string() == "(u + v)t^2");
    CHECK(ser({0, 0, 0, Poly(Rational(1, 2))}, 3).to_string() == "(1/2)t^3");
    CHECK(Series(4).to_string() == "0");
}

TEST_CASE("binary operations truncate to the smaller order")
{
    const Series a = ints({1, 1, 1, 1, 1});
    const Series b = ints({1, -1});
    CHECK((a * b).order() == 1);
    CHECK((a + b).order() == 1);
    CHECK(a * b == ints({1, 0}));
}

TEST_CASE("reciprocal and division")
{
    CHECK(ints({1, -1, 0, 0, 0}).reciprocal() == ints({1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(ints({0, 1}).reciprocal(), SeriesError);
    CHECK_THROWS_AS(ser({u, 1}, 2).reciprocal(), SeriesError);
    // t^2 / (t - t^2) = t / (1 - t), one order lost to the cancelled t
    const Series q = ints({0, 0, 1, 0, 0}) / ints({0, 1, -1, 0, 0});
    CHECK(q == ints({0, 1, 1, 1}));
    CHECK_THROWS_AS(ints({1, 0, 0}) / ints({0, 1, 0}), SeriesError);
    CHECK_THROWS_AS(ints({0, 1, 0}) / ser({0, u, 0}, 2), SeriesError);
}

TEST_CASE("truncate never extends")
{
    CHECK(ints({1, 2, 3}).truncate(1) == ints({1, 2}));
    CHECK_THROWS_AS(ints({1, 2}).truncate(3), SeriesError);
}

TEST_CASE("expand_rational examples")
{
    const Series t4 = Series::t(4);
    CHECK(expand_rational(t4, ints({1, -2, 0, 0, 0}), 4) == ints({0, 1, 2, 4, 8}));

    const int o = 5;
    const Series t = Series::t(o);
    const Series one = Series::constant(1, o);
    const Series num = t * (one - 3 * t + 3 * t * t);
    const Series den = (one - t) * (one - 2 * t) * (one - 2 * t);
    CHECK(expand_rational(num, den, 5) == ints({0, 1, 2, 5, 13, 33}));

    const Series t1 = Series::t(1);
    const Series one1 = Series::constant(1, 1);
    const Series n3 = t1 * v * (one1 - t1 + t1 * u - t1 * u * v);
    const Series d3 = (one1 - t1 * v) * (one1 - t1 - t1 * u * v);
    CHECK(expand_rational(n3, d3, 1) == ser({0, v}, 1));

    CHECK_THROWS_AS(expand_rational(ints({0, 1}), ints({0, 1}), 1), SeriesError);
}

TEST_CASE("sqrt_series examples")
{
    CHECK(sqrt_series(ints({1, -2, -3, 0, 0, 0})) == ints({1, -1, -2, -2, -4, -8}));
    CHECK(sqrt_series(ints({1, 0, 0})) == ints({1, 0, 0}));
    CHECK(sqrt_series(ints({1, -4, 2, 0, 1, 0})) == ints({1, -2, -1, -2, -4, -10}));
    CHECK_THROWS_AS(sqrt_series(ints({4, 1})), SeriesError);
    CHECK_THROWS_AS(sqrt_series(ser({1, u}, 1)), SeriesError);
}

TEST_CASE("squaring the square root recovers the radicand")
{
    for (const Series& s : {ints({1, -2, -3, 0, 0, 0, 0, 0, 0, 0, 0}), ints({1, -4, 2, 0, 1, 0, 0, 0, 0, 0, 0})}) {
        const Series r = s.sqrt();
        CHECK(r * r == s);
    }
}

TEST_CASE("algebraic_root examples")
{
    const int o = 6;
    const Series t = Series::t(o);
    const Series one = Series::constant(1, o);
    const Series j = algebraic_root({t, 3 * t - one, 3 * t - 2 * one, t}, o);
    CHECK(j == ints({0, 1, 1, 2, 3, 7, 12}));
    const Series q = algebraic_root({t, 4 * t - one, 4 * t - 2 * one, t}, 2);
    CHECK(q == ints({0, 1, 2}));
    CHECK(algebraic_root({-t, one}, o) == t);
}

TEST_CASE("algebraic_root rejects equations without a unique series root")
{
    const Series t = Series::t(4);
    const Series one = Series::constant(1, 4);
    CHECK_THROWS_AS(algebraic_root({one, one}, 4), SeriesError);
    CHECK_THROWS_AS(algebraic_root({t, t}, 4), SeriesError);
    CHECK_THROWS_AS(algebraic_root({t}, 4), SeriesError);
    CHECK_THROWS_AS(algebraic_root({Series::t(2), one}, 4), SeriesError);
}

TEST_CASE("pow and shift")
{
    const Series a = ints({1, 1, 0, 0});
    CHECK(a.pow(3) == ints({1, 3, 3, 1}));
    CHECK(a.pow(-1) == ints({1, -1, 1, -1}));
    CHECK(a.shift(2) == ints({0, 0, 1, 1}));
    CHECK(ints({0, 0, 5}).valuation() == 2);
}
