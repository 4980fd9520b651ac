#include "permtree/enumerator.hpp"
#include "permtree/succession.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace permtree;

namespace {

std::vector<BigInt> big(std::initializer_list<int> xs)
{
    return {xs.begin(), xs.end()};
}

} // namespace

TEST_CASE("count_brute on the documented examples")
{
    CHECK(count_brute(parse_pattern_set("2-1-3, [2]-31"), 4) == 4);
    CHECK(count_brute(parse_pattern_set("1-23, 3-12, 34-21"), 5) == 19);
    for (const auto& spec : class_registry()) {
        CHECK(count_brute(spec.patterns, 1) == 1);
    }
    CHECK_THROWS_AS(count_brute(parse_pattern_set("12"), 11), std::out_of_range);
    CHECK_THROWS_AS(count_brute(parse_pattern_set("12"), 0), std::out_of_range);
    CHECK(count_brute(parse_pattern_set("12"), 3, 3) == 1);
    CHECK_THROWS_AS(count_brute(parse_pattern_set("12"), 4, 3), std::out_of_range);
}

TEST_CASE("count_tree on the documented examples")
{
    CHECK(count_tree(parse_pattern_set("2-1-3, 32-1"), 5) == big({1, 2, 4, 8, 16}));
    CHECK(count_tree(parse_pattern_set("2-1-3, 34-21"), 4) == big({1, 2, 5, 13}));
    CHECK(count_tree(parse_pattern_set("1-23, 34-21"), 7) == big({1, 2, 5, 14, 42, 138, 492}));
}

TEST_CASE("count_tree rejects classes the rightward tree cannot generate")
{
    CHECK_THROWS_AS(count_tree(parse_pattern_set("31-[2]"), 5), ClosureError);
}

TEST_CASE("brute, tree and oracle agree for every registered class, n <= 7")
{
    for (const auto& spec : class_registry()) {
        const auto tree = count_tree(spec.patterns, 7);
        const auto ref = oracle::from_library(spec.patterns);
        for (int n = 1; n <= 7; ++n) {
            INFO(class_name(spec.id) << " n=" << n);
            CHECK(count_brute(spec.patterns, n) == tree[static_cast<std::size_t>(n - 1)]);
            CHECK(tree[static_cast<std::size_t>(n - 1)] == BigInt(oracle::count(ref, n)));
        }
    }
}

TEST_CASE("tree output does not depend on the worker count")
{
    const auto pats = parse_pattern_set("1-23, 34-21");
    std::vector<std::vector<Permutation>> one;
    std::vector<std::vector<Permutation>> four;
    walk_tree(pats, 7, [&](int, const std::vector<Permutation>& level) { one.push_back(level); }, 1);
    walk_tree(pats, 7, [&](int, const std::vector<Permutation>& level) { four.push_back(level); }, 4);
    CHECK(one == four);
    CHECK(count_tree(pats, 8, 3) == count_tree(pats, 8, 1));
}

TEST_CASE("pruned expansion equals unpruned filtering, n <= 6")
{
    for (const auto& spec : class_registry()) {
        std::vector<std::vector<Permutation>> levels;
        walk_tree(spec.patterns, 6, [&](int, const std::vector<Permutation>& level) { levels.push_back(level); });
        for (int n = 1; n <= 6; ++n) {
            std::vector<Permutation> filtered;
            for_each_permutation(n, [&](const Permutation& p) {
                if (avoids(p, spec.patterns)) {
                    filtered.push_back(p);
                }
            });
            auto got = levels[static_cast<std::size_t>(n - 1)];
            std::sort(got.begin(), got.end());
            CHECK(got == filtered);
        }
    }
}

TEST_CASE("refined_series examples")
{
    const auto m = refined_series(parse_pattern_set("2-1-3, 12-3"), {Stat::l, Stat::r}, SeriesFilter::None, 1);
    CHECK(m[0].poly == Poly::monomial(1, 2, 1));
    const auto n = refined_series(parse_pattern_set("2-1-3, 32-1"), {Stat::h, Stat::r}, SeriesFilter::None, 1);
    CHECK(n[0].poly == Poly::v());
    const auto pats = parse_pattern_set("1-23, 3-12, 34-21");
    // S_2: 12 has (s,r) = (1,2), 21 has (0,1); both satisfy u<v
    const auto less = refined_series(pats, {Stat::s, Stat::r}, SeriesFilter::ULessV, 2);
    CHECK(less[1].poly == Poly::monomial(1, 1, 2) + Poly::v());
    const auto theta1 = refined_series(pats, {Stat::s, Stat::r}, SeriesFilter::Theta1, 2);
    CHECK(theta1[1].poly == Poly::monomial(1, 1, 2));
}

TEST_CASE("refined totals evaluate to the counts")
{
    const auto pats = parse_pattern_set("2-1-3, 34-21");
    const auto tree = count_tree(pats, 7);
    const auto refined = refined_series(pats, {Stat::s, Stat::r}, SeriesFilter::None, 7);
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(refined[i].poly.evaluate(1, 1) == Rational(tree[i]));
        for (const auto& term : refined[i].poly.terms()) {
            CHECK(term.coeff > 0);
            CHECK(boost::multiprecision::denominator(term.coeff) == 1);
        }
    }
}

TEST_CASE("theta filters partition the unfiltered series")
{
    for (const char* set : {"1-23, 3-12, 34-21", "1-23, 34-21"}) {
        const auto pats = parse_pattern_set(set);
        const StatPair sr{Stat::s, Stat::r};
        const auto all = refined_series(pats, sr, SeriesFilter::None, 7);
        std::vector<Poly> sum(7);
        for (auto f : {SeriesFilter::Theta1, SeriesFilter::Theta2, SeriesFilter::Theta3, SeriesFilter::Theta4}) {
            const auto part = refined_series(pats, sr, f, 7);
            for (std::size_t i = 0; i < 7; ++i) {
                sum[i] += part[i].poly;
            }
        }
        for (std::size_t i = 0; i < 7; ++i) {
            CHECK(sum[i] == all[i].poly);
        }
    }
}

TEST_CASE("filter names")
{
    CHECK(parse_filter("u>v") == SeriesFilter::UGreaterV);
    CHECK(parse_filter("theta4") == SeriesFilter::Theta4);
    CHECK_THROWS_AS(parse_filter("u>=v"), std::invalid_argument);
    CHECK(filter_accepts(SeriesFilter::UEqualV, 2, 2));
    CHECK_FALSE(filter_accepts(SeriesFilter::VEqualsOne, 2, 2));
}
