#include "permtree/bijections.hpp"
#include "permtree/generating_functions.hpp"
#include "permtree/lattice_path.hpp"
#include "permtree/pattern.hpp"


#include <doctest.h>

#include <algorithm>
#include <set>

using namespace permtree;

namespace {

constexpr int max_n = 7;

std::vector<Permutation> members(const char* set, int n)
{
    const PatternSet pats = parse_pattern_set(set);
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) {
        if (avoids(p, pats)) {
            out.push_back(p);
        }
    });
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> xs)
{
    std::ranges::sort(xs);
    return xs;
}

std::vector<std::string> filtered(const std::vector<std::string>& xs, bool (*keep)(std::string_view))
{
    std::vector<std::string> out;
    std::ranges::copy_if(xs, std::back_inserter(out), keep);
    return out;
}

std::size_t count_n(int n)
{
    return static_cast<std::size_t>(formula_value("motzkin", n).convert_to<long long>());
}

} // namespace

TEST_CASE("path_is examples")
{
    CHECK_FALSE(path_is("UUDUDD", PathKind::UduFree));
    CHECK(path_is("UUDD", PathKind::Dyck));
    CHECK(path_is("EEN", PathKind::Subdiagonal));
    CHECK_FALSE(path_is("ENE", PathKind::Subdiagonal));
    CHECK_FALSE(path_is("EENN", PathKind::Subdiagonal));
    CHECK_FALSE(path_is("DU", PathKind::Dyck));
    CHECK(path_is("UHD", PathKind::Motzkin));
    CHECK_FALSE(path_is("UHD", PathKind::Dyck));
    CHECK(path_is("", PathKind::Dyck));
    CHECK_FALSE(path_is("UUUD", PathKind::UuuFree));
    CHECK(path_is("UDDD", PathKind::UuuFree));
    CHECK_FALSE(path_is("UDDD", PathKind::DddFree));
    CHECK(parse_path_kind("udu-free") == PathKind::UduFree);
    CHECK_THROWS_AS(parse_path_kind("schroder"), std::invalid_argument);
}

TEST_CASE("path lists have the expected sizes")
{
    CHECK(dyck_paths(4).size() == 14);
    CHECK(motzkin_paths(5).size() == 21);
    CHECK(filtered(dyck_paths(5), is_udu_free_dyck).size() == count_n(4));
    for (int n = 1; n <= 9; ++n) {
        CHECK(subdiagonal_paths(n).size() == formula_value("cat3", n));
    }
    const auto m = match_steps("UHUDD");
    CHECK(m[0] == 4);
    CHECK(m[1] == 1);
    CHECK(m[2] == 3);
    CHECK(m[4] == 0);
}

TEST_CASE("documented bijection examples")
{
    CHECK(phi(Permutation::parse("4675123")) == "UUUDDUDDUUUDDD");
    CHECK(phi(Permutation{1}) == "UD");
    CHECK(callan("UUDD") == "H");
    CHECK(udu_to_uuu("UUUUDDUUDDDDUUDD") == "UDUUDUDUUDDUDD");
    CHECK(udu_to_uuu("UD").empty());
    CHECK(subdiag(Permutation::parse("4675123")) == "EEENENEEEN");
    CHECK(subdiag(Permutation{1}) == "E");
}

TEST_CASE("precondition violations are reported")
{
    CHECK_THROWS_AS(phi(Permutation::parse("213")), BijectionError);
    CHECK_THROWS_AS(phi_inverse("UDD"), BijectionError);
    CHECK_THROWS_AS(phi_inverse(""), BijectionError);
    CHECK_THROWS_AS(callan("UDUD"), BijectionError);
    CHECK_THROWS_AS(callan_inverse("UH"), BijectionError);
    CHECK_THROWS_AS(udu_to_uuu("UUDUDD"), BijectionError);
    CHECK_THROWS_AS(uuu_to_udu("UUUDDD"), BijectionError);
    CHECK_THROWS_AS(subdiag(Permutation::parse("132")), BijectionError);
    CHECK_THROWS_AS(subdiag_inverse("NE"), BijectionError);
}

TEST_CASE("phi is a bijection from 2-1-3 avoiders onto Dyck paths")
{
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> image;
        for (const auto& p : members("2-1-3", n)) {
            const std::string path = phi(p);
            CHECK(phi_inverse(path) == p);
            image.push_back(path);
        }
        CHECK(sorted(image) == sorted(dyck_paths(n)));
    }
}

TEST_CASE("phi characterizations")
{
    const PatternSet bar = parse_pattern_set("[2]-31");
    const PatternSet adj = parse_pattern_set("12-3");
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& p : members("2-1-3", n)) {
            const std::string path = phi(p);
            CHECK(is_udu_free_dyck(path) == avoids(p, bar));
            CHECK(is_uuu_free_dyck(path) == avoids(p, adj));
        }
    }
}

TEST_CASE("callan is a bijection from UDU-free Dyck paths onto Motzkin paths")
{
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::string> image;
        for (const auto& d : filtered(dyck_paths(n + 1), is_udu_free_dyck)) {
            const std::string m = callan(d);
            CHECK(callan_inverse(m) == d);
            image.push_back(m);
        }
        CHECK(sorted(image) == sorted(motzkin_paths(n)));
    }
}

TEST_CASE("udu_to_uuu is a bijection onto UUU-free Dyck paths of one size less")
{
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::string> image;
        for (const auto& d : filtered(dyck_paths(n + 1), is_udu_free_dyck)) {
            const std::string e = udu_to_uuu(d);
            CHECK(uuu_to_udu(e) == d);
            image.push_back(e);
        }
        CHECK(sorted(image) == sorted(filtered(dyck_paths(n), is_uuu_free_dyck)));
    }
}

TEST_CASE("subdiag is a bijection onto subdiagonal paths")
{
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> image;
        for (const auto& p : members("2-1-3, [2o]-31", n)) {
            const std::string path = subdiag(p);
            CHECK(subdiag_inverse(path) == p);
            image.push_back(path);
        }
        CHECK(sorted(image) == sorted(subdiagonal_paths(n)));
    }
}

TEST_CASE("chaining phi, uuu_to_udu and phi_inverse links the 12-3 and [2]-31 classes")
{
    const PatternSet c1 = parse_pattern_set("2-1-3, [2]-31");
    for (int n = 1; n <= max_n; ++n) {
        std::set<Permutation> image;
        for (const auto& p : members("2-1-3, 12-3", n)) {
            const Permutation q = phi_inverse(uuu_to_udu(phi(p)));
            CHECK(q.size() == n + 1);
            CHECK(avoids(q, c1));
            image.insert(q);
        }
        CHECK(image.size() == count_n(n));
        CHECK(image.size() == members("2-1-3, [2]-31", n + 1).size());
    }
}

TEST_CASE("phi reads the right-to-left maxima computed by the oracle")
{
    // U^{i_1} D^{v_1 - v_2} U^{i_2 - i_1} ... D^{v_m}, positions 1-based
    for (const auto& p : members("2-1-3", 6)) {
        std::vector<int> e = p.entries();
        std::vector<std::pair<int, int>> maxima;
        int best = 0;
        for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i) {
            if (e[static_cast<std::size_t>(i)] > best) {
                best = e[static_cast<std::size_t>(i)];
                maxima.insert(maxima.begin(), {i + 1, best});
            }
        }
        std::string expect;
        int prev_i = 0;
        for (std::size_t j = 0; j < maxima.size(); ++j) {
            expect.append(static_cast<std::size_t>(maxima[j].first - prev_i), 'U');
            prev_i = maxima[j].first;
            const int next = j + 1 < maxima.size() ? maxima[j + 1].second : 0;
            expect.append(static_cast<std::size_t>(maxima[j].second - next), 'D');
        }
        CHECK(phi(p) == expect);
    }
}
