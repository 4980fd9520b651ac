#include "permtree/enumerator.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace permtree {

BigInt count_brute(const PatternSet& pats, int n, int guard)
{
    if (n < 1 || n > guard) {
        throw std::out_of_range("brute-force length " + std::to_string(n) + " outside 1.." + std::to_string(guard));
    }
    BigInt count = 0;
    for_each_permutation(n, [&](const Permutation& p) {
        if (avoids(p, pats)) {
            ++count;
        }
    });
    return count;
}

std::vector<Permutation> tree_children(const Permutation& perm, const PatternSet& pats)
{
    std::vector<Permutation> out;
    for (int v = 1; v <= perm.size() + 1; ++v) {
        Permutation child = append_child(perm, v);
        if (avoids(child, pats)) {
            out.push_back(std::move(child));
        }
    }
    return out;
}

namespace {

std::vector<Permutation> expand_level(const std::vector<Permutation>& level, const PatternSet& pats,
                                      unsigned workers)
{
    const std::size_t chunks = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(level.size(), 1));
    std::vector<std::vector<Permutation>> parts(chunks);
    auto work = [&](std::size_t chunk) {
        const std::size_t begin = level.size() * chunk / chunks;
        const std::size_t end = level.size() * (chunk + 1) / chunks;
        for (std::size_t i = begin; i < end; ++i) {
            auto kids = tree_children(level[i], pats);
            parts[chunk].insert(parts[chunk].end(), std::make_move_iterator(kids.begin()),
                                std::make_move_iterator(kids.end()));
        }
    };
    if (chunks == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t c = 0; c < chunks; ++c) {
            threads.emplace_back(work, c);
        }
    }
    std::vector<Permutation> next;
    for (auto& part : parts) {
        next.insert(next.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return next;
}

} // namespace

void walk_tree(const PatternSet& pats, int nmax, const std::function<void(int, const std::vector<Permutation>&)>& visit,
               unsigned workers)
{
    if (nmax < 1) {
        return;
    }
    std::vector<Permutation> level;
    if (avoids(Permutation{1}, pats)) {
        level.push_back(Permutation{1});
    }
    visit(1, level);
    for (int n = 2; n <= nmax; ++n) {
        level = expand_level(level, pats, workers);
        visit(n, level);
    }
}

void check_closure(const PatternSet& pats, int nmax)
{
    if (closed_under_last_deletion(pats)) {
        return;
    }
    const int limit = std::min(nmax, 6);
    for (int n = 2; n <= limit; ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            if (avoids(p, pats)) {
                const Permutation parent = without_last(p);
                if (!avoids(parent, pats)) {
                    throw ClosureError("class " + render(pats) + " is not closed under last-entry deletion: " +
                                       p.to_string() + " avoids but " + parent.to_string() + " does not");
                }
            }
        });
    }
}

std::vector<BigInt> count_tree(const PatternSet& pats, int nmax, unsigned workers)
{
    check_closure(pats, nmax);
    std::vector<BigInt> out;
    walk_tree(
        pats, nmax, [&](int, const std::vector<Permutation>& level) { out.emplace_back(level.size()); }, workers);
    return out;
}

SeriesFilter parse_filter(std::string_view name)
{
    static const std::map<std::string_view, SeriesFilter> names{
        {"none", SeriesFilter::None},       {"u>v", SeriesFilter::UGreaterV},  {"u<v", SeriesFilter::ULessV},
        {"u=v", SeriesFilter::UEqualV},     {"v=1", SeriesFilter::VEqualsOne}, {"theta1", SeriesFilter::Theta1},
        {"theta2", SeriesFilter::Theta2},   {"theta3", SeriesFilter::Theta3},  {"theta4", SeriesFilter::Theta4},
    };
    auto it = names.find(name);
    if (it == names.end()) {
        throw std::invalid_argument("unknown series filter '" + std::string(name) + "'");
    }
    return it->second;
}

bool filter_accepts(SeriesFilter filter, int a, int b)
{
    switch (filter) {
    case SeriesFilter::None: return true;
    case SeriesFilter::UGreaterV: return a > b;
    case SeriesFilter::ULessV: return a < b;
    case SeriesFilter::UEqualV: return a == b;
    case SeriesFilter::VEqualsOne: return b == 1;
    case SeriesFilter::Theta1: return a < b && b != 1;
    case SeriesFilter::Theta2: return a == 0 && b == 1;
    case SeriesFilter::Theta3: return a > b && b == 1;
    case SeriesFilter::Theta4: return a > b && b > 1;
    }
    return false;
}

std::vector<RefinedCount> refined_series(const PatternSet& pats, StatPair stats, SeriesFilter filter, int nmax,
                                         unsigned workers)
{
    check_closure(pats, nmax);
    std::vector<RefinedCount> out;
    walk_tree(
        pats, nmax,
        [&](int n, const std::vector<Permutation>& level) {
            std::map<std::pair<int, int>, BigInt> tally;
            for (const auto& p : level) {
                const int a = statistic(p, stats.u);
                const int b = stats.v ? statistic(p, *stats.v) : 0;
                if (filter_accepts(filter, a, b)) {
                    ++tally[{a, b}];
                }
            }
            Poly poly;
            for (const auto& [key, count] : tally) {
                poly.add_term(Rational(count), key.first, key.second);
            }
            out.push_back({n, std::move(poly)});
        },
        workers);
    return out;
}

} // namespace permtree
