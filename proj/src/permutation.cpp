#include "permtree/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace permtree {

namespace {

bool is_permutation_of_1_to_n(const std::vector<int>& entries)
{
    std::vector<bool> seen(entries.size() + 1, false);
    for (int x : entries) {
        if (x < 1 || x > static_cast<int>(entries.size()) || seen[x]) {
            return false;
        }
        seen[x] = true;
    }
    return true;
}

} // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries))
{
    if (!is_permutation_of_1_to_n(entries_)) {
        throw std::invalid_argument("not a permutation of 1..n");
    }
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries))
{
}

Permutation Permutation::parse(std::string_view text)
{
    std::vector<int> entries;
    if (text.find(',') != std::string_view::npos) {
        int current = 0;
        bool have_digit = false;
        for (char c : text) {
            if (c == ',') {
                if (!have_digit) {
                    throw std::invalid_argument("empty entry in permutation '" + std::string(text) + "'");
                }
                entries.push_back(current);
                current = 0;
                have_digit = false;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                current = current * 10 + (c - '0');
                have_digit = true;
                if (current > 1'000'000) {
                    throw std::invalid_argument("permutation entry too large");
                }
            } else if (c != ' ') {
                throw std::invalid_argument("bad character in permutation '" + std::string(text) + "'");
            }
        }
        if (!have_digit) {
            throw std::invalid_argument("empty entry in permutation '" + std::string(text) + "'");
        }
        entries.push_back(current);
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument("bad character in permutation '" + std::string(text) + "'");
            }
            entries.push_back(c - '0');
        }
    }
    if (entries.empty()) {
        throw std::invalid_argument("empty permutation");
    }
    return Permutation(std::move(entries));
}

Permutation Permutation::identity(int n)
{
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e), Unchecked{});
}

Permutation Permutation::decreasing(int n)
{
    std::vector<int> e(n);
    std::iota(e.rbegin(), e.rend(), 1);
    return Permutation(std::move(e), Unchecked{});
}

bool Permutation::is_increasing() const
{
    return std::is_sorted(entries_.begin(), entries_.end());
}

bool Permutation::is_decreasing() const
{
    return std::is_sorted(entries_.rbegin(), entries_.rend());
}

std::string Permutation::to_string() const
{
    std::string out;
    const bool compact = size() <= 9;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!compact && i > 0) {
            out += ',';
        }
        out += std::to_string(entries_[i]);
    }
    return out;
}

Permutation append_child(const Permutation& perm, int v)
{
    if (v < 1 || v > perm.size() + 1) {
        throw std::out_of_range("appended value " + std::to_string(v) + " outside 1.." +
                                std::to_string(perm.size() + 1));
    }
    std::vector<int> e;
    e.reserve(perm.entries_.size() + 1);
    for (int x : perm.entries_) {
        e.push_back(x >= v ? x + 1 : x);
    }
    e.push_back(v);
    return Permutation(std::move(e), Permutation::Unchecked{});
}

Permutation without_last(const Permutation& perm)
{
    if (perm.empty()) {
        throw std::invalid_argument("cannot remove from empty permutation");
    }
    const int last = perm.back();
    std::vector<int> e(perm.entries_.begin(), perm.entries_.end() - 1);
    for (int& x : e) {
        if (x > last) {
            --x;
        }
    }
    return Permutation(std::move(e), Permutation::Unchecked{});
}

Permutation standardize(const std::vector<int>& values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<int> e(values.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        e[order[rank]] = static_cast<int>(rank) + 1;
    }
    return Permutation(std::move(e));
}

char stat_name(Stat stat)
{
    switch (stat) {
    case Stat::r: return 'r';
    case Stat::l: return 'l';
    case Stat::h: return 'h';
    case Stat::s: return 's';
    case Stat::m: return 'm';
    case Stat::n: return 'n';
    }
    return '?';
}

Stat parse_stat(char c)
{
    switch (c) {
    case 'r': return Stat::r;
    case 'l': return Stat::l;
    case 'h': return Stat::h;
    case 's': return Stat::s;
    case 'm': return Stat::m;
    case 'n': return Stat::n;
    default: throw std::invalid_argument(std::string("unknown statistic '") + c + "'");
    }
}

int statistic(const Permutation& perm, Stat which)
{
    const auto& p = perm.entries();
    const int n = perm.size();
    switch (which) {
    case Stat::r:
        return n == 0 ? 0 : p.back();
    case Stat::n:
        return n;
    case Stat::l: {
        // smallest top of an ascent
        int best = n + 1;
        for (int i = 1; i < n; ++i) {
            if (p[i - 1] < p[i]) {
                best = std::min(best, p[i]);
            }
        }
        return best;
    }
    case Stat::h: {
        // largest bottom of a descent
        int best = 0;
        for (int i = 1; i < n; ++i) {
            if (p[i - 1] > p[i]) {
                best = std::max(best, p[i]);
            }
        }
        return best;
    }
    case Stat::s: {
        // largest bottom of an ascent
        int best = 0;
        for (int i = 0; i + 1 < n; ++i) {
            if (p[i] < p[i + 1]) {
                best = std::max(best, p[i]);
            }
        }
        return best;
    }
    case Stat::m: {
        // smallest entry with a smaller entry somewhere to its left
        int best = n + 1;
        int prefix_min = n + 1;
        for (int i = 0; i < n; ++i) {
            if (prefix_min < p[i]) {
                best = std::min(best, p[i]);
            }
            prefix_min = std::min(prefix_min, p[i]);
        }
        return best;
    }
    }
    return 0;
}

std::vector<RightToLeftMax> right_to_left_maxima(const Permutation& perm)
{
    std::vector<RightToLeftMax> out;
    int running = 0;
    for (std::size_t i = perm.entries().size(); i-- > 0;) {
        if (perm[i] > running) {
            out.push_back({i, perm[i]});
            running = perm[i];
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    do {
        out.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit)
{
    Permutation p = Permutation::identity(n);
    do {
        visit(p);
    } while (std::next_permutation(p.entries_.begin(), p.entries_.end()));
}

} // namespace permtree
