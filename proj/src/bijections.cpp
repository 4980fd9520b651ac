#include "permtree/bijections.hpp"

#include "permtree/lattice_path.hpp"
#include "permtree/pattern.hpp"

#include <algorithm>
#include <vector>

namespace permtree {

namespace {

const PatternSet& avoid_213()
{
    static const PatternSet pats = parse_pattern_set("2-1-3");
    return pats;
}

const PatternSet& odd_class()
{
    static const PatternSet pats = parse_pattern_set("2-1-3, [2o]-31");
    return pats;
}

// Rebuilds the unique 2-1-3 avoider with the given right-to-left maxima:
// every other value, largest first, takes the rightmost free slot left of the
// smallest maximum exceeding it.
Permutation fill_from_maxima(int n, const std::vector<RightToLeftMax>& maxima)
{
    std::vector<int> slots(static_cast<std::size_t>(n), 0);
    std::vector<bool> is_max(static_cast<std::size_t>(n) + 1, false);
    for (const auto& m : maxima) {
        slots[m.position] = m.value;
        is_max[static_cast<std::size_t>(m.value)] = true;
    }
    for (int value = n; value >= 1; --value) {
        if (is_max[static_cast<std::size_t>(value)]) {
            continue;
        }
        // maxima values decrease left to right, so scan from the right
        std::size_t bound = 0;
        for (auto it = maxima.rbegin(); it != maxima.rend(); ++it) {
            if (it->value > value) {
                bound = it->position;
                break;
            }
        }
        std::size_t slot = bound;
        while (slot > 0 && slots[slot - 1] != 0) {
            --slot;
        }
        if (slot == 0) {
            throw BijectionError("no free position for value " + std::to_string(value));
        }
        slots[slot - 1] = value;
    }
    return Permutation(std::move(slots));
}

void check_maxima(int n, const std::vector<RightToLeftMax>& maxima)
{
    if (maxima.empty() || maxima.front().value != n || maxima.back().position != static_cast<std::size_t>(n - 1)) {
        throw BijectionError("path does not describe right-to-left maxima of a permutation");
    }
    for (std::size_t j = 0; j < maxima.size(); ++j) {
        if (maxima[j].value < 1) {
            throw BijectionError("path drives a maximum below 1");
        }
    }
}

std::string swap_reverse(std::string_view path)
{
    std::string out(path.rbegin(), path.rend());
    for (char& c : out) {
        c = c == 'U' ? 'D' : 'U';
    }
    return out;
}

} // namespace

std::string phi(const Permutation& perm)
{
    if (perm.size() == 0 || !avoids(perm, avoid_213())) {
        throw BijectionError("phi needs a nonempty 2-1-3-avoiding permutation, got " + perm.to_string());
    }
    const auto maxima = right_to_left_maxima(perm);
    std::string out;
    std::size_t prev = 0;
    for (std::size_t j = 0; j < maxima.size(); ++j) {
        out.append(maxima[j].position + 1 - prev, 'U');
        prev = maxima[j].position + 1;
        const int next = j + 1 < maxima.size() ? maxima[j + 1].value : 0;
        out.append(static_cast<std::size_t>(maxima[j].value - next), 'D');
    }
    return out;
}

Permutation phi_inverse(std::string_view dyck)
{
    if (dyck.empty() || !path_is(dyck, PathKind::Dyck)) {
        throw BijectionError("phi_inverse needs a nonempty Dyck path, got '" + std::string(dyck) + "'");
    }
    // runs U^a D^b: positions are prefix sums of a, values suffix sums of b
    std::vector<std::pair<int, int>> runs;
    for (std::size_t i = 0; i < dyck.size();) {
        int a = 0;
        int b = 0;
        for (; i < dyck.size() && dyck[i] == 'U'; ++i) {
            ++a;
        }
        for (; i < dyck.size() && dyck[i] == 'D'; ++i) {
            ++b;
        }
        runs.emplace_back(a, b);
    }
    const int n = static_cast<int>(dyck.size() / 2);
    std::vector<RightToLeftMax> maxima(runs.size());
    int position = 0;
    for (std::size_t j = 0; j < runs.size(); ++j) {
        position += runs[j].first;
        maxima[j].position = static_cast<std::size_t>(position - 1);
    }
    int value = 0;
    for (std::size_t j = runs.size(); j-- > 0;) {
        value += runs[j].second;
        maxima[j].value = value;
    }
    check_maxima(n, maxima);
    return fill_from_maxima(n, maxima);
}

std::string callan(std::string_view dyck)
{
    if (dyck.empty() || !is_udu_free_dyck(dyck)) {
        throw BijectionError("callan needs a nonempty UDU-free Dyck path, got '" + std::string(dyck) + "'");
    }
    std::string s(dyck);
    s.push_back('D');
    const auto partner = match_steps(s);
    std::vector<bool> erase(s.size(), false);
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i - 1] == 'D' && s[i] == 'D' && s[i + 1] == 'D') {
            erase[i] = true;
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (erase[i]) {
            s[partner[i]] = 'H';
        }
    }
    std::string kept;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!erase[i]) {
            kept.push_back(s[i]);
        }
    }
    std::string out;
    for (std::size_t i = 0; i < kept.size();) {
        if (kept.compare(i, 3, "UDD") == 0) {
            out.push_back('D');
            i += 3;
        } else {
            out.push_back(kept[i]);
            ++i;
        }
    }
    if (out.empty() || out.back() != 'D') {
        throw std::logic_error("callan: appended step lost");
    }
    out.pop_back();
    return out;
}

std::string callan_inverse(std::string_view motzkin)
{
    if (!path_is(motzkin, PathKind::Motzkin)) {
        throw BijectionError("callan_inverse needs a Motzkin path, got '" + std::string(motzkin) + "'");
    }
    std::string s;
    for (char c : std::string(motzkin) + "D") {
        s += c == 'D' ? std::string("UDD") : std::string(1, c);
    }
    for (std::size_t p = s.size(); p-- > 0;) {
        if (s[p] != 'H') {
            continue;
        }
        s[p] = 'U';
        int balance = 0;
        std::size_t q = p + 1;
        for (; q < s.size(); ++q) {
            if (s[q] == 'U') {
                ++balance;
            } else if (s[q] == 'D') {
                if (balance == 0) {
                    break;
                }
                --balance;
            }
        }
        s.insert(q, 1, 'D');
    }
    s.pop_back();
    return s;
}

std::string udu_to_uuu(std::string_view dyck)
{
    if (dyck.empty() || !is_udu_free_dyck(dyck)) {
        throw BijectionError("udu_to_uuu needs a nonempty UDU-free Dyck path, got '" + std::string(dyck) + "'");
    }
    const std::string s(dyck);
    const auto partner = match_steps(s);
    const std::size_t len = s.size();
    std::vector<bool> marked(len, false);
    for (std::size_t i = 1; i + 1 < len; ++i) {
        marked[i] = s[i - 1] == 'D' && s[i] == 'D' && s[i + 1] == 'D';
    }
    if (len >= 2 && s[len - 1] == 'D' && s[len - 2] == 'D') {
        marked[len - 1] = true;
    }
    std::vector<bool> carries(len, false);
    for (std::size_t i = 0; i < len; ++i) {
        if (marked[i]) {
            carries[partner[i]] = true;
        }
    }
    std::string moved;
    for (std::size_t i = 0; i < len; ++i) {
        if (marked[i]) {
            continue;
        }
        moved.push_back(s[i]);
        if (carries[i]) {
            moved.push_back('D');
        }
    }
    const std::size_t peak = moved.rfind("UD");
    moved.erase(peak, 2);
    return swap_reverse(moved);
}

std::string uuu_to_udu(std::string_view dyck)
{
    if (!is_uuu_free_dyck(dyck)) {
        throw BijectionError("uuu_to_udu needs a UUU-free Dyck path, got '" + std::string(dyck) + "'");
    }
    const std::string base = swap_reverse(dyck) + "UD";
    // steps carry a mark so moved D steps keep their identity
    std::vector<std::pair<char, bool>> s;
    for (std::size_t i = 0; i < base.size(); ++i) {
        const bool mark = i > 0 && i + 1 < base.size() && base[i - 1] == 'U' && base[i] == 'D' && base[i + 1] == 'U';
        s.emplace_back(base[i], mark);
    }
    for (;;) {
        auto it = std::find_if(s.rbegin(), s.rend(), [](const auto& step) { return step.second; });
        if (it == s.rend()) {
            break;
        }
        const std::size_t p = static_cast<std::size_t>(s.rend() - it) - 1;
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(p));
        int balance = 0;
        std::size_t q = p;
        for (; q < s.size(); ++q) {
            if (s[q].first == 'U') {
                ++balance;
            } else {
                if (balance == 0) {
                    break;
                }
                --balance;
            }
        }
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(q), {'D', false});
    }
    std::string out;
    for (const auto& step : s) {
        out.push_back(step.first);
    }
    return out;
}

std::string subdiag(const Permutation& perm)
{
    if (perm.size() == 0 || !avoids(perm, odd_class())) {
        throw BijectionError("subdiag needs a nonempty member of {2-1-3, [2o]-31}, got " + perm.to_string());
    }
    const auto maxima = right_to_left_maxima(perm);
    std::string out;
    std::size_t prev = 0;
    for (std::size_t j = 0; j < maxima.size(); ++j) {
        out.append(maxima[j].position + 1 - prev, 'E');
        prev = maxima[j].position + 1;
        int rise = maxima[j].value / 2;
        if (j + 1 < maxima.size()) {
            const int gap = maxima[j].value - maxima[j + 1].value;
            if (gap % 2 != 0) {
                throw std::logic_error("class member with an odd gap between right-to-left maxima: " +
                                       perm.to_string());
            }
            rise = gap / 2;
        }
        out.append(static_cast<std::size_t>(rise), 'N');
    }
    return out;
}

Permutation subdiag_inverse(std::string_view path)
{
    if (path.empty() || !path_is(path, PathKind::Subdiagonal)) {
        throw BijectionError("subdiag_inverse needs a nonempty subdiagonal path, got '" + std::string(path) + "'");
    }
    // runs E^e N^a: each E-run ends at a maximum
    std::vector<std::pair<int, int>> runs;
    for (std::size_t i = 0; i < path.size();) {
        int e = 0;
        int a = 0;
        for (; i < path.size() && path[i] == 'E'; ++i) {
            ++e;
        }
        for (; i < path.size() && path[i] == 'N'; ++i) {
            ++a;
        }
        runs.emplace_back(e, a);
    }
    const int n = static_cast<int>(std::count(path.begin(), path.end(), 'E'));
    std::vector<RightToLeftMax> maxima(runs.size());
    int position = 0;
    int value = n;
    for (std::size_t j = 0; j < runs.size(); ++j) {
        position += runs[j].first;
        maxima[j] = {static_cast<std::size_t>(position - 1), value};
        value -= 2 * runs[j].second;
    }
    check_maxima(n, maxima);
    if (maxima.back().value / 2 != runs.back().second) {
        throw BijectionError("final rise does not match the last maximum");
    }
    return fill_from_maxima(n, maxima);
}

} // namespace permtree
