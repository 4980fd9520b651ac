#include "permtree/pattern.hpp"

#include <algorithm>

namespace permtree {

namespace {

bool letters_form_permutation(const std::vector<int>& letters)
{
    std::vector<bool> seen(letters.size() + 1, false);
    for (int x : letters) {
        if (x < 1 || x > static_cast<int>(letters.size()) || seen[x]) {
            return false;
        }
        seen[x] = true;
    }
    return true;
}

char mode_suffix(BarMode mode)
{
    switch (mode) {
    case BarMode::OddCount: return 'o';
    case BarMode::EvenCount: return 'e';
    case BarMode::Exists: break;
    }
    return '\0';
}

// Relative order of the chosen values must match the pattern letters.
bool order_isomorphic(const Permutation& perm, const GeneralizedPattern& pat, const IndexTuple& idx)
{
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            if ((perm[idx[a]] < perm[idx[b]]) != (pat.letters[a] < pat.letters[b])) {
                return false;
            }
        }
    }
    return true;
}

bool is_occurrence(const Permutation& perm, const GeneralizedPattern& pat, const IndexTuple& idx)
{
    if (idx.size() != pat.letters.size()) {
        return false;
    }
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= static_cast<std::size_t>(perm.size())) {
            return false;
        }
        if (j > 0) {
            if (idx[j] <= idx[j - 1]) {
                return false;
            }
            if (pat.adjacency[j - 1] && idx[j] != idx[j - 1] + 1) {
                return false;
            }
        }
    }
    return order_isomorphic(perm, pat, idx);
}

bool search(const Permutation& perm, const GeneralizedPattern& pat, IndexTuple& chosen,
            const std::function<bool(const IndexTuple&)>& visit)
{
    const std::size_t j = chosen.size();
    if (j == pat.letters.size()) {
        return visit(chosen);
    }
    const std::size_t n = perm.size();
    const std::size_t remaining = pat.letters.size() - j - 1;
    std::size_t lo = 0;
    std::size_t hi = n - remaining; // exclusive
    if (j > 0) {
        lo = chosen.back() + 1;
        if (pat.adjacency[j - 1]) {
            hi = std::min(hi, lo + 1);
        }
    }
    for (std::size_t i = lo; i < hi; ++i) {
        bool ok = true;
        for (std::size_t a = 0; a < j && ok; ++a) {
            ok = (perm[chosen[a]] < perm[i]) == (pat.letters[a] < pat.letters[j]);
        }
        if (!ok) {
            continue;
        }
        chosen.push_back(i);
        const bool keep_going = search(perm, pat, chosen, visit);
        chosen.pop_back();
        if (!keep_going) {
            return false;
        }
    }
    return true;
}

} // namespace

void GeneralizedPattern::validate() const
{
    if (letters.empty()) {
        throw std::invalid_argument("pattern must have at least one letter");
    }
    if (!letters_form_permutation(letters)) {
        throw std::invalid_argument("pattern letters are not a permutation of 1..k");
    }
    if (adjacency.size() + 1 != letters.size()) {
        throw std::invalid_argument("adjacency flags must number k-1");
    }
}

void BarredPattern::validate() const
{
    full.validate();
    const std::size_t k = full.letters.size();
    if (k < 2) {
        throw std::invalid_argument("barred pattern needs at least two letters");
    }
    if (barred_index != 0 && barred_index != k - 1) {
        throw std::invalid_argument("barred letter must be at an end of the pattern");
    }
    const std::size_t gap = barred_index == 0 ? 0 : k - 2;
    if (full.adjacency[gap]) {
        throw std::invalid_argument("barred letter must be separated by a dash");
    }
}

GeneralizedPattern BarredPattern::reduced() const
{
    std::vector<int> rest;
    for (std::size_t i = 0; i < full.letters.size(); ++i) {
        if (i != barred_index) {
            rest.push_back(full.letters[i]);
        }
    }
    GeneralizedPattern out;
    out.letters = standardize(rest).entries();
    if (barred_index == 0) {
        out.adjacency.assign(full.adjacency.begin() + 1, full.adjacency.end());
    } else {
        out.adjacency.assign(full.adjacency.begin(), full.adjacency.end() - 1);
    }
    return out;
}

PatternExpr parse_pattern(std::string_view text)
{
    if (text.empty()) {
        throw PatternParseError("empty pattern", 0);
    }
    std::vector<int> letters;
    std::vector<std::size_t> offsets;
    std::vector<bool> adjacency;
    bool expect_item = true; // at start or right after a dash
    bool barred = false;
    std::size_t bar_offset = 0;
    std::size_t bar_index = 0;
    BarMode mode = BarMode::Exists;

    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '-') {
            if (expect_item) {
                throw PatternParseError("dash must separate two letters", i);
            }
            adjacency.back() = false;
            expect_item = true;
            ++i;
            continue;
        }
        if (c >= '1' && c <= '9') {
            letters.push_back(c - '0');
            offsets.push_back(i);
            adjacency.push_back(true);
            expect_item = false;
            ++i;
            continue;
        }
        if (c == '[') {
            if (barred) {
                throw PatternParseError("at most one barred letter", i);
            }
            barred = true;
            bar_offset = i;
            if (i + 1 >= text.size() || text[i + 1] < '1' || text[i + 1] > '9') {
                throw PatternParseError("expected digit after '['", i + 1);
            }
            bar_index = letters.size();
            letters.push_back(text[i + 1] - '0');
            offsets.push_back(i + 1);
            adjacency.push_back(true);
            std::size_t j = i + 2;
            if (j < text.size() && (text[j] == 'o' || text[j] == 'e')) {
                mode = text[j] == 'o' ? BarMode::OddCount : BarMode::EvenCount;
                ++j;
            }
            if (j >= text.size() || text[j] != ']') {
                throw PatternParseError("expected ']'", j);
            }
            expect_item = false;
            i = j + 1;
            continue;
        }
        throw PatternParseError(std::string("unexpected character '") + c + "'", i);
    }
    if (expect_item) {
        throw PatternParseError("pattern ends with a dash", text.size());
    }
    adjacency.pop_back();

    const int k = static_cast<int>(letters.size());
    std::vector<bool> seen(k + 1, false);
    for (std::size_t j = 0; j < letters.size(); ++j) {
        if (letters[j] > k) {
            throw PatternParseError("letter " + std::to_string(letters[j]) + " exceeds pattern length " +
                                        std::to_string(k),
                                    offsets[j]);
        }
        if (seen[letters[j]]) {
            throw PatternParseError("repeated letter " + std::to_string(letters[j]), offsets[j]);
        }
        seen[letters[j]] = true;
    }

    GeneralizedPattern pat{std::move(letters), std::move(adjacency)};
    if (!barred) {
        return pat;
    }
    if (k < 2) {
        throw PatternParseError("barred pattern needs an unbarred remainder", bar_offset);
    }
    if (bar_index != 0 && bar_index + 1 != static_cast<std::size_t>(k)) {
        throw PatternParseError("barred letter must be at an end of the pattern", bar_offset);
    }
    const std::size_t gap = bar_index == 0 ? 0 : bar_index - 1;
    if (pat.adjacency[gap]) {
        throw PatternParseError("barred letter must be separated by a dash", bar_offset);
    }
    return BarredPattern{std::move(pat), bar_index, mode};
}

PatternSet parse_pattern_set(std::string_view text)
{
    PatternSet out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        std::size_t a = start;
        std::size_t b = end;
        while (a < b && text[a] == ' ') {
            ++a;
        }
        while (b > a && text[b - 1] == ' ') {
            --b;
        }
        try {
            out.push_back(parse_pattern(text.substr(a, b - a)));
        } catch (const PatternParseError& e) {
            // re-anchor the offset to the full set string
            const std::string msg = e.what();
            throw PatternParseError(msg.substr(0, msg.rfind(" at offset")), a + e.offset());
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string render(const GeneralizedPattern& pat)
{
    std::string out;
    for (std::size_t i = 0; i < pat.letters.size(); ++i) {
        if (i > 0 && !pat.adjacency[i - 1]) {
            out += '-';
        }
        out += static_cast<char>('0' + pat.letters[i]);
    }
    return out;
}

std::string render(const BarredPattern& pat)
{
    std::string out;
    for (std::size_t i = 0; i < pat.full.letters.size(); ++i) {
        if (i > 0 && !pat.full.adjacency[i - 1]) {
            out += '-';
        }
        const char digit = static_cast<char>('0' + pat.full.letters[i]);
        if (i == pat.barred_index) {
            out += '[';
            out += digit;
            if (const char s = mode_suffix(pat.mode)) {
                out += s;
            }
            out += ']';
        } else {
            out += digit;
        }
    }
    return out;
}

std::string render(const PatternExpr& pat)
{
    return std::visit([](const auto& p) { return render(p); }, pat);
}

std::string render(const PatternSet& pats)
{
    std::string out;
    for (std::size_t i = 0; i < pats.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += render(pats[i]);
    }
    return out;
}

void for_each_occurrence(const Permutation& perm, const GeneralizedPattern& pat,
                         const std::function<bool(const IndexTuple&)>& visit)
{
    if (pat.letters.empty() || pat.letters.size() > static_cast<std::size_t>(perm.size())) {
        return;
    }
    IndexTuple chosen;
    chosen.reserve(pat.letters.size());
    search(perm, pat, chosen, visit);
}

std::vector<IndexTuple> occurrences(const Permutation& perm, const GeneralizedPattern& pat)
{
    std::vector<IndexTuple> out;
    for_each_occurrence(perm, pat, [&](const IndexTuple& idx) {
        out.push_back(idx);
        return true;
    });
    return out;
}

bool contains(const Permutation& perm, const GeneralizedPattern& pat)
{
    bool found = false;
    for_each_occurrence(perm, pat, [&](const IndexTuple&) {
        found = true;
        return false;
    });
    return found;
}

int count_extensions(const Permutation& perm, const BarredPattern& pat, const IndexTuple& occ)
{
    const GeneralizedPattern reduced = pat.reduced();
    if (!is_occurrence(perm, reduced, occ)) {
        throw std::invalid_argument("index tuple is not an occurrence of the reduced pattern");
    }
    int count = 0;
    IndexTuple full(occ.size() + 1);
    if (pat.barred_index == 0) {
        std::copy(occ.begin(), occ.end(), full.begin() + 1);
        for (std::size_t j = 0; j < occ.front(); ++j) {
            full[0] = j;
            count += order_isomorphic(perm, pat.full, full) ? 1 : 0;
        }
    } else {
        std::copy(occ.begin(), occ.end(), full.begin());
        for (std::size_t j = occ.back() + 1; j < static_cast<std::size_t>(perm.size()); ++j) {
            full.back() = j;
            count += order_isomorphic(perm, pat.full, full) ? 1 : 0;
        }
    }
    return count;
}

bool avoids(const Permutation& perm, const PatternExpr& pat)
{
    if (const auto* g = std::get_if<GeneralizedPattern>(&pat)) {
        return !contains(perm, *g);
    }
    const auto& barred = std::get<BarredPattern>(pat);
    const GeneralizedPattern reduced = barred.reduced();
    bool ok = true;
    for_each_occurrence(perm, reduced, [&](const IndexTuple& occ) {
        const int c = count_extensions(perm, barred, occ);
        switch (barred.mode) {
        case BarMode::Exists: ok = c >= 1; break;
        case BarMode::OddCount: ok = c % 2 == 1; break;
        case BarMode::EvenCount: ok = c % 2 == 0; break;
        }
        return ok;
    });
    return ok;
}

bool avoids(const Permutation& perm, const PatternSet& pats)
{
    return std::all_of(pats.begin(), pats.end(), [&](const PatternExpr& p) { return avoids(perm, p); });
}

bool closed_under_last_deletion(const PatternSet& pats)
{
    return std::all_of(pats.begin(), pats.end(), [](const PatternExpr& p) {
        const auto* b = std::get_if<BarredPattern>(&p);
        return b == nullptr || b->barred_index == 0;
    });
}

} // namespace permtree
