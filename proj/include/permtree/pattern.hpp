#pragma once

#include "permtree/permutation.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace permtree {

/// A generalized (vincular) pattern: letters form a permutation of 1..k and
/// adjacency[j] says whether letters j and j+1 must sit in consecutive positions.
struct GeneralizedPattern {
    std::vector<int> letters;
    std::vector<bool> adjacency;

    int length() const { return static_cast<int>(letters.size()); }

    /// Throws std::invalid_argument if the invariants do not hold.
    void validate() const;

    friend bool operator==(const GeneralizedPattern&, const GeneralizedPattern&) = default;
};

enum class BarMode { Exists, OddCount, EvenCount };

/// A pattern with one barred letter at either end, separated by a dash.
///
/// A permutation avoids it when every occurrence of the reduced pattern extends
/// to an occurrence of `full` in a number of ways allowed by `mode`
/// (at least one / odd / even, zero counting as even).
struct BarredPattern {
    GeneralizedPattern full;
    std::size_t barred_index = 0;
    BarMode mode = BarMode::Exists;

    void validate() const;
    GeneralizedPattern reduced() const;

    friend bool operator==(const BarredPattern&, const BarredPattern&) = default;
};

using PatternExpr = std::variant<GeneralizedPattern, BarredPattern>;
using PatternSet = std::vector<PatternExpr>;

/// Parse failure, with the character offset into the input.
class PatternParseError : public std::invalid_argument {
public:
    PatternParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Grammar: item (sep item)*, item := DIGIT | '[' DIGIT ('o'|'e')? ']', sep := '-' | ''.
PatternExpr parse_pattern(std::string_view text);

/// Comma-separated list of patterns. Whitespace around items is ignored.
PatternSet parse_pattern_set(std::string_view text);

std::string render(const GeneralizedPattern& pat);
std::string render(const BarredPattern& pat);
std::string render(const PatternExpr& pat);
std::string render(const PatternSet& pats);

using IndexTuple = std::vector<std::size_t>;

/// Calls `visit` for each occurrence in lexicographic order until it returns false.
void for_each_occurrence(const Permutation& perm, const GeneralizedPattern& pat,
                         const std::function<bool(const IndexTuple&)>& visit);

/// Every occurrence as 0-based index tuples, lexicographically ordered.
std::vector<IndexTuple> occurrences(const Permutation& perm, const GeneralizedPattern& pat);

bool contains(const Permutation& perm, const GeneralizedPattern& pat);

/// Number of positions for the barred letter that turn `occ` (an occurrence of
/// the reduced pattern) into an occurrence of the full pattern.
/// Throws std::invalid_argument if `occ` is not an occurrence of the reduced pattern.
int count_extensions(const Permutation& perm, const BarredPattern& pat, const IndexTuple& occ);

bool avoids(const Permutation& perm, const PatternExpr& pat);
bool avoids(const Permutation& perm, const PatternSet& pats);

/// Whether avoiders of `pats` are closed under deletion of the last entry for
/// structural reasons: no barred letter sits at the right end.
bool closed_under_last_deletion(const PatternSet& pats);

} // namespace permtree
