#pragma once

#include <compare>
#include <functional>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permtree {

/// A permutation of 1..n stored in one-line notation.
///
/// Positions used anywhere in this library are 0-based; values are 1-based.
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless `entries` is a permutation of 1..n.
    explicit Permutation(std::vector<int> entries);
    Permutation(std::initializer_list<int> entries);

    /// Accepts the compact digit form ("24135") and the comma form ("10,2,1,...").
    static Permutation parse(std::string_view text);

    static Permutation identity(int n);
    static Permutation decreasing(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int operator[](std::size_t pos) const { return entries_[pos]; }
    int back() const { return entries_.back(); }
    const std::vector<int>& entries() const { return entries_; }

    bool is_increasing() const;
    bool is_decreasing() const;

    /// Compact digits for n <= 9, comma separated otherwise.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> entries, Unchecked) : entries_(std::move(entries)) {}

    std::vector<int> entries_;

    friend Permutation append_child(const Permutation&, int);
    friend Permutation without_last(const Permutation&);
    friend Permutation standardize(const std::vector<int>&);
    friend void for_each_permutation(int, const std::function<void(const Permutation&)>&);
};

/// Child in the rightward generating tree: entries >= v are shifted up by one and v is appended.
/// Requires 1 <= v <= n+1.
Permutation append_child(const Permutation& perm, int v);

/// Removes the last entry and relabels the rest to 1..n-1.
Permutation without_last(const Permutation& perm);

/// The permutation order-isomorphic to a sequence of distinct integers.
Permutation standardize(const std::vector<int>& values);

/// The node statistics used as labels. `n` is the length itself.
enum class Stat { r, l, h, s, m, n };

char stat_name(Stat stat);
Stat parse_stat(char c);

/// Statistic value, with the degenerate conventions
/// l = m = n+1 on the decreasing permutation, h = 0 on the increasing one,
/// s = 0 on the decreasing one.
int statistic(const Permutation& perm, Stat which);

struct RightToLeftMax {
    std::size_t position;
    int value;
    friend bool operator==(const RightToLeftMax&, const RightToLeftMax&) = default;
};

/// Entries exceeding everything to their right, in left-to-right order.
std::vector<RightToLeftMax> right_to_left_maxima(const Permutation& perm);

/// All permutations of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Visits S_n in lexicographic order without materializing it.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

} // namespace permtree
