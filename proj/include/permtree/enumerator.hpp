#pragma once

#include "permtree/big_number.hpp"
#include "permtree/pattern.hpp"
#include "permtree/permutation.hpp"
#include "permtree/poly.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace permtree {

inline constexpr int default_brute_guard = 10;

/// The class is not closed under deleting the last entry, so the rightward
/// tree does not reach all of its members.
class ClosureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// |S_n(pats)| by filtering all of S_n.
/// Throws std::out_of_range when n < 1 or n > guard.
BigInt count_brute(const PatternSet& pats, int n, int guard = default_brute_guard);

/// Children of `perm` in the rightward generating tree of the class.
std::vector<Permutation> tree_children(const Permutation& perm, const PatternSet& pats);

/// Breadth-first walk of the rightward tree from "1": `visit(n, level)` is
/// called for n = 1..nmax with the level in deterministic order.
/// Levels are split across `workers` threads; the output does not depend on it.
void walk_tree(const PatternSet& pats, int nmax, const std::function<void(int, const std::vector<Permutation>&)>& visit,
               unsigned workers = 1);

/// Level sizes for lengths 1..nmax. Throws ClosureError if the class cannot be
/// generated by the rightward tree.
std::vector<BigInt> count_tree(const PatternSet& pats, int nmax, unsigned workers = 1);

/// Structural check, then exhaustive deletion check up to length min(nmax, 6).
void check_closure(const PatternSet& pats, int nmax);

struct StatPair {
    Stat u;
    std::optional<Stat> v;
};

/// Selects the sub-series splits used in the kernel-method derivations.
/// Theta1..Theta4 partition the (s, r) labels: s<r!=1, (0,1), s>r=1, s>r>1,
/// with u playing s and v playing r.
enum class SeriesFilter { None, UGreaterV, ULessV, UEqualV, VEqualsOne, Theta1, Theta2, Theta3, Theta4 };

SeriesFilter parse_filter(std::string_view name);
bool filter_accepts(SeriesFilter filter, int a, int b);

/// Coefficient of t^n in a refined generating function: sum of u^a v^b.
struct RefinedCount {
    int n;
    Poly poly;
};

std::vector<RefinedCount> refined_series(const PatternSet& pats, StatPair stats, SeriesFilter filter, int nmax,
                                         unsigned workers = 1);

} // namespace permtree
