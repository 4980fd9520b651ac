#pragma once

#include "permtree/big_number.hpp"
#include "permtree/enumerator.hpp"
#include "permtree/pattern.hpp"
#include "permtree/permutation.hpp"

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace permtree {

/// Label of a node: one to three integers. Unused slots are zero.
struct LabelVector {
    std::array<int, 3> values{};
    int arity = 1;

    LabelVector() = default;
    LabelVector(std::initializer_list<int> init);

    int operator[](int i) const { return values.at(static_cast<std::size_t>(i)); }
    friend auto operator<=>(const LabelVector&, const LabelVector&) = default;
    /// "(3)", "(2,1)", "(0,1,1)".
    std::string to_string() const;
};

enum class ClassId { C1, C2, C2e, C3, C4, C5, C6, C7, C8, C9, C10, C11 };

std::string class_name(ClassId id);
/// Accepts "C1".."C11" and "C2e", case-insensitive on the leading letter.
ClassId parse_class(std::string_view name);

struct ClassSpec {
    ClassId id;
    std::string pattern_text;
    PatternSet patterns;
    /// Statistics forming the label, in order; Stat::n means the length.
    std::vector<Stat> label_stats;
    LabelVector root;
    /// Statistics weighted by u and v in the refined series of this class.
    StatPair refined_stats;
    std::function<std::vector<LabelVector>(const LabelVector&)> children;
    /// Which case of the rule applies to a label.
    std::function<std::string(const LabelVector&)> branch;

    int label_arity() const { return static_cast<int>(label_stats.size()); }
};

/// All twelve registered classes, in ClassId order.
const std::vector<ClassSpec>& class_registry();
const ClassSpec& class_spec(ClassId id);
/// The registered class whose pattern set equals `pats` up to order, if any.
std::optional<ClassId> find_class(const PatternSet& pats);

LabelVector label_of(const ClassSpec& spec, const Permutation& perm);

/// Right-hand side of the rule, in rule order (multiset semantics).
std::vector<LabelVector> rule_children(const ClassSpec& spec, const LabelVector& label);

struct RuleDpResult {
    std::vector<BigInt> totals;           // lengths 1..nmax
    std::vector<std::size_t> state_counts; // distinct labels per length
};

RuleDpResult run_rule_dp(const ClassSpec& spec, int nmax);
std::vector<BigInt> count_by_rule(const ClassSpec& spec, int nmax);
/// Per-length polynomials sum of u^a v^b over labels, weighted by multiplicity.
/// Arity 1: u^r. C9: u^r (the length is the level). Other arity 2: u^a v^b.
/// Arity 3: u^s v^r.
std::vector<RefinedCount> refined_by_rule(const ClassSpec& spec, int nmax);

struct BranchStatus {
    std::size_t nodes = 0;
    std::size_t mismatches = 0;
};

struct RuleCounterexample {
    Permutation parent;
    LabelVector parent_label;
    std::vector<LabelVector> predicted;
    std::vector<LabelVector> actual;
};

struct RuleReport {
    ClassId id;
    int max_n = 0;
    bool match = true;
    bool root_matches = true;
    std::size_t nodes_checked = 0;
    std::map<std::string, BranchStatus> branches;
    std::set<LabelVector> reachable_labels;
    std::optional<RuleCounterexample> counterexample;
};

/// Expands the true tree to length nmax and compares, at every node of length
/// below nmax, the sorted child labels against the rule.
RuleReport verify_rule(const ClassSpec& spec, int nmax);

} // namespace permtree
