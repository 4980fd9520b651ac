#include "permtree/succession.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace permtree {

LabelVector::LabelVector(std::initializer_list<int> init) : arity(static_cast<int>(init.size()))
{
    if (init.size() < 1 || init.size() > 3) {
        throw std::invalid_argument("label arity must be 1, 2 or 3");
    }
    std::copy(init.begin(), init.end(), values.begin());
}

std::string LabelVector::to_string() const
{
    std::string out = "(";
    for (int i = 0; i < arity; ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(values[static_cast<std::size_t>(i)]);
    }
    return out + ")";
}

namespace {

using Labels = std::vector<LabelVector>;

// Arity-1 rules on r.

Labels c1_children(const LabelVector& x)
{
    const int r = x[0];
    Labels out;
    for (int j = 1; j < r; ++j) {
        out.push_back({j});
    }
    out.push_back({r + 1});
    return out;
}

Labels c2_children(const LabelVector& x)
{
    const int r = x[0];
    Labels out;
    for (int j = 1; j <= r + 1; ++j) {
        if ((r - j) % 2 != 0) {
            out.push_back({j});
        }
    }
    return out;
}

Labels c2e_children(const LabelVector& x)
{
    const int r = x[0];
    Labels out;
    for (int j = 1; j <= r; ++j) {
        if ((r - j) % 2 == 0) {
            out.push_back({j});
        }
    }
    out.push_back({r + 1});
    return out;
}

Labels c3_children(const LabelVector& x)
{
    const int r = x[0];
    if (r == 1) {
        return {{1}, {2}};
    }
    return {{r - 1}, {r}, {r + 1}};
}

// Arity-2 rules.

Labels c4_children(const LabelVector& x)
{
    const int l = x[0];
    const int r = x[1];
    Labels out;
    if (l == r) {
        for (int j = 1; j <= l; ++j) {
            out.push_back({l + 1, j});
        }
    } else if (l > r) {
        for (int j = 1; j <= r; ++j) {
            out.push_back({l + 1, j});
        }
        out.push_back({r + 1, r + 1});
    }
    return out;
}

Labels c5_children(const LabelVector& x)
{
    const int h = x[0];
    const int r = x[1];
    Labels out;
    for (int j = h + 1; j <= r; ++j) {
        out.push_back({j, j});
    }
    out.push_back({h, r + 1});
    return out;
}

Labels c6_children(const LabelVector& x)
{
    const int s = x[0];
    const int r = x[1];
    Labels out;
    if (s < r) {
        for (int j = 1; j <= s; ++j) {
            out.push_back({s + 1, j});
        }
        out.push_back({s, s + 1});
        out.push_back({r, r + 1});
    } else if (s > r) {
        out.push_back({s + 1, r + 1});
    }
    return out;
}

Labels c7_children(const LabelVector& x)
{
    const int m = x[0];
    const int r = x[1];
    if (r == 1) {
        return {{m + 1, 1}, {2, 2}};
    }
    if (m == 2 && r == 2) {
        return {{3, 1}, {2, 2}, {2, 3}};
    }
    Labels out;
    if (m < r) {
        out.push_back({m + 1, 1});
        out.push_back({2, 2});
        for (int j = m + 1; j <= r; ++j) {
            out.push_back({m, j});
        }
    }
    return out;
}

Labels c8_children(const LabelVector& x)
{
    const int l = x[0];
    const int r = x[1];
    Labels out;
    if (l > r) {
        for (int j = 1; j <= r; ++j) {
            out.push_back({l + 1, j});
        }
        out.push_back({r + 1, r + 1});
    } else {
        for (int j = 1; j <= l; ++j) {
            out.push_back({l + 1, j});
        }
        for (int j = l + 1; j <= std::max(r, l + 1); ++j) {
            out.push_back({l, j});
        }
    }
    return out;
}

// Rules carrying the length n as the last component.

Labels c9_children(const LabelVector& x)
{
    const int r = x[0];
    const int n = x[1];
    if (r == 1) {
        return {{1, n + 1}, {n + 1, n + 1}};
    }
    Labels out;
    for (int j = 1; j <= r; ++j) {
        out.push_back({j, n + 1});
    }
    return out;
}

// s < r != 1 case shared by C10 and C11.
Labels theta1_children(int s, int r, int n)
{
    Labels out;
    for (int j = 1; j <= s; ++j) {
        out.push_back({s + 1, j, n + 1});
    }
    for (int j = s + 1; j <= r; ++j) {
        out.push_back({s, j, n + 1});
    }
    return out;
}

Labels c10_children(const LabelVector& x)
{
    const int s = x[0];
    const int r = x[1];
    const int n = x[2];
    if (s < r && r != 1) {
        return theta1_children(s, r, n);
    }
    if (s == 0 && r == 1) {
        return {{0, 1, n + 1}, {1, n + 1, n + 1}};
    }
    if (s > r && r == 1) {
        return {{s, n + 1, n + 1}};
    }
    return {};
}

Labels c11_children(const LabelVector& x)
{
    const int s = x[0];
    const int r = x[1];
    const int n = x[2];
    if (s < r && r != 1) {
        return theta1_children(s, r, n);
    }
    Labels out;
    if (s == 0 && r == 1) {
        out.push_back({0, 1, n + 1});
        for (int j = 2; j <= n + 1; ++j) {
            out.push_back({1, j, n + 1});
        }
    } else if (s > r && r == 1) {
        for (int j = 2; j <= s; ++j) {
            out.push_back({s + 1, j, n + 1});
        }
        for (int j = s + 1; j <= n + 1; ++j) {
            out.push_back({s, j, n + 1});
        }
    }
    return out;
}

std::string cmp_branch(int a, int b, const char* name_a, const char* name_b)
{
    const char* op = a < b ? "<" : (a > b ? ">" : "=");
    return std::string(name_a) + op + name_b;
}

std::string theta_branch(const LabelVector& x)
{
    const int s = x[0];
    const int r = x[1];
    if (s < r && r != 1) {
        return "s<r!=1";
    }
    if (s == 0 && r == 1) {
        return "(s,r)=(0,1)";
    }
    if (s > r && r == 1) {
        return "s>r=1";
    }
    if (s > r) {
        return "s>r>1";
    }
    return "other";
}

ClassSpec make_spec(ClassId id, std::string pattern_text, std::vector<Stat> stats, LabelVector root, StatPair refined,
                    std::function<Labels(const LabelVector&)> children,
                    std::function<std::string(const LabelVector&)> branch)
{
    ClassSpec spec{id,   pattern_text,      parse_pattern_set(pattern_text), std::move(stats), root, refined,
                   std::move(children), std::move(branch)};
    return spec;
}

std::vector<ClassSpec> build_registry()
{
    const auto r_only = [](const LabelVector& x) { return x[0] == 1 ? std::string("r=1") : std::string("r>1"); };
    const auto single = [](const LabelVector&) { return std::string("all"); };
    std::vector<ClassSpec> out;
    out.push_back(make_spec(ClassId::C1, "2-1-3, [2]-31", {Stat::r}, {1}, {Stat::r, {}}, c1_children, single));
    out.push_back(make_spec(ClassId::C2, "2-1-3, [2o]-31", {Stat::r}, {1}, {Stat::r, {}}, c2_children, single));
    out.push_back(make_spec(ClassId::C2e, "2-1-3, [2e]-31", {Stat::r}, {1}, {Stat::r, {}}, c2e_children, single));
    out.push_back(
        make_spec(ClassId::C3, "2-1-3, 2-3-41, 3-2-41", {Stat::r}, {1}, {Stat::r, {}}, c3_children, r_only));
    out.push_back(make_spec(ClassId::C4, "2-1-3, 12-3", {Stat::l, Stat::r}, {2, 1}, {Stat::l, Stat::r}, c4_children,
                            [](const LabelVector& x) { return cmp_branch(x[0], x[1], "l", "r"); }));
    out.push_back(make_spec(ClassId::C5, "2-1-3, 32-1", {Stat::h, Stat::r}, {0, 1}, {Stat::h, Stat::r}, c5_children,
                            single));
    out.push_back(make_spec(ClassId::C6, "2-1-3, 34-21", {Stat::s, Stat::r}, {0, 1}, {Stat::s, Stat::r}, c6_children,
                            [](const LabelVector& x) { return cmp_branch(x[0], x[1], "s", "r"); }));
    out.push_back(make_spec(ClassId::C7, "1-2-34, 2-1-3", {Stat::m, Stat::r}, {2, 1}, {Stat::m, Stat::r}, c7_children,
                            [](const LabelVector& x) {
                                if (x[1] == 1) {
                                    return std::string("r=1");
                                }
                                if (x[0] == 2 && x[1] == 2) {
                                    return std::string("m=r=2");
                                }
                                return x[0] < x[1] ? std::string("m<r") : std::string("other");
                            }));
    out.push_back(make_spec(ClassId::C8, "12-34, 2-1-3", {Stat::l, Stat::r}, {2, 1}, {Stat::l, Stat::r}, c8_children,
                            [](const LabelVector& x) { return cmp_branch(x[0], x[1], "l", "r"); }));
    out.push_back(make_spec(ClassId::C9, "1-23, 3-12", {Stat::r, Stat::n}, {1, 1}, {Stat::r, {}}, c9_children,
                            r_only));
    out.push_back(make_spec(ClassId::C10, "1-23, 3-12, 34-21", {Stat::s, Stat::r, Stat::n}, {0, 1, 1},
                            {Stat::s, Stat::r}, c10_children, theta_branch));
    out.push_back(make_spec(ClassId::C11, "1-23, 34-21", {Stat::s, Stat::r, Stat::n}, {0, 1, 1}, {Stat::s, Stat::r},
                            c11_children, theta_branch));
    return out;
}

std::vector<std::string> canonical(const PatternSet& pats)
{
    std::vector<std::string> out;
    out.reserve(pats.size());
    for (const auto& p : pats) {
        out.push_back(render(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Poly label_monomial(const ClassSpec& spec, const LabelVector& x, const BigInt& weight)
{
    switch (spec.label_arity()) {
    case 1: return Poly::monomial(Rational(weight), x[0], 0);
    case 2:
        if (spec.label_stats[1] == Stat::n) {
            return Poly::monomial(Rational(weight), x[0], 0);
        }
        return Poly::monomial(Rational(weight), x[0], x[1]);
    default: return Poly::monomial(Rational(weight), x[0], x[1]);
    }
}

} // namespace

std::string class_name(ClassId id)
{
    static const char* const names[] = {"C1", "C2", "C2e", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11"};
    return names[static_cast<int>(id)];
}

ClassId parse_class(std::string_view name)
{
    std::string key(name);
    if (!key.empty()) {
        key[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(key[0])));
    }
    for (const auto& spec : class_registry()) {
        if (class_name(spec.id) == key) {
            return spec.id;
        }
    }
    throw std::invalid_argument("unknown class '" + std::string(name) + "' (expected C1..C11 or C2e)");
}

const std::vector<ClassSpec>& class_registry()
{
    static const std::vector<ClassSpec> registry = build_registry();
    return registry;
}

const ClassSpec& class_spec(ClassId id)
{
    return class_registry().at(static_cast<std::size_t>(id));
}

std::optional<ClassId> find_class(const PatternSet& pats)
{
    const auto key = canonical(pats);
    for (const auto& spec : class_registry()) {
        if (canonical(spec.patterns) == key) {
            return spec.id;
        }
    }
    return std::nullopt;
}

LabelVector label_of(const ClassSpec& spec, const Permutation& perm)
{
    LabelVector out;
    out.arity = spec.label_arity();
    for (int i = 0; i < out.arity; ++i) {
        out.values[static_cast<std::size_t>(i)] = statistic(perm, spec.label_stats[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<LabelVector> rule_children(const ClassSpec& spec, const LabelVector& label)
{
    return spec.children(label);
}

RuleDpResult run_rule_dp(const ClassSpec& spec, int nmax)
{
    RuleDpResult out;
    std::map<LabelVector, BigInt> level{{spec.root, 1}};
    for (int n = 1; n <= nmax; ++n) {
        BigInt total = 0;
        for (const auto& [label, mult] : level) {
            total += mult;
        }
        out.totals.push_back(total);
        out.state_counts.push_back(level.size());
        if (n == nmax) {
            break;
        }
        std::map<LabelVector, BigInt> next;
        for (const auto& [label, mult] : level) {
            for (const auto& child : spec.children(label)) {
                next[child] += mult;
            }
        }
        level = std::move(next);
    }
    return out;
}

std::vector<BigInt> count_by_rule(const ClassSpec& spec, int nmax)
{
    return run_rule_dp(spec, nmax).totals;
}

std::vector<RefinedCount> refined_by_rule(const ClassSpec& spec, int nmax)
{
    std::vector<RefinedCount> out;
    std::map<LabelVector, BigInt> level{{spec.root, 1}};
    for (int n = 1; n <= nmax; ++n) {
        Poly poly;
        for (const auto& [label, mult] : level) {
            poly += label_monomial(spec, label, mult);
        }
        out.push_back({n, std::move(poly)});
        if (n == nmax) {
            break;
        }
        std::map<LabelVector, BigInt> next;
        for (const auto& [label, mult] : level) {
            for (const auto& child : spec.children(label)) {
                next[child] += mult;
            }
        }
        level = std::move(next);
    }
    return out;
}

RuleReport verify_rule(const ClassSpec& spec, int nmax)
{
    RuleReport report;
    report.id = spec.id;
    report.max_n = nmax;
    const Permutation root{1};
    report.root_matches = label_of(spec, root) == spec.root;
    report.match = report.root_matches;
    std::vector<Permutation> level{root};
    for (int n = 1; n <= nmax; ++n) {
        std::vector<Permutation> next;
        for (const auto& parent : level) {
            const LabelVector label = label_of(spec, parent);
            report.reachable_labels.insert(label);
            if (n == nmax) {
                continue;
            }
            auto kids = tree_children(parent, spec.patterns);
            std::vector<LabelVector> actual;
            actual.reserve(kids.size());
            for (const auto& kid : kids) {
                actual.push_back(label_of(spec, kid));
            }
            auto predicted = spec.children(label);
            std::sort(actual.begin(), actual.end());
            std::sort(predicted.begin(), predicted.end());
            auto& status = report.branches[spec.branch(label)];
            ++status.nodes;
            ++report.nodes_checked;
            if (actual != predicted) {
                ++status.mismatches;
                report.match = false;
                if (!report.counterexample) {
                    report.counterexample = RuleCounterexample{parent, label, predicted, actual};
                }
            }
            next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
        }
        level = std::move(next);
    }
    return report;
}

} // namespace permtree
