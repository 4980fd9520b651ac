#include "permtree/cli.hpp"

#include "permtree/bijections.hpp"
#include "permtree/enumerator.hpp"
#include "permtree/generating_functions.hpp"
#include "permtree/succession.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace permtree::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CountOptions {
    std::string avoid;
    std::string class_name;
    int max_n = 8;
    std::string method = "tree";
    std::string format = "text";
    unsigned workers = 1;
};

struct VerifyOptions {
    std::string class_name = "all";
    int max_n = 8;
    int order = 12;
    std::string format = "text";
};

struct ExpandOptions {
    std::string gf;
    int order = 10;
    std::string at_u;
    std::string at_v;
    std::string format = "text";
};

struct BijectOptions {
    std::string map;
    std::string input;
};

struct ReportOptions {
    int max_n = 8;
    std::string format = "text";
    unsigned workers = 1;
};

// Bad input that should end in exit status 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Rational parse_rational(const std::string& text)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        const BigInt den(text.substr(slash + 1));
        if (den == 0) {
            throw UsageError("zero denominator in '" + text + "'");
        }
        return Rational(BigInt(text.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
        throw UsageError("not a rational number: '" + text + "'");
    }
}

std::vector<ClassId> selected_classes(const std::string& name)
{
    if (name == "all") {
        std::vector<ClassId> out;
        for (const auto& spec : class_registry()) {
            out.push_back(spec.id);
        }
        return out;
    }
    return {parse_class(name)};
}

std::vector<BigInt> gf_counts(ClassId id, int max_n)
{
    const Series s = closed_form(gf_for_class(id).name, max_n, Substitution::at_one());
    std::vector<BigInt> out;
    for (int n = 1; n <= max_n; ++n) {
        const Rational c = s[n].constant_term();
        if (boost::multiprecision::denominator(c) != 1 || !s[n].is_constant()) {
            throw std::logic_error("non-integer coefficient in " + gf_for_class(id).name);
        }
        out.push_back(boost::multiprecision::numerator(c));
    }
    return out;
}

void print_counts(std::ostream& out, const std::vector<BigInt>& counts, const CountOptions& opt,
                  const std::string& label)
{
    if (opt.format == "json") {
        Json j;
        j["set"] = label;
        j["method"] = opt.method;
        Json arr = Json::array();
        for (const auto& c : counts) {
            arr.push_back(to_string(c));
        }
        j["counts"] = arr;
        out << j.dump() << '\n';
    } else if (opt.format == "csv") {
        out << "n,count\n";
        for (std::size_t i = 0; i < counts.size(); ++i) {
            out << i + 1 << ',' << to_string(counts[i]) << '\n';
        }
    } else {
        for (std::size_t i = 0; i < counts.size(); ++i) {
            out << (i ? " " : "") << to_string(counts[i]);
        }
        out << '\n';
    }
}

int run_count(const CountOptions& opt, std::ostream& out)
{
    if (opt.max_n < 1) {
        throw UsageError("--max-n must be at least 1");
    }
    PatternSet pats;
    std::optional<ClassId> id;
    std::string label;
    if (!opt.class_name.empty()) {
        id = parse_class(opt.class_name);
        pats = class_spec(*id).patterns;
        label = class_name(*id);
    } else {
        pats = parse_pattern_set(opt.avoid);
        id = find_class(pats);
        label = render(pats);
    }
    std::vector<BigInt> counts;
    if (opt.method == "brute") {
        for (int n = 1; n <= opt.max_n; ++n) {
            counts.push_back(count_brute(pats, n));
        }
    } else if (opt.method == "tree") {
        counts = count_tree(pats, opt.max_n, opt.workers);
    } else {
        if (!id) {
            throw UsageError("--method " + opt.method + " needs a registered class; '" + render(pats) +
                             "' is not one (use --method brute or tree)");
        }
        counts = opt.method == "rule" ? count_by_rule(class_spec(*id), opt.max_n) : gf_counts(*id, opt.max_n);
    }
    print_counts(out, counts, opt, label);
    return exit_ok;
}

std::string label_list(const std::vector<LabelVector>& labels)
{
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += (i ? " " : "") + labels[i].to_string();
    }
    return out + "]";
}

Json label_json(const std::vector<LabelVector>& labels)
{
    Json arr = Json::array();
    for (const auto& l : labels) {
        arr.push_back(l.to_string());
    }
    return arr;
}

int run_verify(const VerifyOptions& opt, std::ostream& out)
{
    if (opt.max_n < 1 || opt.max_n > default_brute_guard) {
        throw UsageError("--max-n must be in 1.." + std::to_string(default_brute_guard));
    }
    if (opt.order < 1) {
        throw UsageError("--order must be at least 1");
    }
    bool all_ok = true;
    Json rows = Json::array();
    for (ClassId id : selected_classes(opt.class_name)) {
        const ClassSpec& spec = class_spec(id);
        const RuleReport report = verify_rule(spec, opt.max_n);
        const GfInfo& gf = gf_for_class(id);
        const IdentityResult ident =
            verify_identity(gf.name, candidate_series(id, opt.order, gf.pairing), opt.order, gf.pairing);
        all_ok = all_ok && report.match && ident.ok;
        if (opt.format == "json") {
            Json row;
            row["class"] = class_name(id);
            row["max_n"] = opt.max_n;
            row["rule_match"] = report.match;
            row["nodes"] = report.nodes_checked;
            Json branches = Json::object();
            for (const auto& [name, status] : report.branches) {
                branches[name] = {{"nodes", status.nodes}, {"mismatches", status.mismatches}};
            }
            row["branches"] = branches;
            row["reachable"] =
                label_json(std::vector<LabelVector>(report.reachable_labels.begin(), report.reachable_labels.end()));
            if (report.counterexample) {
                const auto& ce = *report.counterexample;
                row["counterexample"] = {{"parent", ce.parent.to_string()},
                                         {"label", ce.parent_label.to_string()},
                                         {"predicted", label_json(ce.predicted)},
                                         {"actual", label_json(ce.actual)}};
            } else {
                row["counterexample"] = nullptr;
            }
            row["gf"] = gf.name;
            row["identity_ok"] = ident.ok;
            row["identity_order"] = ident.checked_order;
            if (ident.residual) {
                row["residual"] = {{"t_order", ident.residual->t_order},
                                   {"coeff", ident.residual->coeff.to_string()},
                                   {"check", ident.residual->check}};
            } else {
                row["residual"] = nullptr;
            }
            rows.push_back(row);
            continue;
        }
        out << class_name(id) << " rule n<=" << opt.max_n << ": " << (report.match ? "match" : "MISMATCH") << " ("
            << report.nodes_checked << " nodes";
        for (const auto& [name, status] : report.branches) {
            out << "; " << name << ' ' << status.nodes;
            if (status.mismatches) {
                out << " (" << status.mismatches << " bad)";
            }
        }
        out << "; " << report.reachable_labels.size() << " labels)\n";
        if (report.counterexample) {
            const auto& ce = *report.counterexample;
            out << "  parent " << ce.parent.to_string() << " label " << ce.parent_label.to_string() << ": predicted "
                << label_list(ce.predicted) << " actual " << label_list(ce.actual) << '\n';
        }
        out << class_name(id) << " identity " << gf.name << " to t^" << opt.order << ": "
            << (ident.ok ? "ok" : "FAIL");
        if (ident.residual) {
            out << " (" << ident.residual->check << " residual at t^" << ident.residual->t_order << ": "
                << ident.residual->coeff.to_string() << ")";
        }
        out << '\n';
    }
    if (opt.format == "json") {
        Json j;
        j["match"] = all_ok;
        j["classes"] = rows;
        out << j.dump() << '\n';
    }
    return all_ok ? exit_ok : exit_mismatch;
}

Json series_json(const Series& s)
{
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k) {
        const Poly& p = s[k];
        const int du = p.u_degree();
        const int dv = p.v_degree();
        Json grid = Json::array();
        for (int a = 0; a <= du; ++a) {
            Json row = Json::array();
            for (int b = 0; b <= dv; ++b) {
                row.push_back(to_string(p.coeff(a, b)));
            }
            grid.push_back(row);
        }
        coeffs.push_back(grid);
    }
    return coeffs;
}

int run_expand(const ExpandOptions& opt, std::ostream& out)
{
    if (opt.order < 0) {
        throw UsageError("--order must be non-negative");
    }
    gf_info(opt.gf);
    Substitution subst;
    if (!opt.at_u.empty()) {
        subst.u = parse_rational(opt.at_u);
    }
    if (!opt.at_v.empty()) {
        subst.v = parse_rational(opt.at_v);
    }
    const Series s = closed_form(opt.gf, opt.order, subst);
    if (opt.format == "json") {
        Json j;
        j["gf"] = opt.gf;
        j["order"] = opt.order;
        j["u"] = opt.at_u.empty() ? Json(nullptr) : Json(opt.at_u);
        j["v"] = opt.at_v.empty() ? Json(nullptr) : Json(opt.at_v);
        j["coeffs"] = series_json(s);
        out << j.dump() << '\n';
    } else {
        out << s.to_string() << '\n';
    }
    return exit_ok;
}

int run_biject(const BijectOptions& opt, std::ostream& out)
{
    const std::string& in = opt.input;
    std::string result;
    if (opt.map == "phi") {
        result = phi(Permutation::parse(in));
    } else if (opt.map == "phi-inverse") {
        result = phi_inverse(in).to_string();
    } else if (opt.map == "callan") {
        result = callan(in);
    } else if (opt.map == "callan-inverse") {
        result = callan_inverse(in);
    } else if (opt.map == "udu-uuu") {
        result = udu_to_uuu(in);
    } else if (opt.map == "uuu-udu") {
        result = uuu_to_udu(in);
    } else if (opt.map == "subdiag") {
        result = subdiag(Permutation::parse(in));
    } else {
        result = subdiag_inverse(in).to_string();
    }
    out << result << '\n';
    return exit_ok;
}

struct ReportRow {
    ClassId id;
    int n;
    std::optional<BigInt> brute;
    BigInt tree;
    BigInt rule;
    BigInt gf;
    bool agree;
};

std::vector<ReportRow> report_class(ClassId id, int max_n)
{
    const ClassSpec& spec = class_spec(id);
    const auto tree = count_tree(spec.patterns, max_n);
    const auto rule = count_by_rule(spec, max_n);
    const auto gf = gf_counts(id, max_n);
    std::vector<ReportRow> rows;
    for (int n = 1; n <= max_n; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        ReportRow row{id, n, std::nullopt, tree[i], rule[i], gf[i], false};
        if (n <= default_brute_guard) {
            row.brute = count_brute(spec.patterns, n);
        }
        row.agree = row.tree == row.rule && row.rule == row.gf && (!row.brute || *row.brute == row.tree);
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_report(const ReportOptions& opt, std::ostream& out)
{
    if (opt.max_n < 1) {
        throw UsageError("--max-n must be at least 1");
    }
    std::vector<std::vector<ReportRow>> per_class;
    if (opt.workers > 1) {
        std::vector<std::future<std::vector<ReportRow>>> jobs;
        for (const auto& spec : class_registry()) {
            jobs.push_back(std::async(std::launch::async, report_class, spec.id, opt.max_n));
        }
        for (auto& job : jobs) {
            per_class.push_back(job.get());
        }
    } else {
        for (const auto& spec : class_registry()) {
            per_class.push_back(report_class(spec.id, opt.max_n));
        }
    }
    bool all_agree = true;
    for (const auto& rows : per_class) {
        for (const auto& row : rows) {
            all_agree = all_agree && row.agree;
        }
    }
    const auto brute_text = [](const ReportRow& row) { return row.brute ? to_string(*row.brute) : std::string(); };
    if (opt.format == "json") {
        Json rows = Json::array();
        for (const auto& cls : per_class) {
            for (const auto& row : cls) {
                Json counts;
                counts["brute"] = row.brute ? Json(to_string(*row.brute)) : Json(nullptr);
                counts["tree"] = to_string(row.tree);
                counts["rule"] = to_string(row.rule);
                counts["gf"] = to_string(row.gf);
                rows.push_back({{"class", class_name(row.id)}, {"n", row.n}, {"counts", counts}, {"agree", row.agree}});
            }
        }
        Json j;
        j["agree"] = all_agree;
        j["rows"] = rows;
        out << j.dump() << '\n';
    } else if (opt.format == "csv") {
        out << "class,n,brute,tree,rule,gf,agree\n";
        for (const auto& cls : per_class) {
            for (const auto& row : cls) {
                out << class_name(row.id) << ',' << row.n << ',' << brute_text(row) << ',' << to_string(row.tree)
                    << ',' << to_string(row.rule) << ',' << to_string(row.gf) << ',' << (row.agree ? "true" : "false")
                    << '\n';
            }
        }
    } else {
        const int w = 12;
        out << std::left << std::setw(6) << "class" << std::setw(4) << "n" << std::setw(w) << "brute" << std::setw(w)
            << "tree" << std::setw(w) << "rule" << std::setw(w) << "gf"
            << "agree\n";
        for (const auto& cls : per_class) {
            for (const auto& row : cls) {
                out << std::setw(6) << class_name(row.id) << std::setw(4) << row.n << std::setw(w)
                    << (row.brute ? brute_text(row) : "-") << std::setw(w) << to_string(row.tree) << std::setw(w)
                    << to_string(row.rule) << std::setw(w) << to_string(row.gf) << (row.agree ? "yes" : "NO")
                    << '\n';
            }
        }
        out << (all_agree ? "all rows agree" : "DISAGREEMENT") << '\n';
    }
    return all_agree ? exit_ok : exit_mismatch;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pattern-avoidance enumeration via rightward generating trees"};
    app.name("permtree");
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "csv", "json"};

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "Count avoiders of lengths 1..max-n");
    auto* avoid = count->add_option("--avoid", count_opt.avoid, "Comma-separated pattern set");
    auto* cls = count->add_option("--class", count_opt.class_name, "Registered class C1..C11 or C2e");
    avoid->excludes(cls);
    count->add_option("--max-n", count_opt.max_n, "Largest length")->required();
    count->add_option("--method", count_opt.method)->check(CLI::IsMember({"brute", "tree", "rule", "gf"}));
    count->add_option("--format", count_opt.format)->check(CLI::IsMember(formats));
    count->add_option("--workers", count_opt.workers, "Threads for tree expansion")->check(CLI::PositiveNumber);

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Check succession rules and generating-function identities");
    verify->add_option("--class", verify_opt.class_name, "C1..C11, C2e or all");
    verify->add_option("--max-n", verify_opt.max_n, "Tree depth for rule checks");
    verify->add_option("--order", verify_opt.order, "Series order for identity checks");
    verify->add_option("--format", verify_opt.format)->check(CLI::IsMember({"text", "json"}));

    ExpandOptions expand_opt;
    auto* expand = app.add_subcommand("expand", "Expand a registered generating function");
    expand->add_option("--gf", expand_opt.gf, "Generating function name")->required();
    expand->add_option("--order", expand_opt.order, "Truncation order");
    expand->add_option("--at-u", expand_opt.at_u, "Value for u (rational); symbolic if omitted");
    expand->add_option("--at-v", expand_opt.at_v, "Value for v (rational); symbolic if omitted");
    expand->add_option("--format", expand_opt.format)->check(CLI::IsMember({"text", "json"}));

    BijectOptions biject_opt;
    auto* biject = app.add_subcommand("biject", "Apply one of the bijections");
    biject->add_option("--map", biject_opt.map)
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inverse", "callan", "callan-inverse", "udu-uuu", "uuu-udu", "subdiag",
                               "subdiag-inverse"}));
    biject->add_option("--input", biject_opt.input, "Permutation or path")->required();

    ReportOptions report_opt;
    auto* report = app.add_subcommand("report", "Four-way count agreement for every registered class");
    report->add_option("--max-n", report_opt.max_n, "Largest length");
    report->add_option("--format", report_opt.format)->check(CLI::IsMember(formats));
    report->add_option("--workers", report_opt.workers, "Classes processed in parallel when > 1")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (count->parsed()) {
            if (count_opt.avoid.empty() && count_opt.class_name.empty()) {
                throw UsageError("count needs --avoid or --class");
            }
            return run_count(count_opt, out);
        }
        if (verify->parsed()) {
            return run_verify(verify_opt, out);
        }
        if (expand->parsed()) {
            return run_expand(expand_opt, out);
        }
        if (biject->parsed()) {
            return run_biject(biject_opt, out);
        }
        return run_report(report_opt, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_mismatch;
    }
}

} // namespace permtree::cli
