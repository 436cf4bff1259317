#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toid/enumerate.hpp"
#include "toid/families.hpp"
#include "toid/graph6.hpp"
#include "toid/prufer.hpp"

namespace {

using namespace toid;

std::string slurp(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string trimmed(std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && issp(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && issp(s[i])) ++i;
    return s.substr(i);
}

// --input accepts a file path, "-" for stdin, or (for graph6) the string itself.
Tree load_tree(const std::string& input, const std::string& format) {
    if (input.empty()) throw std::invalid_argument("--input is required");
    std::string text;
    if (input == "-") {
        text = slurp(std::cin);
    } else if (std::ifstream f{input}; f) {
        text = slurp(f);
    } else if (format == "graph6") {
        text = input;  // inline literal
    } else {
        throw std::invalid_argument("cannot open input file '" + input + "'");
    }
    if (format == "graph6") return tree_from_graph6(trimmed(text));
    return parse_edge_list(text);
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write to '" + path + "'");
    f << content;
}

std::string join_ids(const std::vector<int>& ids) {
    if (ids.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(ids[i]);
    }
    return out;
}

int cmd_compute(const Tree& t, bool json, const std::string& output) {
    auto br = bounds(t);
    auto tree_sol = gamma_tree_dp(t);
    auto sub = subdivide(t);
    auto sub_sol = gamma_tree_dp(sub.graph);
    std::string out;
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = br.n;
        j["l"] = br.l;
        j["s"] = br.s;
        j["gamma_tree"] = tree_sol.value;
        j["witness_tree"] = tree_sol.witness;
        j["gamma_subdivided"] = sub_sol.value;
        j["witness_subdivided"] = sub_sol.witness;
        j["lower_numerator"] = br.lower_numerator;
        j["upper_numerator"] = br.upper_numerator;
        j["attains_lower"] = br.attains_lower;
        j["attains_upper"] = br.attains_upper;
        out = j.dump(2) + "\n";
    } else {
        out += "n=" + std::to_string(br.n) + " l=" + std::to_string(br.l) +
               " s=" + std::to_string(br.s) + "\n";
        out += "gamma_toi(T) = " + std::to_string(tree_sol.value) +
               "   witness: " + join_ids(tree_sol.witness) + "\n";
        out += "gamma_toi(S(T)) = " + std::to_string(sub_sol.value) +
               "   witness: " + join_ids(sub_sol.witness) + "\n";
        out += "lower bound (4n-l-s)/3 = " + std::to_string(br.lower_numerator) +
               "/3, attained: " + (br.attains_lower ? "yes" : "no") + "\n";
        out += "upper bound (4n-l+s-2)/3 = " + std::to_string(br.upper_numerator) +
               "/3, attained: " + (br.attains_upper ? "yes" : "no") + "\n";
    }
    write_out(output, out);
    return 0;
}

int cmd_classify(const Tree& t, std::optional<int> p2_support, bool json,
                 const std::string& output) {
    auto c = classify(t, t.n == 2 ? p2_support : std::nullopt);
    std::string out;
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = t.n;
        j["l"] = c.leaf_count();
        j["s"] = c.support_count();
        j["leaves"] = c.leaves;
        j["supports"] = c.supports;
        j["strong_supports"] = c.strong_supports;
        j["strong_leaves"] = c.strong_leaves;
        j["weak_leaves"] = c.weak_leaves;
        j["semi_supports"] = c.semi_supports;
        j["near_semi_supports"] = c.near_semi_supports;
        if (c.p2_support) j["p2_support"] = *c.p2_support;
        out = j.dump(2) + "\n";
    } else {
        out += "n=" + std::to_string(t.n) + " l=" + std::to_string(c.leaf_count()) +
               " s=" + std::to_string(c.support_count()) + "\n";
        out += "leaves:             " + join_ids(c.leaves) + "\n";
        out += "supports:           " + join_ids(c.supports) + "\n";
        out += "strong supports:    " + join_ids(c.strong_supports) + "\n";
        out += "strong leaves:      " + join_ids(c.strong_leaves) + "\n";
        out += "weak leaves:        " + join_ids(c.weak_leaves) + "\n";
        out += "semi-supports:      " + join_ids(c.semi_supports) + "\n";
        out += "near-semi-supports: " + join_ids(c.near_semi_supports) + "\n";
        if (c.p2_support)
            out += "designated support: " + std::to_string(*c.p2_support) + "\n";
    }
    write_out(output, out);
    return 0;
}

int cmd_subdivide(const Tree& t, bool json, const std::string& output) {
    auto s = subdivide(t);
    std::string out;
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = s.graph.n;
        j["graph6"] = to_graph6(s.graph);
        j["edges"] = edge_list(s.graph);
        auto ev = nlohmann::ordered_json::array();
        for (const auto& [e, x] : s.edge_vertices)
            ev.push_back({{"u", e.first}, {"v", e.second}, {"vertex", x}});
        j["edge_vertices"] = ev;
        out = j.dump(2) + "\n";
    } else {
        out = format_edge_list(s.graph);
    }
    write_out(output, out);
    return 0;
}

int cmd_recognize(const Tree& t, Family fam, bool json, const std::string& output) {
    auto trace = recognize_structural(t, fam);
    std::string out;
    if (json) {
        nlohmann::ordered_json j;
        j["family"] = fam == Family::lower ? "lower" : "upper";
        j["member"] = trace.accepted;
        if (trace.accepted) j["script"] = script_to_json(trace.script);
        out = j.dump(2) + "\n";
    } else {
        out += std::string("member: ") + (trace.accepted ? "yes" : "no") + "\n";
        if (trace.accepted) out += "script: " + script_to_string(trace.script) + "\n";
    }
    write_out(output, out);
    return 0;
}

int cmd_generate(const std::string& script_arg, const std::string& family_arg,
                 int steps, std::uint64_t seed, bool json, const std::string& output) {
    OperationScript script;
    if (!script_arg.empty()) {
        std::string text = script_arg;
        if (text[0] != '{') {
            std::ifstream f(script_arg);
            if (!f)
                throw std::invalid_argument("cannot open script file '" + script_arg + "'");
            text = slurp(f);
        }
        script = script_from_string(text);
    } else {
        Family fam = family_arg == "lower" ? Family::lower : Family::upper;
        script = random_script(fam, steps, seed);
    }
    Tree t = replay(script);
    std::string out;
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = t.n;
        j["graph6"] = to_graph6(t);
        j["edges"] = edge_list(t);
        j["script"] = script_to_json(script);
        out = j.dump(2) + "\n";
    } else {
        out = format_edge_list(t);
    }
    write_out(output, out);
    return 0;
}

int cmd_verify(int max_n, int workers, std::uint64_t seed,
               const std::string& checks_arg, const std::string& report_path,
               const std::string& csv_path, bool json) {
    SweepConfig cfg;
    cfg.max_n = max_n;
    cfg.workers = workers;
    cfg.seed = seed;
    if (!checks_arg.empty()) {
        cfg.checks.clear();
        std::istringstream in(checks_arg);
        std::string name;
        while (std::getline(in, name, ',')) cfg.checks.insert(check_from_name(name));
    }
    auto rep = run_sweep(cfg);
    if (!report_path.empty()) write_out(report_path, report_json(rep).dump(2) + "\n");
    if (!csv_path.empty()) write_out(csv_path, report_csv(rep));
    if (json) {
        std::cout << report_json(rep).dump(2) << "\n";
    } else {
        std::cout << "n  trees  lower  upper  both\n";
        for (const auto& row : rep.per_n)
            std::cout << row.n << "  " << row.trees << "  " << row.lower << "  "
                      << row.upper << "  " << row.both << "\n";
        for (const auto& [name, tally] : rep.tallies)
            std::cout << name << ": " << (tally.checked - tally.failed) << "/"
                      << tally.checked << " ok\n";
        std::size_t shown = 0;
        for (const auto& ce : rep.counterexamples) {
            if (++shown > 10) {
                std::cout << "... and " << rep.counterexamples.size() - 10 << " more\n";
                break;
            }
            std::cout << "FAIL " << ce.check << " n=" << ce.n << " " << ce.graph6
                      << ": " << ce.detail << "\n";
        }
        std::cout << (rep.clean() ? "all checks passed\n" : "counterexamples found\n");
    }
    return rep.clean() ? 0 : 1;
}

int cmd_members(int n, const std::string& which_arg, bool json,
                const std::string& output) {
    MemberFilter which = MemberFilter::lower;
    if (which_arg == "upper") which = MemberFilter::upper;
    else if (which_arg == "both") which = MemberFilter::both;
    else if (which_arg == "neither") which = MemberFilter::neither;
    else if (which_arg != "lower")
        throw std::invalid_argument("--which must be lower, upper, both or neither");
    auto ts = find_members(n, which);
    std::string out;
    if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& t : ts) j.push_back(to_graph6(t));
        out = j.dump(2) + "\n";
    } else {
        for (const auto& t : ts) out += to_graph6(t) + "\n";
    }
    write_out(output, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact total outer-independent domination on trees and their subdivisions"};
    app.require_subcommand(1);

    std::string input, format = "edgelist", output, family, script_arg, checks_arg;
    std::string csv_path, which = "lower";
    bool json = false;
    int max_n = 10, steps = 8, n_members = 0, p2_support_arg = -1;
    int workers = 1;
    std::uint64_t seed = 0x5eed;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "edge-list/graph6 file, '-' for stdin, or an inline graph6 string");
        cmd->add_option("--format", format, "input format: edgelist or graph6")
            ->check(CLI::IsMember({"edgelist", "graph6"}));
        cmd->add_flag("--json", json, "machine-readable output");
        cmd->add_option("--output", output, "write to this file instead of stdout");
    };

    auto* compute = app.add_subcommand(
        "compute", "gamma of the tree and of its subdivision, with the sandwich bounds");
    add_input(compute);

    auto* cls = app.add_subcommand("classify", "leaf/support/semi-support classes");
    add_input(cls);
    cls->add_option("--p2-support", p2_support_arg,
                    "designated support of the two-vertex tree (0 or 1)");

    auto* sub = app.add_subcommand("subdivide", "print the subdivision graph");
    add_input(sub);

    auto* rec = app.add_subcommand(
        "recognize", "structural family membership with a replayable script");
    add_input(rec);
    rec->add_option("--family", family, "lower or upper")
        ->required()
        ->check(CLI::IsMember({"lower", "upper"}));

    auto* gen = app.add_subcommand(
        "generate", "replay a script, or draw a seeded random family member");
    gen->add_option("--script", script_arg, "script JSON (inline or a file path)");
    gen->add_option("--family", family, "lower or upper (random mode)")
        ->check(CLI::IsMember({"lower", "upper"}));
    gen->add_option("--steps", steps, "number of random steps")->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "random seed");
    gen->add_flag("--json", json, "machine-readable output");
    gen->add_option("--output", output, "write to this file instead of stdout");

    auto* ver = app.add_subcommand("verify",
                                   "exhaustive checks over all trees up to --max-n");
    ver->add_option("--max-n", max_n, "largest vertex count (default 10)")
        ->check(CLI::Range(2, 16));
    ver->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    ver->add_option("--seed", seed, "seed for the sampled checks");
    ver->add_option("--checks", checks_arg, "comma-separated subset of checks");
    ver->add_option("--output", output, "write the JSON report here");
    ver->add_option("--csv", csv_path, "write the per-n CSV summary here");
    ver->add_flag("--json", json, "print the JSON report to stdout");

    auto* mem = app.add_subcommand("members",
                                   "all n-vertex trees filtered by bound attainment");
    mem->add_option("--n", n_members, "vertex count")->required()->check(CLI::Range(2, 14));
    mem->add_option("--which", which, "lower, upper, both or neither")
        ->check(CLI::IsMember({"lower", "upper", "both", "neither"}));
    mem->add_flag("--json", json, "machine-readable output");
    mem->add_option("--output", output, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are input errors
    }

    try {
        if (compute->parsed()) return cmd_compute(load_tree(input, format), json, output);
        if (cls->parsed()) {
            std::optional<int> p2;
            if (p2_support_arg >= 0) p2 = p2_support_arg;
            return cmd_classify(load_tree(input, format), p2, json, output);
        }
        if (sub->parsed()) return cmd_subdivide(load_tree(input, format), json, output);
        if (rec->parsed())
            return cmd_recognize(load_tree(input, format),
                                 family == "lower" ? Family::lower : Family::upper,
                                 json, output);
        if (gen->parsed()) {
            if (script_arg.empty() && family.empty())
                throw std::invalid_argument("generate needs --script or --family");
            if (!script_arg.empty() && !family.empty())
                throw std::invalid_argument("--script and --family are mutually exclusive");
            return cmd_generate(script_arg, family, steps, seed, json, output);
        }
        if (ver->parsed())
            return cmd_verify(max_n, workers, seed, checks_arg, output, csv_path, json);
        if (mem->parsed()) return cmd_members(n_members, which, json, output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
