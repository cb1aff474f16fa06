// Command-line front end: construct family graphs, produce and verify
// labelings, evaluate bounds and radio numbers, solve exactly, and sweep
// the family. Exit codes: 0 success/consistent, 1 verification failure
// or bound inconsistency, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "radiolab/bounds.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/labeling.hpp"
#include "radiolab/plans.hpp"
#include "radiolab/solver.hpp"
#include "radiolab/spire.hpp"

namespace {

using namespace radiolab;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

SpireSpec parse_spec(const std::string& family, int n, int s) {
    auto variant = variant_from_name(family);
    if (!variant) throw InvalidSpec("unknown family '" + family + "'");
    SpireSpec spec{n, s, *variant};
    validate_spec(spec);
    return spec;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("RADIOLAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return value;
        std::cerr << "ignoring malformed RADIOLAB_BUDGET='" << env << "'\n";
    }
    return SolveOptions{}.budget;
}

// every valid normalized s for the family/order, smallest first
std::vector<SpireSpec> family_members(int n) {
    std::vector<SpireSpec> specs;
    for (Variant variant : {Variant::Plain, Variant::S1, Variant::S2, Variant::S12}) {
        int s_min = (variant == Variant::S2 || variant == Variant::S12) ? 3 : 2;
        for (int s = s_min; s <= normalized_s_max(n, variant); ++s) {
            SpireSpec spec{n, s, variant};
            if (spec_valid(spec)) specs.push_back(spec);
        }
    }
    return specs;
}

int run(int argc, char** argv) {
    CLI::App app{"radiolab: radio numbers of graphs of order n and diameter n-2"};
    app.require_subcommand(1);

    std::string family = "spire";
    int n = 0, s = 0;
    std::string format = "json";
    std::string graph_path, labeling_path, out_path, plan_path, method = "all";
    bool with_exact = false;
    int n_min = 4, n_max = 9;
    SolveOptions solve_options;
    solve_options.budget = default_budget();
    std::optional<int> target;

    auto add_spec_options = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "spire | s1 | s2 | s12")->required();
        cmd->add_option("--n", n, "order of the graph")->required();
        cmd->add_option("--s", s, "spire attachment index")->required();
    };

    CLI::App* construct = app.add_subcommand("construct", "emit a family graph");
    add_spec_options(construct);
    construct->add_option("--format", format, "json | dot");

    CLI::App* label = app.add_subcommand("label", "construct an optimal radio labeling");
    add_spec_options(label);
    label->add_option("--out", out_path, "write labeling JSON here instead of stdout");
    label->add_option("--plan", plan_path, "also write the ordering plan JSON");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a labeling file");
    verify_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
    verify_cmd->add_option("--labeling", labeling_path, "labeling JSON file")->required();

    CLI::App* rn_cmd = app.add_subcommand("rn", "radio number bounds and values");
    add_spec_options(rn_cmd);
    rn_cmd->add_option("--method", method, "formula | bounds | construct | exact | all");
    rn_cmd->add_flag("--exact", with_exact, "include the exact solver value (method all)");
    rn_cmd->add_option("--budget", solve_options.budget, "search node limit");
    rn_cmd->add_option("--target", target, "stop at the first labeling with span <= target");
    rn_cmd->add_option("--threads", solve_options.threads, "solver worker threads");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "CSV report over every family member in an order range.\n"
                 "Columns: family,n,s,formula,lb_generic,lb_closed,ub_constructive,"
                 "exact,consistent");
    sweep->add_option("--n-min", n_min, "smallest order")->required();
    sweep->add_option("--n-max", n_max, "largest order")->required();
    sweep->add_flag("--exact", with_exact, "solve each member exactly");
    sweep->add_option("--out", out_path, "write CSV here instead of stdout");
    sweep->add_option("--budget", solve_options.budget, "search node limit");
    sweep->add_option("--threads", solve_options.threads, "solver worker threads");

    CLI::App* classify_cmd = app.add_subcommand("classify", "recognize a family member");
    classify_cmd->add_option("--graph", graph_path, "graph JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // 0 is --help
    }

    if (construct->parsed()) {
        Graph g = build_spire(parse_spec(family, n, s));
        if (format == "dot")
            std::cout << graph_to_dot(g);
        else if (format == "json")
            std::cout << graph_to_json(g) << "\n";
        else
            throw std::invalid_argument("--format must be json or dot");
        return 0;
    }

    if (label->parsed()) {
        SpireSpec spec = normalize(parse_spec(family, n, s));
        OrderingPlan plan = plan_any(spec, solve_options);
        RadioLabeling labeling = plan.labeling();
        Graph g = build_spire(spec);
        if (!verify(g, labeling).empty()) {
            std::cerr << "internal error: constructed labeling fails verification\n";
            return 1;
        }
        std::string text = labeling_to_json(labeling);
        if (out_path.empty())
            std::cout << text << "\n";
        else
            write_file(out_path, text + "\n");
        if (!plan_path.empty()) write_file(plan_path, plan_to_json(plan) + "\n");
        std::cerr << "span " << labeling.span() << " on " << variant_name(spec.variant)
                  << "(n=" << spec.n << ", s=" << spec.s << ")\n";
        return 0;
    }

    if (verify_cmd->parsed()) {
        Graph g = graph_from_json(read_file(graph_path));
        RadioLabeling labeling = labeling_from_json(read_file(labeling_path), g.order());
        auto violations = verify(g, labeling);
        for (const auto& v : violations)
            std::cout << v.u << "\t" << v.v << "\t" << v.deficit << "\n";
        return violations.empty() ? 0 : 1;
    }

    if (rn_cmd->parsed()) {
        SpireSpec spec = normalize(parse_spec(family, n, s));
        nlohmann::json j;
        j["family"] = variant_name(spec.variant);
        j["n"] = spec.n;
        j["s"] = spec.s;
        if (method == "formula") {
            j["formula"] = rn_formula(spec);
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (method == "bounds") {
            Graph g = build_spire(spec);
            j["formula"] = rn_formula(spec);
            j["lb_generic"] =
                lower_bound_distance(g, edge_usage_caps(g, family_cut_groups(spec)));
            j["lb_closed"] = lower_bound_closed(spec);
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (method == "construct") {
            OrderingPlan plan = plan_any(spec, solve_options);
            Graph g = build_spire(spec);
            RadioLabeling labeling = plan.labeling();
            bool ok = verify(g, labeling).empty();
            j["formula"] = rn_formula(spec);
            j["ub_constructive"] = labeling.span();
            j["verified"] = ok;
            std::cout << j.dump() << "\n";
            return ok && labeling.span() == rn_formula(spec) ? 0 : 1;
        }
        if (method == "exact") {
            Graph g = build_spire(spec);
            SolveOptions opt = solve_options;
            opt.target = target;
            SolveResult result = rn_exact(g, opt);
            std::cout << solve_result_to_json(result) << "\n";
            return 0;
        }
        if (method == "all") {
            BoundReport report = bound_report(spec, with_exact, solve_options);
            std::cout << bound_report_to_json(report) << "\n";
            return report.consistent() ? 0 : 1;
        }
        throw std::invalid_argument("--method must be formula|bounds|construct|exact|all");
    }

    if (sweep->parsed()) {
        if (n_min < 4 || n_max < n_min)
            throw std::invalid_argument("need 4 <= n-min <= n-max");
        std::ostringstream csv;
        csv << "family,n,s,formula,lb_generic,lb_closed,ub_constructive,exact,consistent\n";
        bool all_consistent = true;
        for (int order = n_min; order <= n_max; ++order) {
            for (const SpireSpec& spec : family_members(order)) {
                BoundReport report = bound_report(spec, with_exact, solve_options);
                all_consistent &= report.consistent();
                csv << variant_name(spec.variant) << "," << spec.n << "," << spec.s << ","
                    << report.formula << "," << report.lb_generic << ","
                    << report.lb_closed << "," << report.ub_constructive << ",";
                if (report.exact) csv << *report.exact;
                csv << "," << (report.consistent() ? "true" : "false") << "\n";
            }
        }
        if (out_path.empty())
            std::cout << csv.str();
        else
            write_file(out_path, csv.str());
        return all_consistent ? 0 : 1;
    }

    if (classify_cmd->parsed()) {
        Graph g = graph_from_json(read_file(graph_path));
        auto spec = classify(g);
        nlohmann::json j;
        j["in_family"] = spec.has_value();
        if (spec) {
            j["family"] = variant_name(spec->variant);
            j["n"] = spec->n;
            j["s"] = spec->s;
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
