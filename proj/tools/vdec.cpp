#include "vdec/colorer.hpp"
#include "vdec/enumerate.hpp"
#include "vdec/exact.hpp"
#include "vdec/io.hpp"
#include "vdec/reducer.hpp"
#include "vdec/survey.hpp"
#include "vdec/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using json = nlohmann::json;

namespace {

int exit_code_for(vdec::Errc code) {
    switch (code) {
        case vdec::Errc::HypothesisViolated: return 2;
        case vdec::Errc::ParseError:
        case vdec::Errc::NotConnected:
        case vdec::Errc::HasCycle:
        case vdec::Errc::SelfLoop:
        case vdec::Errc::DuplicateEdge:
        case vdec::Errc::VertexOutOfRange:
        case vdec::Errc::TooSmall: return 3;
        case vdec::Errc::InternalCaseExhaustion: return 4;
        case vdec::Errc::BudgetExceeded: return 5;
        case vdec::Errc::StructurallyUncolorable: return 6;
        default: return 1;
    }
}

json step_to_json(const vdec::ReductionStep& step) {
    json j;
    j["kind"] = vdec::step_kind_name(step.kind);
    j["removed_vertices"] = step.removed_vertices;
    auto edges_json = [](const std::vector<vdec::Edge>& edges) {
        json arr = json::array();
        for (const auto& e : edges) arr.push_back({e.u, e.v});
        return arr;
    };
    j["removed_edges"] = edges_json(step.removed_edges);
    j["added_edges"] = edges_json(step.added_edges);
    j["extension_recipe"] = step.extension_recipe;
    return j;
}

int cmd_color(const std::string& input, const std::string& out_path, bool equitable,
              const std::string& trace_path, const std::string& dot_path) {
    vdec::Tree tree = vdec::as_tree(vdec::read_edge_list_file(input));
    vdec::ChiPrediction pred = vdec::predict_chi_s(tree);
    vdec::ColorerStats stats;
    std::vector<vdec::ReductionStep> trace;
    vdec::EdgeColoring coloring =
        vdec::color_tree(tree, &stats, trace_path.empty() ? nullptr : &trace);
    if (equitable) coloring = vdec::equitable_finish(tree, coloring);
    vdec::EdgeColoring out = vdec::relabel_consecutive(coloring);

    if (!out_path.empty()) vdec::write_coloring_file(out_path, out);
    if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        for (const auto& step : trace) tf << step_to_json(step).dump() << "\n";
    }
    if (!dot_path.empty()) {
        std::ofstream df(dot_path);
        vdec::write_dot(df, tree.graph, &out);
    }
    if (out_path.empty()) vdec::write_coloring(std::cout, out);
    std::cout << "chi=" << out.palette << " regime=" << vdec::regime_name(pred.regime) << "\n";
    return 0;
}

int cmd_exact(const std::string& input, const std::string& out_path, bool equitable,
              int max_palette, long long budget) {
    vdec::SimpleGraph g = vdec::read_edge_list_file(input);
    vdec::SolverConfig cfg;
    cfg.max_palette = max_palette;
    cfg.node_budget = budget;
    vdec::ExactResult result = equitable ? vdec::exact_chi_es(g, cfg) : vdec::exact_chi_s(g, cfg);
    vdec::EdgeColoring out = vdec::relabel_consecutive(result.witness);
    if (!out_path.empty())
        vdec::write_coloring_file(out_path, out);
    else
        vdec::write_coloring(std::cout, out);
    std::cout << (equitable ? "chi_es=" : "chi_s=") << result.chi
              << " nodes=" << result.nodes_explored << "\n";
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
    vdec::SimpleGraph g = vdec::read_edge_list_file(graph_path);
    vdec::EdgeColoring c = vdec::read_coloring_file(coloring_path);
    vdec::VdecReport report = vdec::verify(g, c);
    std::cout << "proper=" << (report.proper ? "true" : "false")
              << " distinguishing=" << (report.distinguishing ? "true" : "false")
              << " equitable=" << (report.equitable ? "true" : "false")
              << " palette=" << c.palette << " colors_used=" << report.colors_used << "\n";
    if (report.violation)
        std::cout << "violation=" << vdec::violation_to_string(*report.violation) << "\n";
    return report.is_vdec() ? 0 : 1;
}

int cmd_classify(const std::string& input) {
    vdec::Tree tree = vdec::as_tree(vdec::read_edge_list_file(input));
    vdec::TreeShape shape = vdec::classify_tree(tree);
    std::cout << "D=" << tree.diameter << " ";
    if (const auto* star = std::get_if<vdec::Star>(&shape)) {
        std::cout << "shape=Star leaves=" << star->leaves;
    } else if (const auto* ds = std::get_if<vdec::DoubleStar>(&shape)) {
        std::cout << "shape=DoubleStar m=" << ds->m << " n=" << ds->n;
    } else if (const auto* q = std::get_if<vdec::DiamFour>(&shape)) {
        std::cout << "shape=DiamFour r=" << q->r << " m=" << q->m << " legs=";
        for (size_t i = 0; i < q->legs.size(); ++i) std::cout << (i ? "," : "") << q->legs[i];
        std::cout << " center=" << q->center;
    } else {
        std::cout << "shape=General";
    }
    std::cout << " canonical_id=" << vdec::canonical_id(tree) << "\n";
    return 0;
}

int cmd_bound(const std::string& input, const std::string& json_path, bool all_spanning,
              bool try_lift) {
    vdec::SimpleGraph g = vdec::read_edge_list_file(input);
    vdec::BoundReport report = all_spanning ? vdec::bound_report_best(g) : vdec::bound_report(g);

    json j;
    j["cor1_bound"] = report.cor1_bound ? json(*report.cor1_bound) : json(nullptr);
    j["cor1_raised"] = report.cor1_raised;
    j["cor2_bound"] = report.cor2_bound;
    j["cotree_colors"] = report.cotree_colors;
    j["tree_chi"] = report.tree_chi;

    if (try_lift && g.edge_count() >= g.vertex_count()) {
        vdec::SplitResult split = vdec::split_nontree_edges(g, vdec::bfs_spanning_tree(g));
        bool lifted = false;
        try {
            vdec::EdgeColoring tc = vdec::color_tree(split.tree);
            lifted = vdec::try_lift_split_coloring(g, split, tc).has_value();
        } catch (const vdec::Error&) {
            lifted = false;
        }
        j["lift_success"] = lifted;
    }

    std::cout << "cor1_bound=" << (report.cor1_bound ? std::to_string(*report.cor1_bound) : "none")
              << " cor2_bound=" << report.cor2_bound << " tree_chi=" << report.tree_chi
              << " cotree_colors=" << report.cotree_colors << "\n";
    if (!json_path.empty()) {
        std::ofstream jf(json_path);
        jf << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_survey(int n_min, int n_max, const std::string& out_path, int workers, bool resume,
               long long budget) {
    std::set<std::string> skip;
    if (resume) {
        std::ifstream existing(out_path);
        std::string line;
        bool header = true;
        while (std::getline(existing, line)) {
            if (header) {
                header = false;
                continue;
            }
            auto comma = line.find(',');
            if (comma != std::string::npos) skip.insert(line.substr(0, comma));
        }
    }

    std::ofstream out;
    bool append = resume && !skip.empty();
    out.open(out_path, append ? std::ios::app : std::ios::out);
    if (!out) vdec::fail(vdec::Errc::ParseError, "cannot write '" + out_path + "'");
    if (!append) out << vdec::survey_csv_header() << "\n";

    vdec::SurveyOptions opt;
    opt.n_min = n_min;
    opt.n_max = n_max;
    opt.node_budget = budget;
    opt.workers = workers;
    opt.skip_ids = skip;

    std::vector<vdec::SurveyRow> violations;
    long long rows = 0;
    vdec::run_survey(opt, [&](const vdec::SurveyRow& row) {
        out << vdec::survey_row_csv(row) << "\n";
        out.flush();
        rows++;
        if (row.violates_theorems() || row.violates_conj3()) violations.push_back(row);
    });

    std::cout << "rows=" << rows << " violations=" << violations.size() << "\n";
    if (!violations.empty()) {
        for (const auto& row : violations)
            std::cerr << "violation: " << vdec::survey_row_csv(row) << "\n";
        return 7;
    }
    return 0;
}

int cmd_build_shape(const std::string& spec, const std::string& out_path) {
    vdec::Tree tree = [&] {
        auto colon = spec.find(':');
        if (colon == std::string::npos)
            vdec::fail(vdec::Errc::ParseError, "expected kind:params, e.g. star:4");
        std::string kind = spec.substr(0, colon);
        std::string params = spec.substr(colon + 1);
        auto ints = [&](char sep) {
            std::vector<int> vals;
            std::istringstream ps(params);
            std::string item;
            while (std::getline(ps, item, sep)) vals.push_back(std::stoi(item));
            return vals;
        };
        if (kind == "star") return vdec::build_star(std::stoi(params));
        if (kind == "path") return vdec::build_path(std::stoi(params));
        if (kind == "dstar") {
            auto v = ints(',');
            if (v.size() != 2) vdec::fail(vdec::Errc::ParseError, "dstar:m,n");
            return vdec::build_double_star(v[0], v[1]);
        }
        if (kind == "q") {
            // q:r,m,l1-l2-...  (trailing leg list may be empty)
            auto first = params.find(',');
            auto second = params.find(',', first + 1);
            if (first == std::string::npos || second == std::string::npos)
                vdec::fail(vdec::Errc::ParseError, "q:r,m,l1-l2-... (legs may be empty)");
            int r = std::stoi(params.substr(0, first));
            int m = std::stoi(params.substr(first + 1, second - first - 1));
            std::vector<int> legs;
            std::string rest = params.substr(second + 1);
            std::istringstream ls(rest);
            std::string item;
            while (std::getline(ls, item, '-'))
                if (!item.empty()) legs.push_back(std::stoi(item));
            return vdec::build_diam_four(r, m, legs);
        }
        vdec::fail(vdec::Errc::ParseError, "unknown shape kind '" + kind + "'");
    }();
    if (!out_path.empty())
        vdec::write_edge_list_file(out_path, tree.graph);
    else
        vdec::write_edge_list(std::cout, tree.graph);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-distinguishing edge colorings of trees: construction, exact search, "
                 "bounds and surveys"};
    app.require_subcommand(1);

    std::string input, out_path, trace_path, dot_path, json_path, coloring_path, shape_spec;
    bool equitable = false, all_spanning = false, try_lift = false, resume = false;
    int max_palette = 0, workers = 1, n_min = 3, n_max = 8;
    long long budget = 100'000'000;

    auto* color = app.add_subcommand("color", "construct a vdec of a tree");
    color->add_option("input", input, "edge-list file")->required();
    color->add_option("-o,--out", out_path, "coloring output file");
    color->add_flag("--equitable", equitable, "rebalance into an equitable vdec");
    color->add_option("--trace", trace_path, "write reduction steps as JSON lines");
    color->add_option("--dot", dot_path, "write a DOT rendering with edge colors");

    auto* exact = app.add_subcommand("exact", "exact chromatic number by search");
    exact->add_option("input", input, "edge-list file")->required();
    exact->add_option("-o,--out", out_path, "witness output file");
    exact->add_flag("--equitable", equitable, "equitable variant");
    exact->add_option("--max-palette", max_palette, "palette cap (default: edge count)")
        ->envname("VDEC_MAX_PALETTE");
    exact->add_option("--budget", budget, "search node budget")->envname("VDEC_BUDGET");

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring file against a graph");
    verify_cmd->add_option("graph", input, "edge-list file")->required();
    verify_cmd->add_option("coloring", coloring_path, "coloring file")->required();

    auto* classify = app.add_subcommand("classify", "structural family of a tree");
    classify->add_option("input", input, "edge-list file")->required();

    auto* bound = app.add_subcommand("bound", "splitting and spanning-tree bounds");
    bound->add_option("input", input, "edge-list file")->required();
    bound->add_option("--json", json_path, "write the full report as JSON");
    bound->add_flag("--all-spanning", all_spanning, "try every spanning tree (tiny graphs)");
    bound->add_flag("--try-lift", try_lift, "attempt to lift the split-tree coloring");

    auto* survey = app.add_subcommand("survey", "exhaustive tree survey to CSV");
    survey->add_option("--n-min", n_min, "smallest vertex count")
        ->check(CLI::Range(3, 12))
        ->envname("VDEC_N_MIN");
    survey->add_option("--n-max", n_max, "largest vertex count")
        ->check(CLI::Range(3, 12))
        ->envname("VDEC_N_MAX");
    survey->add_option("--out", out_path, "CSV output path")->required();
    survey->add_option("--workers", workers, "parallel workers")->envname("VDEC_WORKERS");
    survey->add_flag("--resume", resume, "skip rows already in the CSV");
    survey->add_option("--budget", budget, "per-tree search node budget")->envname("VDEC_BUDGET");

    auto* build = app.add_subcommand("build-shape", "emit a canonical tree as an edge list");
    build->add_option("shape", shape_spec, "star:N | path:N | dstar:m,n | q:r,m,l1-l2-...")
        ->required();
    build->add_option("-o,--out", out_path, "edge-list output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 3 : 0;
    }

    try {
        if (color->parsed()) return cmd_color(input, out_path, equitable, trace_path, dot_path);
        if (exact->parsed()) return cmd_exact(input, out_path, equitable, max_palette, budget);
        if (verify_cmd->parsed()) return cmd_verify(input, coloring_path);
        if (classify->parsed()) return cmd_classify(input);
        if (bound->parsed()) return cmd_bound(input, json_path, all_spanning, try_lift);
        if (survey->parsed()) return cmd_survey(n_min, n_max, out_path, workers, resume, budget);
        if (build->parsed()) return cmd_build_shape(shape_spec, out_path);
    } catch (const vdec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
