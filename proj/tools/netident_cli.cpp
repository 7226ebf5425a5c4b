// netident: decide identifiability of dynamical networks from graph topology.
//
// Subcommands: derive, check-node, check-graph, paths, oracle, counterexample.
// Exit codes: 0 success (and positive verdict where applicable), 1 usage error,
// 2 input error, 3 negative verdict, 4 enumeration budget exceeded.
// All errors go to stderr as single-line JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <netident/json_io.hpp>

namespace {

constexpr const char* kToolVersion = "netident 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitNegative = 3;
constexpr int kExitBudget = 4;

[[noreturn]] void fail(int code, const std::string& message) {
    std::cerr << netident::json{{"error", message}, {"code", code}}.dump() << "\n";
    std::exit(code);
}

netident::GraphDocument load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(kExitInput, "cannot open graph file: " + path);
    netident::json j;
    try {
        j = netident::json::parse(in);
    } catch (const netident::json::parse_error& e) {
        fail(kExitInput, "malformed JSON in " + path + ": " + e.what());
    }
    return netident::graph_document_from_json(j);
}

netident::VertexSet parse_vertex_list(const std::string& text) {
    std::vector<netident::Vertex> out;
    if (text.empty()) return netident::VertexSet(std::move(out));
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(kExitInput, "malformed vertex list element \"" + item + "\"");
        }
    }
    return netident::VertexSet(std::move(out));
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("NETIDENT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            fail(kExitInput, "NETIDENT_SEED is not an unsigned integer");
        }
    }
    return 1;
}

netident::OrderPolicy parse_order(const std::string& text) {
    if (text == "det") return netident::OrderPolicy::deterministic();
    if (text.rfind("seed:", 0) == 0) {
        try {
            return netident::OrderPolicy::seeded(std::stoull(text.substr(5)));
        } catch (const std::exception&) {
            fail(kExitInput, "malformed seed in --order " + text);
        }
    }
    fail(kExitInput, "--order must be det or seed:N");
}

void emit(const netident::json& doc) { std::cout << doc.dump(2) << "\n"; }

netident::json certificate_to_json(const netident::Verdict::Certificate& cert) {
    if (const auto* inc = std::get_if<netident::Verdict::DerivedInclusion>(&cert))
        return netident::json{{"type", "derived_inclusion"},
                              {"derivation", netident::to_json(inc->derivation)}};
    if (const auto* cx = std::get_if<netident::Verdict::Counterexample>(&cert))
        return netident::json{{"type", "counterexample"},
                              {"derivation", netident::to_json(cx->derivation)},
                              {"matrix", netident::to_json(cx->matrix)}};
    const auto& pw = std::get<netident::Verdict::PathWitness>(cert);
    return netident::json{{"type", "path_witness"}, {"paths", netident::to_json(pw.paths)}};
}

struct Options {
    std::string graph_file;
    std::string anchors;
    std::string measured;
    std::string from;
    std::string to;
    std::string order = "det";
    std::string dot_file;
    int node = 0;
    bool counterexample = false;
    bool constrained = false;
    std::size_t m = 0;
    std::uint64_t budget = 1000000;
    std::size_t trials = 64;
    std::string rows;
    std::string cols;
    std::uint64_t seed = default_seed();
};

int run_derive(const Options& opt) {
    const auto doc = load_graph(opt.graph_file);
    const auto anchors = parse_vertex_list(opt.anchors);
    const auto measured = parse_vertex_list(opt.measured);
    const auto d = netident::simplify(doc.graph, anchors, measured, parse_order(opt.order));
    const bool verdict = netident::inclusion_verdict(d, anchors);
    netident::json out = netident::to_json(d);
    out["verdict"] = verdict;
    out["tool_version"] = kToolVersion;
    emit(out);
    if (!opt.dot_file.empty()) {
        std::ofstream dot(opt.dot_file);
        if (!dot) fail(kExitInput, "cannot open DOT output file: " + opt.dot_file);
        dot << netident::to_dot(d.derived_graph, d.derived_set, doc.labels);
    }
    return verdict ? kExitOk : kExitNegative;
}

int run_check_node(const Options& opt) {
    const auto doc = load_graph(opt.graph_file);
    const auto measured = parse_vertex_list(opt.measured);
    const auto verdict =
        netident::identifiable_node(doc.graph, opt.node, measured, opt.counterexample, opt.seed);
    emit(netident::json{{"command", "check-node"},
                        {"inputs",
                         {{"graph", netident::to_json(doc.graph)},
                          {"node", opt.node},
                          {"measured", netident::to_json(measured)}}},
                        {"verdict", verdict.identifiable},
                        {"certificate", certificate_to_json(verdict.certificate)},
                        {"seed", opt.seed},
                        {"tool_version", kToolVersion}});
    return verdict.identifiable ? kExitOk : kExitNegative;
}

int run_check_graph(const Options& opt) {
    const auto doc = load_graph(opt.graph_file);
    const auto measured = parse_vertex_list(opt.measured);
    const auto verdict = netident::identifiable_graph(doc.graph, measured);
    netident::json nodes = netident::json::array();
    for (const auto& check : verdict.checked_nodes)
        nodes.push_back({{"node", check.node}, {"identifiable", check.identifiable}});
    emit(netident::json{{"command", "check-graph"},
                        {"inputs",
                         {{"graph", netident::to_json(doc.graph)},
                          {"measured", netident::to_json(measured)}}},
                        {"verdict", verdict.identifiable},
                        {"checked_nodes", std::move(nodes)},
                        {"certificate", certificate_to_json(verdict.certificate)},
                        {"seed", opt.seed},
                        {"tool_version", kToolVersion}});
    return verdict.identifiable ? kExitOk : kExitNegative;
}

int run_paths(const Options& opt) {
    const auto doc = load_graph(opt.graph_file);
    const auto from = parse_vertex_list(opt.from);
    const auto to = parse_vertex_list(opt.to);
    if (opt.constrained) {
        const auto result =
            netident::constrained_path_set_exists(doc.graph, from, to, opt.m, opt.budget);
        netident::json out{{"command", "paths"},
                           {"constrained", result.constrained},
                           {"m", opt.m},
                           {"tool_version", kToolVersion}};
        if (result.witness) out["witness"] = netident::to_json(*result.witness);
        emit(out);
        return result.constrained ? kExitOk : kExitNegative;
    }
    const auto result = netident::max_vertex_disjoint_paths(doc.graph, from, to);
    emit(netident::json{{"command", "paths"},
                        {"count", result.count},
                        {"witness", netident::to_json(result.witness)},
                        {"tool_version", kToolVersion}});
    return kExitOk;
}

int run_oracle(const Options& opt) {
    const auto doc = load_graph(opt.graph_file);
    const auto rows = parse_vertex_list(opt.rows);
    const auto cols = parse_vertex_list(opt.cols);
    const auto report = netident::rank_trials(doc.graph, cols, rows, opt.trials, opt.seed);
    netident::json out = netident::to_json(report);
    out["command"] = "oracle";
    out["tool_version"] = kToolVersion;
    emit(out);
    return report.verdict == netident::OracleReport::Verdict::AllFullRank ? kExitOk
                                                                          : kExitNegative;
}

int run_counterexample(const Options& opt) {
    const auto doc = load_graph(opt.graph_file);
    const auto measured = parse_vertex_list(opt.measured);
    const auto verdict =
        netident::identifiable_node(doc.graph, opt.node, measured, true, opt.seed);
    if (verdict.identifiable)
        fail(kExitInput, "node " + std::to_string(opt.node) +
                             " is identifiable; no counterexample exists");
    const auto& cx = std::get<netident::Verdict::Counterexample>(verdict.certificate);
    netident::json out = netident::to_json(cx.matrix);
    out["command"] = "counterexample";
    out["seed"] = opt.seed;
    out["tool_version"] = kToolVersion;
    emit(out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Global identifiability of dynamical networks from graph topology"};
    app.require_subcommand(1);
    Options opt;

    auto* derive = app.add_subcommand("derive", "Run the graph simplification process");
    derive->add_option("--graph", opt.graph_file)->required();
    derive->add_option("--anchors", opt.anchors)->required();
    derive->add_option("--measured", opt.measured)->required();
    derive->add_option("--order", opt.order);
    derive->add_option("--dot", opt.dot_file);

    auto* check_node = app.add_subcommand("check-node", "Decide identifiability of one node");
    check_node->add_option("--graph", opt.graph_file)->required();
    check_node->add_option("--node", opt.node)->required();
    check_node->add_option("--measured", opt.measured)->required();
    check_node->add_flag("--counterexample", opt.counterexample);
    check_node->add_option("--seed", opt.seed);

    auto* check_graph = app.add_subcommand("check-graph", "Decide identifiability of the graph");
    check_graph->add_option("--graph", opt.graph_file)->required();
    check_graph->add_option("--measured", opt.measured)->required();

    auto* paths = app.add_subcommand("paths", "Vertex-disjoint path queries");
    paths->add_option("--graph", opt.graph_file)->required();
    paths->add_option("--from", opt.from)->required();
    paths->add_option("--to", opt.to)->required();
    paths->add_flag("--constrained", opt.constrained);
    paths->add_option("--m", opt.m);
    paths->add_option("--budget", opt.budget);

    auto* oracle = app.add_subcommand("oracle", "Sampled rank certification");
    oracle->add_option("--graph", opt.graph_file)->required();
    oracle->add_option("--rows", opt.rows)->required();
    oracle->add_option("--cols", opt.cols)->required();
    oracle->add_option("--trials", opt.trials);
    oracle->add_option("--seed", opt.seed);

    auto* counterexample =
        app.add_subcommand("counterexample", "Construct a rank-deficient admissible matrix");
    counterexample->add_option("--graph", opt.graph_file)->required();
    counterexample->add_option("--node", opt.node)->required();
    counterexample->add_option("--measured", opt.measured)->required();
    counterexample->add_option("--seed", opt.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << netident::json{{"error", e.what()}, {"code", kExitUsage}}.dump() << "\n";
        return kExitUsage;
    }

    try {
        if (derive->parsed()) return run_derive(opt);
        if (check_node->parsed()) return run_check_node(opt);
        if (check_graph->parsed()) return run_check_graph(opt);
        if (paths->parsed()) return run_paths(opt);
        if (oracle->parsed()) return run_oracle(opt);
        if (counterexample->parsed()) return run_counterexample(opt);
    } catch (const netident::budget_exceeded_error& e) {
        fail(kExitBudget, e.what());
    } catch (const netident::input_error& e) {
        fail(kExitInput, e.what());
    } catch (const netident::precondition_error& e) {
        fail(kExitInput, e.what());
    } catch (const std::exception& e) {
        fail(kExitInput, e.what());
    }
    return kExitUsage;
}
