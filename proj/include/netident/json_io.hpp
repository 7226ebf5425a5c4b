#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "netident/identify.hpp"

namespace netident {

using nlohmann::json;

/// External graph format: 1-based vertex ids, optional display labels.
struct GraphDocument {
    Graph graph{0};
    std::map<Vertex, std::string> labels;
};

namespace json_detail {

inline void reject_unknown_fields(const json& j, const std::vector<std::string>& allowed,
                                  const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw input_error("unknown field \"" + it.key() + "\" in " + where);
    }
}

inline const json& require(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw input_error("missing field \"" + key + "\" in " + where);
    return *it;
}

} // namespace json_detail

// ---------------------------------------------------------------------------
// Exact rationals: serialized as strings "p/q" (or "p" for integers) so no
// precision is lost in either direction.

inline std::string to_json_value(const Rational& x) { return x.str(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw input_error("rational values must be strings like \"3/4\"");
    try {
        return Rational(j.get<std::string>());
    } catch (const std::exception&) {
        throw input_error("malformed rational \"" + j.get<std::string>() + "\"");
    }
}

// ---------------------------------------------------------------------------
// Polynomials: ascending coefficient lists.

inline json to_json(const Poly& p) {
    json coeffs = json::array();
    for (const Rational& c : p.coeffs()) coeffs.push_back(to_json_value(c));
    return coeffs;
}

inline Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw input_error("polynomial must be an array of coefficients");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const json& c : j) coeffs.push_back(rational_from_json(c));
    return Poly::from_coeffs(std::move(coeffs));
}

inline json to_json(const RatFunc& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline RatFunc ratfunc_from_json(const json& j) {
    if (!j.is_object()) throw input_error("rational function must be an object");
    json_detail::reject_unknown_fields(j, {"num", "den"}, "rational function");
    return RatFunc(poly_from_json(json_detail::require(j, "num", "rational function")),
                   poly_from_json(json_detail::require(j, "den", "rational function")));
}

// ---------------------------------------------------------------------------
// Graphs.

inline json to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json::array({e.first, e.second}));
    return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline json to_json(const GraphDocument& doc) {
    json j = to_json(doc.graph);
    if (!doc.labels.empty()) {
        json labels = json::object();
        for (const auto& [v, name] : doc.labels) labels[std::to_string(v)] = name;
        j["labels"] = std::move(labels);
    }
    return j;
}

inline GraphDocument graph_document_from_json(const json& j) {
    if (!j.is_object()) throw input_error("graph document must be an object");
    json_detail::reject_unknown_fields(j, {"n", "edges", "labels"}, "graph document");
    const json& jn = json_detail::require(j, "n", "graph document");
    if (!jn.is_number_integer()) throw input_error("field \"n\" must be an integer");
    GraphDocument doc;
    doc.graph = Graph(jn.get<int>());
    const json& jedges = json_detail::require(j, "edges", "graph document");
    if (!jedges.is_array()) throw input_error("field \"edges\" must be an array");
    for (const json& je : jedges) {
        if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
            !je[1].is_number_integer())
            throw input_error("each edge must be a [from, to] integer pair");
        doc.graph.add_edge(je[0].get<int>(), je[1].get<int>());
    }
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_object()) throw input_error("field \"labels\" must be an object");
        for (auto lit = it->begin(); lit != it->end(); ++lit) {
            int v;
            try {
                v = std::stoi(lit.key());
            } catch (const std::exception&) {
                throw input_error("label key \"" + lit.key() + "\" is not a vertex id");
            }
            doc.graph.check_vertex(v);
            if (!lit->is_string()) throw input_error("labels must be strings");
            doc.labels[v] = lit->get<std::string>();
        }
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Vertex sets and paths.

inline json to_json(const VertexSet& s) {
    json a = json::array();
    for (Vertex v : s) a.push_back(v);
    return a;
}

inline json to_json(const Path& p) {
    json a = json::array();
    for (const Edge& e : p) a.push_back(json::array({e.first, e.second}));
    return a;
}

inline json to_json(const PathSet& ps) {
    json paths = json::array();
    for (const Path& p : ps.paths) paths.push_back(to_json(p));
    return json{{"paths", std::move(paths)}, {"zero_length", ps.zero_length}};
}

// ---------------------------------------------------------------------------
// Simplification traces and derivations.

inline json to_json(const SimplifyStep& step) {
    if (step.kind == SimplifyStep::Kind::RemoveOutgoing) {
        json edges = json::array();
        for (const Edge& e : step.removed_edges) edges.push_back(json::array({e.first, e.second}));
        return json{{"op", "remove_outgoing"}, {"removed_edges", std::move(edges)}};
    }
    return json{{"op", "replace"},
                {"k", step.replaced_k},
                {"j", step.replaced_j},
                {"j_already_member", step.j_already_member}};
}

inline json to_json(const DerivedResult& d) {
    json trace = json::array();
    for (const SimplifyStep& step : d.trace) trace.push_back(to_json(step));
    return json{{"derived_graph", to_json(d.derived_graph)},
                {"derived_set", to_json(d.derived_set)},
                {"trace", std::move(trace)},
                {"anchor_set", to_json(d.anchor_set)}};
}

// ---------------------------------------------------------------------------
// Network matrices and oracle reports.

inline json to_json(const NetworkMatrix& nm) {
    json entries = json::array();
    for (const auto& [edge, f] : nm.entries()) {
        json e = to_json(f);
        e["from"] = edge.first;
        e["to"] = edge.second;
        entries.push_back(std::move(e));
    }
    return json{{"graph", to_json(nm.graph())}, {"entries", std::move(entries)}};
}

inline NetworkMatrix network_matrix_from_json(const json& j) {
    if (!j.is_object()) throw input_error("network matrix must be an object");
    json_detail::reject_unknown_fields(j, {"graph", "entries"}, "network matrix");
    GraphDocument doc =
        graph_document_from_json(json_detail::require(j, "graph", "network matrix"));
    NetworkMatrix nm(doc.graph);
    const json& jentries = json_detail::require(j, "entries", "network matrix");
    if (!jentries.is_array()) throw input_error("field \"entries\" must be an array");
    for (const json& je : jentries) {
        if (!je.is_object()) throw input_error("each entry must be an object");
        json_detail::reject_unknown_fields(je, {"from", "to", "num", "den"}, "matrix entry");
        const json& jf = json_detail::require(je, "from", "matrix entry");
        const json& jt = json_detail::require(je, "to", "matrix entry");
        if (!jf.is_number_integer() || !jt.is_number_integer())
            throw input_error("entry endpoints must be integers");
        nm.set_entry(jf.get<int>(), jt.get<int>(),
                     RatFunc(poly_from_json(json_detail::require(je, "num", "matrix entry")),
                             poly_from_json(json_detail::require(je, "den", "matrix entry"))));
    }
    return nm;
}

inline json to_json(const OracleReport& report) {
    json j{{"trials", report.trials},
           {"target_rank", report.target_rank},
           {"per_trial_ranks", report.per_trial_ranks},
           {"verdict", report.verdict == OracleReport::Verdict::AllFullRank ? "all_full_rank"
                                                                            : "deficiency_found"},
           {"seed", report.seed}};
    if (report.witness) j["witness"] = to_json(*report.witness);
    return j;
}

// ---------------------------------------------------------------------------
// DOT export: derived-set members are drawn filled, matching the usual
// black-node convention for measured/derived vertices.

inline std::string to_dot(const Graph& g, const VertexSet& filled = {},
                          const std::map<Vertex, std::string>& labels = {}) {
    std::string out = "digraph G {\n";
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        out += "  " + std::to_string(v);
        std::string attrs;
        if (filled.contains(v)) attrs += "style=filled, fillcolor=black, fontcolor=white";
        if (auto it = labels.find(v); it != labels.end()) {
            if (!attrs.empty()) attrs += ", ";
            attrs += "label=\"" + it->second + "\"";
        }
        if (!attrs.empty()) out += " [" + attrs + "]";
        out += ";\n";
    }
    for (const Edge& e : g.edges())
        out += "  " + std::to_string(e.first) + " -> " + std::to_string(e.second) + ";\n";
    out += "}\n";
    return out;
}

} // namespace netident
