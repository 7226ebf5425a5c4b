#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "netident/graph.hpp"

namespace netident {

/// One recorded step of the graph simplification process.
struct SimplifyStep {
    enum class Kind { RemoveOutgoing, Replace };

    Kind kind;
    std::vector<Edge> removed_edges; // RemoveOutgoing only
    Vertex replaced_k = 0;           // Replace only
    Vertex replaced_j = 0;           // Replace only
    bool j_already_member = false;   // Replace only; needed to reverse the step
};

/// Fixpoint of the simplification process with the full trace needed to
/// replay or reverse it.
struct DerivedResult {
    Graph derived_graph;
    VertexSet derived_set;
    std::vector<SimplifyStep> trace;
    VertexSet anchor_set; // the U the derivation is "with respect to"
};

/// How the fixpoint loop picks among eligible operation-2 nodes.
struct OrderPolicy {
    static OrderPolicy deterministic() { return {}; }
    static OrderPolicy seeded(std::uint64_t seed) {
        OrderPolicy p;
        p.seed = seed;
        return p;
    }

    std::optional<std::uint64_t> seed; // empty: smallest eligible k
};

/// Operation 1: remove all outgoing edges of nodes in W. Returns the new graph
/// and the removed edges (in edge-set order) for trace reversal.
inline std::pair<Graph, std::vector<Edge>> apply_op1(const Graph& g, const VertexSet& w) {
    g.check_set(w);
    Graph out = g;
    std::vector<Edge> removed;
    for (const Edge& e : g.edges()) {
        if (w.contains(e.first)) {
            out.remove_edge(e.first, e.second);
            removed.push_back(e);
        }
    }
    return {std::move(out), std::move(removed)};
}

struct Op2Result {
    VertexSet new_w;
    Vertex k;
    Vertex j;
};

namespace detail {

// Nodes k in W \ U with exactly one U-reachable in-neighbour j, paired with
// that j, in ascending k.
inline std::vector<std::pair<Vertex, Vertex>> op2_candidates(const Graph& g, const VertexSet& u,
                                                             const VertexSet& w) {
    const VertexSet reach = reachable_set(g, u);
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex k : w.set_minus(u)) {
        Vertex unique_j = 0;
        int reachable_in = 0;
        for (Vertex j : g.in_neighbours(k)) {
            if (reach.contains(j)) {
                ++reachable_in;
                unique_j = j;
            }
        }
        if (reachable_in == 1) out.push_back({k, unique_j});
    }
    return out;
}

} // namespace detail

/// Operation 2: if some k in W \ U has exactly one U-reachable in-neighbour j,
/// replace k by j in W (set semantics: W shrinks when j is already a member).
/// Returns empty when no node is eligible. `choice` selects among eligible
/// nodes; by default the smallest k.
inline std::optional<Op2Result> apply_op2(const Graph& g, const VertexSet& u, const VertexSet& w,
                                          std::mt19937_64* choice = nullptr) {
    g.check_set(u);
    g.check_set(w);
    const auto candidates = detail::op2_candidates(g, u, w);
    if (candidates.empty()) return std::nullopt;
    std::size_t pick = 0;
    if (choice)
        pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(*choice);
    const auto [k, j] = candidates[pick];
    VertexSet new_w = w;
    new_w.erase(k);
    new_w.insert(j);
    return Op2Result{std::move(new_w), k, j};
}

/// Runs the graph simplification process to its fixpoint: alternate operation 1
/// (delete outgoing edges of W) and operation 2 (replace a node by its unique
/// U-reachable in-neighbour) until neither changes anything. Terminates within
/// |V| alternating rounds.
inline DerivedResult simplify(const Graph& g, const VertexSet& u, const VertexSet& w,
                              const OrderPolicy& policy = OrderPolicy::deterministic()) {
    g.check_set(u);
    g.check_set(w);
    DerivedResult result{g, w, {}, u};
    std::optional<std::mt19937_64> rng;
    if (policy.seed) rng.emplace(*policy.seed);

    const int round_bound = g.vertex_count() + 1;
    int rounds = 0;
    bool changed = true;
    while (changed) {
        if (++rounds > round_bound)
            throw internal_consistency_error("simplification exceeded the |V| round bound");
        changed = false;
        auto [stripped, removed] = apply_op1(result.derived_graph, result.derived_set);
        if (!removed.empty()) {
            result.derived_graph = std::move(stripped);
            result.trace.push_back(
                {SimplifyStep::Kind::RemoveOutgoing, std::move(removed), 0, 0});
            changed = true;
        }
        if (auto rep = apply_op2(result.derived_graph, u, result.derived_set,
                                 rng ? &*rng : nullptr)) {
            const bool j_member = result.derived_set.contains(rep->j);
            result.derived_set = std::move(rep->new_w);
            result.trace.push_back({SimplifyStep::Kind::Replace, {}, rep->k, rep->j, j_member});
            changed = true;
        }
    }
    return result;
}

/// True iff U ⊆ D(W); the identifiability verdict at the heart of the theory.
inline bool inclusion_verdict(const DerivedResult& d, const VertexSet& u) {
    if (d.anchor_set != u)
        throw input_error("inclusion verdict queried with a different anchor set than the "
                          "derivation was computed for");
    return u.subset_of(d.derived_set);
}

/// Reconstructs the original (graph, W) a derivation started from, by undoing
/// the trace back to front.
inline std::pair<Graph, VertexSet> unwind_trace(const DerivedResult& d) {
    Graph g = d.derived_graph;
    VertexSet w = d.derived_set;
    for (auto it = d.trace.rbegin(); it != d.trace.rend(); ++it) {
        if (it->kind == SimplifyStep::Kind::RemoveOutgoing) {
            for (const Edge& e : it->removed_edges) g.add_edge(e.first, e.second);
        } else {
            if (!it->j_already_member) w.erase(it->replaced_j);
            w.insert(it->replaced_k);
        }
    }
    return {std::move(g), std::move(w)};
}

/// Replays a trace from the original (g, w); used to validate stored results.
inline std::pair<Graph, VertexSet> replay_trace(const Graph& g, const VertexSet& w,
                                                const std::vector<SimplifyStep>& trace) {
    Graph cur = g;
    VertexSet cur_w = w;
    for (const SimplifyStep& step : trace) {
        if (step.kind == SimplifyStep::Kind::RemoveOutgoing) {
            for (const Edge& e : step.removed_edges) cur.remove_edge(e.first, e.second);
        } else {
            cur_w.erase(step.replaced_k);
            cur_w.insert(step.replaced_j);
        }
    }
    return {std::move(cur), std::move(cur_w)};
}

} // namespace netident
