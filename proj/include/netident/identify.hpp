#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "netident/oracle.hpp"

namespace netident {

/// Out-neighbour set of i as a VertexSet.
inline VertexSet out_neighbour_set(const Graph& g, Vertex i) {
    g.check_vertex(i);
    return VertexSet(g.out_neighbours(i));
}

/// Identifiability decision plus its certificate.
struct Verdict {
    struct DerivedInclusion {
        DerivedResult derivation;
    };
    struct Counterexample {
        DerivedResult derivation;
        NetworkMatrix matrix; // on the original graph, exactly rank-deficient
    };
    struct PathWitness {
        PathSet paths;
    };
    using Certificate = std::variant<DerivedInclusion, Counterexample, PathWitness>;

    struct NodeCheck {
        Vertex node;
        bool identifiable;
    };

    bool identifiable = false;
    Certificate certificate;
    std::vector<NodeCheck> checked_nodes; // whole-graph verdicts only
};

/// Decides identifiability of (i, N_i^+) from C: run the simplification of C
/// with respect to N_i^+ and test N_i^+ ⊆ D(C). Sink nodes (N_i^+ = ∅) are
/// vacuously identifiable. When the verdict is negative and a counterexample
/// is requested, an exactly rank-deficient admissible matrix on the original
/// graph is attached.
inline Verdict identifiable_node(const Graph& g, Vertex i, const VertexSet& measured,
                                 bool with_counterexample = false, std::uint64_t seed = 1) {
    g.check_vertex(i);
    g.check_set(measured);
    const VertexSet targets = out_neighbour_set(g, i);
    DerivedResult d = simplify(g, targets, measured);
    Verdict verdict;
    verdict.identifiable = inclusion_verdict(d, targets);
    if (verdict.identifiable || !with_counterexample) {
        verdict.certificate = Verdict::DerivedInclusion{std::move(d)};
        return verdict;
    }
    NetworkMatrix derived_witness = construct_counterexample(d, targets, seed);
    NetworkMatrix lifted = lift_counterexample(d, derived_witness, seed);
    verdict.certificate = Verdict::Counterexample{std::move(d), std::move(lifted)};
    return verdict;
}

/// Decides identifiability of the whole graph: every node's out-neighbour set
/// must be contained in its own derived set of C. Nodes sharing an identical
/// out-neighbour set reuse the same derivation.
inline Verdict identifiable_graph(const Graph& g, const VertexSet& measured) {
    g.check_set(measured);
    Verdict verdict;
    verdict.identifiable = true;
    std::map<VertexSet, bool> cache;
    std::optional<DerivedResult> first_failure;
    for (Vertex i = 1; i <= g.vertex_count(); ++i) {
        const VertexSet targets = out_neighbour_set(g, i);
        auto it = cache.find(targets);
        bool node_ok;
        if (it != cache.end()) {
            node_ok = it->second;
        } else {
            DerivedResult d = simplify(g, targets, measured);
            node_ok = inclusion_verdict(d, targets);
            cache.emplace(targets, node_ok);
            if (!node_ok && !first_failure) first_failure = std::move(d);
        }
        verdict.checked_nodes.push_back({i, node_ok});
        if (!node_ok) verdict.identifiable = false;
    }
    if (first_failure)
        verdict.certificate = Verdict::DerivedInclusion{std::move(*first_failure)};
    return verdict;
}

/// Necessary cardinality condition: |N_i^+| <= |C|. A cheap pre-filter.
inline bool necessary_cardinality(const Graph& g, Vertex i, const VertexSet& measured) {
    return out_neighbour_set(g, i).size() <= measured.size();
}

/// Sufficient condition via constrained vertex-disjoint paths: a constrained
/// set of |N_i^+| vertex-disjoint paths from N_i^+ to C implies
/// identifiability (one-directional).
inline ConstrainedPathsResult sufficient_constrained_paths(const Graph& g, Vertex i,
                                                           const VertexSet& measured,
                                                           std::uint64_t budget = 1000000) {
    const VertexSet targets = out_neighbour_set(g, i);
    return constrained_path_set_exists(g, targets, measured, targets.size(), budget);
}

/// Square case |C| = |N_i^+|: the simplification verdict and the
/// constrained-path verdict coincide; evaluates both, asserts agreement, and
/// returns the shared value.
inline bool square_case_equivalence(const Graph& g, Vertex i, const VertexSet& measured,
                                    std::uint64_t budget = 1000000) {
    const VertexSet targets = out_neighbour_set(g, i);
    if (targets.size() != measured.size())
        throw precondition_error("square-case equivalence requires |C| = |N_i^+|");
    const bool by_simplification = identifiable_node(g, i, measured).identifiable;
    const bool by_paths = sufficient_constrained_paths(g, i, measured, budget).constrained;
    if (by_simplification != by_paths)
        throw internal_consistency_error(
            "square-case criteria disagree: simplification says " +
            std::string(by_simplification ? "identifiable" : "not identifiable") +
            ", constrained paths say the opposite");
    return by_simplification;
}

} // namespace netident
