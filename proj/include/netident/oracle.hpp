#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netident/network_matrix.hpp"
#include "netident/paths.hpp"
#include "netident/simplify.hpp"

namespace netident {

/// Finite-sample evidence for or against the universally quantified rank
/// condition rank T_{W,U}(z;G) = |U| over admissible G.
struct OracleReport {
    enum class Verdict { AllFullRank, DeficiencyFound };

    std::size_t trials = 0;
    std::size_t target_rank = 0;
    std::vector<std::size_t> per_trial_ranks;
    Verdict verdict = Verdict::AllFullRank;
    std::optional<NetworkMatrix> witness; // present iff DeficiencyFound
    std::uint64_t seed = 0;
};

/// Samples `trials` admissible matrices and checks normal_rank(T_{W,U}) each
/// time; stops at the first rank-deficient witness. Rows are indexed by W and
/// columns by U, in sorted vertex order.
inline OracleReport rank_trials(const Graph& g, const VertexSet& u, const VertexSet& w,
                                std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw precondition_error("rank_trials requires at least one trial");
    g.check_set(u);
    g.check_set(w);
    OracleReport report;
    report.trials = trials;
    report.target_rank = u.size();
    report.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        NetworkMatrix nm = sample_admissible(g, rng);
        const std::size_t r = transfer_submatrix_rank(nm, w, u, seed ^ (t + 1));
        report.per_trial_ranks.push_back(r);
        if (r < report.target_rank) {
            report.verdict = OracleReport::Verdict::DeficiencyFound;
            report.witness = std::move(nm);
            break;
        }
    }
    return report;
}

namespace detail {

inline Rational random_nonzero_int(std::mt19937_64& rng, long range) {
    std::uniform_int_distribution<long> dist(-range, range);
    long c = 0;
    while (c == 0) c = dist(rng);
    return Rational(c);
}

// Strips all incoming edges of nodes in U; left-invertibility is unaffected,
// so a deficiency witness on the stripped graph lifts back.
inline Graph strip_incoming(const Graph& g, const VertexSet& u) {
    Graph out = g;
    for (const Edge& e : g.edges())
        if (u.contains(e.second)) out.remove_edge(e.first, e.second);
    return out;
}

} // namespace detail

/// Builds an admissible G(z) on the derived graph (with incoming edges of U
/// removed) whose transfer submatrix T_{D(W),U} is exactly rank-deficient.
/// Construction: let Ubar = U \ D(W) and Wbar = D(W) \ U, and let N collect
/// the Ubar-reachable in-neighbours of Wbar. All entries outside the rows
/// G_{Wbar,N} get random strictly proper values c/z; the rows G_{Wbar,N} are
/// then solved so that G_{Wbar,N} A_{N,Ubar} b = 0 for a suitable integer
/// vector b, which forces T_{Wbar,Ubar} b = 0. Non-constructive existence
/// steps are replaced by resampling with an escalating coefficient range.
inline NetworkMatrix construct_counterexample(const DerivedResult& d, const VertexSet& u,
                                              std::uint64_t seed = 1,
                                              int retry_budget = 200) {
    if (inclusion_verdict(d, u))
        throw precondition_error("counterexample requested but U is contained in the derived set");

    const VertexSet u_bar = u.set_minus(d.derived_set);
    const VertexSet w_bar = d.derived_set.set_minus(u);
    const Graph h = detail::strip_incoming(d.derived_graph, u);

    for (Vertex w : d.derived_set)
        if (!h.out_neighbours(w).empty())
            throw internal_consistency_error("derived-set node still has outgoing edges");

    const VertexSet reach = reachable_set(h, u_bar);
    VertexSet n_set;
    for (Vertex w : w_bar)
        for (Vertex j : h.in_neighbours(w))
            if (reach.contains(j)) n_set.insert(j);
    for (Vertex w : w_bar) {
        int reachable_in = 0;
        for (Vertex j : h.in_neighbours(w))
            if (n_set.contains(j)) ++reachable_in;
        if (reachable_in == 1)
            throw internal_consistency_error(
                "derived-set node with exactly one reachable in-neighbour; derivation is not "
                "a fixpoint");
    }

    std::mt19937_64 rng(seed);
    std::string last_failure = "no attempt made";
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        const long range = 1000L * (1L + attempt / 50); // escalate every 50 failures
        NetworkMatrix candidate(h);

        // (iii) strictly proper c/z everywhere outside the rows G_{Wbar,N}
        for (const Edge& e : h.edges()) {
            if (w_bar.contains(e.second) && n_set.contains(e.first)) continue;
            candidate.set_entry(e.first, e.second,
                                RatFunc::over_z(detail::random_nonzero_int(rng, range)));
        }

        // adjugate of I - G with the solved rows still zero; A_{N,Ubar} does
        // not depend on them, since Wbar nodes have no outgoing edges
        const RatMatrix adj = adjugate(candidate.identity_minus());

        bool ok = true;
        for (Vertex n : n_set) {
            bool witnessed = false;
            for (Vertex v : u_bar) {
                if (reachable_set(h, VertexSet{v}).contains(n) &&
                    !adj(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(v - 1))
                         .is_zero()) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) {
                ok = false;
                last_failure = "vanishing adjugate entry for a reachable in-neighbour";
                break;
            }
        }
        if (!ok) continue;

        // (iv) integer b with every entry of A_{N,Ubar} b nonzero
        std::vector<RatFunc> ab(n_set.size());
        if (!n_set.empty()) {
            bool b_found = false;
            for (int b_try = 0; b_try < 50 && !b_found; ++b_try) {
                std::vector<Rational> b(u_bar.size());
                for (auto& x : b) x = detail::random_nonzero_int(rng, range);
                b_found = true;
                std::size_t row = 0;
                for (Vertex n : n_set) {
                    RatFunc acc;
                    std::size_t col = 0;
                    for (Vertex v : u_bar) {
                        acc += adj(static_cast<std::size_t>(n - 1),
                                   static_cast<std::size_t>(v - 1)) *
                               RatFunc(b[col]);
                        ++col;
                    }
                    if (acc.is_zero()) {
                        b_found = false;
                        break;
                    }
                    ab[row++] = std::move(acc);
                }
            }
            if (!b_found) {
                last_failure = "no vector b with all entries of A_{N,U}b nonzero";
                continue;
            }
        }

        // (v) solve the rows G_{Wbar,N} so that G_{Wbar,N} (A b) = 0
        auto ab_of = [&](Vertex n) {
            std::size_t row = 0;
            for (Vertex m : n_set) {
                if (m == n) return ab[row];
                ++row;
            }
            throw internal_consistency_error("in-neighbour missing from N");
        };
        for (Vertex w : w_bar) {
            std::vector<Vertex> ins;
            for (Vertex j : h.in_neighbours(w))
                if (n_set.contains(j)) ins.push_back(j);
            if (ins.empty()) continue;
            std::sort(ins.begin(), ins.end());
            bool solved = false;
            for (std::size_t power = 1; power <= 8 && !solved; ++power) {
                for (int row_try = 0; row_try < 20 && !solved; ++row_try) {
                    RatFunc partial_sum;
                    std::vector<RatFunc> row_entries(ins.size());
                    for (std::size_t i = 0; i + 1 < ins.size(); ++i) {
                        row_entries[i] =
                            RatFunc::over_z(detail::random_nonzero_int(rng, range), power);
                        partial_sum += row_entries[i] * ab_of(ins[i]);
                    }
                    const RatFunc last = -(partial_sum / ab_of(ins.back()));
                    if (last.is_zero() || !last.is_strictly_proper()) continue;
                    row_entries.back() = last;
                    for (std::size_t i = 0; i < ins.size(); ++i)
                        candidate.set_entry(ins[i], w, row_entries[i]);
                    solved = true;
                }
            }
            if (!solved) {
                ok = false;
                last_failure = "no strictly proper nonzero solution for a W-row entry";
                break;
            }
        }
        if (!ok) continue;

        // (vi) audit before returning; both checks are exact
        if (!audit_admissible(candidate).admissible()) {
            last_failure = "candidate failed the admissibility audit";
            continue;
        }
        if (transfer_submatrix_rank(candidate, d.derived_set, u, seed ^ 0x5eed) >= u.size()) {
            last_failure = "candidate transfer submatrix has full rank";
            continue;
        }
        return candidate;
    }
    throw construction_failed_error("counterexample construction exhausted its retry budget of " +
                                    std::to_string(retry_budget) + " resamples; last failure: " +
                                    last_failure);
}

/// Replays the derivation trace in reverse on a deficiency witness, restoring
/// removed edges with fresh random strictly proper entries (this preserves the
/// rank equality; Replace reversals only move the tracked W-set). Returns a
/// matrix on the original graph whose T_{W,U} is rank-deficient, verified
/// exactly before return.
inline NetworkMatrix lift_counterexample(const DerivedResult& d, const NetworkMatrix& g_derived,
                                         std::uint64_t seed = 1) {
    std::mt19937_64 rng(seed);
    auto fresh = [&] { return RatFunc::over_z(detail::random_nonzero_int(rng, 1000)); };

    NetworkMatrix lifted = g_derived;
    // restore incoming edges of U that counterexample construction stripped
    {
        Graph graph = lifted.graph();
        for (const Edge& e : d.derived_graph.edges())
            if (!graph.has_edge(e.first, e.second)) graph.add_edge(e.first, e.second);
        NetworkMatrix widened(graph);
        for (const auto& [edge, f] : lifted.entries()) widened.set_entry(edge.first, edge.second, f);
        for (const Edge& e : graph.edges())
            if (widened.entry(e.first, e.second).is_zero())
                widened.set_entry(e.first, e.second, fresh());
        lifted = std::move(widened);
    }
    for (auto it = d.trace.rbegin(); it != d.trace.rend(); ++it) {
        if (it->kind != SimplifyStep::Kind::RemoveOutgoing) continue;
        Graph graph = lifted.graph();
        for (const Edge& e : it->removed_edges) graph.add_edge(e.first, e.second);
        NetworkMatrix widened(graph);
        for (const auto& [edge, f] : lifted.entries()) widened.set_entry(edge.first, edge.second, f);
        for (const Edge& e : it->removed_edges) widened.set_entry(e.first, e.second, fresh());
        lifted = std::move(widened);
    }

    const auto [original_graph, original_w] = unwind_trace(d);
    if (lifted.graph() != original_graph)
        throw internal_consistency_error("lifted graph does not match the trace origin");
    if (!audit_admissible(lifted).admissible())
        throw internal_consistency_error("lifted counterexample failed the admissibility audit");
    if (transfer_submatrix_rank(lifted, original_w, d.anchor_set, seed ^ 0x11f7) >=
        d.anchor_set.size())
        throw internal_consistency_error("lifted counterexample lost its rank deficiency");
    return lifted;
}

} // namespace netident
