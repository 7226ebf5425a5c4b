#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "netident/graph.hpp"

namespace netident {

/// A path as an ordered edge list; simple by construction everywhere below.
using Path = std::vector<Edge>;

/// A collection of pairwise vertex-disjoint paths. Vertices in U ∩ W count as
/// zero-length paths and are listed separately.
struct PathSet {
    std::vector<Path> paths;
    std::vector<Vertex> zero_length;

    std::size_t count() const { return paths.size() + zero_length.size(); }
};

inline std::vector<Vertex> path_vertices(const Path& p) {
    std::vector<Vertex> vs;
    if (p.empty()) return vs;
    vs.push_back(p.front().first);
    for (const Edge& e : p) vs.push_back(e.second);
    return vs;
}

/// Checks that each path is simple and connected, and that all paths —
/// including the zero-length ones — are pairwise vertex-disjoint.
inline bool is_vertex_disjoint(const PathSet& ps) {
    std::set<Vertex> seen;
    for (Vertex v : ps.zero_length)
        if (!seen.insert(v).second) return false;
    for (const Path& p : ps.paths) {
        if (p.empty()) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i].second != p[i + 1].first) return false;
        for (Vertex v : path_vertices(p))
            if (!seen.insert(v).second) return false;
    }
    return true;
}

struct DisjointPathsResult {
    std::size_t count = 0;
    PathSet witness;
};

namespace detail {

// Unit-capacity max-flow on the node-split graph (v -> v_in, v_out with a
// capacity-1 internal arc) between a super-source over `sources` and a
// super-sink over `sinks`. Vertices in `blocked` get no internal arc and thus
// cannot appear on any path. BFS augmenting paths; adjacency in ascending
// vertex order for reproducible witnesses.
class NodeSplitFlow {
public:
    NodeSplitFlow(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                  const VertexSet& blocked = {})
        : g_(g) {
        const int n = g.vertex_count();
        node_count_ = 2 * n + 4;
        source_ = 2 * n + 2;
        sink_ = 2 * n + 3;
        adj_.assign(static_cast<std::size_t>(node_count_), {});
        for (Vertex v = 1; v <= n; ++v)
            if (!blocked.contains(v)) add_arc(in_node(v), out_node(v));
        for (const Edge& e : g.edges()) add_arc(out_node(e.first), in_node(e.second));
        for (Vertex v : sources) add_arc(source_, in_node(v));
        for (Vertex v : sinks) add_arc(out_node(v), sink_);
    }

    std::size_t max_flow() {
        std::size_t total = 0;
        while (augment()) ++total;
        return total;
    }

    /// Decomposes the flow into vertex-disjoint paths (ascending start vertex).
    std::vector<Path> extract_paths() const {
        std::vector<Path> out;
        for (const ArcRef& ar : adj_[static_cast<std::size_t>(source_)]) {
            const Arc& a = arcs_[ar.index];
            if (a.flow == 0) continue;
            Path p;
            const int node = a.head; // an in-node, 2 * (v - 1)
            Vertex cur = node / 2 + 1;
            while (true) {
                const int out = out_node(cur);
                int next = -1;
                for (const ArcRef& r : adj_[static_cast<std::size_t>(out)]) {
                    if (r.backward) continue;
                    const Arc& fa = arcs_[r.index];
                    if (fa.flow == 0) continue;
                    next = fa.head;
                    break;
                }
                if (next == sink_ || next == -1) break;
                const Vertex nv = next / 2 + 1; // next is an in-node

                p.push_back({cur, nv});
                cur = nv;
            }
            out.push_back(std::move(p));
        }
        return out;
    }

private:
    struct Arc {
        int head;
        int flow; // 0 or 1
    };
    struct ArcRef {
        std::size_t index;
        bool backward;
    };

    int in_node(Vertex v) const { return 2 * (v - 1); }
    int out_node(Vertex v) const { return 2 * (v - 1) + 1; }

    void add_arc(int from, int to) {
        arcs_.push_back({to, 0});
        adj_[static_cast<std::size_t>(from)].push_back({arcs_.size() - 1, false});
        adj_[static_cast<std::size_t>(to)].push_back({arcs_.size() - 1, true});
        tails_.push_back(from);
    }

    bool augment() {
        std::vector<std::pair<int, ArcRef>> parent(static_cast<std::size_t>(node_count_),
                                                   {-1, {0, false}});
        std::queue<int> q;
        q.push(source_);
        parent[static_cast<std::size_t>(source_)].first = source_;
        while (!q.empty() && parent[static_cast<std::size_t>(sink_)].first == -1) {
            const int u = q.front();
            q.pop();
            for (const ArcRef& r : adj_[static_cast<std::size_t>(u)]) {
                const Arc& a = arcs_[r.index];
                const int residual = r.backward ? a.flow : 1 - a.flow;
                if (residual == 0) continue;
                const int head = r.backward ? tails_[r.index] : a.head;
                if (parent[static_cast<std::size_t>(head)].first != -1) continue;
                parent[static_cast<std::size_t>(head)] = {u, r};
                q.push(head);
            }
        }
        if (parent[static_cast<std::size_t>(sink_)].first == -1) return false;
        int node = sink_;
        while (node != source_) {
            const auto& [prev, r] = parent[static_cast<std::size_t>(node)];
            arcs_[r.index].flow += r.backward ? -1 : 1;
            node = prev;
        }
        return true;
    }

    const Graph& g_;
    int node_count_;
    int source_;
    int sink_;
    std::vector<Arc> arcs_;
    std::vector<int> tails_;
    std::vector<std::vector<ArcRef>> adj_;
};

} // namespace detail

/// Maximum number of vertex-disjoint paths from U to W, with the overlap
/// convention: vertices in U ∩ W contribute zero-length paths and the flow is
/// computed from U \ W to W \ U. Disjointness includes the zero-length paths,
/// so positive-length paths never pass through U ∩ W.
inline DisjointPathsResult max_vertex_disjoint_paths(const Graph& g, const VertexSet& from,
                                                     const VertexSet& to) {
    g.check_set(from);
    g.check_set(to);
    const VertexSet overlap = from.set_intersect(to);
    const VertexSet sources = from.set_minus(to);
    const VertexSet sinks = to.set_minus(from);
    DisjointPathsResult result;
    result.witness.zero_length = overlap.members();
    if (!sources.empty() && !sinks.empty()) {
        detail::NodeSplitFlow flow(g, sources, sinks, overlap);
        flow.max_flow();
        result.witness.paths = flow.extract_paths();
    }
    result.count = result.witness.paths.size() + overlap.size();
    return result;
}

namespace detail {

// Enumerates sets of vertex-disjoint paths whose starting nodes are exactly
// `sources` and end nodes exactly `targets` (|sources| = |targets|), in
// lexicographic order of (start vertex, edge sequence); stops after `limit`
// sets. Paths may not pass through other endpoint vertices: an endpoint used
// as an intermediate vertex could no longer serve as a start/end, so every
// valid set forces the pruning below. Vertices in `blocked` are excluded
// entirely (they carry zero-length paths of the enclosing set).
class PathSetEnumerator {
public:
    PathSetEnumerator(const Graph& g, const VertexSet& sources, const VertexSet& targets,
                      std::size_t limit, const VertexSet& blocked = {})
        : g_(g), sources_(sources.members()), targets_(targets), limit_(limit),
          used_(static_cast<std::size_t>(g.vertex_count()) + 1, 0) {
        for (Vertex v : blocked) used_[static_cast<std::size_t>(v)] = 1;
    }

    const std::vector<std::vector<Path>>& run() {
        extend(0);
        return found_;
    }

private:
    void extend(std::size_t idx) {
        if (found_.size() >= limit_) return;
        if (idx == sources_.size()) {
            found_.push_back(current_);
            return;
        }
        const Vertex u = sources_[idx];
        used_[static_cast<std::size_t>(u)] = 1;
        current_.emplace_back();
        dfs(u, idx);
        current_.pop_back();
        used_[static_cast<std::size_t>(u)] = 0;
    }

    void dfs(Vertex at, std::size_t idx) {
        if (found_.size() >= limit_) return;
        for (Vertex next : g_.out_neighbours(at)) {
            if (used_[static_cast<std::size_t>(next)]) continue;
            if (targets_.contains(next)) {
                // must terminate here; targets cannot be intermediate vertices
                used_[static_cast<std::size_t>(next)] = 1;
                current_.back().push_back({at, next});
                extend(idx + 1);
                current_.back().pop_back();
                used_[static_cast<std::size_t>(next)] = 0;
                continue;
            }
            if (is_pending_source(next, idx)) continue;
            used_[static_cast<std::size_t>(next)] = 1;
            current_.back().push_back({at, next});
            dfs(next, idx);
            current_.back().pop_back();
            used_[static_cast<std::size_t>(next)] = 0;
        }
    }

    bool is_pending_source(Vertex v, std::size_t idx) const {
        for (std::size_t i = idx + 1; i < sources_.size(); ++i)
            if (sources_[i] == v) return true;
        return false;
    }

    const Graph& g_;
    std::vector<Vertex> sources_;
    const VertexSet& targets_;
    std::size_t limit_;
    std::vector<char> used_;
    std::vector<Path> current_;
    std::vector<std::vector<Path>> found_;
};

inline std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > cap) return cap + 1;
    }
    return result;
}

} // namespace detail

/// Number of distinct sets of |sources| vertex-disjoint paths with starting
/// nodes exactly `sources` and end nodes exactly `targets`, saturated at
/// `limit` (default: just enough to decide uniqueness).
inline std::size_t count_path_sets(const Graph& g, const VertexSet& sources,
                                   const VertexSet& targets, std::size_t limit = 2) {
    detail::PathSetEnumerator e(g, sources, targets, limit);
    return e.run().size();
}

struct ConstrainedPathsResult {
    bool constrained = false;
    std::optional<PathSet> witness;
};

/// Decides whether there exists a constrained set of m vertex-disjoint paths
/// from U to W: subsets Ubar ⊆ U \ W and Wbar ⊆ W \ U of size
/// max{0, m - |U ∩ W|} admitting a UNIQUE set of vertex-disjoint paths from
/// Ubar to Wbar avoiding U ∩ W (those vertices hold the zero-length paths of
/// the set). Subset pairs are enumerated in lexicographic order; the
/// returned witness is the lexicographically smallest path set of the first
/// constrained pair.
inline ConstrainedPathsResult constrained_path_set_exists(const Graph& g, const VertexSet& from,
                                                          const VertexSet& to, std::size_t m,
                                                          std::uint64_t budget = 1000000) {
    g.check_set(from);
    g.check_set(to);
    const VertexSet overlap = from.set_intersect(to);
    const VertexSet candidates_u = from.set_minus(to);
    const VertexSet candidates_w = to.set_minus(from);
    const std::size_t needed = m > overlap.size() ? m - overlap.size() : 0;

    ConstrainedPathsResult result;
    if (needed == 0) {
        // the empty path set is trivially the unique set of zero paths
        result.constrained = true;
        result.witness = PathSet{{}, overlap.members()};
        return result;
    }
    if (needed > candidates_u.size() || needed > candidates_w.size()) return result;

    const std::uint64_t pairs =
        detail::binomial_capped(candidates_u.size(), needed, budget) *
        detail::binomial_capped(candidates_w.size(), needed, budget);
    if (pairs > budget)
        throw budget_exceeded_error("constrained-path subset enumeration exceeds budget of " +
                                    std::to_string(budget) + " endpoint pairs");

    auto for_each_subset = [](const std::vector<Vertex>& pool, std::size_t k,
                              auto&& callback) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<Vertex> subset(k);
            for (std::size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
            if (callback(VertexSet(std::move(subset)))) return true;
            // next combination
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
            if (i == 0) return false;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    };

    for_each_subset(candidates_u.members(), needed, [&](const VertexSet& sub_u) {
        return for_each_subset(candidates_w.members(), needed, [&](const VertexSet& sub_w) {
            // cheap filter: a unique set requires at least one set
            detail::NodeSplitFlow flow(g, sub_u, sub_w, overlap);
            if (flow.max_flow() < needed) return false;
            detail::PathSetEnumerator e(g, sub_u, sub_w, 2, overlap);
            const auto& sets = e.run();
            if (sets.size() == 1) {
                result.constrained = true;
                result.witness = PathSet{sets.front(), overlap.members()};
                return true;
            }
            return false;
        });
    });
    return result;
}

} // namespace netident
