#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netident/errors.hpp"

namespace netident {

/// Vertices are 1-based integers, matching all external I/O.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;

    VertexSet(std::initializer_list<Vertex> vs) : members_(vs) { normalize(); }

    explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) { normalize(); }

    const std::vector<Vertex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(Vertex v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }

    void insert(Vertex v) {
        auto it = std::lower_bound(members_.begin(), members_.end(), v);
        if (it == members_.end() || *it != v) members_.insert(it, v);
    }

    void erase(Vertex v) {
        auto it = std::lower_bound(members_.begin(), members_.end(), v);
        if (it != members_.end() && *it == v) members_.erase(it);
    }

    bool subset_of(const VertexSet& other) const {
        return std::includes(other.members_.begin(), other.members_.end(),
                             members_.begin(), members_.end());
    }

    VertexSet set_union(const VertexSet& other) const {
        std::vector<Vertex> out;
        std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end(), std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    VertexSet set_minus(const VertexSet& other) const {
        std::vector<Vertex> out;
        std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                            other.members_.end(), std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    VertexSet set_intersect(const VertexSet& other) const {
        std::vector<Vertex> out;
        std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                              other.members_.end(), std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.members_ == b.members_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        return a.members_ < b.members_;
    }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    void normalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::vector<Vertex> members_;
};

/// Simple directed graph over vertices 1..n: no self-loops, at most one edge
/// per ordered pair.
class Graph {
public:
    explicit Graph(int n = 0) : n_(n) {
        if (n < 0) throw input_error("vertex count must be non-negative");
    }

    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (const Edge& e : edges) add_edge(e.first, e.second);
    }

    int vertex_count() const { return n_; }

    void check_vertex(Vertex v) const {
        if (v < 1 || v > n_)
            throw input_error("vertex id " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n_));
    }

    void check_set(const VertexSet& s) const {
        for (Vertex v : s) check_vertex(v);
    }

    void add_edge(Vertex from, Vertex to) {
        check_vertex(from);
        check_vertex(to);
        if (from == to) throw input_error("self-loop (" + std::to_string(from) + "," +
                                          std::to_string(to) + ") not allowed");
        edges_.insert({from, to});
    }

    void remove_edge(Vertex from, Vertex to) { edges_.erase({from, to}); }

    bool has_edge(Vertex from, Vertex to) const { return edges_.count({from, to}) > 0; }

    std::size_t edge_count() const { return edges_.size(); }

    const std::set<Edge>& edges() const { return edges_; }

    std::vector<Vertex> out_neighbours(Vertex v) const {
        std::vector<Vertex> out;
        for (auto it = edges_.lower_bound({v, 0}); it != edges_.end() && it->first == v; ++it)
            out.push_back(it->second);
        return out;
    }

    std::vector<Vertex> in_neighbours(Vertex v) const {
        std::vector<Vertex> in;
        for (const Edge& e : edges_)
            if (e.second == v) in.push_back(e.first);
        return in;
    }

    VertexSet all_vertices() const {
        std::vector<Vertex> vs(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) vs[static_cast<std::size_t>(i)] = i + 1;
        return VertexSet(std::move(vs));
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    int n_;
    std::set<Edge> edges_;
};

/// All vertices reachable from U, including U itself by convention.
/// Breadth-first traversal, O(|V| + |E|) per call.
inline VertexSet reachable_set(const Graph& g, const VertexSet& from) {
    g.check_set(from);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::deque<Vertex> queue;
    for (Vertex v : from) {
        seen[static_cast<std::size_t>(v)] = 1;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.out_neighbours(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
    return VertexSet(std::move(out));
}

} // namespace netident
