#pragma once

#include <random>
#include <vector>

#include <netident/graph.hpp>

namespace netident::testutil {

/// Random simple digraph on n vertices; each ordered pair (i,j), i != j, is an
/// edge independently with probability `density`.
inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(density);
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = 1; j <= n; ++j)
            if (i != j && coin(rng)) g.add_edge(i, j);
    return g;
}

/// Uniformly random subset of {1..n} of the given size.
inline VertexSet random_subset(int n, std::size_t size, std::mt19937_64& rng) {
    std::vector<Vertex> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min(size, pool.size()));
    return VertexSet(std::move(pool));
}

/// Non-empty random subset with size in [1, max_size].
inline VertexSet random_nonempty_subset(int n, std::size_t max_size, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dist(1, std::min<std::size_t>(max_size,
                                                                             static_cast<std::size_t>(n)));
    return random_subset(n, dist(rng), rng);
}

} // namespace netident::testutil
