#include <catch2/catch_amalgamated.hpp>

#include <netident/graph.hpp>

using namespace netident;

namespace {
Graph fig5() { return Graph(6, {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}, {4, 6}}); }
} // namespace

TEST_CASE("vertex set basics") {
    VertexSet s{3, 1, 2, 3};
    CHECK(s.size() == 3);
    CHECK(s.contains(1));
    CHECK_FALSE(s.contains(4));
    s.insert(4);
    s.insert(4);
    CHECK(s.size() == 4);
    s.erase(1);
    CHECK(s == VertexSet{2, 3, 4});
    CHECK(VertexSet{2, 3}.subset_of(s));
    CHECK_FALSE(s.subset_of(VertexSet{2, 3}));
    CHECK(VertexSet{}.subset_of(s));
    CHECK(VertexSet{1, 2}.set_union(VertexSet{2, 3}) == VertexSet{1, 2, 3});
    CHECK(VertexSet{1, 2, 3}.set_minus(VertexSet{2}) == VertexSet{1, 3});
    CHECK(VertexSet{1, 2, 3}.set_intersect(VertexSet{2, 3, 4}) == VertexSet{2, 3});
}

TEST_CASE("graph construction and validation") {
    Graph g(3);
    g.add_edge(1, 2);
    g.add_edge(1, 2); // set semantics: no duplicate
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(2, 1));
    CHECK_THROWS_AS(g.add_edge(1, 1), input_error);
    CHECK_THROWS_AS(g.add_edge(0, 2), input_error);
    CHECK_THROWS_AS(g.add_edge(1, 4), input_error);
    CHECK_THROWS_AS(Graph(-1), input_error);
    CHECK_THROWS_AS(g.check_set(VertexSet{1, 9}), input_error);
    g.remove_edge(1, 2);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("neighbourhoods") {
    const Graph g = fig5();
    CHECK(g.out_neighbours(2) == std::vector<Vertex>{3, 4, 5});
    CHECK(g.out_neighbours(6).empty());
    CHECK(g.in_neighbours(4) == std::vector<Vertex>{2, 3});
    CHECK(g.in_neighbours(1).empty());
    CHECK(g.all_vertices() == VertexSet{1, 2, 3, 4, 5, 6});
}

TEST_CASE("reachability on the running example") {
    const Graph g = fig5();
    CHECK(reachable_set(g, VertexSet{2}) == VertexSet{2, 3, 4, 5, 6});
    CHECK(reachable_set(g, VertexSet{3}) == VertexSet{3, 4, 5, 6});
    CHECK(reachable_set(g, g.all_vertices()) == g.all_vertices());
    CHECK(reachable_set(g, VertexSet{}) == VertexSet{});
    // convention: a vertex is reachable from itself
    CHECK(reachable_set(g, VertexSet{6}) == VertexSet{6});
    CHECK_THROWS_AS(reachable_set(g, VertexSet{7}), input_error);
}
