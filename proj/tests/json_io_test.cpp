#include <catch2/catch_amalgamated.hpp>

#include <netident/json_io.hpp>

using namespace netident;

namespace {
Graph fig5() { return Graph(6, {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}, {4, 6}}); }
} // namespace

TEST_CASE("graph documents round-trip") {
    GraphDocument doc;
    doc.graph = fig5();
    doc.labels = {{1, "excitation"}, {6, "sensor"}};
    const json j = to_json(doc);
    const GraphDocument back = graph_document_from_json(j);
    CHECK(back.graph == doc.graph);
    CHECK(back.labels == doc.labels);
    CHECK(to_json(back) == j);
}

TEST_CASE("graph parsing rejects malformed documents") {
    CHECK_THROWS_AS(graph_document_from_json(json::array()), input_error);
    CHECK_THROWS_AS(graph_document_from_json(json{{"edges", json::array()}}), input_error);
    CHECK_THROWS_AS(graph_document_from_json(json{{"n", 2}}), input_error);
    CHECK_THROWS_AS(graph_document_from_json(json{{"n", 2}, {"edges", json::array()},
                                                  {"extra", 1}}),
                    input_error); // unknown field
    CHECK_THROWS_AS(graph_document_from_json(
                        json{{"n", 2}, {"edges", json::array({json::array({1})})}}),
                    input_error);
    CHECK_THROWS_AS(graph_document_from_json(
                        json{{"n", 2}, {"edges", json::array({json::array({1, 3})})}}),
                    input_error); // vertex out of range
    CHECK_THROWS_AS(graph_document_from_json(json{{"n", 2}, {"edges", json::array()},
                                                  {"labels", json{{"x", "a"}}}}),
                    input_error);
}

TEST_CASE("rational functions round-trip exactly") {
    const RatFunc f(Poly{Rational(1, 3), Rational(-7)}, Poly{Rational(0), Rational(2), Rational(4)});
    const json j = to_json(f);
    CHECK(ratfunc_from_json(j) == f);
    // huge coefficients survive the string representation
    const RatFunc big(Poly(Rational(Integer("123456789012345678901234567890"),
                                    Integer("987654321"))),
                      Poly::monomial(Rational(1), 3));
    CHECK(ratfunc_from_json(to_json(big)) == big);
    CHECK_THROWS_AS(ratfunc_from_json(json{{"num", json::array()}}), input_error);
    CHECK_THROWS_AS(ratfunc_from_json(json{{"num", json::array()}, {"den", json::array()},
                                           {"x", 1}}),
                    input_error);
    CHECK_THROWS_AS(poly_from_json(json::array({"not-a-number"})), input_error);
}

TEST_CASE("network matrices round-trip") {
    const NetworkMatrix nm = sample_admissible(fig5(), std::uint64_t{8});
    const json j = to_json(nm);
    const NetworkMatrix back = network_matrix_from_json(j);
    CHECK(back.graph() == nm.graph());
    CHECK(back.entries() == nm.entries());
    CHECK(to_json(back) == j);
    // entries must sit on edges
    json bad = j;
    bad["entries"][0]["from"] = 6;
    bad["entries"][0]["to"] = 1;
    CHECK_THROWS_AS(network_matrix_from_json(bad), input_error);
}

TEST_CASE("derivations and reports serialize with full traces") {
    const auto d = simplify(fig5(), VertexSet{2}, VertexSet{5, 6});
    const json j = to_json(d);
    CHECK(j["derived_set"] == json::array({2, 4}));
    CHECK(j["anchor_set"] == json::array({2}));
    CHECK(j["trace"].size() == d.trace.size());
    for (const json& step : j["trace"])
        CHECK((step["op"] == "remove_outgoing" || step["op"] == "replace"));

    const auto report = rank_trials(fig5(), VertexSet{2}, VertexSet{5, 6}, 4, 99);
    const json rj = to_json(report);
    CHECK(rj["verdict"] == "all_full_rank");
    CHECK(rj["trials"] == 4);
    CHECK(rj["per_trial_ranks"] == json::array({1, 1, 1, 1}));
    CHECK_FALSE(rj.contains("witness"));
}

TEST_CASE("DOT export marks derived-set members as filled") {
    const auto d = simplify(fig5(), VertexSet{2}, VertexSet{5, 6});
    const std::string dot = to_dot(d.derived_graph, d.derived_set, {{1, "input"}});
    CHECK(dot.rfind("digraph G {", 0) == 0);
    CHECK(dot.find("2 [style=filled, fillcolor=black, fontcolor=white]") != std::string::npos);
    CHECK(dot.find("4 [style=filled, fillcolor=black, fontcolor=white]") != std::string::npos);
    CHECK(dot.find("label=\"input\"") != std::string::npos);
    CHECK(dot.find("1 -> 2;") != std::string::npos);
    CHECK(dot.find("3 -> 4;") != std::string::npos);
    // unfilled nodes carry no style attribute
    CHECK(dot.find("3 [style") == std::string::npos);
}
