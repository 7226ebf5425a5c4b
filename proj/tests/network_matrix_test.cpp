#include <catch2/catch_amalgamated.hpp>

#include <netident/network_matrix.hpp>

#include "test_util.hpp"

using namespace netident;

namespace {
Graph fig1() { return Graph(5, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}); }
Graph fig5() { return Graph(6, {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}, {4, 6}}); }

NetworkMatrix fig1_all_inv_z() {
    NetworkMatrix nm(fig1());
    for (const Edge& e : nm.graph().edges())
        nm.set_entry(e.first, e.second, RatFunc::over_z(Rational(1)));
    return nm;
}
} // namespace

TEST_CASE("entries live on edges only") {
    NetworkMatrix nm(fig1());
    CHECK_THROWS_AS(nm.set_entry(4, 1, RatFunc::one()), input_error);
    nm.set_entry(1, 2, RatFunc::over_z(Rational(3)));
    CHECK(nm.entry(1, 2) == RatFunc::over_z(Rational(3)));
    CHECK(nm.entry(1, 3).is_zero());
    nm.set_entry(1, 2, RatFunc::zero()); // zero erases
    CHECK(nm.entries().empty());
    // dense placement: edge (j, i) is housed at row i, column j
    nm.set_entry(2, 4, RatFunc::over_z(Rational(7)));
    CHECK(nm.dense()(3, 1) == RatFunc::over_z(Rational(7)));
}

TEST_CASE("sampling produces admissible matrices with the right support") {
    const NetworkMatrix nm = sample_admissible(fig1(), std::uint64_t{99});
    CHECK(nm.entries().size() == 6);
    for (const Edge& e : {Edge{1, 2}, Edge{1, 3}, Edge{2, 4}, Edge{2, 5}, Edge{3, 4}, Edge{3, 5}}) {
        CHECK_FALSE(nm.entry(e.first, e.second).is_zero());
        CHECK(nm.entry(e.first, e.second).is_strictly_proper());
    }
    CHECK(audit_admissible(nm).admissible());

    // empty graph: the zero matrix is trivially admissible
    const NetworkMatrix zero = sample_admissible(Graph(3), std::uint64_t{1});
    CHECK(zero.entries().empty());
    CHECK(audit_admissible(zero).admissible());
}

TEST_CASE("sampling audits pass across many seeds") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> density(0.2, 0.6);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = testutil::random_graph(3 + static_cast<int>(rng() % 5), density(rng), rng);
        CHECK(audit_admissible(sample_admissible(g, rng)).admissible());
    }
}

TEST_CASE("audit rejects improper, missing, and ill-posed entries") {
    Graph pair(2, {{1, 2}, {2, 1}});

    NetworkMatrix improper(pair);
    improper.set_entry(1, 2, RatFunc::over_z(Rational(1)));
    improper.set_entry(2, 1, RatFunc(Poly::monomial(Rational(1), 2), Poly{Rational(1), Rational(1)}));
    const auto r1 = audit_admissible(improper);
    CHECK_FALSE(r1.p1_proper);
    CHECK_FALSE(r1.admissible());

    NetworkMatrix missing(pair);
    missing.set_entry(1, 2, RatFunc::over_z(Rational(1)));
    const auto r2 = audit_admissible(missing);
    CHECK_FALSE(r2.p2_support);

    // both entries tend to 1 at infinity: the 2x2 principal minor of
    // lim (I - G) is 1 - 1*1 = 0
    NetworkMatrix illposed(pair);
    const RatFunc near_one(Poly{Rational(1), Rational(1)}, Poly::monomial(Rational(1), 1));
    illposed.set_entry(1, 2, near_one);
    illposed.set_entry(2, 1, near_one);
    const auto r3 = audit_admissible(illposed);
    CHECK(r3.p1_proper);
    CHECK(r3.p2_support);
    CHECK_FALSE(r3.p3_minors);

    // proper-not-strict entries that keep all minors nonzero still pass
    NetworkMatrix fine(pair);
    const RatFunc half(Poly{Rational(0), Rational(1)}, Poly{Rational(0), Rational(2)});
    fine.set_entry(1, 2, half);
    fine.set_entry(2, 1, half);
    CHECK(audit_admissible(fine).admissible());
}

TEST_CASE("transfer matrix of the zero network is the identity") {
    const NetworkMatrix nm(Graph(4));
    CHECK(transfer_matrix(nm) == RatMatrix::identity(4));
}

TEST_CASE("transfer matrix reproduces the worked two-layer structure") {
    const NetworkMatrix nm = fig1_all_inv_z();
    const RatMatrix t = transfer_matrix(nm);
    const RatFunc inv_z = RatFunc::over_z(Rational(1));
    // T_41 = G_42*G_21 + G_43*G_31 = 2/z^2
    CHECK(t(3, 0) == RatFunc::over_z(Rational(2), 2));
    CHECK(t(3, 1) == inv_z);          // T_42 = G_42
    CHECK(t(3, 3) == RatFunc::one()); // T_44 = 1
    CHECK(t(3, 4).is_zero());         // T_45 = 0
    CHECK((RatMatrix::identity(5) - nm.dense()) * t == RatMatrix::identity(5));
}

TEST_CASE("transfer block matches the published closed form") {
    // T_{C,N_1^+} = [G52 + G54*(G42 + G43*G32); G64*(G42 + G43*G32)] on the
    // running example with C = {5,6}, N_1^+ = {2}
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const NetworkMatrix nm = sample_admissible(fig5(), rng);
        const RatMatrix t = transfer_matrix(nm);
        const RatFunc s = nm.entry(2, 4) + nm.entry(3, 4) * nm.entry(2, 3);
        CHECK(t(4, 1) == nm.entry(2, 5) + nm.entry(4, 5) * s);
        CHECK(t(5, 1) == nm.entry(4, 6) * s);
    }
}

TEST_CASE("submatrix rank agrees with the full symbolic computation") {
    std::mt19937_64 rng(66);
    std::uniform_real_distribution<double> density(0.2, 0.6);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Graph g = testutil::random_graph(n, density(rng), rng);
        const NetworkMatrix nm = sample_admissible(g, rng);
        const VertexSet rows = testutil::random_nonempty_subset(n, 3, rng);
        const VertexSet cols = testutil::random_nonempty_subset(n, 3, rng);
        const RatMatrix block = transfer_submatrix(transfer_matrix(nm), rows, cols);
        CHECK(transfer_submatrix_rank(nm, rows, cols, rng()) == normal_rank(block, rng()));
    }
}

TEST_CASE("empty row or column selections have rank zero") {
    const NetworkMatrix nm = sample_admissible(fig1(), std::uint64_t{5});
    CHECK(transfer_submatrix_rank(nm, VertexSet{}, VertexSet{1, 2}) == 0);
    CHECK(transfer_submatrix_rank(nm, VertexSet{4, 5}, VertexSet{}) == 0);
    CHECK_THROWS_AS(transfer_submatrix_rank(nm, VertexSet{9}, VertexSet{1}), input_error);
}
