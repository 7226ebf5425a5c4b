#include <catch2/catch_amalgamated.hpp>

#include <netident/matrix.hpp>

using namespace netident;

namespace {

RatFunc random_entry(std::mt19937_64& rng) {
    // low-degree entries keep exact elimination affordable; the algorithms are
    // degree-agnostic, so this loses no coverage
    std::uniform_int_distribution<int> coeff(-3, 3), deg(0, 1);
    auto draw = [&] {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coeff(rng);
        return Poly::from_coeffs(std::move(c));
    };
    Poly den = draw();
    while (den.is_zero()) den = draw();
    return RatFunc(draw(), den);
}

RatMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_entry(rng);
    return m;
}

} // namespace

TEST_CASE("identity and product") {
    const RatMatrix id = RatMatrix::identity(3);
    CHECK(id * id == id);
    CHECK(rank(id) == 3);
    CHECK(determinant(id) == RatFunc::one());
    CHECK(inverse(id) == id);
    CHECK((id - id).is_zero());
}

TEST_CASE("1x1 inverse example") {
    RatMatrix m(1, 1);
    m(0, 0) = RatFunc::one() - RatFunc::over_z(Rational(1)); // 1 - 1/z = (z-1)/z
    const RatMatrix inv = inverse(m);
    // z/(z-1)
    const RatFunc expected(Poly::monomial(Rational(1), 1), Poly{Rational(-1), Rational(1)});
    CHECK(inv(0, 0) == expected);
}

TEST_CASE("proportional rows have rank one") {
    const RatFunc f = RatFunc::over_z(Rational(4));
    RatMatrix m(2, 2);
    m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = f;
    CHECK(rank(m) == 1);
    CHECK(normal_rank(m) == 1);
    CHECK(determinant(m).is_zero());
    CHECK_THROWS_AS(inverse(m), singular_matrix_error);
}

TEST_CASE("normal rank of the rank-deficient 2x1 transfer block") {
    // Entries chosen so G42 + G43*G32 = 0: G42 = -1/z^2, G43 = G32 = 1/z,
    // G52 = G54 = G64 = 1/z. The block [G52 + G54*s; G64*s] with
    // s = G42 + G43*G32 = 0 becomes [1/z; 0], rank 1.
    const RatFunc g42 = RatFunc(Poly(Rational(-1)), Poly::monomial(Rational(1), 2));
    const RatFunc g43 = RatFunc::over_z(Rational(1));
    const RatFunc g32 = RatFunc::over_z(Rational(1));
    const RatFunc g52 = RatFunc::over_z(Rational(1));
    const RatFunc g54 = RatFunc::over_z(Rational(1));
    const RatFunc g64 = RatFunc::over_z(Rational(1));
    const RatFunc s = g42 + g43 * g32;
    REQUIRE(s.is_zero());
    RatMatrix block(2, 1);
    block(0, 0) = g52 + g54 * s;
    block(1, 0) = g64 * s;
    CHECK(normal_rank(block) == 1);
}

TEST_CASE("inverse of inverse is identity map") {
    std::mt19937_64 rng(3);
    int done = 0;
    while (done < 12) {
        const std::size_t n = 1 + done % 4;
        const RatMatrix m = random_matrix(n, rng);
        if (determinant(m).is_zero()) continue;
        CHECK(inverse(inverse(m)) == m);
        CHECK(m * inverse(m) == RatMatrix::identity(n));
        ++done;
    }
}

TEST_CASE("adjugate examples") {
    CHECK(adjugate(RatMatrix::identity(2)) == RatMatrix::identity(2));
    // [[1, -g],[0, 1]] -> [[1, g],[0, 1]]
    const RatFunc g = RatFunc::over_z(Rational(5));
    RatMatrix m(2, 2);
    m(0, 0) = m(1, 1) = RatFunc::one();
    m(0, 1) = -g;
    RatMatrix expected = m;
    expected(0, 1) = g;
    CHECK(adjugate(m) == expected);
}

TEST_CASE("adjugate identity on random matrices") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial) % 5;
        const RatMatrix m = random_matrix(n, rng);
        const RatFunc det = determinant(m);
        RatMatrix det_i(n, n);
        for (std::size_t i = 0; i < n; ++i) det_i(i, i) = det;
        CHECK(adjugate(m) * m == det_i);
    }
}

TEST_CASE("adjugate of large matrices uses the determinant identity") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> coeff(1, 9);
    // I minus a strictly proper random matrix: invertible and cheap exactly
    RatMatrix m = RatMatrix::identity(7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            m(i, j) -= RatFunc::over_z(Rational(coeff(rng)));
    const RatFunc det = determinant(m);
    REQUIRE_FALSE(det.is_zero());
    RatMatrix det_i(7, 7);
    for (std::size_t i = 0; i < 7; ++i) det_i(i, i) = det;
    CHECK(adjugate(m) * m == det_i);
}

TEST_CASE("solve computes the requested columns") {
    std::mt19937_64 rng(17);
    RatMatrix a;
    do {
        a = random_matrix(4, rng);
    } while (determinant(a).is_zero());
    const RatMatrix b = random_matrix(4, rng);
    const RatMatrix x = solve(a, b);
    CHECK(a * x == b);
    RatMatrix singular(2, 2);
    singular(0, 0) = singular(1, 0) = RatFunc::one();
    CHECK_THROWS_AS(solve(singular, RatMatrix::identity(2)), singular_matrix_error);
}

TEST_CASE("evaluation rank never exceeds exact rank") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const RatMatrix m = random_matrix(1 + static_cast<std::size_t>(trial) % 4, rng);
        const std::size_t exact = rank(m);
        CHECK(normal_rank(m, 1000 + static_cast<std::uint64_t>(trial)) == exact);
        auto at = evaluate(m, random_eval_point(rng));
        if (at) CHECK(rank(*at) <= exact);
    }
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(RatMatrix(2, 3) * RatMatrix(2, 3), precondition_error);
    CHECK_THROWS_AS(determinant(RatMatrix(2, 3)), precondition_error);
    CHECK_THROWS_AS(inverse(RatMatrix(2, 3)), precondition_error);
    CHECK_THROWS_AS(adjugate(RatMatrix(2, 3)), precondition_error);
    CHECK_THROWS_AS(solve(RatMatrix(2, 2), RatMatrix(3, 1)), precondition_error);
}
