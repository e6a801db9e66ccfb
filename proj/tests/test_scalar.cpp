#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tensoradj/errors.hpp"
#include "tensoradj/matrix.hpp"
#include "tensoradj/scalar.hpp"

#include <random>

using namespace tensoradj;

namespace {

ExactScalar random_scalar(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<mpq_class> c(euler_phi(n));
    for (auto& x : c) {
        x = mpq_class(num(rng), den(rng));
        x.canonicalize();
    }
    return ExactScalar(n, c);
}

ExactMatrix random_matrix(std::mt19937& rng, int r, int c, int n, int zero_bias)
{
    std::uniform_int_distribution<int> z(0, 9);
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (z(rng) >= zero_bias)
                m.set(i, j, random_scalar(rng, n));
    return m;
}

}  // namespace

TEST_CASE("zeta_4 squared is -1")
{
    ExactScalar i = ExactScalar::zeta(4);
    CHECK(i * i == ExactScalar(-1));
}

TEST_CASE("zeta_5 + zeta_5^4 is a root of x^2 + x - 1")
{
    // 2cos(2pi/5) = (-1 + sqrt 5)/2 has minimal polynomial x^2 + x - 1.
    ExactScalar x = ExactScalar::zeta(5, 1) + ExactScalar::zeta(5, 4);
    CHECK(x * x + x - ExactScalar(1) == ExactScalar());
    CHECK(!x.is_rational());
    // sqrt 5 = 2x + 1 squares to 5.
    ExactScalar s = x * ExactScalar(2) + ExactScalar(1);
    CHECK(s * s == ExactScalar(5));
}

TEST_CASE("rational inverse")
{
    CHECK(ExactScalar::rational(2, 3).inv() == ExactScalar::rational(3, 2));
    CHECK_THROWS_AS(ExactScalar().inv(), DivisionByZero);
}

TEST_CASE("conductor overflow is rejected")
{
    CHECK_THROWS_AS(ExactScalar::zeta(7) + ExactScalar::zeta(11), UnsupportedConductor);
    CHECK_THROWS_AS(ExactScalar::zeta(61), UnsupportedConductor);
}

TEST_CASE("embedding is transitive and value-preserving")
{
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        ExactScalar x = random_scalar(rng, 2);
        x = x + random_scalar(rng, 4);
        CHECK(x.embed(8).embed(40) == x.embed(40));
        CHECK(x.embed(40) == x);
        ExactScalar y = random_scalar(rng, 5);
        CHECK(y.embed(20).embed(60) == y.embed(60));
    }
}

TEST_CASE("minimized finds the smallest field")
{
    ExactScalar i = ExactScalar::zeta(4);
    ExactScalar in20 = i.embed(20);
    CHECK(in20.minimized().conductor() == 4);
    CHECK((i * i).embed(12).minimized().conductor() == 1);
    // zeta_3 lives in Q(zeta_6): conductor 3 and 6 describe the same field.
    CHECK(ExactScalar::zeta(6, 2).minimized() == ExactScalar::zeta(3));
}

TEST_CASE("inv(a) * a == 1 for random nonzero scalars")
{
    std::mt19937 rng(11);
    const int ns[] = {1, 2, 3, 4, 5, 8};
    int done = 0;
    while (done < 100) {
        ExactScalar a = random_scalar(rng, ns[done % 6]);
        if (a.is_zero())
            continue;
        CHECK((a.inv() * a).is_one());
        ++done;
    }
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        ExactScalar a = random_scalar(rng, 8), b = random_scalar(rng, 5), c = random_scalar(rng, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == ExactScalar());
    }
}

TEST_CASE("to_string renders the power basis")
{
    CHECK(ExactScalar::rational(-1, 2).to_string() == "-1/2");
    CHECK(ExactScalar::zeta(5).to_string() == "z5");
    CHECK(ExactScalar().to_string() == "0");
}

TEST_CASE("solve_linear: identity system")
{
    ExactMatrix b(2, 1);
    b.set(0, 0, ExactScalar(1));
    auto s = solve_linear(ExactMatrix::identity(2), b);
    REQUIRE(s.unique());
    CHECK(s.particular == b);
}

TEST_CASE("solve_linear: zero system has a full kernel")
{
    auto s = solve_linear(ExactMatrix(2, 2), ExactMatrix(2, 1));
    CHECK(s.consistent());
    CHECK(s.kernel.size() == 2);
}

TEST_CASE("solve_linear: rank-one system")
{
    ExactMatrix a = ExactMatrix::from_rows({{1, 1}, {1, 1}});
    ExactMatrix b = ExactMatrix::from_rows({{1}, {1}});
    auto s = solve_linear(a, b);
    REQUIRE(s.kind == LinearSolution::Affine);
    CHECK(s.particular == ExactMatrix::from_rows({{1}, {0}}));
    REQUIRE(s.kernel.size() == 1);
    CHECK((a * s.kernel[0]).is_zero());
    CHECK(a * s.particular == b);
}

TEST_CASE("solve_linear: inconsistent")
{
    ExactMatrix a = ExactMatrix::from_rows({{1, 1}, {1, 1}});
    ExactMatrix b = ExactMatrix::from_rows({{1}, {2}});
    CHECK(solve_linear(a, b).kind == LinearSolution::Inconsistent);
}

TEST_CASE("kernel_basis")
{
    CHECK(kernel_basis(ExactMatrix::identity(3)).empty());
    CHECK(kernel_basis(ExactMatrix(3, 3)).size() == 3);
    ExactMatrix a = ExactMatrix::from_rows({{1, 2}, {2, 4}});
    auto k = kernel_basis(a);
    REQUIRE(k.size() == 1);
    // (2, -1) spans the kernel: k must be a multiple of it.
    CHECK(k[0](0, 0) * ExactScalar(-1) == k[0](1, 0) * ExactScalar(2));
    CHECK((a * k[0]).is_zero());
}

TEST_CASE("shape errors")
{
    CHECK_THROWS_AS(ExactMatrix(2, 3) * ExactMatrix(2, 3), ShapeError);
    CHECK_THROWS_AS(ExactMatrix(2, 3) + ExactMatrix(3, 2), ShapeError);
    CHECK_THROWS_AS(solve_linear(ExactMatrix(2, 2), ExactMatrix(3, 1)), ShapeError);
    CHECK_THROWS_AS(inverse(ExactMatrix(2, 2)), DivisionByZero);
}

TEST_CASE("random systems over small cyclotomic fields")
{
    std::mt19937 rng(2024);
    for (int n = 1; n <= 8; ++n) {
        for (int t = 0; t < 6; ++t) {
            std::uniform_int_distribution<int> dim(1, 5);
            int r = dim(rng), c = dim(rng);
            ExactMatrix a = random_matrix(rng, r, c, n, 4);
            ExactMatrix x0 = random_matrix(rng, c, 1, n, 2);
            ExactMatrix b = a * x0;
            auto s = solve_linear(a, b);
            REQUIRE(s.consistent());
            CHECK(a * s.particular == b);
            CHECK(static_cast<int>(s.kernel.size()) == c - rank(a));
            for (const auto& k : s.kernel)
                CHECK((a * k).is_zero());
            if (r == c && rank(a) == r)
                CHECK(a * inverse(a) == ExactMatrix::identity(r));
        }
    }
}
