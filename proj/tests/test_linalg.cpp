#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sdc/matrix.hpp"

using namespace sdc;

namespace {

template <class F>
Matrix<F> from_ints(F k, std::size_t r, std::size_t c, std::vector<long long> vals)
{
    Matrix<F> m(k, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = k.from_int(vals[i * c + j]);
    return m;
}

template <class F>
Matrix<F> random_matrix(F k, std::size_t r, std::size_t c, std::mt19937& rng)
{
    std::uniform_int_distribution<long long> d(-6, 6);
    Matrix<F> m(k, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = k.from_int(d(rng));
    return m;
}

} // namespace

TEST_CASE("GF(p) field arithmetic")
{
    GFp k(7);
    CHECK(k.add(5, 4) == 2);
    CHECK(k.sub(2, 5) == 4);
    CHECK(k.mul(3, 5) == 1);
    CHECK(k.inv(3) == 5);
    CHECK(k.from_int(-1) == 6);
    for (std::uint32_t a = 1; a < 7; ++a)
        CHECK(k.mul(a, k.inv(a)) == 1);
    CHECK_THROWS_AS(GFp(0), std::invalid_argument);
    CHECK_THROWS_AS(GFp(1), std::invalid_argument);
    CHECK_THROWS_AS(GFp(6), std::invalid_argument);
    CHECK_NOTHROW(GFp(2147483647)); // 2^31 - 1 is prime
}

TEST_CASE("rational field keeps canonical form")
{
    Rationals q;
    auto half = q.div(q.one(), q.from_int(2));
    auto third = q.div(q.one(), q.from_int(3));
    auto sum = q.add(half, third);
    CHECK(q.to_string(sum) == "5/6");
    CHECK(q.is_zero(q.sub(sum, sum)));
    CHECK_THROWS_AS(q.inv(q.zero()), std::domain_error);
}

TEST_CASE("rref: identity stays put")
{
    Rationals q;
    auto id = Matrix<Rationals>::identity(q, 2);
    auto rr = rref(id);
    CHECK(rr.reduced == id);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref: dependent rows over QQ")
{
    Rationals q;
    auto m = from_ints(q, 2, 2, {1, 2, 2, 4});
    auto rr = rref(m);
    CHECK(rr.pivots == std::vector<std::size_t>{0});
    CHECK(rr.rank() == 1);
}

TEST_CASE("rref over GF(2): full rank pair")
{
    // hand reduction: (1,1),(1,0) -> r2+=r1 -> (0,1); back-substitute -> identity
    GFp k(2);
    auto m = from_ints(k, 2, 2, {1, 1, 1, 2});
    auto rr = rref(m);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
    CHECK(rr.reduced == Matrix<GFp>::identity(k, 2));
}

TEST_CASE("kernel_basis: identity and zero matrices")
{
    Rationals q;
    CHECK(kernel_basis(Matrix<Rationals>::identity(q, 3)).cols() == 0);
    Matrix<Rationals> z(q, 2, 3);
    auto ker = kernel_basis(z);
    CHECK(ker.cols() == 3);
    CHECK(ker == Matrix<Rationals>::identity(q, 3));
}

TEST_CASE("kernel_basis: rank-1 matrix over QQ")
{
    Rationals q;
    auto m = from_ints(q, 2, 2, {1, 2, 2, 4});
    auto ker = kernel_basis(m);
    REQUIRE(ker.cols() == 1);
    CHECK(matmul(m, ker).is_zero());
    // (-2, 1) up to scale
    CHECK(q.mul(ker.at(0, 0), q.from_int(1)) == q.mul(ker.at(1, 0), q.from_int(-2)));
}

TEST_CASE("solve_right: identity, inconsistent, consistent")
{
    Rationals q;
    auto id = Matrix<Rationals>::identity(q, 2);
    auto b = from_ints(q, 2, 1, {3, 4});
    auto x = solve_right(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto m = from_ints(q, 2, 2, {1, 2, 2, 4});
    CHECK(!solve_right(m, from_ints(q, 2, 1, {1, 3})).has_value());

    auto x2 = solve_right(m, from_ints(q, 2, 1, {1, 2}));
    REQUIRE(x2.has_value());
    CHECK(matmul(m, *x2) == from_ints(q, 2, 1, {1, 2}));

    CHECK_THROWS_AS(solve_right(m, from_ints(q, 3, 1, {1, 2, 3})),
                    std::invalid_argument);
}

TEST_CASE("rref is idempotent and satisfies rank-nullity on random matrices")
{
    std::mt19937 rng(42);
    GFp k(101);
    Rationals q;
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        auto m = random_matrix(k, r, c, rng);
        auto rr = rref(m);
        auto rr2 = rref(rr.reduced);
        CHECK(rr2.reduced == rr.reduced);
        CHECK(rr2.pivots == rr.pivots);
        auto ker = kernel_basis(m);
        CHECK(c == rr.rank() + ker.cols());
        CHECK(matmul(m, ker).is_zero());

        auto mq = random_matrix(q, r, c, rng);
        auto rrq = rref(mq);
        CHECK(rref(rrq.reduced).reduced == rrq.reduced);
        auto kerq = kernel_basis(mq);
        CHECK(c == rrq.rank() + kerq.cols());
        CHECK(matmul(mq, kerq).is_zero());
    }
}

TEST_CASE("solve then multiply reproduces the right-hand side")
{
    std::mt19937 rng(7);
    GFp k(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        auto m = random_matrix(k, r, c, rng);
        auto x0 = random_matrix(k, c, 2, rng);
        auto b = matmul(m, x0); // solvable by construction
        auto x = solve_right(m, b);
        REQUIRE(x.has_value());
        CHECK(matmul(m, *x) == b);
    }
}

TEST_CASE("parallel kernels agree with the serial reference")
{
    std::mt19937 rng(1234);
    GFp k(65537);
    Rationals q;
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        auto m = random_matrix(k, r, c, rng);
        auto a = rref(m);
        auto b = rref_serial(m);
        CHECK(a.reduced == b.reduced);
        CHECK(a.pivots == b.pivots);
        auto n = random_matrix(k, c, 1 + rng() % 8, rng);
        CHECK(matmul(m, n) == matmul_serial(m, n));

        auto mq = random_matrix(q, r % 5 + 1, c % 5 + 1, rng);
        CHECK(rref(mq).reduced == rref_serial(mq).reduced);
    }
    // one larger instance so the OpenMP branch actually engages
    auto big = random_matrix(k, 80, 80, rng);
    CHECK(rref(big).reduced == rref_serial(big).reduced);
    auto big2 = random_matrix(k, 80, 80, rng);
    CHECK(matmul(big, big2) == matmul_serial(big, big2));
}

TEST_CASE("RowBasis reduces, inserts and reports complements")
{
    Rationals q;
    RowBasis<Rationals> rb(q, 3);
    CHECK(rb.insert({q.from_int(1), q.from_int(2), q.from_int(0)}));
    CHECK(!rb.insert({q.from_int(2), q.from_int(4), q.from_int(0)}));
    CHECK(rb.insert({q.from_int(0), q.from_int(1), q.from_int(1)}));
    CHECK(rb.dim() == 2);
    CHECK(rb.complement() == std::vector<std::size_t>{2});
    CHECK(rb.contains({q.from_int(1), q.from_int(3), q.from_int(1)}));
    CHECK(!rb.contains({q.from_int(0), q.from_int(0), q.from_int(1)}));
}
