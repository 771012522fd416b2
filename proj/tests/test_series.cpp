#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sdc/laurent.hpp"

using namespace sdc;

namespace {

LaurentPolyZ geometric_like(long long head, int trunc)
{
    // head + t + t^2 + ... + t^trunc
    std::vector<long long> c(static_cast<std::size_t>(trunc) + 1, 1);
    c[0] = head;
    return LaurentPolyZ(0, std::move(c));
}

LaurentPolyZ random_series(std::mt19937& rng, int max_off, int len)
{
    std::uniform_int_distribution<int> off(-max_off, max_off);
    std::uniform_int_distribution<long long> coeff(-4, 4);
    int o = off(rng);
    std::vector<long long> c(static_cast<std::size_t>(len));
    for (auto& x : c)
        x = coeff(rng);
    return LaurentPolyZ(o, std::move(c));
}

} // namespace

TEST_CASE("product of two shifted geometric series")
{
    auto a = geometric_like(2, 10);
    auto b = geometric_like(5, 10);
    auto p = series_mul(a, b);
    CHECK(p.offset == 0);
    CHECK(p.trunc == 10);
    CHECK(p.coeff(0) == 10);
    CHECK(p.coeff(1) == 7);
    CHECK(p.coeff(2) == 8);
    CHECK(p.coeff(3) == 9);
    for (int e = 1; e <= 10; ++e)
        CHECK(p.coeff(e) == e + 6);
}

TEST_CASE("multiplicative unit and monomial shift")
{
    auto a = geometric_like(3, 8);
    auto one = LaurentPolyZ::constant(1, 8);
    auto p = series_mul(a, one);
    CHECK(series_agree(p, a));
    CHECK(p.trunc == 8);

    auto t3 = LaurentPolyZ::monomial(1, 3, 11);
    auto s = series_mul(a, t3);
    CHECK(s.offset == 3);
    CHECK(s.coeff(3) == 3);
    CHECK(s.coeff(4) == 1);
    CHECK(series_agree(s, series_shift(a, 3)));
}

TEST_CASE("truncation propagation takes the smaller reach")
{
    LaurentPolyZ a(2, {1, 1});   // reliable on [2,3]
    LaurentPolyZ b(0, {1, 2, 3, 4, 5}); // reliable on [0,4]
    auto p = series_mul(a, b);
    CHECK(p.offset == 2);
    CHECK(p.trunc == std::min(2 + 4, 0 + 3));
}

TEST_CASE("series product is commutative and associative on random inputs")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_series(rng, 3, 6);
        auto b = random_series(rng, 3, 6);
        auto c = random_series(rng, 3, 6);
        CHECK(series_agree(series_mul(a, b), series_mul(b, a)));
        CHECK(series_agree(series_mul(series_mul(a, b), c),
                           series_mul(a, series_mul(b, c))));
    }
}

TEST_CASE("coefficients below offset read as exact zeros")
{
    LaurentPolyZ s(2, {7});
    CHECK(s.coeff(0) == 0);
    CHECK(s.coeff(1) == 0);
    CHECK(s.coeff(2) == 7);
    CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
}

TEST_CASE("human rendering")
{
    LaurentPolyZ s(0, {1, 2, 2});
    CHECK(s.to_string() == "1 + 2*t + 2*t^2");
    CHECK(LaurentPolyZ::zero(4).to_string() == "0");
    CHECK(LaurentPolyZ::monomial(1, 3, 5).to_string() == "t^3");
}
