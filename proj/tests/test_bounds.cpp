#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdc/bounds.hpp"

using namespace sdc;

namespace {

long long binom(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("coeffwise_geq basics")
{
    LaurentPolyZ a(0, {1, 2, 2});
    CHECK(coeffwise_geq(a, a).outcome == BoundOutcome::Holds);
    LaurentPolyZ b(0, {1, 1, 1});
    CHECK(coeffwise_geq(a, b).outcome == BoundOutcome::Holds);
    LaurentPolyZ c(0, {1, 2, 2, 2});
    auto r = coeffwise_geq(c, lower_bound_poly(2, 0, 3));
    CHECK(r.outcome == BoundOutcome::Fails);
    CHECK(r.first_failure == 1); // 2 < binomial(3,2) = 3
}

TEST_CASE("coeffwise_geq with empty overlap is inconclusive")
{
    LaurentPolyZ a(5, {});
    a.trunc = 4;
    LaurentPolyZ b(5, {1});
    auto r = coeffwise_geq(a, b);
    CHECK(r.outcome == BoundOutcome::Inconclusive);
}

TEST_CASE("lower_bound_poly coefficients are binomials")
{
    auto d0 = lower_bound_poly(0, 0, 6);
    for (int i = 0; i <= 6; ++i)
        CHECK(d0.coeff(i) == 1);
    auto d1 = lower_bound_poly(1, 0, 6);
    for (int i = 0; i <= 6; ++i)
        CHECK(d1.coeff(i) == i + 1);
    auto d2 = lower_bound_poly(2, 3, 5);
    CHECK(d2.offset == 3);
    CHECK(d2.coeff(3) == 1);
    CHECK(d2.coeff(4) == 3);
    CHECK(d2.coeff(5) == 6);
    // Pascal recurrence against an independent binomial evaluation
    for (int d = 0; d <= 4; ++d) {
        auto s = lower_bound_poly(d, 0, 8);
        for (int i = 0; i <= 8; ++i)
            CHECK(s.coeff(i) == binom(i + d, d));
        for (int i = 1; i <= 8; ++i)
            if (d >= 1)
                CHECK(s.coeff(i)
                      == s.coeff(i - 1) + lower_bound_poly(d - 1, 0, 8).coeff(i));
    }
}

TEST_CASE("prime factor counting")
{
    CHECK(prime_factor_count(2) == 1);
    CHECK(prime_factor_count(12) == 3);
    CHECK(prime_factor_count(1) == 0);
    CHECK(is_prime_ll(2));
    CHECK(is_prime_ll(101));
    CHECK(!is_prime_ll(12));
}

TEST_CASE("chain polynomial bound")
{
    // 1,2,2,... against d=1 needs mu_i >= i+1; fails at i=2
    LaurentPolyZ bass(0, {1, 2, 2});
    auto r = verify_chain_poly_bound(bass, 0, 1);
    CHECK(r.outcome == BoundOutcome::Fails);
    CHECK(r.witness == 2);
    CHECK(r.conclusion == "no-chain-of-length-2");

    LaurentPolyZ ones(0, {1, 1, 1, 1});
    CHECK(verify_chain_poly_bound(ones, 0, 0).outcome == BoundOutcome::Holds);

    LaurentPolyZ gor(0, {1, 0, 0});
    auto g = verify_chain_poly_bound(gor, 0, 1);
    CHECK(g.outcome == BoundOutcome::Fails);
    CHECK(g.witness == 1); // 0 >= 2 is false
}

TEST_CASE("degenerate chain bound always holds on positive series")
{
    LaurentPolyZ bass(0, {1, 2, 5, 9, 14});
    CHECK(verify_chain_poly_bound(bass, 0, 0).outcome == BoundOutcome::Holds);
}

TEST_CASE("type factor bound")
{
    auto r = verify_type_factor_bound(2, 1);
    CHECK(r.outcome == BoundOutcome::Holds);
    CHECK(r.conclusion == "free-or-dualizing");

    auto r2 = verify_type_factor_bound(12, 3);
    CHECK(r2.outcome == BoundOutcome::Holds);
    CHECK(r2.conclusion.empty());

    auto r3 = verify_type_factor_bound(4, 3);
    CHECK(r3.outcome == BoundOutcome::Fails);
    CHECK(r3.witness == 2); // Omega(4) = 2
}

TEST_CASE("next Bass number bounds the chain length")
{
    LaurentPolyZ bass(0, {1, 2, 2});
    CHECK(verify_next_bass_bound(bass, 0, 2).outcome == BoundOutcome::Holds);
    CHECK(verify_next_bass_bound(bass, 0, 3).outcome == BoundOutcome::Fails);

    LaurentPolyZ gor(0, {1, 0, 0});
    CHECK(verify_next_bass_bound(gor, 0, 0).outcome == BoundOutcome::Holds);
    CHECK(verify_next_bass_bound(gor, 0, 1).outcome == BoundOutcome::Fails);

    LaurentPolyZ b3(0, {1, 3, 3});
    CHECK(verify_next_bass_bound(b3, 0, 5).outcome == BoundOutcome::Fails);

    LaurentPolyZ tiny(0, {1});
    CHECK(verify_next_bass_bound(tiny, 0, 1).outcome == BoundOutcome::Inconclusive);
}

TEST_CASE("small Bass number rigidity scan")
{
    LaurentPolyZ bass(0, {1, 2, 2});
    auto r = verify_small_bass_rigidity(bass, 0, std::nullopt);
    CHECK(r.outcome == BoundOutcome::Holds);
    CHECK(r.witness == 2);
    CHECK(r.condition == 'a');
    CHECK(r.conclusion == "free-or-dualizing");

    LaurentPolyZ ones(0, {1, 1, 1});
    auto r2 = verify_small_bass_rigidity(ones, 0, std::nullopt);
    CHECK(r2.outcome == BoundOutcome::Holds);
    CHECK(r2.witness == 1);

    LaurentPolyZ big(0, {2, 5, 9, 14});
    auto r3 = verify_small_bass_rigidity(big, 0, 2);
    CHECK(r3.outcome == BoundOutcome::Inconclusive);
}
