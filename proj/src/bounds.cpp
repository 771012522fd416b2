#include "sdc/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sdc {

std::string outcome_name(BoundOutcome o)
{
    switch (o) {
    case BoundOutcome::Holds:
        return "holds";
    case BoundOutcome::Fails:
        return "fails";
    default:
        return "inconclusive";
    }
}

GeqResult coeffwise_geq(const LaurentPolyZ& a, const LaurentPolyZ& b)
{
    GeqResult r;
    r.range_lo = std::min(a.offset, b.offset);
    r.range_hi = std::min(a.trunc, b.trunc);
    if (r.range_hi < r.range_lo) {
        r.outcome = BoundOutcome::Inconclusive;
        return r;
    }
    for (int e = r.range_lo; e <= r.range_hi; ++e) {
        if (a.coeff(e) < b.coeff(e)) {
            r.outcome = BoundOutcome::Fails;
            r.first_failure = e;
            return r;
        }
    }
    r.outcome = BoundOutcome::Holds;
    return r;
}

LaurentPolyZ lower_bound_poly(int d, int g, int n)
{
    if (d < 0 || n < 0)
        throw std::invalid_argument("lower_bound_poly: d and n must be nonnegative");
    LaurentPolyZ s;
    s.offset = g;
    s.trunc = g + n;
    s.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    // binomial(i+d, d) via the Pascal recurrence along i
    long long c = 1;
    for (int i = 0; i <= n; ++i) {
        s.coeffs[static_cast<std::size_t>(i)] = c;
        c = c * (i + 1 + d) / (i + 1);
    }
    return s;
}

bool is_prime_ll(long long n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (long long q = 3; q * q <= n; q += 2)
        if (n % q == 0)
            return false;
    return true;
}

int prime_factor_count(long long n)
{
    if (n < 1)
        throw std::invalid_argument("prime_factor_count: argument must be positive");
    int count = 0;
    for (long long q = 2; q * q <= n; ++q) {
        while (n % q == 0) {
            n /= q;
            ++count;
        }
    }
    if (n > 1)
        ++count;
    return count;
}

BoundReport verify_chain_poly_bound(const LaurentPolyZ& bass, int g, int d)
{
    BoundReport rep;
    rep.predicate = "0101";
    if (bass.trunc < g) {
        rep.outcome = BoundOutcome::Inconclusive;
        rep.detail = "Bass series not reliable up to exponent g";
        return rep;
    }
    LaurentPolyZ lower = lower_bound_poly(d, g, bass.trunc - g);
    GeqResult cmp = coeffwise_geq(bass, lower);
    rep.outcome = cmp.outcome;
    rep.witness = cmp.first_failure;
    rep.range_lo = cmp.range_lo;
    rep.range_hi = cmp.range_hi;
    std::ostringstream os;
    if (cmp.outcome == BoundOutcome::Holds) {
        os << "Bass numbers dominate the degree-" << d
           << " binomial lower bound on exponents [" << cmp.range_lo << ", "
           << cmp.range_hi << "]";
    } else if (cmp.outcome == BoundOutcome::Fails) {
        rep.conclusion = "no-chain-of-length-" + std::to_string(d + 1);
        os << "bound fails at exponent " << *cmp.first_failure
           << ": no chain of length " << (d + 1)
           << " is consistent with these Bass numbers";
    }
    rep.detail = os.str();
    return rep;
}

BoundReport verify_type_factor_bound(long long mu_g, int d)
{
    if (mu_g < 1)
        throw std::invalid_argument("type factor bound: mu_g must be positive");
    BoundReport rep;
    rep.predicate = "0101p";
    int h = prime_factor_count(mu_g);
    rep.outcome = d <= h ? BoundOutcome::Holds : BoundOutcome::Fails;
    if (rep.outcome == BoundOutcome::Fails)
        rep.witness = h;
    std::ostringstream os;
    os << "Omega(" << mu_g << ") = " << h << ", chain length " << d
       << (d <= h ? " <= " : " > ") << h;
    if (is_prime_ll(mu_g)) {
        rep.conclusion = "free-or-dualizing";
        os << "; type is prime, so every semidualizing module is free or dualizing";
    }
    rep.detail = os.str();
    return rep;
}

BoundReport verify_next_bass_bound(const LaurentPolyZ& bass, int g, int d)
{
    BoundReport rep;
    rep.predicate = "0103";
    if (!bass.reliable(g + 1)) {
        rep.outcome = BoundOutcome::Inconclusive;
        rep.detail = "Bass series not reliable at exponent g+1";
        return rep;
    }
    long long mu = bass.coeff(g + 1);
    rep.outcome = d <= mu ? BoundOutcome::Holds : BoundOutcome::Fails;
    std::ostringstream os;
    os << "mu_(g+1) = " << mu << ", chain length " << d << (d <= mu ? " <= " : " > ")
       << mu;
    if (rep.outcome == BoundOutcome::Fails) {
        rep.witness = g + 1;
        rep.conclusion = "no-chain-of-length-" + std::to_string(d);
    }
    rep.detail = os.str();
    return rep;
}

BoundReport verify_small_bass_rigidity(const LaurentPolyZ& bass, int g,
                                       std::optional<long long> p)
{
    BoundReport rep;
    rep.predicate = "0102";
    rep.range_lo = g;
    rep.range_hi = bass.trunc;
    for (int i = g; i <= bass.trunc; ++i) {
        if (bass.coeff(i) <= i - g) {
            rep.outcome = BoundOutcome::Holds;
            rep.witness = i;
            rep.condition = 'a';
            rep.conclusion = "free-or-dualizing";
            std::ostringstream os;
            os << "mu_" << i << " = " << bass.coeff(i) << " <= " << (i - g)
               << ": every semidualizing object is free or dualizing";
            rep.detail = os.str();
            return rep;
        }
    }
    if (p) {
        if (*p < 2)
            throw std::invalid_argument("rigidity scan: p must be a prime >= 2");
        for (int i = g + 1; i <= bass.trunc; ++i) {
            if (bass.coeff(i) < 2 * *p + i - g - 1) {
                rep.outcome = BoundOutcome::Holds;
                rep.witness = i;
                rep.condition = 'b';
                rep.conclusion = "free-or-dualizing";
                std::ostringstream os;
                os << "mu_" << i << " = " << bass.coeff(i) << " < " << (2 * *p + i - g - 1)
                   << ": every semidualizing module is free or dualizing";
                rep.detail = os.str();
                return rep;
            }
        }
    }
    rep.outcome = BoundOutcome::Inconclusive;
    rep.detail = "no index fires within the reliable range";
    return rep;
}

} // namespace sdc
