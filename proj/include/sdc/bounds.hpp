#pragma once

#include <optional>
#include <string>

#include "sdc/laurent.hpp"

namespace sdc {

enum class BoundOutcome { Holds, Fails, Inconclusive };

/// Outcome of one of the numeric bound predicates. A failing outcome always
/// carries the first violating exponent; a firing rigidity scan carries the
/// witnessing index instead.
struct BoundReport {
    std::string predicate;
    BoundOutcome outcome = BoundOutcome::Inconclusive;
    std::optional<int> witness;      // first failure exponent, or firing index
    std::optional<char> condition;   // 'a' or 'b' for the two-branch scan
    std::string conclusion;          // machine keyword, empty when none fires
    std::string detail;              // free-form human text
    int range_lo = 0;
    int range_hi = -1;               // scanned exponent range
};

struct GeqResult {
    BoundOutcome outcome = BoundOutcome::Inconclusive;
    std::optional<int> first_failure;
    int range_lo = 0;
    int range_hi = -1;
};

/// Coefficientwise a >= b on the common reliable range.
GeqResult coeffwise_geq(const LaurentPolyZ& a, const LaurentPolyZ& b);

/// t^g * (1 + t + t^2 + ...)^(d+1) truncated at exponent g+n:
/// the coefficient of t^(g+i) is binomial(i+d, d).
LaurentPolyZ lower_bound_poly(int d, int g, int n);

/// Number of prime factors counted with multiplicity (trial division).
int prime_factor_count(long long n);
bool is_prime_ll(long long n);

/// A chain of length d+1 in the reflexivity order forces the Bass series to
/// dominate t^g*(sum t^n)^(d+1); a violation refutes such a chain.
BoundReport verify_chain_poly_bound(const LaurentPolyZ& bass, int g, int d);

/// Cohen-Macaulay type factor bound: a chain of length d forces
/// d <= Omega(mu_g) <= mu_g; prime mu_g yields the rigidity conclusion.
BoundReport verify_type_factor_bound(long long mu_g, int d);

/// Chain length bound from the first Bass number past the depth:
/// a chain of length d forces d <= mu_{g+1}.
BoundReport verify_next_bass_bound(const LaurentPolyZ& bass, int g, int d);

/// Rigidity scan: (a) mu_i <= i-g for some i >= g, or, when the smallest
/// prime p of mu_g is supplied, (b) mu_i < 2p+i-g-1 for some i > g. Either
/// hit forces every semidualizing object to be free or dualizing.
BoundReport verify_small_bass_rigidity(const LaurentPolyZ& bass, int g,
                                       std::optional<long long> p);

std::string outcome_name(BoundOutcome o);

} // namespace sdc
