#pragma once

#include <random>
#include <string>
#include <vector>

#include "sdc/complex.hpp"
#include "sdc/polytext.hpp"
#include "sdc/ring.hpp"

namespace sdc::testutil {

template <class F>
GradedAlgebra<F> make_ring(F field, std::vector<std::string> vars,
                           std::vector<std::string> ideal, int dmax,
                           std::vector<int> degrees = {})
{
    typename GradedAlgebra<F>::Spec spec{field, vars, degrees, {}, dmax};
    for (const std::string& text : ideal)
        spec.ideal.push_back(parse_poly(text, vars));
    return GradedAlgebra<F>(spec);
}

template <class F>
GradedAlgebra<F> ring_x2_xy(F field, int dmax = 12)
{
    return make_ring(field, {"x", "y"}, {"x^2", "x*y"}, dmax);
}

template <class F>
GradedAlgebra<F> ring_m2(F field, int dmax = 12)
{
    return make_ring(field, {"x", "y"}, {"x^2", "x*y", "y^2"}, dmax);
}

template <class F>
GradedAlgebra<F> ring_dual_numbers(F field, int dmax = 12)
{
    return make_ring(field, {"x"}, {"x^2"}, dmax);
}

/// Random homogeneous ring element of the given degree in slice coordinates.
template <class F>
std::vector<typename F::Elem> random_ring_elem(const GradedAlgebra<F>& R, int deg,
                                               std::mt19937& rng)
{
    std::uniform_int_distribution<long long> coeff(-3, 3);
    std::vector<typename F::Elem> v(static_cast<std::size_t>(R.dim(deg)));
    for (auto& x : v)
        x = R.field().from_int(coeff(rng));
    return v;
}

/// Random homogeneous matrix between random small graded frees. When
/// `minimal` is set, forced-degree-0 entries stay zero so the matrix lands
/// in the maximal ideal.
template <class F>
RMatrix<F> random_rmatrix(const GradedAlgebra<F>& R, std::mt19937& rng,
                          int max_rank = 2, int max_shift = 2, bool minimal = false)
{
    std::uniform_int_distribution<int> rankd(1, max_rank), shiftd(0, max_shift);
    std::vector<int> tgt_shifts(static_cast<std::size_t>(rankd(rng)));
    std::vector<int> src_shifts(static_cast<std::size_t>(rankd(rng)));
    for (auto& s : tgt_shifts)
        s = shiftd(rng);
    for (auto& s : src_shifts)
        s = shiftd(rng);
    GradedFree<F> tgt(&R, tgt_shifts), src(&R, src_shifts);
    RMatrix<F> m(tgt, src);
    for (int r = 0; r < tgt.rank(); ++r)
        for (int c = 0; c < src.rank(); ++c) {
            int deg = m.entry_degree(r, c);
            if (deg < 0 || (minimal && deg == 0))
                continue;
            if (rng() % 3 == 0)
                continue; // keep some entries zero
            RElem<F> e;
            e.deg = deg;
            e.c = random_ring_elem(R, deg, rng);
            m.set_entry(r, c, std::move(e));
        }
    return m;
}

/// Random bounded complex: a two-term complex, a tensor of two of them, a
/// shift, or a direct sum. Every result satisfies d o d = 0 by construction.
template <class F>
FreeComplex<F> random_complex(const GradedAlgebra<F>& R, std::mt19937& rng,
                              bool minimal = false)
{
    std::uniform_int_distribution<int> top(0, 2), pick(0, 3), sh(-1, 2);
    FreeComplex<F> base = FreeComplex<F>::two_term(
        random_rmatrix(R, rng, 2, 2, minimal), top(rng));
    switch (pick(rng)) {
    case 0:
        return base;
    case 1:
        return tensor_complex(base, FreeComplex<F>::two_term(
                                        random_rmatrix(R, rng, 2, 1, minimal), top(rng)));
    case 2:
        return shift(base, sh(rng));
    default:
        return direct_sum(base, FreeComplex<F>::two_term(
                                    random_rmatrix(R, rng, 2, 2, minimal), top(rng)));
    }
}

} // namespace sdc::testutil
