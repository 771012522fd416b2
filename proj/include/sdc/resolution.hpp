#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sdc/complex.hpp"
#include "sdc/laurent.hpp"

namespace sdc {

/// Minimal graded free resolution F_length -> ... -> F_0 of a module, built
/// stepwise from Nakayama-minimal kernel generators. Differential entries
/// land in the maximal ideal automatically; this is verified at build.
///
/// Step completeness: over a certified artinian ring every slice is exact,
/// so each step is certified. Otherwise a step is heuristically complete
/// when the kernel's minimal generators vanish at the top two degrees of the
/// window, and partial (with the boundary degree recorded) when they do not.
template <class F>
struct Resolution {
    enum class Step { Certified, Heuristic, Partial };

    GradedModule<F> target;
    FreeComplex<F> complex;      // homological indices 0..length
    std::vector<Step> steps;     // completeness per F_i
    std::vector<std::pair<int, std::vector<typename F::Elem>>> augmentation;
    // generator images of F_0 in the target module: (degree, slice coords)

    int length() const { return complex.hi(); }

    std::vector<int> betti() const
    {
        std::vector<int> b;
        for (int i = 0; i <= complex.hi(); ++i)
            b.push_back(complex.term(i).rank());
        return b;
    }

    /// Graded Betti numbers: per step, degree -> count, sorted by degree.
    std::vector<std::map<int, int>> graded_betti() const
    {
        std::vector<std::map<int, int>> out;
        for (int i = 0; i <= complex.hi(); ++i) {
            std::map<int, int> row;
            for (int a : complex.term(i).shifts())
                row[a]++;
            out.push_back(std::move(row));
        }
        return out;
    }

    bool fully_certified() const
    {
        for (Step s : steps)
            if (s != Step::Certified)
                return false;
        return true;
    }

    bool any_partial() const
    {
        for (Step s : steps)
            if (s == Step::Partial)
                return true;
        return false;
    }
};

namespace detail {

/// Degreewise kernel of a slice-map family, with Nakayama-minimal generators.
template <class F>
struct KernelScan {
    std::vector<std::pair<int, std::vector<typename F::Elem>>> gens;
    bool heuristic_ok = true;  // no new generators in the top two degrees
    bool complete = false;     // support provably exhausted
};

template <class F, class SliceFn>
KernelScan<F> kernel_minimal_generators(const GradedAlgebra<F>& R,
                                        const GradedFree<F>& f, SliceFn&& slice_map,
                                        int dlo, int dhi, bool support_exhausted)
{
    const F& k = R.field();
    KernelScan<F> out;
    out.complete = support_exhausted;
    int n = dhi - dlo + 1;
    if (n <= 0)
        return out;
    std::vector<std::vector<std::vector<typename F::Elem>>> kernels(
        static_cast<std::size_t>(n));
    const long long nn = n;
    std::exception_ptr eptr = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (long long t = 0; t < nn; ++t) {
        try {
            int d = dlo + static_cast<int>(t);
            Matrix<F> ker = kernel_basis(slice_map(d));
            auto& kd = kernels[static_cast<std::size_t>(t)];
            for (std::size_t c = 0; c < ker.cols(); ++c)
                kd.push_back(ker.col(c));
        } catch (...) {
#pragma omp critical
            if (!eptr)
                eptr = std::current_exception();
        }
    }
    if (eptr)
        std::rethrow_exception(eptr);
    for (int d = dlo; d <= dhi; ++d) {
        const auto& kd = kernels[static_cast<std::size_t>(d - dlo)];
        if (kd.empty())
            continue;
        RowBasis<F> span(k, static_cast<std::size_t>(f.dim(d)));
        for (int v = 0; v < R.nvars(); ++v) {
            int w = R.var_degrees()[static_cast<std::size_t>(v)];
            if (d - w < dlo)
                continue;
            for (const auto& kv : kernels[static_cast<std::size_t>(d - w - dlo)])
                span.insert(f.mult(w, R.variable_class(v), d - w, kv));
        }
        for (const auto& kv : kd)
            if (span.insert(kv)) {
                out.gens.emplace_back(d, kv);
                if (d >= dhi - 1 && !support_exhausted)
                    out.heuristic_ok = false;
            }
    }
    return out;
}

template <class F>
RMatrix<F> matrix_from_columns(
    const GradedAlgebra<F>& R, const GradedFree<F>& tgt,
    const std::vector<std::pair<int, std::vector<typename F::Elem>>>& cols)
{
    std::vector<int> shifts;
    for (const auto& c : cols)
        shifts.push_back(c.first);
    GradedFree<F> src(&R, shifts);
    RMatrix<F> m(tgt, src);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int d = cols[c].first;
        auto off = tgt.block_offsets(d);
        for (int r = 0; r < tgt.rank(); ++r) {
            int rd = d - tgt.shift(r);
            int nr = R.dim(rd);
            if (nr == 0)
                continue;
            RElem<F> e;
            e.deg = rd;
            e.c.assign(cols[c].second.begin() + off[static_cast<std::size_t>(r)],
                       cols[c].second.begin() + off[static_cast<std::size_t>(r)] + nr);
            if (!e.is_zero(R.field()))
                m.set_entry(r, static_cast<int>(c), std::move(e));
        }
    }
    return m;
}

} // namespace detail

template <class F>
Resolution<F> minimal_free_resolution(const GradedModule<F>& m, int length)
{
    const GradedAlgebra<F>& R = m.ring();
    if (length < 0)
        throw InputError("resolution length must be nonnegative");
    const bool artinian = R.artinian_certified();

    Resolution<F> res{m, FreeComplex<F>(&R), {}, {}};

    // F_0 from the minimal generators of the target
    MinimalGenerators<F> mg =
        m.support_bounded() ? minimal_generators(m)
                            : minimal_generators(m, m.lo(), m.known_top());
    std::vector<int> shifts0;
    for (const auto& g : mg.gens)
        shifts0.push_back(g.first);
    GradedFree<F> f0(&R, shifts0);
    res.augmentation = mg.gens;
    res.steps.push_back(m.support_bounded() && !mg.boundary_warning
                            ? Resolution<F>::Step::Certified
                            : (mg.boundary_warning ? Resolution<F>::Step::Partial
                                                   : Resolution<F>::Step::Heuristic));
    if (artinian)
        res.steps.back() = Resolution<F>::Step::Certified;

    std::vector<GradedFree<F>> terms{f0};
    std::vector<RMatrix<F>> diffs;

    for (int step = 0; step < length; ++step) {
        const GradedFree<F>& fi = terms.back();
        if (fi.rank() == 0) {
            // resolution has terminated; pad with zero terms
            res.steps.push_back(Resolution<F>::Step::Certified);
            terms.emplace_back(&R, std::vector<int>{});
            diffs.emplace_back(terms[terms.size() - 2], terms.back());
            continue;
        }
        int dlo = fi.min_shift();
        int dhi;
        bool exhausted;
        if (artinian) {
            dhi = fi.max_shift() + R.top_degree();
            exhausted = true;
        } else {
            dhi = R.dmax() + std::min(0, fi.min_shift());
            exhausted = false;
        }
        detail::KernelScan<F> scan;
        if (step == 0) {
            auto slice_map = [&](int d) {
                const typename F::Elem zero = R.field().zero();
                Matrix<F> s(R.field(), static_cast<std::size_t>(m.dim(d)),
                            static_cast<std::size_t>(fi.dim(d)));
                auto off = fi.block_offsets(d);
                for (std::size_t g = 0; g < res.augmentation.size(); ++g) {
                    int rd = d - res.augmentation[g].first;
                    int nr = R.dim(rd);
                    if (nr == 0)
                        continue;
                    std::vector<typename F::Elem> unit(static_cast<std::size_t>(nr),
                                                       zero);
                    for (int u = 0; u < nr; ++u) {
                        unit[static_cast<std::size_t>(u)] = R.field().one();
                        auto col = m.mult(rd, unit, res.augmentation[g].first,
                                          res.augmentation[g].second);
                        for (std::size_t i = 0; i < col.size(); ++i)
                            s.at(i, static_cast<std::size_t>(off[g] + u)) = col[i];
                        unit[static_cast<std::size_t>(u)] = zero;
                    }
                }
                return s;
            };
            scan = detail::kernel_minimal_generators(R, fi, slice_map, dlo, dhi,
                                                     exhausted);
        } else {
            const RMatrix<F>& d_i = diffs.back();
            auto slice_map = [&](int d) { return d_i.slice(d); };
            scan = detail::kernel_minimal_generators(R, fi, slice_map, dlo, dhi,
                                                     exhausted);
        }
        RMatrix<F> next = detail::matrix_from_columns(R, fi, scan.gens);
        if (!next.entries_in_maximal_ideal())
            throw std::logic_error("resolution differential not minimal");
        terms.push_back(next.src());
        diffs.push_back(std::move(next));
        res.steps.push_back(scan.complete ? Resolution<F>::Step::Certified
                            : scan.heuristic_ok ? Resolution<F>::Step::Heuristic
                                                : Resolution<F>::Step::Partial);
    }
    res.complex = FreeComplex<F>::build(&R, 0, std::move(terms), std::move(diffs));
    return res;
}

/// Poincare series: sum of beta_i t^i up to the resolution length.
template <class F>
LaurentPolyZ poincare_series(const Resolution<F>& res, int n)
{
    if (n > res.length())
        throw InputError("poincare_series: resolution shorter than requested order");
    LaurentPolyZ s = LaurentPolyZ::zero(n);
    auto b = res.betti();
    for (int i = 0; i <= n; ++i)
        s.set_coeff(i, b[static_cast<std::size_t>(i)]);
    return s;
}

/// Independent Betti route: beta_i as the total dimension of H_i(F (x) k).
template <class F>
int betti_via_tor(const Resolution<F>& res, int i)
{
    const GradedAlgebra<F>& R = res.complex.ring();
    GradedModule<F> kk = GradedModule<F>::residue_field(R);
    const GradedFree<F>& fi = res.complex.term(i);
    if (fi.rank() == 0)
        return 0;
    int total = 0;
    for (int d = fi.min_shift(); d <= fi.max_shift(); ++d)
        total += tensor_module_homology_dim(res.complex, kk, i, d);
    return total;
}

/// Ext^i(M, N) slice dimensions for 0 <= i <= imax over a degree window,
/// computed as homology of Hom(F, N) at index -i.
template <class F>
struct ExtTable {
    int imax = 0;
    int dlo = 0, dhi = -1;
    std::vector<std::vector<int>> dims; // [i][d - dlo]
    std::vector<bool> saturated;        // per i: nonzero at the window top edge
    std::vector<int> totals;

    int total(int i) const { return totals[static_cast<std::size_t>(i)]; }
};

template <class F>
ExtTable<F> ext_dims(const Resolution<F>& res, const GradedModule<F>& n, int imax,
                     int dlo, int dhi)
{
    if (res.length() < imax + 1)
        throw InputError("ext_dims: resolution must reach length imax+1");
    ExtTable<F> out;
    out.imax = imax;
    out.dlo = dlo;
    out.dhi = dhi;
    const bool exact_support = n.support_bounded();
    for (int i = 0; i <= imax; ++i) {
        // clamp to degrees where every touched slice of n is reliable
        int hi_i = dhi;
        if (!n.support_bounded()) {
            int max_shift = INT_MIN;
            for (int idx = i - 1; idx <= i + 1; ++idx) {
                const GradedFree<F>& term = res.complex.term(idx);
                if (term.rank() > 0)
                    max_shift = std::max(max_shift, term.max_shift());
            }
            if (max_shift != INT_MIN)
                hi_i = std::min(hi_i, n.known_top() - max_shift);
        }
        std::vector<int> row(static_cast<std::size_t>(std::max(0, hi_i - dlo + 1)), 0);
        const long long nn = static_cast<long long>(row.size());
        std::exception_ptr eptr = nullptr;
#pragma omp parallel for schedule(dynamic)
        for (long long t = 0; t < nn; ++t) {
            try {
                int d = dlo + static_cast<int>(t);
                row[static_cast<std::size_t>(t)] =
                    hom_module_homology_dim(res.complex, n, -i, d);
            } catch (...) {
#pragma omp critical
                if (!eptr)
                    eptr = std::current_exception();
            }
        }
        if (eptr)
            std::rethrow_exception(eptr);
        int tot = 0;
        for (int v : row)
            tot += v;
        // saturation: the scan window ends while the top slice is still
        // nonzero (support may continue past what we can see)
        bool sat = false;
        if (!row.empty() && row.back() != 0 && !exact_support)
            sat = true;
        if (row.empty() && hi_i < dlo)
            sat = true;
        out.dims.push_back(std::move(row));
        out.saturated.push_back(sat);
        out.totals.push_back(tot);
    }
    return out;
}

/// Default Ext window for resolving M against N: wide enough to cover the
/// whole support when the data is artinian-bounded, with slack 2 otherwise.
template <class F>
std::pair<int, int> default_ext_window(const Resolution<F>& res,
                                       const GradedModule<F>& n, int imax)
{
    int max_shift = 0;
    for (int i = 0; i <= std::min(imax + 1, res.length()); ++i) {
        const GradedFree<F>& t = res.complex.term(i);
        if (t.rank() > 0)
            max_shift = std::max(max_shift, t.max_shift());
    }
    int lo = -(imax + max_shift + 2);
    int hi;
    if (n.support_bounded())
        hi = n.known_top() + 2;
    else
        hi = imax + 2;
    return {lo, hi};
}

/// Bass numbers mu^i = dim Ext^i(k, R) for 0 <= i <= n, plus per-index
/// saturation flags inherited from the window scan.
template <class F>
struct BassResult {
    LaurentPolyZ series;
    std::vector<bool> saturated;
    bool resolution_partial = false;
    int window_lo = 0, window_hi = -1;

    bool saturation_free() const
    {
        for (bool b : saturated)
            if (b)
                return false;
        return true;
    }
};

template <class F>
BassResult<F> bass_series(const GradedAlgebra<F>& ring, int n,
                          std::optional<std::pair<int, int>> window = std::nullopt)
{
    GradedModule<F> kk = GradedModule<F>::residue_field(ring);
    GradedModule<F> rr = GradedModule<F>::free_module(ring, {0});
    Resolution<F> res = minimal_free_resolution(kk, n + 1);
    auto [dlo, dhi] = window ? *window : default_ext_window(res, rr, n);
    ExtTable<F> ext = ext_dims(res, rr, n, dlo, dhi);
    BassResult<F> out;
    out.window_lo = dlo;
    out.window_hi = dhi;
    out.series = LaurentPolyZ::zero(n);
    for (int i = 0; i <= n; ++i)
        out.series.set_coeff(i, ext.total(i));
    out.saturated = ext.saturated;
    out.resolution_partial = res.any_partial();
    return out;
}

/// Gap check: a semidualizing module is either free of rank 1 or has
/// beta_i >= 1 for every i up to the cutoff. Any other outcome flags a
/// counterexample candidate (an inconsistency, not a theorem violation).
template <class F>
struct GapCheck {
    bool free_rank_one = false;
    bool passed = false;
    std::optional<int> gap_index;
};

template <class F>
GapCheck<F> betti_gap_check(const Resolution<F>& res, int n)
{
    GapCheck<F> out;
    auto b = res.betti();
    if (n > res.length())
        throw InputError("betti_gap_check: cutoff beyond resolution length");
    if (b[0] == 1 && (res.length() < 1 || b[1] == 0)) {
        out.free_rank_one = true;
        out.passed = true;
        return out;
    }
    for (int i = 0; i <= n; ++i) {
        if (b[static_cast<std::size_t>(i)] < 1) {
            out.gap_index = i;
            out.passed = false;
            return out;
        }
    }
    out.passed = true;
    return out;
}

} // namespace sdc
