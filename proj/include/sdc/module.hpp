#pragma once

#include <climits>
#include <optional>
#include <utility>
#include <vector>

#include "sdc/ring.hpp"

namespace sdc {

/// Homogeneous ring element in slice coordinates. An empty coefficient
/// vector is the zero element of any degree.
template <class F>
struct RElem {
    int deg = 0;
    std::vector<typename F::Elem> c;

    bool is_zero(const F& field) const
    {
        for (const auto& x : c)
            if (!field.is_zero(x))
                return false;
        return true;
    }
};

/// Graded free module ⊕_j R(-a_j); shifts a_j are the generator degrees.
template <class F>
class GradedFree {
public:
    GradedFree() = default;
    GradedFree(const GradedAlgebra<F>* ring, std::vector<int> shifts)
        : ring_(ring), shifts_(std::move(shifts))
    {
    }

    const GradedAlgebra<F>* ring() const { return ring_; }
    int rank() const { return static_cast<int>(shifts_.size()); }
    const std::vector<int>& shifts() const { return shifts_; }
    int shift(int j) const { return shifts_[static_cast<std::size_t>(j)]; }

    int min_shift() const
    {
        int m = INT_MAX;
        for (int a : shifts_)
            m = std::min(m, a);
        return m;
    }
    int max_shift() const
    {
        int m = INT_MIN;
        for (int a : shifts_)
            m = std::max(m, a);
        return m;
    }

    bool degree_known(int d) const
    {
        for (int a : shifts_)
            if (!ring_->degree_known(d - a))
                return false;
        return true;
    }

    int dim(int d) const
    {
        int n = 0;
        for (int a : shifts_)
            n += ring_->dim(d - a);
        return n;
    }

    /// Flat coordinate offsets of the generator blocks in the degree-d slice.
    std::vector<int> block_offsets(int d) const
    {
        std::vector<int> off(shifts_.size() + 1, 0);
        for (std::size_t j = 0; j < shifts_.size(); ++j)
            off[j + 1] = off[j] + ring_->dim(d - shifts_[j]);
        return off;
    }

    /// Multiply a degree-d slice vector by a ring element of degree e.
    std::vector<typename F::Elem> mult(int e, const std::vector<typename F::Elem>& r,
                                       int d,
                                       const std::vector<typename F::Elem>& v) const
    {
        const F& k = ring_->field();
        std::vector<typename F::Elem> out(static_cast<std::size_t>(dim(d + e)),
                                          k.zero());
        auto off_in = block_offsets(d);
        auto off_out = block_offsets(d + e);
        for (std::size_t j = 0; j < shifts_.size(); ++j) {
            int dj = d - shifts_[j];
            int nin = ring_->dim(dj);
            if (nin == 0)
                continue;
            std::vector<typename F::Elem> block(
                v.begin() + off_in[j], v.begin() + off_in[j] + nin);
            std::vector<typename F::Elem> prod = ring_->multiply(e, r, dj, block);
            for (std::size_t l = 0; l < prod.size(); ++l)
                out[static_cast<std::size_t>(off_out[j]) + l] = prod[l];
        }
        return out;
    }

    bool operator==(const GradedFree& o) const
    {
        return ring_ == o.ring_ && shifts_ == o.shifts_;
    }

private:
    const GradedAlgebra<F>* ring_ = nullptr;
    std::vector<int> shifts_;
};

/// Homogeneous matrix over R between graded free modules. The entry in row r,
/// column c has degree src.shift(c) - tgt.shift(r); entries whose forced
/// degree is negative are identically zero.
template <class F>
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(GradedFree<F> tgt, GradedFree<F> src)
        : tgt_(std::move(tgt)), src_(std::move(src)),
          e_(static_cast<std::size_t>(tgt_.rank()) * static_cast<std::size_t>(src_.rank()))
    {
    }

    const GradedFree<F>& tgt() const { return tgt_; }
    const GradedFree<F>& src() const { return src_; }
    const GradedAlgebra<F>& ring() const { return *tgt_.ring(); }

    int entry_degree(int r, int c) const { return src_.shift(c) - tgt_.shift(r); }

    const RElem<F>& entry(int r, int c) const
    {
        return e_[static_cast<std::size_t>(r) * src_.rank() + static_cast<std::size_t>(c)];
    }

    void set_entry(int r, int c, RElem<F> v)
    {
        const F& k = ring().field();
        int want = entry_degree(r, c);
        if (!v.is_zero(k) && v.deg != want)
            throw InputError("matrix entry degree " + std::to_string(v.deg)
                             + " disagrees with forced degree " + std::to_string(want));
        if (want < 0 && !v.is_zero(k))
            throw InputError("nonzero entry at negative forced degree");
        v.deg = want;
        e_[static_cast<std::size_t>(r) * src_.rank() + static_cast<std::size_t>(c)] =
            std::move(v);
    }

    /// The induced linear map src_d -> tgt_d on degree-d slices.
    Matrix<F> slice(int d) const
    {
        const F& k = ring().field();
        Matrix<F> m(k, static_cast<std::size_t>(tgt_.dim(d)),
                    static_cast<std::size_t>(src_.dim(d)));
        auto roff = tgt_.block_offsets(d);
        auto coff = src_.block_offsets(d);
        for (int r = 0; r < tgt_.rank(); ++r) {
            for (int c = 0; c < src_.rank(); ++c) {
                const RElem<F>& x = entry(r, c);
                if (x.is_zero(k))
                    continue;
                int dc = d - src_.shift(c);
                if (ring().dim(dc) == 0 || ring().dim(d - tgt_.shift(r)) == 0)
                    continue;
                Matrix<F> block = ring().mult_matrix(x.deg, x.c, dc);
                for (std::size_t i = 0; i < block.rows(); ++i)
                    for (std::size_t j = 0; j < block.cols(); ++j)
                        if (!k.is_zero(block.at(i, j)))
                            m.at(static_cast<std::size_t>(roff[r]) + i,
                                 static_cast<std::size_t>(coff[c]) + j) = block.at(i, j);
            }
        }
        return m;
    }

    /// True when every entry has zero constant part, i.e. lands in m F.
    bool entries_in_maximal_ideal() const
    {
        const F& k = ring().field();
        for (int r = 0; r < tgt_.rank(); ++r)
            for (int c = 0; c < src_.rank(); ++c)
                if (entry(r, c).deg == 0 && !entry(r, c).is_zero(k))
                    return false;
        return true;
    }

    RMatrix scaled_by_sign(int sign) const
    {
        if (sign >= 0)
            return *this;
        const F& k = ring().field();
        RMatrix out = *this;
        for (auto& x : out.e_)
            for (auto& v : x.c)
                v = k.neg(v);
        return out;
    }

private:
    GradedFree<F> tgt_, src_;
    std::vector<RElem<F>> e_;
};

/// Finitely generated graded module given by a free presentation
/// P : F1 -> F0, M = coker P. Per-degree bases are materialized over the
/// reliable window at construction; all queries afterwards are pure.
template <class F>
class GradedModule {
public:
    using Elem = typename F::Elem;

    explicit GradedModule(RMatrix<F> presentation)
        : pres_(std::move(presentation))
    {
        materialize();
    }

    static GradedModule free_module(const GradedAlgebra<F>& ring, std::vector<int> shifts)
    {
        GradedFree<F> f0(&ring, std::move(shifts));
        GradedFree<F> f1(&ring, {});
        return GradedModule(RMatrix<F>(f0, f1));
    }

    /// k = R / m, presented by the variables.
    static GradedModule residue_field(const GradedAlgebra<F>& ring)
    {
        GradedFree<F> f0(&ring, {0});
        std::vector<int> rel_shifts;
        for (int i = 0; i < ring.nvars(); ++i)
            rel_shifts.push_back(ring.var_degrees()[static_cast<std::size_t>(i)]);
        GradedFree<F> f1(&ring, rel_shifts);
        RMatrix<F> p(f0, f1);
        for (int i = 0; i < ring.nvars(); ++i) {
            RElem<F> x;
            x.deg = ring.var_degrees()[static_cast<std::size_t>(i)];
            x.c = ring.variable_class(i);
            p.set_entry(0, i, std::move(x));
        }
        return GradedModule(std::move(p));
    }

    const GradedAlgebra<F>& ring() const { return *pres_.tgt().ring(); }
    const GradedFree<F>& f0() const { return pres_.tgt(); }
    const RMatrix<F>& presentation() const { return pres_; }

    /// Lowest degree that can carry a nonzero slice.
    int lo() const { return lo_; }
    /// Highest degree with materialized (or provably zero) slice data.
    bool known(int d) const
    {
        return d < lo_ || d <= hi_ || (zero_above_ && d > hi_);
    }
    bool support_bounded() const { return zero_above_; }
    int known_top() const { return hi_; }

    int dim(int d) const
    {
        if (d < lo_)
            return 0;
        if (d > hi_) {
            if (zero_above_)
                return 0;
            throw WindowError("module slice at degree " + std::to_string(d)
                              + " is beyond the reliable window");
        }
        return static_cast<int>(slice(d).basis_coords.size());
    }

    /// Coordinates of the class of an F0 degree-d vector in the slice basis.
    std::vector<Elem> project(int d, std::vector<Elem> v) const
    {
        if (d < lo_ || d > hi_) {
            if (dim(d) == 0)
                return {};
        }
        const Slice& s = slice(d);
        std::vector<Elem> res = s.image.reduce(std::move(v));
        std::vector<Elem> out;
        out.reserve(s.basis_coords.size());
        for (std::size_t j : s.basis_coords)
            out.push_back(res[j]);
        return out;
    }

    /// Representative of a slice-basis coordinate vector inside F0_d.
    std::vector<Elem> lift(int d, const std::vector<Elem>& cls) const
    {
        const F& k = ring().field();
        if (d < lo_ || d > hi_) {
            if (dim(d) == 0)
                return std::vector<Elem>(static_cast<std::size_t>(f0().dim(d)), k.zero());
        }
        const Slice& s = slice(d);
        std::vector<Elem> v(static_cast<std::size_t>(f0().dim(d)), k.zero());
        for (std::size_t j = 0; j < s.basis_coords.size(); ++j)
            v[s.basis_coords[j]] = cls[j];
        return v;
    }

    /// Multiplication by a ring element of degree e as a map M_d -> M_(d+e).
    std::vector<Elem> mult(int e, const std::vector<Elem>& r, int d,
                           const std::vector<Elem>& cls) const
    {
        return project(d + e, f0().mult(e, r, d, lift(d, cls)));
    }

    Matrix<F> mult_matrix(int e, const std::vector<Elem>& r, int d) const
    {
        const F& k = ring().field();
        Matrix<F> m(k, static_cast<std::size_t>(dim(d + e)),
                    static_cast<std::size_t>(dim(d)));
        std::vector<Elem> unit(static_cast<std::size_t>(dim(d)), k.zero());
        for (std::size_t j = 0; j < unit.size(); ++j) {
            unit[j] = k.one();
            std::vector<Elem> col = mult(e, r, d, unit);
            for (std::size_t i = 0; i < col.size(); ++i)
                m.at(i, j) = col[i];
            unit[j] = k.zero();
        }
        return m;
    }

private:
    struct Slice {
        RowBasis<F> image;
        std::vector<std::size_t> basis_coords;
        Slice(F k, std::size_t w) : image(k, w) {}
    };

    const Slice& slice(int d) const { return slices_[static_cast<std::size_t>(d - lo_)]; }

    void materialize()
    {
        const GradedAlgebra<F>& R = ring();
        const F& k = R.field();
        const GradedFree<F>& f0 = pres_.tgt();
        const GradedFree<F>& f1 = pres_.src();
        if (f0.rank() == 0) {
            lo_ = 0;
            hi_ = -1;
            zero_above_ = true;
            return;
        }
        lo_ = f0.min_shift();
        int min_all = std::min(lo_, f1.rank() > 0 ? f1.min_shift() : lo_);
        if (R.artinian_certified()) {
            hi_ = f0.max_shift() + R.top_degree();
            zero_above_ = true;
        } else {
            // every block at degree d reads ring slices at d - shift
            hi_ = R.dmax() + min_all;
            zero_above_ = false;
        }
        for (int d = lo_; d <= hi_; ++d) {
            Slice s(k, static_cast<std::size_t>(f0.dim(d)));
            Matrix<F> p = pres_.slice(d);
            for (std::size_t c = 0; c < p.cols(); ++c)
                s.image.insert(p.col(c));
            s.basis_coords = s.image.complement();
            slices_.push_back(std::move(s));
        }
    }

    RMatrix<F> pres_;
    int lo_ = 0;
    int hi_ = -1;
    bool zero_above_ = false;
    std::vector<Slice> slices_;
};

/// Minimal homogeneous generators (Nakayama): degreewise basis of M/mM.
template <class F>
struct MinimalGenerators {
    std::vector<std::pair<int, std::vector<typename F::Elem>>> gens; // (degree, slice coords)
    bool boundary_warning = false; // nonzero classes at the window's top degree
    int warning_degree = 0;
};

template <class F>
MinimalGenerators<F> minimal_generators(const GradedModule<F>& m, int lo, int hi)
{
    const GradedAlgebra<F>& R = m.ring();
    const F& k = R.field();
    MinimalGenerators<F> out;
    lo = std::max(lo, m.lo());
    std::vector<RowBasis<F>> mspan; // m-multiples span per degree in [lo, hi]
    for (int d = lo; d <= hi; ++d)
        mspan.emplace_back(k, static_cast<std::size_t>(m.dim(d)));
    for (int d = lo; d <= hi; ++d) {
        RowBasis<F>& span = mspan[static_cast<std::size_t>(d - lo)];
        for (int i = 0; i < R.nvars(); ++i) {
            int w = R.var_degrees()[static_cast<std::size_t>(i)];
            if (d - w < m.lo())
                continue;
            Matrix<F> mul = m.mult_matrix(w, R.variable_class(i), d - w);
            for (std::size_t c = 0; c < mul.cols(); ++c)
                span.insert(mul.col(c));
        }
        for (std::size_t j : span.complement()) {
            std::vector<typename F::Elem> g(static_cast<std::size_t>(m.dim(d)), k.zero());
            g[j] = k.one();
            out.gens.emplace_back(d, std::move(g));
            if (d == hi && !(m.support_bounded() && hi >= m.known_top())) {
                out.boundary_warning = true;
                out.warning_degree = d;
            }
        }
    }
    return out;
}

/// Convenience: the full minimal generating set when the support is bounded.
template <class F>
MinimalGenerators<F> minimal_generators(const GradedModule<F>& m)
{
    if (!m.support_bounded())
        throw WindowError("minimal_generators: unbounded support, give a window");
    if (m.known_top() < m.lo())
        return {};
    return minimal_generators(m, m.lo(), m.known_top());
}

/// Degree-d slice of Hom_R(M, N): each basis map is determined by its
/// generator images, stored as one flat vector over the blocks N_(a_j + d).
template <class F>
struct HomSlice {
    int deg = 0;
    std::vector<int> block_offsets;                      // size rank(F0(M)) + 1
    std::vector<std::vector<typename F::Elem>> basis;    // flat image vectors
    int dim() const { return static_cast<int>(basis.size()); }
};

template <class F>
std::vector<int> hom_block_offsets(const GradedModule<F>& m, const GradedModule<F>& n,
                                   int d)
{
    const auto& shifts = m.f0().shifts();
    std::vector<int> off(shifts.size() + 1, 0);
    for (std::size_t j = 0; j < shifts.size(); ++j)
        off[j + 1] = off[j] + n.dim(shifts[j] + d);
    return off;
}

template <class F>
HomSlice<F> hom_degree(const GradedModule<F>& m, const GradedModule<F>& n, int d)
{
    const F& k = m.ring().field();
    const auto& gshifts = m.f0().shifts();
    const auto& rshifts = m.presentation().src().shifts();
    for (int a : gshifts)
        if (!n.known(a + d))
            throw WindowError("hom_degree: image slice beyond window; need degree "
                              + std::to_string(a + d));
    for (int b : rshifts)
        if (!n.known(b + d))
            throw WindowError("hom_degree: relation slice beyond window; need degree "
                              + std::to_string(b + d));
    HomSlice<F> out;
    out.deg = d;
    out.block_offsets = hom_block_offsets(m, n, d);
    int ncols = out.block_offsets.back();
    int nrows = 0;
    std::vector<int> roff(rshifts.size() + 1, 0);
    for (std::size_t c = 0; c < rshifts.size(); ++c)
        roff[c + 1] = roff[c] + n.dim(rshifts[c] + d);
    nrows = roff.back();
    Matrix<F> constraints(k, static_cast<std::size_t>(nrows),
                          static_cast<std::size_t>(ncols));
    for (std::size_t c = 0; c < rshifts.size(); ++c) {
        for (std::size_t j = 0; j < gshifts.size(); ++j) {
            const RElem<F>& entry = m.presentation().entry(static_cast<int>(j),
                                                           static_cast<int>(c));
            if (entry.is_zero(k))
                continue;
            Matrix<F> blk = n.mult_matrix(entry.deg, entry.c, gshifts[j] + d);
            for (std::size_t i = 0; i < blk.rows(); ++i)
                for (std::size_t l = 0; l < blk.cols(); ++l)
                    if (!k.is_zero(blk.at(i, l)))
                        constraints.at(static_cast<std::size_t>(roff[c]) + i,
                                       static_cast<std::size_t>(out.block_offsets[j]) + l) =
                            blk.at(i, l);
        }
    }
    Matrix<F> ker = kernel_basis(constraints);
    for (std::size_t c = 0; c < ker.cols(); ++c)
        out.basis.push_back(ker.col(c));
    return out;
}

/// Evaluate a hom element (flat image vector of internal degree dh) on a
/// module element of M given in slice coordinates of degree dm.
template <class F>
std::vector<typename F::Elem> hom_evaluate(const GradedModule<F>& m,
                                           const GradedModule<F>& n, int dh,
                                           const std::vector<typename F::Elem>& hom,
                                           int dm,
                                           const std::vector<typename F::Elem>& x)
{
    const GradedAlgebra<F>& R = m.ring();
    const F& k = R.field();
    auto hoff = hom_block_offsets(m, n, dh);
    std::vector<typename F::Elem> lifted = m.lift(dm, x);
    auto foff = m.f0().block_offsets(dm);
    std::vector<typename F::Elem> out(static_cast<std::size_t>(n.dim(dm + dh)),
                                      k.zero());
    for (int j = 0; j < m.f0().rank(); ++j) {
        int a = m.f0().shift(j);
        int rd = dm - a; // ring degree of the coefficient
        int nr = R.dim(rd);
        if (nr == 0 || n.dim(a + dh) == 0)
            continue;
        std::vector<typename F::Elem> coeff(
            lifted.begin() + foff[static_cast<std::size_t>(j)],
            lifted.begin() + foff[static_cast<std::size_t>(j)] + nr);
        bool zero = true;
        for (const auto& v : coeff)
            if (!k.is_zero(v))
                zero = false;
        if (zero)
            continue;
        std::vector<typename F::Elem> img(
            hom.begin() + hoff[static_cast<std::size_t>(j)],
            hom.begin() + hoff[static_cast<std::size_t>(j)] + n.dim(a + dh));
        std::vector<typename F::Elem> term = n.mult(rd, coeff, a + dh, img);
        for (std::size_t l = 0; l < out.size(); ++l)
            out[l] = k.add(out[l], term[l]);
    }
    return out;
}

/// Presentation of M ⊗_R N from the presentations of the factors:
/// relations [P_M ⊗ F0(N) | F0(M) ⊗ P_N].
template <class F>
GradedModule<F> tensor_module(const GradedModule<F>& m, const GradedModule<F>& n)
{
    const GradedAlgebra<F>& R = m.ring();
    const F& k = R.field();
    const auto& ma = m.f0().shifts();
    const auto& na = n.f0().shifts();
    const auto& mb = m.presentation().src().shifts();
    const auto& nb = n.presentation().src().shifts();

    std::vector<int> gen_shifts;
    for (int ai : ma)
        for (int aj : na)
            gen_shifts.push_back(ai + aj);
    std::vector<int> rel_shifts;
    for (int bc : mb)
        for (int aj : na)
            rel_shifts.push_back(bc + aj);
    for (int ai : ma)
        for (int bc : nb)
            rel_shifts.push_back(ai + bc);

    GradedFree<F> f0(&R, gen_shifts);
    GradedFree<F> f1(&R, rel_shifts);
    RMatrix<F> p(f0, f1);
    const int nn = static_cast<int>(na.size());
    const int nrel2_base = static_cast<int>(mb.size()) * nn;
    for (int c = 0; c < static_cast<int>(mb.size()); ++c)
        for (int j = 0; j < nn; ++j)
            for (int i = 0; i < static_cast<int>(ma.size()); ++i) {
                const RElem<F>& e = m.presentation().entry(i, c);
                if (!e.is_zero(k))
                    p.set_entry(i * nn + j, c * nn + j, e);
            }
    for (int i = 0; i < static_cast<int>(ma.size()); ++i)
        for (int c = 0; c < static_cast<int>(nb.size()); ++c)
            for (int j = 0; j < nn; ++j) {
                const RElem<F>& e = n.presentation().entry(j, c);
                if (!e.is_zero(k))
                    p.set_entry(i * nn + j,
                                nrel2_base + i * static_cast<int>(nb.size()) + c, e);
            }
    return GradedModule<F>(std::move(p));
}

/// Finite graded slice data with a multiplication-by-variable action; the
/// bridge from duals and hom spaces to presented modules.
template <class F>
struct AbstractSlices {
    const GradedAlgebra<F>* ring = nullptr;
    int lo = 0, hi = -1;
    std::vector<int> dims;                          // per degree lo..hi
    std::vector<std::vector<Matrix<F>>> mult_var;   // [var][d-lo] : dim(d+w) x dim(d)

    int dim(int d) const
    {
        if (d < lo || d > hi)
            return 0;
        return dims[static_cast<std::size_t>(d - lo)];
    }

    /// Action of a slice-coordinate ring element r of degree e at degree d,
    /// composed from the variable actions monomial by monomial.
    Matrix<F> act(int e, const std::vector<typename F::Elem>& r, int d) const
    {
        const F& k = ring->field();
        Matrix<F> out(k, static_cast<std::size_t>(dim(d + e)),
                      static_cast<std::size_t>(dim(d)));
        if (out.rows() == 0 || out.cols() == 0)
            return out;
        if (e == 0) {
            for (std::size_t i = 0; i < out.rows(); ++i)
                out.at(i, i) = r[0];
            return out;
        }
        const auto& basis = ring->basis_monomials(e);
        const auto& mons = ring->monomials(e);
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            if (k.is_zero(r[bi]))
                continue;
            const Monomial& mono = mons[static_cast<std::size_t>(basis[bi])];
            Matrix<F> acc = Matrix<F>::identity(k, static_cast<std::size_t>(dim(d)));
            int cur = d;
            for (std::size_t v = 0; v < mono.size(); ++v)
                for (int rep = 0; rep < mono[v]; ++rep) {
                    int w = ring->var_degrees()[v];
                    acc = matmul(var_matrix(static_cast<int>(v), cur), acc);
                    cur += w;
                }
            for (std::size_t i = 0; i < out.rows(); ++i)
                for (std::size_t j = 0; j < out.cols(); ++j)
                    out.at(i, j) = k.add(out.at(i, j), k.mul(r[bi], acc.at(i, j)));
        }
        return out;
    }

    Matrix<F> var_matrix(int v, int d) const
    {
        const F& k = ring->field();
        int w = ring->var_degrees()[static_cast<std::size_t>(v)];
        if (d < lo || d > hi || dim(d) == 0)
            return Matrix<F>(k, static_cast<std::size_t>(dim(d + w)),
                             static_cast<std::size_t>(dim(d)));
        return mult_var[static_cast<std::size_t>(v)][static_cast<std::size_t>(d - lo)];
    }
};

/// Present abstract slice data as coker of a free matrix: choose minimal
/// generators by Nakayama, map a free module onto the slices, and take
/// minimal generators of the degreewise kernel as relations. Requires a
/// certified artinian ring so the kernel support is provably exhausted.
template <class F>
struct Presented {
    GradedModule<F> module;
    // chosen generators inside the abstract slices: (degree, abstract coords)
    std::vector<std::pair<int, std::vector<typename F::Elem>>> gens;
};

template <class F>
Presented<F> present_abstract(const AbstractSlices<F>& a)
{
    const GradedAlgebra<F>& R = *a.ring;
    const F& k = R.field();
    if (!R.artinian_certified())
        throw WindowError("present_abstract: ring must be certified artinian");

    // minimal generators: complement of the m-multiples, degree by degree
    std::vector<std::pair<int, std::vector<typename F::Elem>>> gens;
    for (int d = a.lo; d <= a.hi; ++d) {
        if (a.dim(d) == 0)
            continue;
        RowBasis<F> span(k, static_cast<std::size_t>(a.dim(d)));
        for (int v = 0; v < R.nvars(); ++v) {
            int w = R.var_degrees()[static_cast<std::size_t>(v)];
            if (a.dim(d - w) == 0)
                continue;
            Matrix<F> mv = a.var_matrix(v, d - w);
            for (std::size_t c = 0; c < mv.cols(); ++c)
                span.insert(mv.col(c));
        }
        for (std::size_t j : span.complement()) {
            std::vector<typename F::Elem> g(static_cast<std::size_t>(a.dim(d)), k.zero());
            g[j] = k.one();
            gens.emplace_back(d, std::move(g));
        }
    }

    std::vector<int> gen_shifts;
    for (const auto& g : gens)
        gen_shifts.push_back(g.first);
    GradedFree<F> f0(&R, gen_shifts);

    // surjection slices F0_d -> A_d
    int top = f0.rank() > 0 ? f0.max_shift() + R.top_degree() : a.lo - 1;
    auto surj = [&](int d) {
        Matrix<F> s(k, static_cast<std::size_t>(a.dim(d)),
                    static_cast<std::size_t>(f0.dim(d)));
        auto off = f0.block_offsets(d);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            int rd = d - gens[g].first;
            int nr = R.dim(rd);
            if (nr == 0)
                continue;
            const F& kk = k;
            std::vector<typename F::Elem> unit(static_cast<std::size_t>(nr), kk.zero());
            for (int u = 0; u < nr; ++u) {
                unit[static_cast<std::size_t>(u)] = kk.one();
                Matrix<F> actm = a.act(rd, unit, gens[g].first);
                // column of the generator image under u
                for (std::size_t i = 0; i < s.rows(); ++i) {
                    typename F::Elem acc = kk.zero();
                    for (std::size_t l = 0; l < gens[g].second.size(); ++l)
                        acc = kk.add(acc, kk.mul(actm.at(i, l), gens[g].second[l]));
                    s.at(i, static_cast<std::size_t>(off[g] + u)) = acc;
                }
                unit[static_cast<std::size_t>(u)] = kk.zero();
            }
        }
        return s;
    };

    // degreewise kernels and their minimal generators
    std::vector<std::vector<std::vector<typename F::Elem>>> kernels; // per degree
    kernels.resize(static_cast<std::size_t>(std::max(0, top - a.lo + 1)));
    for (int d = a.lo; d <= top; ++d) {
        Matrix<F> kmat = kernel_basis(surj(d));
        auto& kd = kernels[static_cast<std::size_t>(d - a.lo)];
        for (std::size_t c = 0; c < kmat.cols(); ++c)
            kd.push_back(kmat.col(c));
    }
    std::vector<std::pair<int, std::vector<typename F::Elem>>> rels;
    for (int d = a.lo; d <= top; ++d) {
        const auto& kd = kernels[static_cast<std::size_t>(d - a.lo)];
        if (kd.empty())
            continue;
        RowBasis<F> span(k, static_cast<std::size_t>(f0.dim(d)));
        for (int v = 0; v < R.nvars(); ++v) {
            int w = R.var_degrees()[static_cast<std::size_t>(v)];
            if (d - w < a.lo)
                continue;
            for (const auto& kv : kernels[static_cast<std::size_t>(d - w - a.lo)])
                span.insert(f0.mult(w, R.variable_class(v), d - w, kv));
        }
        for (const auto& kv : kd)
            if (span.insert(kv))
                rels.emplace_back(d, kv);
    }

    GradedFree<F> f1(&R, [&] {
        std::vector<int> s;
        for (const auto& r : rels)
            s.push_back(r.first);
        return s;
    }());
    RMatrix<F> p(f0, f1);
    for (std::size_t c = 0; c < rels.size(); ++c) {
        int d = rels[c].first;
        auto off = f0.block_offsets(d);
        for (int r = 0; r < f0.rank(); ++r) {
            int rd = d - f0.shift(r);
            int nr = R.dim(rd);
            if (nr == 0)
                continue;
            RElem<F> e;
            e.deg = rd;
            e.c.assign(rels[c].second.begin() + off[static_cast<std::size_t>(r)],
                       rels[c].second.begin() + off[static_cast<std::size_t>(r)] + nr);
            p.set_entry(r, static_cast<int>(c), std::move(e));
        }
    }
    Presented<F> out{GradedModule<F>(std::move(p)), std::move(gens)};
    // consistency: presented dimensions must reproduce the abstract slices
    for (int d = a.lo; d <= std::max(a.hi, top); ++d)
        if (out.module.dim(d) != a.dim(d))
            throw std::logic_error("present_abstract: slice dimension mismatch at degree "
                                   + std::to_string(d));
    return out;
}

/// Hom_R(M, N) as a presented module, together with its chosen generators
/// expressed as hom slice vectors. Artinian-certified rings only.
template <class F>
struct HomModule {
    GradedModule<F> module;
    std::vector<std::pair<int, std::vector<typename F::Elem>>> gen_homs;
};

template <class F>
AbstractSlices<F> hom_abstract(const GradedModule<F>& m, const GradedModule<F>& n)
{
    const GradedAlgebra<F>& R = m.ring();
    if (!R.artinian_certified())
        throw WindowError("hom module: ring must be certified artinian");
    AbstractSlices<F> a;
    a.ring = &R;
    if (m.f0().rank() == 0 || n.f0().rank() == 0) {
        a.lo = 0;
        a.hi = -1;
        return a;
    }
    int n_top = n.f0().max_shift() + R.top_degree();
    a.lo = n.lo() - m.f0().max_shift();
    a.hi = n_top - m.f0().min_shift();
    if (a.hi < a.lo) {
        a.hi = a.lo - 1;
        return a;
    }
    std::vector<HomSlice<F>> slices;
    for (int d = a.lo; d <= a.hi; ++d) {
        slices.push_back(hom_degree(m, n, d));
        a.dims.push_back(slices.back().dim());
    }
    const F& k = R.field();
    a.mult_var.resize(static_cast<std::size_t>(R.nvars()));
    for (int v = 0; v < R.nvars(); ++v) {
        int w = R.var_degrees()[static_cast<std::size_t>(v)];
        auto& col = a.mult_var[static_cast<std::size_t>(v)];
        for (int d = a.lo; d <= a.hi; ++d) {
            const HomSlice<F>& src = slices[static_cast<std::size_t>(d - a.lo)];
            Matrix<F> mv(k, static_cast<std::size_t>(a.dim(d + w)),
                         static_cast<std::size_t>(a.dim(d)));
            if (a.dim(d + w) > 0 && a.dim(d) > 0) {
                const HomSlice<F>& dst = slices[static_cast<std::size_t>(d + w - a.lo)];
                // multiply each basis hom blockwise inside N, then express in
                // the target hom basis
                Matrix<F> dst_basis(k, static_cast<std::size_t>(dst.block_offsets.back()),
                                    dst.basis.size());
                for (std::size_t c = 0; c < dst.basis.size(); ++c)
                    for (std::size_t i = 0; i < dst.basis[c].size(); ++i)
                        dst_basis.at(i, c) = dst.basis[c][i];
                Matrix<F> imgs(k, static_cast<std::size_t>(dst.block_offsets.back()),
                               src.basis.size());
                for (std::size_t c = 0; c < src.basis.size(); ++c) {
                    for (int j = 0; j < m.f0().rank(); ++j) {
                        int aj = m.f0().shift(j);
                        int nin = n.dim(aj + d);
                        if (nin == 0 || n.dim(aj + d + w) == 0)
                            continue;
                        std::vector<typename F::Elem> blk(
                            src.basis[c].begin() + src.block_offsets[static_cast<std::size_t>(j)],
                            src.basis[c].begin() + src.block_offsets[static_cast<std::size_t>(j)]
                                + nin);
                        std::vector<typename F::Elem> prod =
                            n.mult(w, R.variable_class(v), aj + d, blk);
                        for (std::size_t l = 0; l < prod.size(); ++l)
                            imgs.at(static_cast<std::size_t>(
                                        dst.block_offsets[static_cast<std::size_t>(j)]) + l,
                                    c) = prod[l];
                    }
                }
                auto sol = solve_right(dst_basis, imgs);
                if (!sol)
                    throw std::logic_error("hom module: multiple not in hom space");
                mv = *sol;
            }
            col.push_back(std::move(mv));
        }
    }
    return a;
}

template <class F>
HomModule<F> hom_module(const GradedModule<F>& m, const GradedModule<F>& n)
{
    AbstractSlices<F> a = hom_abstract(m, n);
    std::vector<HomSlice<F>> cache;
    Presented<F> p = present_abstract(a);
    HomModule<F> out{std::move(p.module), {}};
    // translate abstract generator coordinates back to hom vectors
    for (const auto& g : p.gens) {
        HomSlice<F> hs = hom_degree(m, n, g.first);
        const F& k = m.ring().field();
        std::vector<typename F::Elem> flat(
            static_cast<std::size_t>(hs.block_offsets.back()), k.zero());
        for (std::size_t b = 0; b < hs.basis.size(); ++b) {
            if (k.is_zero(g.second[b]))
                continue;
            for (std::size_t i = 0; i < flat.size(); ++i)
                flat[i] = k.add(flat[i], k.mul(g.second[b], hs.basis[b][i]));
        }
        out.gen_homs.emplace_back(g.first, std::move(flat));
    }
    return out;
}

} // namespace sdc
