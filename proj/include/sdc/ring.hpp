#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sdc/errors.hpp"
#include "sdc/laurent.hpp"
#include "sdc/matrix.hpp"
#include "sdc/poly.hpp"

namespace sdc {

/// Connected graded quotient algebra R = k[x_1..x_n]/I, built degreewise up
/// to a truncation bound: per-degree monomial quotient bases, normal-form
/// projectors and full multiplication tables. No Groebner bases; each graded
/// slice of a homogeneous ideal is spanned by generator-times-monomial
/// products, so plain row reduction suffices.
///
/// Slice coordinates: an element of R_d is a coefficient vector over the
/// chosen quotient basis of R_d. Quotient bases eliminate lex-greatest
/// monomials first, so 1 and the variables persist as basis elements and the
/// output is deterministic.
template <class F>
class GradedAlgebra {
public:
    using Elem = typename F::Elem;

    struct Spec {
        F field;
        std::vector<std::string> var_names;
        std::vector<int> var_degrees; // empty means all 1
        std::vector<IntPoly> ideal;
        int dmax = 0;
    };

    explicit GradedAlgebra(Spec spec) : field_(spec.field), names_(spec.var_names)
    {
        degrees_ = spec.var_degrees;
        if (degrees_.empty())
            degrees_.assign(names_.size(), 1);
        if (degrees_.size() != names_.size())
            throw InputError("ring: variable/degree count mismatch");
        for (int w : degrees_)
            if (w < 1)
                throw InputError("ring: variable degrees must be positive");
        if (spec.dmax < 0)
            throw InputError("ring: truncation degree must be nonnegative");
        dmax_ = spec.dmax;

        int min_gen_deg = -1;
        for (const IntPoly& g : spec.ideal) {
            if (g.is_zero())
                continue;
            std::optional<int> d = homogeneous_degree(g, degrees_);
            if (!d)
                throw InputError("ring: non-homogeneous ideal generator: "
                                 + poly_to_string(g, names_));
            if (*d <= 0)
                throw InputError("ring: ideal generator of degree <= 0");
            gens_.push_back(g);
            gen_degrees_.push_back(*d);
            if (min_gen_deg < 0 || *d < min_gen_deg)
                min_gen_deg = *d;
        }
        dmax_below_ideal_ = min_gen_deg > 0 && dmax_ < min_gen_deg;

        build_slices();
        build_tables();
        detect_artinian();
    }

    const F& field() const { return field_; }
    int dmax() const { return dmax_; }
    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& var_names() const { return names_; }
    const std::vector<int>& var_degrees() const { return degrees_; }
    const std::vector<IntPoly>& ideal() const { return gens_; }
    bool truncation_below_ideal() const { return dmax_below_ideal_; }

    /// Slice dimensions are known on [0, dmax], everywhere below 0 (zero),
    /// and above dmax exactly when the ring is certified artinian.
    bool degree_known(int d) const
    {
        return d <= dmax_ || (artinian_certified_ && d > top_);
    }

    int dim(int d) const
    {
        if (d < 0)
            return 0;
        if (d <= dmax_)
            return static_cast<int>(basis_[static_cast<std::size_t>(d)].size());
        if (artinian_certified_ && d > top_)
            return 0;
        throw WindowError("ring slice at degree " + std::to_string(d)
                          + " is beyond the truncation window (Dmax = "
                          + std::to_string(dmax_) + ")");
    }

    const std::vector<Monomial>& monomials(int d) const
    {
        check_window(d);
        return mons_[static_cast<std::size_t>(d)];
    }

    /// Indices (into monomials(d)) of the quotient-basis monomials.
    const std::vector<int>& basis_monomials(int d) const
    {
        check_window(d);
        return basis_[static_cast<std::size_t>(d)];
    }

    /// Normal form of the monomial with index mi in monomials(d), expressed
    /// in the quotient basis of R_d.
    const std::vector<Elem>& monomial_nf(int d, int mi) const
    {
        check_window(d);
        return nf_[static_cast<std::size_t>(d)][static_cast<std::size_t>(mi)];
    }

    int poly_degree(const IntPoly& p) const
    {
        std::optional<int> d = homogeneous_degree(p, degrees_);
        if (!d)
            throw InputError("non-homogeneous polynomial: " + poly_to_string(p, names_));
        return *d;
    }

    /// Residue class of a homogeneous polynomial, as slice coordinates.
    std::vector<Elem> normal_form(const IntPoly& p) const
    {
        int d = poly_degree(p);
        if (d > dmax_ && !degree_known(d))
            throw WindowError("normal_form: degree " + std::to_string(d)
                              + " above truncation");
        std::vector<Elem> out(static_cast<std::size_t>(dim(d)), field_.zero());
        if (out.empty())
            return out;
        for (const IntTerm& t : p.terms) {
            if (t.coeff == 0)
                continue;
            int mi = mono_index(d, t.mono);
            const std::vector<Elem>& v = monomial_nf(d, mi);
            Elem c = field_.from_int(t.coeff);
            for (std::size_t j = 0; j < out.size(); ++j)
                out[j] = field_.add(out[j], field_.mul(c, v[j]));
        }
        return out;
    }

    /// Product in slice coordinates: R_da x R_db -> R_(da+db).
    std::vector<Elem> multiply(int da, const std::vector<Elem>& a, int db,
                               const std::vector<Elem>& b) const
    {
        int dc = da + db;
        if (!degree_known(dc))
            throw WindowError("multiply: product degree " + std::to_string(dc)
                              + " above truncation");
        std::vector<Elem> out(static_cast<std::size_t>(dim(dc)), field_.zero());
        if (out.empty() || a.empty() || b.empty())
            return out;
        if (da == 0) {
            const Elem& s = a[0];
            for (std::size_t j = 0; j < b.size(); ++j)
                out[j] = field_.mul(s, b[j]);
            return out;
        }
        if (db == 0) {
            const Elem& s = b[0];
            for (std::size_t j = 0; j < a.size(); ++j)
                out[j] = field_.mul(s, a[j]);
            return out;
        }
        const bool swapped = da > db;
        const std::vector<Elem>& u = swapped ? b : a;
        const std::vector<Elem>& v = swapped ? a : b;
        const int du = swapped ? db : da;
        const auto& table = tables_[static_cast<std::size_t>(du)]
                                   [static_cast<std::size_t>((swapped ? da : db) - du)];
        const std::size_t dv = v.size();
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (field_.is_zero(u[i]))
                continue;
            for (std::size_t j = 0; j < dv; ++j) {
                if (field_.is_zero(v[j]))
                    continue;
                const std::vector<Elem>& prod = table[i * dv + j];
                Elem c = field_.mul(u[i], v[j]);
                for (std::size_t l = 0; l < out.size(); ++l)
                    if (!field_.is_zero(prod[l]))
                        out[l] = field_.add(out[l], field_.mul(c, prod[l]));
            }
        }
        return out;
    }

    /// Matrix of multiplication by r (of degree de) as a map R_d -> R_(d+de).
    Matrix<F> mult_matrix(int de, const std::vector<Elem>& r, int d) const
    {
        Matrix<F> m(field_, static_cast<std::size_t>(dim(d + de)),
                    static_cast<std::size_t>(dim(d)));
        std::vector<Elem> unit(static_cast<std::size_t>(dim(d)), field_.zero());
        for (std::size_t j = 0; j < unit.size(); ++j) {
            unit[j] = field_.one();
            std::vector<Elem> col = multiply(de, r, d, unit);
            for (std::size_t i = 0; i < col.size(); ++i)
                m.at(i, j) = col[i];
            unit[j] = field_.zero();
        }
        return m;
    }

    /// The class of the variable x_i as slice coordinates in its degree.
    const std::vector<Elem>& variable_class(int i) const
    {
        return var_classes_[static_cast<std::size_t>(i)];
    }

    LaurentPolyZ hilbert_coeffs(int nmax) const
    {
        if (nmax > dmax_ && !artinian_certified_)
            throw WindowError("hilbert_coeffs: nmax above truncation");
        LaurentPolyZ s = LaurentPolyZ::zero(nmax);
        for (int d = 0; d <= nmax; ++d)
            s.set_coeff(d, dim(d));
        return s;
    }

    bool artinian_certified() const { return artinian_certified_; }
    bool artinian_in_window() const { return artinian_in_window_; }
    /// Largest degree with a nonzero slice; meaningful when either artinian
    /// flag is set.
    int top_degree() const { return top_; }

    struct SocleSlice {
        int degree;
        std::vector<std::vector<Elem>> vecs; // slice coordinates in R_degree
    };

    /// Degreewise basis of { s : x_i * s = 0 for all i } on [lo, hi].
    std::vector<SocleSlice> socle_basis(int lo, int hi) const
    {
        for (int i = 0; i < nvars(); ++i)
            if (!degree_known(hi + degrees_[static_cast<std::size_t>(i)]))
                throw WindowError("socle_basis: window top requires slices beyond Dmax");
        std::vector<SocleSlice> out;
        for (int d = std::max(lo, 0); d <= hi; ++d) {
            int nd = dim(d);
            if (nd == 0)
                continue;
            std::size_t total_rows = 0;
            for (int i = 0; i < nvars(); ++i)
                total_rows += static_cast<std::size_t>(
                    dim(d + degrees_[static_cast<std::size_t>(i)]));
            Matrix<F> stacked(field_, total_rows, static_cast<std::size_t>(nd));
            std::size_t row0 = 0;
            for (int i = 0; i < nvars(); ++i) {
                Matrix<F> mi = mult_matrix(degrees_[static_cast<std::size_t>(i)],
                                           var_classes_[static_cast<std::size_t>(i)], d);
                for (std::size_t r = 0; r < mi.rows(); ++r)
                    for (std::size_t c = 0; c < mi.cols(); ++c)
                        stacked.at(row0 + r, c) = mi.at(r, c);
                row0 += mi.rows();
            }
            Matrix<F> ker = kernel_basis(stacked);
            if (ker.cols() == 0)
                continue;
            SocleSlice s;
            s.degree = d;
            for (std::size_t c = 0; c < ker.cols(); ++c)
                s.vecs.push_back(ker.col(c));
            out.push_back(std::move(s));
        }
        return out;
    }

    /// Total socle dimension over the full support; exact for certified
    /// artinian rings.
    int socle_dimension() const
    {
        if (!artinian_certified_)
            throw WindowError("socle_dimension: ring is not certified artinian");
        int total = 0;
        for (const SocleSlice& s : socle_basis(0, top_))
            total += static_cast<int>(s.vecs.size());
        return total;
    }

    int mono_index(int d, const Monomial& m) const
    {
        const std::vector<Monomial>& ms = mons_[static_cast<std::size_t>(d)];
        auto it = std::lower_bound(ms.begin(), ms.end(), m,
                                   [](const Monomial& a, const Monomial& b) {
                                       return lex_greater(a, b);
                                   });
        if (it == ms.end() || *it != m)
            throw InputError("monomial not of degree " + std::to_string(d));
        return static_cast<int>(it - ms.begin());
    }

private:
    void check_window(int d) const
    {
        if (d < 0 || d > dmax_)
            throw WindowError("ring slice data requested at degree " + std::to_string(d));
    }

    void build_slices()
    {
        mons_.resize(static_cast<std::size_t>(dmax_) + 1);
        basis_.resize(static_cast<std::size_t>(dmax_) + 1);
        nf_.resize(static_cast<std::size_t>(dmax_) + 1);
        for (int d = 0; d <= dmax_; ++d) {
            auto& mons = mons_[static_cast<std::size_t>(d)];
            mons = monomials_of_degree(d, degrees_);
            RowBasis<F> ideal_slice(field_, mons.size());
            for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
                const IntPoly& g = gens_[gi];
                if (g.is_zero())
                    continue;
                int e = gen_degrees_[gi];
                if (e > d)
                    continue;
                for (const Monomial& m : monomials_of_degree(d - e, degrees_)) {
                    std::vector<Elem> row(mons.size(), field_.zero());
                    for (const IntTerm& t : g.terms) {
                        if (t.coeff == 0)
                            continue;
                        int idx = mono_index(d, mono_mul(t.mono, m));
                        row[static_cast<std::size_t>(idx)] =
                            field_.add(row[static_cast<std::size_t>(idx)],
                                       field_.from_int(t.coeff));
                    }
                    ideal_slice.insert(std::move(row));
                }
            }
            auto& basis = basis_[static_cast<std::size_t>(d)];
            for (std::size_t j : ideal_slice.complement())
                basis.push_back(static_cast<int>(j));
            auto& nf = nf_[static_cast<std::size_t>(d)];
            nf.resize(mons.size());
            for (std::size_t mi = 0; mi < mons.size(); ++mi) {
                std::vector<Elem> unit(mons.size(), field_.zero());
                unit[mi] = field_.one();
                std::vector<Elem> residue = ideal_slice.reduce(std::move(unit));
                std::vector<Elem> cls;
                cls.reserve(basis.size());
                for (int bj : basis)
                    cls.push_back(residue[static_cast<std::size_t>(bj)]);
                nf[mi] = std::move(cls);
            }
        }
        var_classes_.resize(names_.size());
        for (int i = 0; i < nvars(); ++i) {
            int w = degrees_[static_cast<std::size_t>(i)];
            if (w > dmax_) {
                var_classes_[static_cast<std::size_t>(i)].clear();
                continue;
            }
            Monomial xm(names_.size(), 0);
            xm[static_cast<std::size_t>(i)] = 1;
            var_classes_[static_cast<std::size_t>(i)] = monomial_nf(w, mono_index(w, xm));
        }
    }

    void build_tables()
    {
        tables_.resize(static_cast<std::size_t>(dmax_) + 1);
        for (int a = 1; 2 * a <= dmax_; ++a) {
            auto& row = tables_[static_cast<std::size_t>(a)];
            row.resize(static_cast<std::size_t>(dmax_ - 2 * a) + 1);
            for (int b = a; a + b <= dmax_; ++b) {
                const auto& ba = basis_[static_cast<std::size_t>(a)];
                const auto& bb = basis_[static_cast<std::size_t>(b)];
                auto& tab = row[static_cast<std::size_t>(b - a)];
                tab.resize(ba.size() * bb.size());
                for (std::size_t i = 0; i < ba.size(); ++i) {
                    const Monomial& mi =
                        mons_[static_cast<std::size_t>(a)][static_cast<std::size_t>(ba[i])];
                    for (std::size_t j = 0; j < bb.size(); ++j) {
                        const Monomial& mj =
                            mons_[static_cast<std::size_t>(b)][static_cast<std::size_t>(bb[j])];
                        int pi = mono_index(a + b, mono_mul(mi, mj));
                        tab[i * bb.size() + j] = monomial_nf(a + b, pi);
                    }
                }
            }
        }
    }

    void detect_artinian()
    {
        top_ = 0;
        for (int d = 0; d <= dmax_; ++d)
            if (dim(d) > 0)
                top_ = d;
        bool zero_tail = top_ < dmax_ || nvars() == 0;
        if (!zero_tail) {
            artinian_in_window_ = artinian_certified_ = false;
            return;
        }
        artinian_in_window_ = true;
        int max_var_deg = 0;
        for (int w : degrees_)
            max_var_deg = std::max(max_var_deg, w);
        // Zero slices on a tail of length >= max variable degree force all
        // higher slices to vanish: every monomial above the tail has a
        // divisor inside it.
        artinian_certified_ = dmax_ - top_ >= max_var_deg;
    }

    F field_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<IntPoly> gens_;
    std::vector<int> gen_degrees_;
    int dmax_ = 0;
    bool dmax_below_ideal_ = false;

    std::vector<std::vector<Monomial>> mons_;
    std::vector<std::vector<int>> basis_;
    std::vector<std::vector<std::vector<Elem>>> nf_; // [d][monomial] -> class
    // tables_[a][b-a][i*dim_b+j] = class of basis_a[i] * basis_b[j], for 1 <= a <= b
    std::vector<std::vector<std::vector<std::vector<Elem>>>> tables_;
    std::vector<std::vector<Elem>> var_classes_;

    bool artinian_certified_ = false;
    bool artinian_in_window_ = false;
    int top_ = 0;
};

} // namespace sdc
