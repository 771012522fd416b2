#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace sdc;
using namespace sdc::testutil;

namespace {

// Independent dims oracle: span the degree-d ideal slice by generator-times-
// monomial products in the full monomial coordinates and subtract its rank.
template <class F>
int slice_dim_oracle(F field, const std::vector<std::string>& vars,
                     const std::vector<std::string>& gens,
                     const std::vector<int>& degs, int d)
{
    std::vector<int> degrees = degs.empty() ? std::vector<int>(vars.size(), 1) : degs;
    auto mons = monomials_of_degree(d, degrees);
    std::vector<std::vector<IntTerm>> rows;
    std::vector<Monomial> mults;
    std::vector<IntPoly> polys;
    for (const std::string& g : gens)
        polys.push_back(parse_poly(g, vars));
    std::size_t nrows = 0;
    for (const IntPoly& g : polys) {
        int e = *homogeneous_degree(g, degrees);
        nrows += monomials_of_degree(d - e, degrees).size();
    }
    Matrix<F> m(field, nrows, mons.size());
    std::size_t r = 0;
    auto index_of = [&](const Monomial& mo) {
        for (std::size_t i = 0; i < mons.size(); ++i)
            if (mons[i] == mo)
                return i;
        REQUIRE(false);
        return std::size_t(0);
    };
    for (const IntPoly& g : polys) {
        int e = *homogeneous_degree(g, degrees);
        for (const Monomial& mult : monomials_of_degree(d - e, degrees)) {
            for (const IntTerm& t : g.terms)
                m.at(r, index_of(mono_mul(t.mono, mult))) = field.from_int(t.coeff);
            ++r;
        }
    }
    return static_cast<int>(mons.size() - rref(m).rank());
}

} // namespace

TEST_CASE("slice dimensions of k[x,y]/(x^2,xy)")
{
    GFp k(101);
    auto R = ring_x2_xy(k, 12);
    CHECK(R.dim(0) == 1);
    CHECK(R.dim(1) == 2);
    for (int d = 2; d <= 12; ++d)
        CHECK(R.dim(d) == 1);
    for (int d = 0; d <= 12; ++d)
        CHECK(R.dim(d) == slice_dim_oracle(k, {"x", "y"}, {"x^2", "x*y"}, {}, d));
    CHECK(!R.artinian_in_window());
    CHECK(!R.artinian_certified());
}

TEST_CASE("slice dimensions of QQ[x]/(x^2) with artinian certification")
{
    Rationals q;
    auto R = ring_dual_numbers(q, 8);
    CHECK(R.dim(0) == 1);
    CHECK(R.dim(1) == 1);
    for (int d = 2; d <= 8; ++d)
        CHECK(R.dim(d) == 0);
    for (int d = 0; d <= 8; ++d)
        CHECK(R.dim(d) == slice_dim_oracle(q, {"x"}, {"x^2"}, {}, d));
    CHECK(R.artinian_certified());
    CHECK(R.top_degree() == 1);
    CHECK(R.dim(100) == 0); // known zero above the certified top
}

TEST_CASE("free polynomial ring has binomial growth")
{
    Rationals q;
    auto R = make_ring(q, {"x", "y"}, {}, 4);
    for (int d = 0; d <= 4; ++d)
        CHECK(R.dim(d) == d + 1);
    CHECK(!R.artinian_in_window());
    CHECK_THROWS_AS(R.dim(5), WindowError);
}

TEST_CASE("normal forms in k[x,y]/(x^2,xy)")
{
    GFp k(101);
    auto R = ring_x2_xy(k, 12);
    auto vars = R.var_names();

    auto z = R.normal_form(parse_poly("x^2", vars));
    CHECK(z.size() == 1);
    CHECK(k.is_zero(z[0]));

    auto y2 = R.normal_form(parse_poly("y^2", vars));
    REQUIRE(y2.size() == 1);
    CHECK(y2[0] == 1);

    auto lin = R.normal_form(parse_poly("3*y + 2*x", vars));
    REQUIRE(lin.size() == 2);
    // descending lex basis of degree 1 is (x, y)
    CHECK(lin[0] == 2);
    CHECK(lin[1] == 3);

    // normal_form of a basis monomial is its own unit vector
    for (int d = 0; d <= 4; ++d) {
        const auto& basis = R.basis_monomials(d);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const auto& nf = R.monomial_nf(d, basis[j]);
            for (std::size_t l = 0; l < nf.size(); ++l)
                CHECK(nf[l] == (l == j ? 1u : 0u));
        }
    }

    // projection applied twice equals applied once: rebuild from the class
    auto cls = R.normal_form(parse_poly("x^2 + y^2 + x*y", vars));
    REQUIRE(cls.size() == 1);
    CHECK(cls[0] == 1);
}

TEST_CASE("multiplication agrees with polynomial normal forms")
{
    GFp k(101);
    auto R = ring_x2_xy(k, 12);
    auto vars = R.var_names();

    auto one = R.normal_form(parse_poly("1", vars));
    auto b = R.normal_form(parse_poly("5*x + 7*y", vars));
    CHECK(R.multiply(0, one, 1, b) == b);

    auto x = R.normal_form(parse_poly("x", vars));
    auto y = R.normal_form(parse_poly("y", vars));
    auto xy = R.multiply(1, x, 1, y);
    CHECK(xy == std::vector<GFp::Elem>{0});
    auto yy = R.multiply(1, y, 1, y);
    CHECK(yy == std::vector<GFp::Elem>{1});
}

TEST_CASE("multiplication is associative and commutative within the window")
{
    std::mt19937 rng(5);
    GFp k(7);
    auto R = ring_m2(k, 8);
    std::uniform_int_distribution<long long> coeff(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        int da = static_cast<int>(rng() % 2), db = static_cast<int>(rng() % 2),
            dc = static_cast<int>(rng() % 2);
        auto rnd = [&](int d) {
            std::vector<GFp::Elem> v(static_cast<std::size_t>(R.dim(d)));
            for (auto& x : v)
                x = k.from_int(coeff(rng));
            return v;
        };
        auto a = rnd(da), b = rnd(db), c = rnd(dc);
        CHECK(R.multiply(da, a, db, b) == R.multiply(db, b, da, a));
        CHECK(R.multiply(da + db, R.multiply(da, a, db, b), dc, c)
              == R.multiply(da, a, db + dc, R.multiply(db, b, dc, c)));
    }
}

TEST_CASE("Hilbert series")
{
    Rationals q;
    auto R1 = ring_dual_numbers(q, 8);
    auto h1 = R1.hilbert_coeffs(8);
    CHECK(h1.coeff(0) == 1);
    CHECK(h1.coeff(1) == 1);
    for (int d = 2; d <= 8; ++d)
        CHECK(h1.coeff(d) == 0);

    GFp k(101);
    auto R2 = ring_x2_xy(k, 12);
    auto h2 = R2.hilbert_coeffs(12);
    CHECK(h2.coeff(0) == 1);
    CHECK(h2.coeff(1) == 2);
    for (int d = 2; d <= 12; ++d)
        CHECK(h2.coeff(d) == 1);

    auto Rk = make_ring(q, {}, {}, 3);
    auto hk = Rk.hilbert_coeffs(3);
    CHECK(hk.coeff(0) == 1);
    for (int d = 1; d <= 3; ++d)
        CHECK(hk.coeff(d) == 0);
    CHECK(Rk.artinian_certified());
}

TEST_CASE("socle bases")
{
    Rationals q;
    auto R1 = ring_dual_numbers(q, 8);
    auto s1 = R1.socle_basis(0, 7);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].degree == 1);
    CHECK(s1[0].vecs.size() == 1);
    CHECK(R1.socle_dimension() == 1);

    GFp k7(7);
    auto R2 = ring_m2(k7, 12);
    CHECK(R2.artinian_certified());
    CHECK(R2.top_degree() == 1);
    CHECK(R2.socle_dimension() == 2); // socle = <x, y>

    GFp k(101);
    auto R3 = ring_x2_xy(k, 12);
    auto s3 = R3.socle_basis(0, 3);
    REQUIRE(!s3.empty());
    CHECK(s3[0].degree == 1);
    CHECK(s3[0].vecs.size() == 1); // x spans; witnesses depth 0
    // confirm the witness is x: multiply back
    auto x = R3.normal_form(parse_poly("x", R3.var_names()));
    CHECK(s3[0].vecs[0] == x);
}

TEST_CASE("rejects invalid input")
{
    Rationals q;
    CHECK_THROWS_AS(make_ring(q, {"x", "y"}, {"x^2 + y"}, 6), InputError);
    CHECK_THROWS_AS(make_ring(q, {"x"}, {"1 + x"}, 6), InputError);
    GradedAlgebra<Rationals>::Spec bad{q, {"x"}, {0}, {}, 4};
    CHECK_THROWS_AS((GradedAlgebra<Rationals>{bad}), InputError);
}

TEST_CASE("truncation below every generator degree is allowed but flagged")
{
    Rationals q;
    auto R = make_ring(q, {"x"}, {"x^4"}, 2);
    CHECK(R.truncation_below_ideal());
    CHECK(R.dim(2) == 1);
}

TEST_CASE("weighted variables: zero tail alone does not certify artinian")
{
    // y has degree 5, so slices 2..4 vanish while y is still alive at 5.
    Rationals q;
    auto R = make_ring(q, {"x", "y"}, {"x^2"}, 4, {1, 5});
    CHECK(R.dim(0) == 1);
    CHECK(R.dim(1) == 1);
    CHECK(R.dim(2) == 0);
    CHECK(R.dim(4) == 0);
    CHECK(R.artinian_in_window());
    CHECK(!R.artinian_certified());

    // a wider window sees y alive again at degree 5
    auto R2 = make_ring(q, {"x", "y"}, {"x^2"}, 6, {1, 5});
    CHECK(R2.dim(5) == 1);
    CHECK(!R2.artinian_in_window());
}

TEST_CASE("quotient basis prefers small monomials deterministically")
{
    GFp k(101);
    auto R = ring_x2_xy(k, 6);
    // degree 2: x^2, xy eliminated, y^2 survives
    const auto& mons = R.monomials(2);
    const auto& basis = R.basis_monomials(2);
    REQUIRE(basis.size() == 1);
    CHECK(mons[static_cast<std::size_t>(basis[0])] == Monomial{0, 2});
    // degree 1 untouched: basis in descending lex order (x, y)
    const auto& b1 = R.basis_monomials(1);
    REQUIRE(b1.size() == 2);
    CHECK(R.monomials(1)[static_cast<std::size_t>(b1[0])] == Monomial{1, 0});
    CHECK(R.monomials(1)[static_cast<std::size_t>(b1[1])] == Monomial{0, 1});
}
