// Acceptance suite: runs each acceptance criterion end to end and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "sdc/bounds.hpp"
#include "sdc/cli.hpp"
#include "sdc/duality.hpp"
#include "test_util.hpp"

using namespace sdc;
using namespace sdc::testutil;

#ifndef SDC_RING_DIR
#define SDC_RING_DIR "rings"
#endif

namespace {

int failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& note = "")
{
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title;
    if (!note.empty())
        std::cout << " (" << note << ")";
    std::cout << "\n";
    if (!ok)
        ++failures;
}

struct RunResult {
    int exit;
    std::string out;
};

RunResult run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str()};
}

std::string ring_path(const std::string& name)
{
    return std::string(SDC_RING_DIR) + "/" + name;
}

bool has_exact_line(const std::string& text, const std::string& want)
{
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (line == want)
            return true;
    return false;
}

bool has_prefix_line(const std::string& text, const std::string& prefix)
{
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind(prefix, 0) == 0)
            return true;
    return false;
}

// criterion 1: golden Bass numbers of k[x,y]/(x^2,xy) over both fields,
// exactly mu^0 = 1, mu^1 = 2, mu^2 = 2, saturation-free
void criterion_1()
{
    bool ok = true;
    std::string note;
    for (const char* file : {"gf101_x2_xy.ring", "qq_x2_xy.ring"}) {
        auto res = run({"bass", "--ring", ring_path(file), "--cutoff", "2", "--format",
                        "machine"});
        bool this_ok = res.exit == 0 && has_exact_line(res.out, "bass i=0 mu=1")
                       && has_exact_line(res.out, "bass i=1 mu=2")
                       && has_exact_line(res.out, "bass i=2 mu=2")
                       && res.out.find("saturated") == std::string::npos;
        if (!this_ok) {
            ok = false;
            note = std::string("failed on ") + file;
        }
    }
    report(1, "Bass numbers 1, 2, 2 of k[x,y]/(x^2,xy) over GF(101) and QQ", ok, note);
}

// criterion 2: the rigidity scan fires condition (a) at i = 2 with the
// free-or-dualizing conclusion and exit code 0
void criterion_2()
{
    auto res = run({"verify-bounds", "--ring", ring_path("gf101_x2_xy.ring"), "--thm",
                    "0102", "--g", "0", "--format", "machine"});
    bool ok = res.exit == 0
              && has_prefix_line(res.out, "conclusion=free-or-dualizing witness_i=2");
    report(2, "rigidity conclusion fires at i = 2 on k[x,y]/(x^2,xy)", ok);
}

// criterion 3: truncated product of the two shifted geometric series
void criterion_3()
{
    std::vector<long long> head{2, 5};
    LaurentPolyZ a(0, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    LaurentPolyZ b(0, {5, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    LaurentPolyZ p = series_mul(a, b);
    bool ok = p.trunc == 10 && p.coeff(0) == 10 && p.coeff(1) == 7 && p.coeff(2) == 8
              && p.coeff(3) == 9;
    for (int e = 4; e <= 10; ++e)
        ok = ok && p.coeff(e) == e + 6;
    report(3, "series product (2+t+...)(5+t+...) = 10+7t+8t^2+9t^3+...", ok);
}

// criterion 4: the full duality suite on GF(7)[x,y]/(x^2,xy,y^2)
void criterion_4()
{
    GFp k(7);
    auto R = ring_m2(k, 12);
    std::string note;
    bool ok = true;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    };
    expect(cm_type(R) == 2, "cm_type != 2");
    auto D = matlis_dual(R);
    auto v = check_semidualizing(D, 8);
    expect(v.status == VerdictStatus::VerifiedToCutoff, "dual not verified to 8");
    expect(v.beta0 == 2, "beta0(D) != 2");
    auto Rmod = GradedModule<GFp>::free_module(R, {0});
    std::vector<const GradedModule<GFp>*> chain{&D, &Rmod};
    auto rep = check_chain(chain, 8);
    expect(rep.status == VerdictStatus::VerifiedToCutoff, "chain [D,R] invalid");
    expect(rep.all_strict, "chain [D,R] not strict");
    auto fac = factorization_check(chain, 8);
    expect(fac.status == VerdictStatus::VerifiedToCutoff, "factorization failed");
    auto bound = verify_type_factor_bound(2, 1);
    expect(bound.outcome == BoundOutcome::Holds, "type factor bound fails");
    expect(bound.conclusion == "free-or-dualizing", "prime rigidity missing");
    auto resD = minimal_free_resolution(D, 8);
    auto gap = betti_gap_check(resD, 8);
    expect(gap.passed && !gap.free_rank_one, "betti gap check failed");
    report(4, "artinian duality suite on GF(7)[x,y]/(x^2,xy,y^2)", ok, note);
}

// criterion 5: Gorenstein collapse over QQ[x]/(x^2)
void criterion_5()
{
    Rationals q;
    auto R = ring_dual_numbers(q, 12);
    std::string note;
    bool ok = true;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    };
    auto D = matlis_dual(R);
    auto resD = minimal_free_resolution(D, 1);
    expect(resD.betti()[0] == 1 && resD.betti()[1] == 0, "dual is not free rank one");
    expect(check_homothety(D).iso, "homothety of the dual is not an isomorphism");
    auto gapD = betti_gap_check(resD, 1);
    expect(gapD.passed && gapD.free_rank_one, "gap check misses the free branch");
    auto bass = bass_series(R, 8);
    expect(bass.saturation_free(), "Bass window saturated");
    expect(bass.series.coeff(0) == 1, "mu^0 != 1");
    for (int i = 1; i <= 8; ++i)
        expect(bass.series.coeff(i) == 0, "Bass series not exactly 1");
    auto b0 = verify_next_bass_bound(bass.series, 0, 0);
    auto b1 = verify_next_bass_bound(bass.series, 0, 1);
    expect(b0.outcome == BoundOutcome::Holds && b1.outcome == BoundOutcome::Fails,
           "next-Bass bound does not force d = 0");
    auto kk = GradedModule<Rationals>::residue_field(R);
    auto resk = minimal_free_resolution(kk, 10);
    auto p = poincare_series(resk, 10);
    for (int i = 0; i <= 10; ++i)
        expect(p.coeff(i) == 1, "P_k(t) != 1 + t + ... + t^n");
    report(5, "Gorenstein collapse over QQ[x]/(x^2)", ok, note);
}

// criterion 6: randomized complex-calculus property suite, exact arithmetic
void criterion_6()
{
    std::string note;
    bool ok = true;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    };

    GFp k7(7);
    GFp k101(101);
    Rationals q;
    auto R1 = ring_m2(k7, 8);
    auto R2 = ring_x2_xy(k101, 8);
    auto R3 = ring_dual_numbers(q, 8);
    int complexes_used = 0;

    auto run_ring = [&](auto& R, unsigned seed) {
        using F = std::decay_t<decltype(R.field())>;
        std::mt19937 rng(seed);
        auto kk = GradedModule<F>::residue_field(R);
        for (int t = 0; t < 36; ++t) {
            auto X = random_complex(R, rng);
            ++complexes_used;
            int s = static_cast<int>(rng() % 3) - 1;
            auto Xs = shift(X, s);
            try {
                Xs.verify_dd_zero();
            } catch (const std::exception&) {
                expect(false, "dd != 0 after shift");
            }
            for (int j = Xs.lo(); j <= Xs.hi(); ++j)
                for (int d = 0; d <= 4; ++d)
                    expect(homology_at(Xs, j, d).dim == homology_at(X, j - s, d).dim,
                           "shift homology law");
            if (t % 3 == 0) {
                auto Y = random_complex(R, rng);
                ++complexes_used;
                try {
                    tensor_complex(X, Y).verify_dd_zero();
                    hom_complex(X, Y).verify_dd_zero();
                } catch (const std::exception&) {
                    expect(false, "dd != 0 after tensor/hom");
                }
            }
            if (t % 6 == 0) {
                auto Y = random_complex(R, rng);
                auto Z = random_complex(R, rng);
                complexes_used += 2;
                auto S = direct_sum(X, Y);
                auto lhs = hom_complex(S, Z);
                for (int l = lhs.lo(); l <= lhs.hi(); ++l)
                    for (int d = -2; d <= 3; ++d)
                        expect(homology_at(lhs, l, d).dim
                                   == homology_at(hom_complex(X, Z), l, d).dim
                                          + homology_at(hom_complex(Y, Z), l, d).dim,
                               "hom additivity");
                auto adj_l = hom_complex(tensor_complex(X, Y), Z);
                auto adj_r = hom_complex(X, hom_complex(Y, Z));
                for (int l = std::min(adj_l.lo(), adj_r.lo());
                     l <= std::max(adj_l.hi(), adj_r.hi()); ++l)
                    for (int d = -2; d <= 3; ++d)
                        expect(homology_at(adj_l, l, d).dim
                                   == homology_at(adj_r, l, d).dim,
                               "hom-tensor adjointness");
            }
            if (t % 4 == 0) {
                auto A = GradedModule<F>(random_rmatrix(R, rng, 2, 2, true));
                auto B = GradedModule<F>(random_rmatrix(R, rng, 2, 2, true));
                if (A.dim(A.lo()) > 0 && B.dim(B.lo()) > 0) {
                    auto fa = minimal_free_resolution(A, 2);
                    auto fb = minimal_free_resolution(B, 2);
                    auto prod = tensor_complex(fa.complex, fb.complex);
                    complexes_used += 2;
                    auto si = sup_inf(prod);
                    expect(si.inf.has_value() && *si.inf == 0,
                           "inf of tensor of minimal resolutions");
                    auto pa = poincare_series(fa, 2);
                    auto pb = poincare_series(fb, 2);
                    auto pp = series_mul(pa, pb);
                    for (int i = 0; i <= 2; ++i)
                        expect(pp.coeff(i) == prod.term(i).rank(),
                               "Poincare multiplicativity");
                    for (int i = 0; i <= 2; ++i)
                        expect(fa.betti()[static_cast<std::size_t>(i)]
                                   == betti_via_tor(fa, i),
                               "Betti two-route agreement");
                }
            }
            (void)kk;
        }
    };
    run_ring(R1, 501);
    run_ring(R2, 502);
    run_ring(R3, 503);
    expect(complexes_used >= 100, "fewer than 100 randomized complexes");
    report(6, "complex-calculus property suite", ok,
           note.empty() ? std::to_string(complexes_used) + " randomized complexes"
                        : note);
}

// criterion 7: byte-identical machine output across runs and across fields
void criterion_7()
{
    std::string note;
    bool ok = true;
    std::vector<std::string> bass_cmd{"bass",     "--ring",
                                      ring_path("gf101_x2_xy.ring"),
                                      "--cutoff", "2",
                                      "--format", "machine"};
    auto a = run(bass_cmd);
    auto b = run(bass_cmd);
    if (a.out != b.out || a.exit != b.exit) {
        ok = false;
        note = "bass output differs between runs";
    }
    auto chain_cmd = std::vector<std::string>{
        "check-chain", "--ring", ring_path("gf7_m2.ring"),     "--chain", "dual,R",
        "--cutoff",    "6",      "--factorization", "--format", "machine"};
    auto c = run(chain_cmd);
    auto d = run(chain_cmd);
    if (c.out != d.out) {
        ok = false;
        note = "check-chain output differs between runs";
    }
    // Betti numbers of the monomial quotient are field independent
    auto gf = run({"betti", "--ring", ring_path("gf101_x2_xy.ring"), "--module", "k",
                   "--length", "5", "--format", "machine"});
    auto qq = run({"betti", "--ring", ring_path("qq_x2_xy.ring"), "--module", "k",
                   "--length", "5", "--format", "machine"});
    if (gf.out != qq.out) {
        ok = false;
        note = "Betti table differs between GF(101) and QQ";
    }
    report(7, "determinism and field independence of machine output", ok, note);
}

} // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (failures == 0)
        std::cout << "acceptance: all criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
    return failures == 0 ? 0 : 1;
}
