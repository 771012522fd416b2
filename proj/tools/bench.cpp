// Benchmark comparing the OpenMP kernels against their serial references:
// dense GF(p) elimination, matrix products, and degreewise homology scans.
#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "sdc/complex.hpp"
#include "sdc/polytext.hpp"
#include "sdc/resolution.hpp"

using namespace sdc;

namespace {

using clock_type = std::chrono::steady_clock;

template <class Fn>
double time_ms(Fn&& fn, int reps)
{
    auto t0 = clock_type::now();
    for (int i = 0; i < reps; ++i)
        fn();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

Matrix<GFp> random_matrix(GFp k, std::size_t n, std::mt19937& rng)
{
    Matrix<GFp> m(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = k.from_int(static_cast<long long>(rng() % 1000));
    return m;
}

GradedAlgebra<GFp> bench_ring()
{
    GFp k(32003);
    std::vector<std::string> vars{"x", "y"};
    GradedAlgebra<GFp>::Spec spec{k, vars, {},
                                  {parse_poly("x^2", vars), parse_poly("x*y", vars),
                                   parse_poly("y^2", vars)},
                                  10};
    return GradedAlgebra<GFp>(spec);
}

} // namespace

int main()
{
    std::mt19937 rng(2024);
    GFp k(32003);
    std::printf("threads available: %d\n\n", omp_get_max_threads());
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

    for (std::size_t n : {96, 192, 384}) {
        auto m = random_matrix(k, n, rng);
        int reps = n <= 128 ? 5 : 2;
        double ts = time_ms([&] { rref_serial(m); }, reps);
        double tp = time_ms([&] { rref(m); }, reps);
        std::printf("rref GF(p) %4zux%-4zu                %10.2f %10.2f %7.2fx\n", n,
                    n, ts, tp, ts / tp);
    }
    for (std::size_t n : {96, 192, 384}) {
        auto a = random_matrix(k, n, rng);
        auto b = random_matrix(k, n, rng);
        int reps = n <= 128 ? 5 : 2;
        double ts = time_ms([&] { matmul_serial(a, b); }, reps);
        double tp = time_ms([&] { matmul(a, b); }, reps);
        std::printf("matmul GF(p) %4zux%-4zu              %10.2f %10.2f %7.2fx\n", n,
                    n, ts, tp, ts / tp);
    }

    auto R = bench_ring();
    auto kk = GradedModule<GFp>::residue_field(R);
    auto res = minimal_free_resolution(kk, 9);
    const auto& F = res.complex;
    for (int i : {6, 8}) {
        double ts = time_ms([&] { homology_table_serial(F, i, 0, 10); }, 2);
        double tp = time_ms([&] { homology_table(F, i, 0, 10); }, 2);
        std::printf("homology scan, step %d (%3d gens)  %10.2f %10.2f %7.2fx\n", i,
                    F.term(i).rank(), ts, tp, ts / tp);
    }
    return 0;
}
