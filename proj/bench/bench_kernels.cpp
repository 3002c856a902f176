// Serial vs OpenMP kernel comparison: lattice sieve, Rankin convolution,
// and the Prop-1 random-trial loop.  The sieve benchmarks are memory-bound
// (table writes dominate); the trial loop is compute-bound.

#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wt1/meanvalue.hpp"
#include "wt1/rankin.hpp"
#include "wt1/theta.hpp"

using namespace wt1;

namespace {

const i64 kQ = 10007; // prime, 3 mod 4, h = 77
const i64 kSieveN = 100000;
const i64 kConvX = 1000000;

const ClassGroup& group()
{
    static ClassGroup G(validate_discriminant(kQ));
    return G;
}

const ThetaForm& form()
{
    static ThetaForm f = [] {
        ClassGroup G(validate_discriminant(23));
        auto chars = characters(G);
        return theta_lattice(G, chars, 1, kConvX);
    }();
    return f;
}

struct Prop1Setup {
    std::vector<ThetaForm> basis;
    std::vector<double> pets;
};

const Prop1Setup& prop1_setup()
{
    static Prop1Setup s = [] {
        Prop1Setup out;
        ClassGroup G(validate_discriminant(47));
        out.basis = dihedral_basis(G, 4000);
        for (const auto& f : out.basis)
            out.pets.push_back(petersson_estimate(f, 4000).value);
        return out;
    }();
    return s;
}

void BM_IdealCountTable_Serial(benchmark::State& state)
{
    const ClassGroup& G = group();
    for (auto _ : state) {
        auto t = ideal_count_table_serial(G, kSieveN);
        benchmark::DoNotOptimize(t);
    }
}

void BM_IdealCountTable_OMP(benchmark::State& state)
{
    const ClassGroup& G = group();
    for (auto _ : state) {
        auto t = ideal_count_table(G, kSieveN);
        benchmark::DoNotOptimize(t);
    }
}

void BM_RankinConvolution_Serial(benchmark::State& state)
{
    const ThetaForm& f = form();
    for (auto _ : state) {
        auto b = b_coeffs_serial(f, kConvX);
        benchmark::DoNotOptimize(b);
    }
}

void BM_RankinConvolution_OMP(benchmark::State& state)
{
    const ThetaForm& f = form();
    for (auto _ : state) {
        auto b = b_coeffs(f, kConvX);
        benchmark::DoNotOptimize(b);
    }
}

void BM_Prop1Trials_Serial(benchmark::State& state)
{
    const Prop1Setup& s = prop1_setup();
#ifdef _OPENMP
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    for (auto _ : state) {
        double worst = prop1_check(s.basis, s.pets, 47, 2000, 200, 12345);
        benchmark::DoNotOptimize(worst);
    }
#ifdef _OPENMP
    omp_set_num_threads(saved);
#endif
}

void BM_Prop1Trials_OMP(benchmark::State& state)
{
    const Prop1Setup& s = prop1_setup();
    for (auto _ : state) {
        double worst = prop1_check(s.basis, s.pets, 47, 2000, 200, 12345);
        benchmark::DoNotOptimize(worst);
    }
}

} // namespace

BENCHMARK(BM_IdealCountTable_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealCountTable_OMP)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankinConvolution_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankinConvolution_OMP)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Prop1Trials_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Prop1Trials_OMP)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
