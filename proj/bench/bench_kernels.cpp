#include "tambara/construct.hpp"
#include "tambara/kernels.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

using namespace tambara;

namespace {

// the zero-style candidate [<q>;<q>;<q>] at q = 3, refuted only by a wide search
TambaraIdeal candidate(const std::string& om, int q) {
    auto full = burnside_cp2(2);
    auto lat = full.lattice;
    auto pr = make_compatible_pair(parse_system(lat, om), parse_system(lat, "Ocomp"));
    auto T = std::make_shared<LewisDiagram>(forget_pair(full, pr));
    std::map<int, Mat> g;
    for (int d : T->levels) {
        Vec v = T->alg(d).scalar(Int(q));
        g[d] = {v};
    }
    return levelwise_ideal(T, g);
}

// C3 at q = 3 under the complete pair, a prime: the search runs to exhaustion
TambaraIdeal prime_candidate() {
    auto T = std::make_shared<LewisDiagram>(burnside_cp2(2));
    return levelwise_ideal(T, {{1, to_mat({{3}})}, {2, to_mat({{3, 0}, {-2, 1}})}, {4, to_mat({{3, 0, 0}, {-2, 1, 0}, {0, -2, 1}})}});
}

void BM_refute_serial(benchmark::State& st) {
    auto I = prime_candidate();
    RefuteOptions opt{static_cast<int>(st.range(0)), true};
    for (auto _ : st) benchmark::DoNotOptimize(refute_primality_serial(I, opt));
}

void BM_refute_parallel(benchmark::State& st) {
    auto I = prime_candidate();
    RefuteOptions opt{static_cast<int>(st.range(0)), true};
    omp_set_num_threads(static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(refute_primality_parallel(I, opt));
}

void BM_refute_witness(benchmark::State& st) {
    auto I = candidate("O3", 3);
    RefuteOptions opt{3, true};
    for (auto _ : st) benchmark::DoNotOptimize(refute_primality(I, opt));
}

} // namespace

BENCHMARK(BM_refute_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_refute_parallel)->Args({2, 1})->Args({2, 4})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_refute_witness)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
