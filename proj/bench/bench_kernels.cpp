// Serial reference vs OpenMP for each parallel kernel. Run with
// OMP_NUM_THREADS set to the core count; with one thread the pairs
// should time the same.

#include <benchmark/benchmark.h>

#include "svmadv/eval.hpp"
#include "svmadv/gaussmix.hpp"
#include "svmadv/oracle.hpp"
#include "svmadv/perturb.hpp"
#include "svmadv/rng.hpp"

using namespace svmadv;

namespace {

constexpr std::size_t kDim = 784;

const Dataset& samples() {
    static const Dataset d = [] {
        Rng rng(1);
        Vector x(20000 * kDim);
        for (double& v : x) v = rng.uniform01();
        std::vector<int> y(20000);
        for (int& l : y) l = rng.below(2) ? 1 : -1;
        return Dataset(kDim, std::move(x), std::move(y), Task::binary, 2, Source::synthetic);
    }();
    return d;
}

const BinaryLinearModel& binary() {
    static const BinaryLinearModel m = random_binary_model(3, kDim);
    return m;
}

const MulticlassLinearModel& multi() {
    static const MulticlassLinearModel m = random_multi_model(4, 10, kDim);
    return m;
}

Vector direction() {
    Vector r(kDim, 0.0);
    r[0] = 1.0;
    return r;
}

void BM_fooling_rate_serial(benchmark::State& s) {
    const auto r = direction();
    const auto& m = multi();
    const auto& d = samples();
    for (auto _ : s) benchmark::DoNotOptimize(serial::fooling_rate(m, d, r));
}
void BM_fooling_rate_omp(benchmark::State& s) {
    const auto r = direction();
    const auto& m = multi();
    const auto& d = samples();
    for (auto _ : s) benchmark::DoNotOptimize(fooling_rate(m, d, r));
}

void BM_sap_batch_serial(benchmark::State& s) {
    const auto& m = multi();
    const auto& d = samples();
    for (auto _ : s) benchmark::DoNotOptimize(serial::sap_batch(m, d, kDefaultSlack));
}
void BM_sap_batch_omp(benchmark::State& s) {
    const auto& m = multi();
    const auto& d = samples();
    for (auto _ : s) benchmark::DoNotOptimize(sap_batch(m, d, kDefaultSlack));
}

const GaussianMixtureParams& mixture() {
    static const GaussianMixtureParams p = mixture_cases(1).back().params;
    return p;
}

void BM_sample_mixture_serial(benchmark::State& s) {
    mixture();
    for (auto _ : s) benchmark::DoNotOptimize(serial::sample_mixture(mixture(), 100000, 5));
}
void BM_sample_mixture_omp(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(sample_mixture(mixture(), 100000, 5));
}

OracleConfig search_config() {
    OracleConfig cfg;
    cfg.trials = 200;
    return cfg;
}

void BM_uap_search_serial(benchmark::State& s) {
    const auto& m = binary();
    const auto& d = samples();
    for (auto _ : s) benchmark::DoNotOptimize(serial::oracle_uap_search(m, d, 1.0, search_config()));
}
void BM_uap_search_omp(benchmark::State& s) {
    const auto& m = binary();
    const auto& d = samples();
    for (auto _ : s) benchmark::DoNotOptimize(oracle_uap_search(m, d, 1.0, search_config()));
}

} // namespace

BENCHMARK(BM_fooling_rate_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_fooling_rate_omp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sap_batch_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sap_batch_omp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sample_mixture_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sample_mixture_omp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_uap_search_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_uap_search_omp)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
