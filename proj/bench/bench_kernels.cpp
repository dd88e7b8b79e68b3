// Strided OpenMP kernels against the dense-embedding serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "qmesh/montecarlo.hpp"
#include "qmesh/network.hpp"
#include "qmesh/qmath.hpp"
#include "qmesh/states.hpp"

using namespace qmesh;

namespace {

DensityMatrix random_density(std::size_t n) {
  std::mt19937_64 g(n);
  std::normal_distribution<double> d;
  Ket k(std::size_t{1} << n);
  for (std::size_t i = 0; i < k.dim(); ++i) k[i] = cplx(d(g), d(g));
  return DensityMatrix::pure(k.normalized());
}

const std::size_t kPair[] = {1, 3};
const std::size_t kKeep[] = {0, 2};

void BM_ApplyOpenMP(benchmark::State& st) {
  const auto rho = random_density(static_cast<std::size_t>(st.range(0)));
  const Matrix u = gates::cnot();
  for (auto _ : st) benchmark::DoNotOptimize(apply_on_qubits(u, rho, kPair));
}

void BM_ApplySerial(benchmark::State& st) {
  const auto rho = random_density(static_cast<std::size_t>(st.range(0)));
  const Matrix u = gates::cnot();
  for (auto _ : st) benchmark::DoNotOptimize(serial::apply_on_qubits(u, rho, kPair));
}

void BM_PartialTraceOpenMP(benchmark::State& st) {
  const auto rho = random_density(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(partial_trace(rho, kKeep));
}

void BM_PartialTraceSerial(benchmark::State& st) {
  const auto rho = random_density(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::partial_trace(rho, kKeep));
}

void BM_ProjectOpenMP(benchmark::State& st) {
  const auto rho = random_density(static_cast<std::size_t>(st.range(0)));
  const Ket bell = make_bell(BellKind::PsiPlus);
  for (auto _ : st) benchmark::DoNotOptimize(project_measure(rho, bell, kPair));
}

void BM_ProjectSerial(benchmark::State& st) {
  const auto rho = random_density(static_cast<std::size_t>(st.range(0)));
  const Ket bell = make_bell(BellKind::PsiPlus);
  for (auto _ : st) benchmark::DoNotOptimize(serial::project_measure(rho, bell, kPair));
}

// Multihop Monte Carlo throughput by worker count.
void BM_Multihop(benchmark::State& st) {
  net::MultihopConfig cfg;
  cfg.trials = 20000;
  cfg.workers = static_cast<int>(st.range(0));
  cfg.setup.noise = Noise{Channel::AmplitudeDamping, 0.2};
  const auto topo = net::Topology::chain(4);
  for (auto _ : st) benchmark::DoNotOptimize(net::simulate_multihop(topo, "N0", "N4", cfg));
}

}  // namespace

BENCHMARK(BM_ApplyOpenMP)->DenseRange(4, 8, 2);
BENCHMARK(BM_ApplySerial)->DenseRange(4, 8, 2);
BENCHMARK(BM_PartialTraceOpenMP)->DenseRange(4, 8, 2);
BENCHMARK(BM_PartialTraceSerial)->DenseRange(4, 8, 2);
BENCHMARK(BM_ProjectOpenMP)->DenseRange(4, 8, 2);
BENCHMARK(BM_ProjectSerial)->DenseRange(4, 8, 2);
BENCHMARK(BM_Multihop)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

BENCHMARK_MAIN();
