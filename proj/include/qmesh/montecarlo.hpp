#pragma once

// Deterministic block-parallel Monte Carlo. Trials are cut into fixed-size
// blocks; block b draws from an engine seeded with (seed, b) and writes its
// own accumulator. Callers merge accumulators in block order, so results are
// bit-identical for any worker count.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <vector>

namespace qmesh::mc {

inline constexpr std::size_t kBlockTrials = 2048;

std::mt19937_64 block_engine(std::uint64_t seed, std::size_t block);

// 53-bit uniform draw in [0, 1). Avoids std::uniform_real_distribution, whose
// output is implementation-defined.
inline double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

// 0 means the OpenMP default.
int resolve_workers(int workers);

template <class Acc, class Fn>
std::vector<Acc> run_blocks(std::size_t trials, std::uint64_t seed, int workers, Fn&& fn) {
  const std::size_t nblocks = (trials + kBlockTrials - 1) / kBlockTrials;
  std::vector<Acc> acc(nblocks);
  std::exception_ptr error;
  const int threads = resolve_workers(workers);
  const auto sblocks = static_cast<std::ptrdiff_t>(nblocks);

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t b = 0; b < sblocks; ++b) {
    try {
      const auto block = static_cast<std::size_t>(b);
      auto engine = block_engine(seed, block);
      const std::size_t count = std::min(kBlockTrials, trials - block * kBlockTrials);
      fn(acc[block], engine, count);
    } catch (...) {
#pragma omp critical(qmesh_mc_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return acc;
}

}  // namespace qmesh::mc
