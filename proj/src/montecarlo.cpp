#include "qmesh/montecarlo.hpp"

#include <omp.h>

namespace qmesh::mc {

std::mt19937_64 block_engine(std::uint64_t seed, std::size_t block) {
  const auto b = static_cast<std::uint64_t>(block);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

}  // namespace qmesh::mc
