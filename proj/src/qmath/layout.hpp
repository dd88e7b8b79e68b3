#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qmesh::detail {

// Offsets that split a register index into a pattern over `targets` (in the
// order given) and a pattern over the remaining qubits (ascending).
struct QubitLayout {
  std::size_t num_qubits = 0;
  std::vector<std::size_t> remaining;
  std::vector<std::size_t> target_offset;
  std::vector<std::size_t> rest_offset;
};

// Validates indices (in range, distinct, nonempty) and throws UsageError.
QubitLayout make_layout(std::size_t num_qubits, std::span<const std::size_t> targets);

// Bits of `index` at `qubits`, first listed qubit most significant.
std::size_t extract_bits(std::size_t index, std::size_t num_qubits,
                         std::span<const std::size_t> qubits);

// Register sizes at or above this run the OpenMP path.
inline constexpr std::size_t kParallelDim = 64;

}  // namespace qmesh::detail
