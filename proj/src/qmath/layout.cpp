#include "layout.hpp"

#include <string>

#include "qmesh/errors.hpp"

namespace qmesh::detail {

QubitLayout make_layout(std::size_t num_qubits, std::span<const std::size_t> targets) {
  if (targets.empty()) throw UsageError("qubit list is empty");
  if (targets.size() > num_qubits) throw UsageError("more target qubits than the register holds");
  std::vector<bool> used(num_qubits, false);
  for (std::size_t q : targets) {
    if (q >= num_qubits) {
      throw UsageError("qubit index " + std::to_string(q) + " out of range for " +
                       std::to_string(num_qubits) + "-qubit register");
    }
    if (used[q]) throw UsageError("duplicate qubit index " + std::to_string(q));
    used[q] = true;
  }

  QubitLayout layout;
  layout.num_qubits = num_qubits;
  for (std::size_t q = 0; q < num_qubits; ++q)
    if (!used[q]) layout.remaining.push_back(q);

  const std::size_t k = targets.size();
  layout.target_offset.resize(std::size_t{1} << k);
  for (std::size_t m = 0; m < layout.target_offset.size(); ++m) {
    std::size_t off = 0;
    for (std::size_t j = 0; j < k; ++j)
      if ((m >> (k - 1 - j)) & 1U) off |= std::size_t{1} << (num_qubits - 1 - targets[j]);
    layout.target_offset[m] = off;
  }

  const std::size_t nr = layout.remaining.size();
  layout.rest_offset.resize(std::size_t{1} << nr);
  for (std::size_t r = 0; r < layout.rest_offset.size(); ++r) {
    std::size_t off = 0;
    for (std::size_t j = 0; j < nr; ++j)
      if ((r >> (nr - 1 - j)) & 1U) off |= std::size_t{1} << (num_qubits - 1 - layout.remaining[j]);
    layout.rest_offset[r] = off;
  }
  return layout;
}

std::size_t extract_bits(std::size_t index, std::size_t num_qubits,
                         std::span<const std::size_t> qubits) {
  std::size_t out = 0;
  for (std::size_t q : qubits) out = (out << 1) | ((index >> (num_qubits - 1 - q)) & 1U);
  return out;
}

}  // namespace qmesh::detail
