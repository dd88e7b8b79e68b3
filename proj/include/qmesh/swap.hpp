#pragma once

// Entanglement swapping at an intermediate node. Two cluster resources share
// the node I: resource A on (R4, I2, I4, I1) and resource B on (I3, D1, D2, D3).
// Bell measurements on (I3, I4) and (I1, I2) leave a cluster on (R4, D1, D2, D3).

#include <array>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "qmesh/qmath.hpp"
#include "qmesh/states.hpp"

namespace qmesh::swap {

namespace reg {
inline constexpr std::size_t kR4 = 0;
inline constexpr std::size_t kI2 = 1;
inline constexpr std::size_t kI4 = 2;
inline constexpr std::size_t kI1 = 3;
inline constexpr std::size_t kI3 = 4;
inline constexpr std::size_t kD1 = 5;
inline constexpr std::size_t kD2 = 6;
inline constexpr std::size_t kD3 = 7;
}  // namespace reg

struct SwapOutcome {
  BellKind pair34 = BellKind::PhiPlus;  // on (I3, I4)
  BellKind pair12 = BellKind::PhiPlus;  // on (I1, I2)

  std::size_t index() const;
  static SwapOutcome from_index(std::size_t i);
  friend bool operator==(const SwapOutcome&, const SwapOutcome&) = default;
};

std::string to_string(const SwapOutcome& o);

struct SwapBranch {
  SwapOutcome outcome;
  Ket residual;  // on (R4, D1, D2, D3), unnormalized
  double weight = 0.0;
};

// Projects `a` (x) `b` onto the outcome. Both are 4-qubit resources.
Ket swap_residual(const Ket& a, const Ket& b, const SwapOutcome& o);

// All 16 outcomes, ordered by SwapOutcome::index().
std::vector<SwapBranch> swap_branches(const ClusterParams& cluster);

struct CorrectionEntry {
  SwapOutcome outcome;
  std::array<Pauli, 4> paulis{Pauli::I, Pauli::I, Pauli::I, Pauli::I};  // R4 D1 D2 D3
  double fidelity = 0.0;
  cplx global_phase{1.0};  // phase of <CS| U |residual>

  std::string pauli_string() const;
};

// Best Pauli string over (R4, D1, D2, D3) for turning `residual` into the
// cluster state. Candidates are visited by weight, then lexicographically;
// a later string wins only by a fidelity margin above 1e-12.
// Throws DegenerateError for a zero residual.
CorrectionEntry find_correction(const Ket& residual, const ClusterParams& cluster);

std::vector<CorrectionEntry> correction_table(const ClusterParams& cluster);

// outcome_pair34,outcome_pair12,pauli_string,fidelity
void write_correction_csv(std::ostream& os, const std::vector<CorrectionEntry>& table);

struct SwapRecord {
  SwapOutcome outcome;
  CorrectionEntry correction;
};

struct SwapChainResult {
  Ket resource;  // normalized, on the end-to-end qubits
  std::vector<SwapRecord> log;
  double fidelity = 0.0;  // |<CS|resource>|^2
};

// Joins n_segments resources with n_segments - 1 swaps. Each swap samples an
// outcome with Born weights and applies the correction found for it.
// Throws SwapFailure when a correction reaches less than 1 - 1e-6.
SwapChainResult swap_chain(std::size_t n_segments, const ClusterParams& cluster,
                           std::mt19937_64& rng);

}  // namespace qmesh::swap
