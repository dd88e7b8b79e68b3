#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qmesh/qmath.hpp"

namespace qmesh {

enum class Channel { AmplitudeDamping, PhaseDamping };

std::string_view channel_name(Channel c);

struct Noise {
  Channel channel = Channel::AmplitudeDamping;
  double xi = 0.0;  // decoherence rate in [0, 1]

  double xi_bar() const { return 1.0 - xi; }
  // Throws UsageError when xi is outside [0, 1] or not finite.
  void validate() const;
};

struct KrausSet {
  std::vector<Matrix> ops;

  // max |sum K^+ K - I| over entries.
  double completeness_error() const;
};

// Amplitude damping: K0 = diag(1, sqrt(1-xi)), K1 = sqrt(xi)|0><1|.
// Phase damping: sqrt(1-xi) I, sqrt(xi)|0><0|, sqrt(xi)|1><1|.
KrausSet kraus_set(const Noise& n);

// Same formulas without range validation; lets the verifier feed a corrupted
// rate through the completeness check.
KrausSet kraus_set_unchecked(const Noise& n);

// sum_i K_i rho K_i^+ on one qubit.
DensityMatrix apply_channel(const DensityMatrix& rho, std::size_t qubit, const KrausSet& ks);
// The same channel applied independently to each listed qubit.
DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const std::size_t> qubits,
                            const KrausSet& ks);

// K|psi> on one qubit, unnormalized. Used to reproduce amplitude-level noise
// bookkeeping; this is not a CPTP evolution.
Ket apply_kraus_branch(const Ket& psi, std::size_t qubit, const Matrix& k);

}  // namespace qmesh
