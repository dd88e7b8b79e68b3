#pragma once

#include <array>
#include <string_view>

#include "qmesh/qmath.hpp"

namespace qmesh {

// a0|00> + d0|11>.
struct InputParams {
  cplx a0{1.0 / 1.4142135623730951};
  cplx d0{1.0 / 1.4142135623730951};

  // |a0|^2 + |d0|^2
  double weight() const { return std::norm(a0) + std::norm(d0); }
  bool is_normalized(double tol = kEqualityTol) const { return std::abs(weight() - 1.0) <= tol; }
};

// tau0|0000> + tau1|0011> + tau2|1100> - tau3|1111>.
struct ClusterParams {
  std::array<double, 4> tau{0.5, 0.5, 0.5, 0.5};

  double norm_squared() const;
  bool is_normalized(double tol = kEqualityTol) const;
  // tau1 and tau2 enter the recovery POVM as denominators.
  void require_recoverable() const;
  // Normalized and recoverable; throws UsageError otherwise.
  void validate() const;
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellKind, 4> kBellKinds{BellKind::PhiPlus, BellKind::PhiMinus,
                                                    BellKind::PsiPlus, BellKind::PsiMinus};

constexpr bool is_phi(BellKind k) { return k == BellKind::PhiPlus || k == BellKind::PhiMinus; }
// The +/- marker carried by a measurement result.
constexpr int bell_sign(BellKind k) {
  return (k == BellKind::PhiPlus || k == BellKind::PsiPlus) ? 1 : -1;
}
std::string_view bell_name(BellKind k);

Ket make_input(const InputParams& p);
DensityMatrix make_input_density(const InputParams& p);

// Rejects tau1 * tau2 == 0.
Ket make_cluster(const ClusterParams& c);

Ket make_bell(BellKind k);

}  // namespace qmesh
