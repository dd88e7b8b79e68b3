#include "qmesh/states.hpp"

#include <cmath>

#include "qmesh/errors.hpp"

namespace qmesh {

double ClusterParams::norm_squared() const {
  double s = 0.0;
  for (double t : tau) s += t * t;
  return s;
}

bool ClusterParams::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

void ClusterParams::require_recoverable() const {
  for (double t : tau) {
    if (!std::isfinite(t)) throw UsageError("cluster coefficient is not finite");
  }
  if (tau[1] == 0.0 || tau[2] == 0.0) throw UsageError("cluster requires tau1 != 0 and tau2 != 0");
}

void ClusterParams::validate() const {
  require_recoverable();
  if (!is_normalized()) {
    throw UsageError("cluster coefficients must satisfy tau0^2+tau1^2+tau2^2+tau3^2 = 1 (got " +
                     std::to_string(norm_squared()) + ")");
  }
}

std::string_view bell_name(BellKind k) {
  switch (k) {
    case BellKind::PhiPlus: return "Phi+";
    case BellKind::PhiMinus: return "Phi-";
    case BellKind::PsiPlus: return "Psi+";
    case BellKind::PsiMinus: return "Psi-";
  }
  return "?";
}

Ket make_input(const InputParams& p) {
  Ket k(4);
  k[0] = p.a0;
  k[3] = p.d0;
  return k;
}

DensityMatrix make_input_density(const InputParams& p) {
  DensityMatrix rho(4);
  rho(0, 0) = std::conj(p.a0) * p.a0;
  rho(0, 3) = std::conj(p.d0) * p.a0;
  rho(3, 0) = std::conj(p.a0) * p.d0;
  rho(3, 3) = std::conj(p.d0) * p.d0;
  return rho;
}

Ket make_cluster(const ClusterParams& c) {
  c.require_recoverable();
  Ket k(16);
  k[0b0000] = c.tau[0];
  k[0b0011] = c.tau[1];
  k[0b1100] = c.tau[2];
  k[0b1111] = -c.tau[3];
  return k;
}

Ket make_bell(BellKind k) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (k) {
    case BellKind::PhiPlus: return Ket({s, 0.0, 0.0, s});
    case BellKind::PhiMinus: return Ket({s, 0.0, 0.0, -s});
    case BellKind::PsiPlus: return Ket({0.0, s, s, 0.0});
    case BellKind::PsiMinus: return Ket({0.0, s, -s, 0.0});
  }
  throw UsageError("unknown Bell state");
}

}  // namespace qmesh
