#include <algorithm>
#include <cmath>

#include "qmesh/errors.hpp"
#include "qmesh/teleport.hpp"

namespace qmesh::teleport {

namespace {

// True when v is (numerically) a multiple of the basis vector at `index`.
bool supported_on(const Ket& v, std::size_t index) {
  const double scale = std::max(v.norm(), 1e-300);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i != index && std::abs(v[i]) > 1e-12 * scale) return false;
  }
  return std::abs(v[index]) > 0.0;
}

Matrix projector(const Ket& v) { return Matrix::outer(v, v); }

}  // namespace

Recovery recovery_pipeline(const HopBranch& branch) {
  if (branch.a_part.is_zero(1e-14) || branch.d_part.is_zero(1e-14)) {
    throw DegenerateError("branch " + to_string(branch.outcome) +
                          " has a vanishing component; nothing to recover");
  }
  for (const auto& s : pauli_strings_by_weight(2)) {
    const Matrix u = pauli_string_matrix(s);
    const Ket ua = u * branch.a_part;
    const Ket ud = u * branch.d_part;
    if (!supported_on(ua, 0) || !supported_on(ud, 3)) continue;

    Recovery r;
    r.correction = {s[0], s[1]};
    r.g0 = u * branch.residual;
    r.g1 = tensor(r.g0, Ket::from_bits("00"));
    r.g2 = apply_on_qubits(gates::cnot(), r.g1, {0, 2});
    r.g2 = apply_on_qubits(gates::cnot(), r.g2, {1, 3});
    r.c00 = 2.0 * ua[0];
    r.c11 = 2.0 * ud[3];
    return r;
  }
  throw DegenerateError("no Pauli pair brings branch " + to_string(branch.outcome) +
                        " onto |00>/|11> support");
}

double PovmParams::gamma() const { return 1.0 / std::norm(c00) + 1.0 / std::norm(c11); }

PovmParams PovmParams::for_channel(const Noise& noise, const ClusterParams& cluster, double rho) {
  noise.validate();
  const double xb = noise.xi_bar();
  const double dress = noise.channel == Channel::AmplitudeDamping ? xb : xb * xb;
  return {rho, cplx(dress * cluster.tau[2]), cplx(-dress * cluster.tau[1])};
}

PovmParams PovmParams::for_recovery(const Recovery& r, double rho) { return {rho, r.c00, r.c11}; }

namespace {

std::pair<Ket, Ket> lambdas(const PovmParams& p) {
  if (std::abs(p.c00) == 0.0 || std::abs(p.c11) == 0.0) {
    throw DegenerateError("POVM needs nonzero dressed coefficients");
  }
  Ket l1(4);
  Ket l2(4);
  l1[0] = 1.0 / std::conj(p.c00);
  l1[3] = 1.0 / std::conj(p.c11);
  l2[0] = l1[0];
  l2[3] = -l1[3];
  return {l1.normalized(), l2.normalized()};
}

}  // namespace

double minimal_rho(const PovmParams& p) {
  const auto [l1, l2] = lambdas(p);
  return hermitian_eigenvalues(projector(l1) + projector(l2)).back();
}

PovmSet povm_set(const PovmParams& p) {
  if (!(p.rho > 0.0) || !std::isfinite(p.rho)) throw UsageError("rho must be positive and finite");
  auto [l1, l2] = lambdas(p);
  PovmSet s;
  s.p1 = (1.0 / p.rho) * projector(l1);
  s.p2 = (1.0 / p.rho) * projector(l2);
  s.p3 = Matrix::identity(4) - s.p1 - s.p2;
  s.lambda1 = std::move(l1);
  s.lambda2 = std::move(l2);
  if (hermitian_eigenvalues(s.p3).front() < -kPsdTol) {
    const double need = minimal_rho(p);
    throw PositivityError("P3 is not positive semidefinite at rho = " + std::to_string(p.rho) +
                              "; minimal admissible rho is " + std::to_string(need),
                          need);
  }
  return s;
}

std::string_view povm_name(PovmOutcome o) {
  switch (o) {
    case PovmOutcome::P1: return "P1";
    case PovmOutcome::P2: return "P2";
    case PovmOutcome::P3: return "P3";
  }
  return "?";
}

Matrix povm_correction(PovmOutcome o) {
  if (o == PovmOutcome::P2) return tensor(Matrix::identity(2), gates::pauli_z());
  return Matrix::identity(4);
}

PovmResult povm_measure(const Ket& g2, const PovmSet& povm, std::mt19937_64& rng) {
  if (g2.dim() != 16) throw UsageError("POVM acts on the 4-qubit E1 E2 D E register");
  PovmResult res;
  const Matrix* elems[3] = {&povm.p1, &povm.p2, &povm.p3};
  double total = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    res.weights[k] = inner(g2, apply_on_qubits(*elems[k], g2, {2, 3})).real();
    total += res.weights[k];
  }
  const double norm2 = g2.norm_squared();
  if (std::abs(total - norm2) > kProductTol) {
    throw InternalError("POVM weights sum to " + std::to_string(total) + " but |G2|^2 = " +
                        std::to_string(norm2));
  }
  if (!(norm2 > 0.0)) throw DegenerateError("POVM applied to a zero state");

  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
  std::size_t pick = 2;
  double acc = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    acc += res.weights[k];
    if (u < acc && res.weights[k] > 0.0) {
      pick = k;
      break;
    }
  }
  res.outcome = static_cast<PovmOutcome>(pick);
  res.prob = res.weights[pick];
  if (res.outcome == PovmOutcome::P3) {
    res.failed = true;
    res.post_state = g2.normalized();
    return res;
  }
  const Ket& lambda = res.outcome == PovmOutcome::P1 ? povm.lambda1 : povm.lambda2;
  const Ket left = project_measure(g2, lambda, {2, 3}).residual;
  res.post_state = (povm_correction(res.outcome) * left).normalized();
  res.failed = false;
  return res;
}

}  // namespace qmesh::teleport
