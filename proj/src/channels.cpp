#include "qmesh/channels.hpp"

#include <cmath>
#include <limits>

#include "qmesh/errors.hpp"

namespace qmesh {

std::string_view channel_name(Channel c) {
  return c == Channel::AmplitudeDamping ? "amp" : "phase";
}

void Noise::validate() const {
  if (!std::isfinite(xi) || xi < 0.0 || xi > 1.0) {
    throw UsageError("decoherence rate must lie in [0, 1] (got " + std::to_string(xi) + ")");
  }
}

double KrausSet::completeness_error() const {
  if (ops.empty()) return 1.0;
  Matrix sum(ops.front().cols(), ops.front().cols());
  for (const auto& k : ops) sum += k.adjoint() * k;
  double err = max_abs_diff(sum, Matrix::identity(sum.rows()));
  // NaN entries must not read as "complete".
  return std::isnan(err) ? std::numeric_limits<double>::infinity() : err;
}

KrausSet kraus_set_unchecked(const Noise& n) {
  const double keep = std::sqrt(1.0 - n.xi);
  const double hit = std::sqrt(n.xi);
  KrausSet ks;
  if (n.channel == Channel::AmplitudeDamping) {
    ks.ops.push_back(Matrix(2, 2, {1.0, 0.0, 0.0, keep}));
    ks.ops.push_back(Matrix(2, 2, {0.0, hit, 0.0, 0.0}));
  } else {
    ks.ops.push_back(Matrix(2, 2, {keep, 0.0, 0.0, keep}));
    ks.ops.push_back(Matrix(2, 2, {hit, 0.0, 0.0, 0.0}));
    ks.ops.push_back(Matrix(2, 2, {0.0, 0.0, 0.0, hit}));
  }
  return ks;
}

KrausSet kraus_set(const Noise& n) {
  n.validate();
  return kraus_set_unchecked(n);
}

DensityMatrix apply_channel(const DensityMatrix& rho, std::size_t qubit, const KrausSet& ks) {
  if (ks.ops.empty()) throw UsageError("empty Kraus set");
  const std::size_t q[1] = {qubit};
  DensityMatrix out = apply_on_qubits(ks.ops.front(), rho, q);
  for (std::size_t i = 1; i < ks.ops.size(); ++i) out += apply_on_qubits(ks.ops[i], rho, q);
  return out;
}

DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const std::size_t> qubits,
                            const KrausSet& ks) {
  DensityMatrix out = rho;
  for (std::size_t q : qubits) out = apply_channel(out, q, ks);
  return out;
}

Ket apply_kraus_branch(const Ket& psi, std::size_t qubit, const Matrix& k) {
  return apply_on_qubits(k, psi, {qubit});
}

}  // namespace qmesh
