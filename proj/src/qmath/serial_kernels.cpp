#include "layout.hpp"
#include "qmesh/errors.hpp"
#include "qmesh/qmath.hpp"

namespace qmesh::serial {

Matrix embed(const Matrix& op, std::size_t num_qubits, std::span<const std::size_t> qubits) {
  const auto layout = detail::make_layout(num_qubits, qubits);
  const std::size_t d = std::size_t{1} << qubits.size();
  if (op.rows() != d || op.cols() != d) throw UsageError("operator size does not match qubit count");
  const std::size_t dim = std::size_t{1} << num_qubits;
  const auto& others = layout.remaining;
  Matrix full(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t ri = detail::extract_bits(i, num_qubits, others);
    const std::size_t si = detail::extract_bits(i, num_qubits, qubits);
    for (std::size_t j = 0; j < dim; ++j) {
      if (detail::extract_bits(j, num_qubits, others) != ri) continue;
      full(i, j) = op(si, detail::extract_bits(j, num_qubits, qubits));
    }
  }
  return full;
}

Ket apply_on_qubits(const Matrix& op, const Ket& target, std::span<const std::size_t> qubits) {
  return embed(op, target.num_qubits(), qubits) * target;
}

DensityMatrix apply_on_qubits(const Matrix& op, const DensityMatrix& target,
                              std::span<const std::size_t> qubits) {
  const Matrix u = embed(op, target.num_qubits(), qubits);
  return DensityMatrix(u * target.matrix() * u.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  if (keep.empty()) throw UsageError("partial_trace: keep list is empty");
  const std::size_t n = rho.num_qubits();
  const auto layout = detail::make_layout(n, keep);
  const auto& traced = layout.remaining;
  DensityMatrix out(std::size_t{1} << keep.size());
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      if (detail::extract_bits(i, n, traced) != detail::extract_bits(j, n, traced)) continue;
      out(detail::extract_bits(i, n, keep), detail::extract_bits(j, n, keep)) += rho(i, j);
    }
  }
  return out;
}

DensityProjection project_measure(const DensityMatrix& state, const Ket& projector,
                                  std::span<const std::size_t> qubits) {
  const std::size_t n = state.num_qubits();
  const auto layout = detail::make_layout(n, qubits);
  if (projector.dim() != layout.target_offset.size()) {
    throw UsageError("projector dimension does not match the measured qubits");
  }
  const auto& others = layout.remaining;
  DensityMatrix residual(layout.rest_offset.size());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const cplx left = std::conj(projector[detail::extract_bits(i, n, qubits)]);
    for (std::size_t j = 0; j < state.dim(); ++j) {
      const cplx right = projector[detail::extract_bits(j, n, qubits)];
      residual(detail::extract_bits(i, n, others), detail::extract_bits(j, n, others)) +=
          left * state(i, j) * right;
    }
  }
  const double prob = residual.trace();
  return {prob, std::move(residual)};
}

}  // namespace qmesh::serial
