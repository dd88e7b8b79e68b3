// Strided kernels. Each loop nest touches only the amplitudes selected by a
// QubitLayout, so applying a k-qubit operator costs O(4^k * 2^(n-k)) per
// column instead of a dense 2^n x 2^n product.

#include <cmath>

#include "layout.hpp"
#include "qmesh/errors.hpp"
#include "qmesh/qmath.hpp"

namespace qmesh {

namespace {

void check_operator(const Matrix& op, std::size_t num_targets) {
  const std::size_t d = std::size_t{1} << num_targets;
  if (op.rows() != d || op.cols() != d) {
    throw UsageError("operator is " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()) +
                     " but acts on " + std::to_string(num_targets) + " qubit(s)");
  }
}

}  // namespace

Ket apply_on_qubits(const Matrix& op, const Ket& target, std::span<const std::size_t> qubits) {
  const auto layout = detail::make_layout(target.num_qubits(), qubits);
  check_operator(op, qubits.size());
  const auto& sub = layout.target_offset;
  const auto& rest = layout.rest_offset;
  const std::size_t ds = sub.size();
  const auto nrest = static_cast<std::ptrdiff_t>(rest.size());
  Ket out(target.dim());

#pragma omp parallel for schedule(static) if (target.dim() >= detail::kParallelDim)
  for (std::ptrdiff_t r = 0; r < nrest; ++r) {
    const std::size_t base = rest[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < ds; ++i) {
      cplx acc = 0.0;
      for (std::size_t j = 0; j < ds; ++j) acc += op(i, j) * target[base + sub[j]];
      out[base + sub[i]] = acc;
    }
  }
  return out;
}

DensityMatrix apply_on_qubits(const Matrix& op, const DensityMatrix& target,
                              std::span<const std::size_t> qubits) {
  const auto layout = detail::make_layout(target.num_qubits(), qubits);
  check_operator(op, qubits.size());
  const auto& sub = layout.target_offset;
  const auto& rest = layout.rest_offset;
  const std::size_t ds = sub.size();
  const std::size_t dim = target.dim();
  const auto sdim = static_cast<std::ptrdiff_t>(dim);
  const bool parallel = dim >= detail::kParallelDim;

  // rho' = U rho: act on every column.
  Matrix left(dim, dim);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t c = 0; c < sdim; ++c) {
    const auto col = static_cast<std::size_t>(c);
    for (std::size_t base : rest) {
      for (std::size_t i = 0; i < ds; ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < ds; ++j) acc += op(i, j) * target(base + sub[j], col);
        left(base + sub[i], col) = acc;
      }
    }
  }

  // rho'' = rho' U^+: act with conj(U) on every row.
  DensityMatrix out(dim);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t r = 0; r < sdim; ++r) {
    const auto row = static_cast<std::size_t>(r);
    for (std::size_t base : rest) {
      for (std::size_t i = 0; i < ds; ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < ds; ++j) acc += left(row, base + sub[j]) * std::conj(op(i, j));
        out(row, base + sub[i]) = acc;
      }
    }
  }
  return out;
}

Ket apply_on_qubits(const Matrix& op, const Ket& target, std::initializer_list<std::size_t> qubits) {
  return apply_on_qubits(op, target, std::span<const std::size_t>(qubits.begin(), qubits.size()));
}

DensityMatrix apply_on_qubits(const Matrix& op, const DensityMatrix& target,
                              std::initializer_list<std::size_t> qubits) {
  return apply_on_qubits(op, target, std::span<const std::size_t>(qubits.begin(), qubits.size()));
}

KetProjection project_measure(const Ket& state, const Ket& projector,
                              std::span<const std::size_t> qubits) {
  const auto layout = detail::make_layout(state.num_qubits(), qubits);
  if (projector.dim() != layout.target_offset.size()) {
    throw UsageError("projector dimension does not match the measured qubits");
  }
  const auto& sub = layout.target_offset;
  const auto& rest = layout.rest_offset;
  Ket residual(rest.size());
  for (std::size_t r = 0; r < rest.size(); ++r) {
    cplx acc = 0.0;
    for (std::size_t m = 0; m < sub.size(); ++m) acc += std::conj(projector[m]) * state[rest[r] + sub[m]];
    residual[r] = acc;
  }
  const double prob = residual.norm_squared();
  return {prob, std::move(residual)};
}

DensityProjection project_measure(const DensityMatrix& state, const Ket& projector,
                                  std::span<const std::size_t> qubits) {
  const auto layout = detail::make_layout(state.num_qubits(), qubits);
  if (projector.dim() != layout.target_offset.size()) {
    throw UsageError("projector dimension does not match the measured qubits");
  }
  const auto& sub = layout.target_offset;
  const auto& rest = layout.rest_offset;
  const std::size_t nr = rest.size();
  const std::size_t ds = sub.size();

  // residual(r1, r2) = sum_{m, m'} conj(phi_m) rho(r1 m, r2 m') phi_m'
  DensityMatrix residual(nr);
  const auto snr = static_cast<std::ptrdiff_t>(nr);
#pragma omp parallel for schedule(static) if (state.dim() >= detail::kParallelDim)
  for (std::ptrdiff_t a = 0; a < snr; ++a) {
    const std::size_t r1 = rest[static_cast<std::size_t>(a)];
    for (std::size_t b = 0; b < nr; ++b) {
      const std::size_t r2 = rest[b];
      cplx acc = 0.0;
      for (std::size_t m = 0; m < ds; ++m) {
        const cplx pm = std::conj(projector[m]);
        if (pm == cplx{}) continue;
        for (std::size_t mp = 0; mp < ds; ++mp) acc += pm * state(r1 + sub[m], r2 + sub[mp]) * projector[mp];
      }
      residual(static_cast<std::size_t>(a), b) = acc;
    }
  }
  const double prob = residual.trace();
  return {prob, std::move(residual)};
}

KetProjection project_measure(const Ket& state, const Ket& projector,
                              std::initializer_list<std::size_t> qubits) {
  return project_measure(state, projector, std::span<const std::size_t>(qubits.begin(), qubits.size()));
}

DensityProjection project_measure(const DensityMatrix& state, const Ket& projector,
                                  std::initializer_list<std::size_t> qubits) {
  return project_measure(state, projector, std::span<const std::size_t>(qubits.begin(), qubits.size()));
}

double fidelity_pure(const DensityMatrix& rho, const Ket& psi) {
  if (rho.dim() != psi.dim()) throw UsageError("fidelity: dimension mismatch");
  const cplx f = inner(psi, rho.matrix() * psi);
  if (std::abs(f.imag()) >= kEqualityTol) {
    throw InternalError("fidelity has an imaginary part; density matrix is not Hermitian");
  }
  return f.real();
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  if (keep.empty()) throw UsageError("partial_trace: keep list is empty");
  const auto layout = detail::make_layout(rho.num_qubits(), keep);
  const auto& sub = layout.target_offset;
  const auto& traced = layout.rest_offset;
  const std::size_t dk = sub.size();
  DensityMatrix out(dk);
  const auto sdk = static_cast<std::ptrdiff_t>(dk);
#pragma omp parallel for schedule(static) if (rho.dim() >= detail::kParallelDim)
  for (std::ptrdiff_t a = 0; a < sdk; ++a) {
    const auto i = static_cast<std::size_t>(a);
    for (std::size_t j = 0; j < dk; ++j) {
      cplx acc = 0.0;
      for (std::size_t t : traced) acc += rho(sub[i] + t, sub[j] + t);
      out(i, j) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

}  // namespace qmesh
