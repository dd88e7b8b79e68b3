#include <algorithm>
#include <cmath>

#include "qmesh/errors.hpp"
#include "qmesh/teleport.hpp"

namespace qmesh::teleport {

namespace {

void check_positions(const std::vector<std::size_t>& pos) {
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i] > 3) throw UsageError("noisy cluster position must be in 0..3");
    for (std::size_t j = 0; j < i; ++j) {
      if (pos[i] == pos[j]) throw UsageError("noisy cluster positions must be distinct");
    }
  }
}

BranchPlan make_plan(const HopBranch& noiseless, const HopSetup& setup) {
  BranchPlan plan;
  plan.outcome = noiseless.outcome;
  const bool designated = noiseless.outcome == kDesignatedOutcome;
  if (setup.policy == BranchPolicy::Designated && !designated) return plan;
  Recovery r;
  try {
    r = recovery_pipeline(noiseless);
  } catch (const DegenerateError&) {
    return plan;
  }
  plan.recoverable = true;
  plan.correction = r.correction;
  plan.povm_params = PovmParams::for_recovery(r, setup.rho);
  if (!designated) {
    plan.povm_params.rho = std::max(setup.rho, minimal_rho(plan.povm_params));
  }
  plan.povm = povm_set(plan.povm_params);
  return plan;
}

DensityMatrix basis_element(std::size_t i, std::size_t j) {
  DensityMatrix m(4);
  m(i, j) = 1.0;
  return m;
}

}  // namespace

HopModel::HopModel(HopSetup setup) : setup_(std::move(setup)) {
  setup_.cluster.validate();
  setup_.noise.validate();
  check_positions(setup_.noisy_positions);
  if (!(setup_.rho > 0.0) || !std::isfinite(setup_.rho)) throw UsageError("rho must be positive");

  noisy_cluster_ = apply_channel(DensityMatrix::pure(make_cluster(setup_.cluster)),
                                 setup_.noisy_positions, kraus_set(setup_.noise));

  // The receiver plans from the noiseless residual structure; it never sees xi.
  const auto noiseless =
      projected_hop_branches(InputParams{}, setup_.cluster, Noise{}, std::span<const std::size_t>{});
  for (const auto& b : noiseless) {
    plans_.push_back(make_plan(b, setup_));
    const auto& plan = plans_.back();
    if (plan.recoverable) {
      outcomes_.push_back({b.outcome, PovmOutcome::P1, true});
      outcomes_.push_back({b.outcome, PovmOutcome::P2, true});
      outcomes_.push_back({b.outcome, PovmOutcome::P3, false});
    } else {
      outcomes_.push_back({b.outcome, std::nullopt, false});
    }
  }

  images_.resize(outcomes_.size());
  trace_weights_.resize(outcomes_.size());
  for (std::size_t k = 0; k < outcomes_.size(); ++k) {
    images_[k].reserve(16);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        images_[k].push_back(run_direct(k, basis_element(i, j)).matrix());
        trace_weights_[k][4 * i + j] = images_[k].back().trace();
      }
    }
  }
}

DensityMatrix HopModel::branch_residual(const BsmOutcome& o, const DensityMatrix& payload) const {
  const DensityMatrix full = tensor(payload, noisy_cluster_);
  const auto first = project_measure(full, make_bell(o.first), {reg::kS1, reg::kS3});
  // Left: S2 E1 E3 E2.
  return project_measure(first.residual, make_bell(o.second), {0, 2}).residual;
}

DensityMatrix HopModel::recover(const BranchPlan& plan, std::optional<PovmOutcome> povm,
                                const DensityMatrix& residual) const {
  if (!povm) return residual;
  DensityMatrix g0 = apply_on_qubits(pauli_string_matrix(plan.correction), residual, {0, 1});
  DensityMatrix g1 = tensor(g0, DensityMatrix::pure(Ket::from_bits("00")));
  DensityMatrix g2 = apply_on_qubits(gates::cnot(), g1, {0, 2});
  g2 = apply_on_qubits(gates::cnot(), g2, {1, 3});

  // Measurement operator sqrt(P_k) on D E.
  Matrix m;
  switch (*povm) {
    case PovmOutcome::P1:
      m = (1.0 / std::sqrt(plan.povm_params.rho)) * Matrix::outer(plan.povm.lambda1, plan.povm.lambda1);
      break;
    case PovmOutcome::P2:
      m = (1.0 / std::sqrt(plan.povm_params.rho)) * Matrix::outer(plan.povm.lambda2, plan.povm.lambda2);
      break;
    case PovmOutcome::P3:
      m = psd_sqrt(plan.povm.p3);
      break;
  }
  const DensityMatrix measured = apply_on_qubits(m, g2, {2, 3});
  const DensityMatrix left = partial_trace(measured, {0, 1});
  return apply_on_qubits(povm_correction(*povm), left, {0, 1});
}

DensityMatrix HopModel::run_direct(std::size_t k, const DensityMatrix& payload) const {
  if (k >= outcomes_.size()) throw UsageError("hop outcome index out of range");
  if (payload.dim() != 4) throw UsageError("hop payload must be a 2-qubit density matrix");
  const auto& o = outcomes_[k];
  return recover(plans_[o.bsm.index()], o.povm, branch_residual(o.bsm, payload));
}

DensityMatrix HopModel::apply(std::size_t k, const DensityMatrix& payload) const {
  if (k >= outcomes_.size()) throw UsageError("hop outcome index out of range");
  if (payload.dim() != 4) throw UsageError("hop payload must be a 2-qubit density matrix");
  Matrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx w = payload(i, j);
      if (w != 0.0) out += w * images_[k][4 * i + j];
    }
  }
  return DensityMatrix(std::move(out));
}

double HopModel::probability(std::size_t k, const DensityMatrix& payload) const {
  if (k >= outcomes_.size()) throw UsageError("hop outcome index out of range");
  if (payload.dim() != 4) throw UsageError("hop payload must be a 2-qubit density matrix");
  cplx p = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) p += payload(i, j) * trace_weights_[k][4 * i + j];
  }
  return std::max(p.real(), 0.0);
}

HopModel::Sample HopModel::sample(const DensityMatrix& payload, double u) const {
  std::vector<double> probs(outcomes_.size());
  double total = 0.0;
  for (std::size_t k = 0; k < outcomes_.size(); ++k) {
    probs[k] = probability(k, payload);
    total += probs[k];
  }
  if (!(total > 0.0)) throw DegenerateError("hop outcome distribution has zero mass");
  const double target = u * total;
  std::size_t pick = outcomes_.size();
  double acc = 0.0;
  for (std::size_t k = 0; k < outcomes_.size(); ++k) {
    if (probs[k] <= 0.0) continue;
    acc += probs[k];
    pick = k;
    if (target < acc) break;
  }
  Sample s;
  s.outcome = pick;
  s.prob = probs[pick] / total;
  s.state = apply(pick, payload).normalized();
  return s;
}

}  // namespace qmesh::teleport
