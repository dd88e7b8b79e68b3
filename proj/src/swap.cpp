#include "qmesh/swap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "qmesh/errors.hpp"
#include "qmesh/montecarlo.hpp"

namespace qmesh::swap {

namespace {

constexpr double kChainFloor = 1.0 - 1e-6;

std::size_t bell_index(BellKind k) {
  for (std::size_t i = 0; i < kBellKinds.size(); ++i) {
    if (kBellKinds[i] == k) return i;
  }
  throw UsageError("unknown Bell state");
}

std::string fidelity_text(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", f);
  return buf;
}

}  // namespace

std::size_t SwapOutcome::index() const { return 4 * bell_index(pair34) + bell_index(pair12); }

SwapOutcome SwapOutcome::from_index(std::size_t i) {
  if (i >= 16) throw UsageError("swap outcome index out of range");
  return {kBellKinds[i / 4], kBellKinds[i % 4]};
}

std::string to_string(const SwapOutcome& o) {
  return std::string(bell_name(o.pair34)) + "/" + std::string(bell_name(o.pair12));
}

std::string CorrectionEntry::pauli_string() const { return pauli_string_name(paulis); }

Ket swap_residual(const Ket& a, const Ket& b, const SwapOutcome& o) {
  if (a.dim() != 16 || b.dim() != 16) throw UsageError("swap needs two 4-qubit resources");
  const Ket full = tensor(a, b);
  const auto first = project_measure(full, make_bell(o.pair34), {reg::kI3, reg::kI4});
  // Left: R4 I2 I1 D1 D2 D3.
  return project_measure(first.residual, make_bell(o.pair12), {2, 1}).residual;
}

std::vector<SwapBranch> swap_branches(const ClusterParams& cluster) {
  const Ket cs = make_cluster(cluster);
  std::vector<SwapBranch> out;
  out.reserve(16);
  for (std::size_t i = 0; i < 16; ++i) {
    SwapBranch b;
    b.outcome = SwapOutcome::from_index(i);
    b.residual = swap_residual(cs, cs, b.outcome);
    b.weight = b.residual.norm_squared();
    out.push_back(std::move(b));
  }
  return out;
}

CorrectionEntry find_correction(const Ket& residual, const ClusterParams& cluster) {
  if (residual.dim() != 16) throw UsageError("swap residual must be a 4-qubit ket");
  if (residual.is_zero(1e-14)) throw DegenerateError("cannot correct a zero swap residual");
  const Ket target = make_cluster(cluster).normalized();
  const Ket r = residual.normalized();

  CorrectionEntry best;
  best.fidelity = -1.0;
  for (const auto& s : pauli_strings_by_weight(4)) {
    const cplx overlap = inner(target, pauli_string_matrix(s) * r);
    const double f = std::norm(overlap);
    if (f > best.fidelity + 1e-12) {
      best.fidelity = f;
      best.paulis = {s[0], s[1], s[2], s[3]};
      best.global_phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0};
    }
  }
  best.fidelity = std::min(best.fidelity, 1.0);
  return best;
}

std::vector<CorrectionEntry> correction_table(const ClusterParams& cluster) {
  std::vector<CorrectionEntry> table;
  for (const auto& b : swap_branches(cluster)) {
    if (b.weight < 1e-20) {
      CorrectionEntry e;
      e.outcome = b.outcome;
      table.push_back(e);
      continue;
    }
    auto e = find_correction(b.residual, cluster);
    e.outcome = b.outcome;
    table.push_back(e);
  }
  return table;
}

void write_correction_csv(std::ostream& os, const std::vector<CorrectionEntry>& table) {
  os << "outcome_pair34,outcome_pair12,pauli_string,fidelity\n";
  for (const auto& e : table) {
    os << bell_name(e.outcome.pair34) << ',' << bell_name(e.outcome.pair12) << ','
       << e.pauli_string() << ',' << fidelity_text(e.fidelity) << '\n';
  }
}

SwapChainResult swap_chain(std::size_t n_segments, const ClusterParams& cluster,
                           std::mt19937_64& rng) {
  if (n_segments == 0) throw UsageError("a chain needs at least one segment");
  const Ket cs = make_cluster(cluster).normalized();
  SwapChainResult res;
  res.resource = cs;
  for (std::size_t seg = 1; seg < n_segments; ++seg) {
    std::array<Ket, 16> residuals;
    std::array<double, 16> weights{};
    double total = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
      residuals[i] = swap_residual(res.resource, cs, SwapOutcome::from_index(i));
      weights[i] = residuals[i].norm_squared();
      total += weights[i];
    }
    const double u = mc::uniform01(rng) * total;
    std::size_t pick = 0;
    double acc = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
      if (weights[i] <= 0.0) continue;
      acc += weights[i];
      pick = i;
      if (u < acc) break;
    }
    auto entry = find_correction(residuals[pick], cluster);
    entry.outcome = SwapOutcome::from_index(pick);
    if (entry.fidelity < kChainFloor) {
      throw SwapFailure("no Pauli correction restores the cluster after outcome " +
                            to_string(entry.outcome) + " (best fidelity " +
                            fidelity_text(entry.fidelity) + ")",
                        pick);
    }
    res.resource = (pauli_string_matrix(entry.paulis) * residuals[pick]).normalized();
    res.log.push_back({entry.outcome, entry});
  }
  res.fidelity = std::norm(inner(cs, res.resource));
  return res;
}

}  // namespace qmesh::swap
