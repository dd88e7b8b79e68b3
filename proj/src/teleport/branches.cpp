#include <cmath>

#include "qmesh/errors.hpp"
#include "qmesh/teleport.hpp"

namespace qmesh::teleport {

namespace {

std::size_t bell_index(BellKind k) {
  switch (k) {
    case BellKind::PhiPlus: return 0;
    case BellKind::PhiMinus: return 1;
    case BellKind::PsiPlus: return 2;
    case BellKind::PsiMinus: return 3;
  }
  throw UsageError("unknown Bell state");
}

// E1 E2 basis indices.
constexpr std::size_t k00 = 0;
constexpr std::size_t k01 = 1;
constexpr std::size_t k10 = 2;
constexpr std::size_t k11 = 3;

HopBranch assemble(const BsmOutcome& o, const InputParams& in, Ket a_part, Ket d_part) {
  HopBranch b;
  b.outcome = o;
  b.residual = in.a0 * a_part + in.d0 * d_part;
  b.weight = b.residual.norm_squared();
  b.a_part = std::move(a_part);
  b.d_part = std::move(d_part);
  return b;
}

// Projects payload (x) cluster onto the two Bell results, leaving (E1, E2).
Ket project_pair(const Ket& payload, const Ket& cluster, const BsmOutcome& o) {
  const Ket full = tensor(payload, cluster);
  const auto first = project_measure(full, make_bell(o.first), {reg::kS1, reg::kS3});
  // Remaining register: S2 E1 E3 E2.
  return project_measure(first.residual, make_bell(o.second), {0, 2}).residual;
}

}  // namespace

std::size_t BsmOutcome::index() const { return 4 * bell_index(first) + bell_index(second); }

BsmOutcome BsmOutcome::from_index(std::size_t i) {
  if (i >= 16) throw UsageError("Bell outcome index out of range");
  return {kBellKinds[i / 4], kBellKinds[i % 4]};
}

std::string to_string(const BsmOutcome& o) {
  return std::string(bell_name(o.first)) + "/" + std::string(bell_name(o.second));
}

std::vector<HopBranch> projected_hop_branches(const InputParams& input, const ClusterParams& cluster,
                                              const Noise& noise,
                                              std::span<const std::size_t> noisy_positions) {
  Ket cs = make_cluster(cluster);
  if (!noisy_positions.empty()) {
    const Matrix k0 = kraus_set(noise).ops.front();
    for (std::size_t pos : noisy_positions) cs = apply_kraus_branch(cs, pos, k0);
  }
  const Ket zero = Ket::from_bits("00");
  const Ket one = Ket::from_bits("11");
  std::vector<HopBranch> out;
  out.reserve(16);
  for (std::size_t i = 0; i < 16; ++i) {
    const auto o = BsmOutcome::from_index(i);
    out.push_back(assemble(o, input, project_pair(zero, cs, o), project_pair(one, cs, o)));
  }
  return out;
}

std::vector<HopBranch> hop_branches(const InputParams& input, const ClusterParams& cluster,
                                    const Noise& noise) {
  noise.validate();
  cluster.require_recoverable();
  if (noise.channel == Channel::PhaseDamping) {
    constexpr std::size_t all[] = {0, 1, 2, 3};
    return projected_hop_branches(input, cluster, noise, all);
  }

  const double xi = noise.xi;
  const double xb = noise.xi_bar();
  const auto& t = cluster.tau;
  // The |1111> amplitude as it reaches the branch table.
  const double mixed = xi * xi * t[0] - t[3];

  std::vector<HopBranch> out;
  out.reserve(16);
  for (std::size_t i = 0; i < 16; ++i) {
    const auto o = BsmOutcome::from_index(i);
    const double s = bell_sign(o.first);
    const double r = bell_sign(o.second);
    Ket a(4);
    Ket d(4);
    if (!is_phi(o.first) && !is_phi(o.second)) {
      d[k00] = 0.5 * (-s) * (-r) * xb * xb * t[0];
      a[k11] = 0.5 * mixed;
    } else if (!is_phi(o.first) && is_phi(o.second)) {
      d[k01] = 0.5 * s * r * xb * t[1];
      a[k10] = 0.5 * xb * t[2];
    } else if (is_phi(o.first) && !is_phi(o.second)) {
      d[k10] = 0.5 * s * r * xb * t[2];
      a[k01] = 0.5 * xb * t[1];
    } else {
      d[k11] = 0.5 * s * (-r) * mixed;
      a[k00] = 0.5 * xb * xb * t[0];
    }
    out.push_back(assemble(o, input, std::move(a), std::move(d)));
  }
  return out;
}

}  // namespace qmesh::teleport
