#include <cmath>

#include "qmesh/errors.hpp"
#include "qmesh/network.hpp"

namespace qmesh::net {

namespace {

void require_hops(std::size_t n) {
  if (n == 0) throw UsageError("hop count must be at least 1");
}

double per_hop(const Noise& noise, const ClusterParams& cluster, double rho) {
  return teleport::hop_success_prob(teleport::PovmParams::for_channel(noise, cluster, rho));
}

}  // namespace

double at_least_one_success(double p, std::size_t n) {
  require_hops(n);
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("per-hop probability must lie in [0, 1]");
  if (p == 1.0) return 1.0;
  return -std::expm1(static_cast<double>(n) * std::log1p(-p));
}

double total_success_prob(const Noise& noise, const ClusterParams& cluster, double rho,
                          std::size_t n) {
  require_hops(n);
  return at_least_one_success(per_hop(noise, cluster, rho), n);
}

double sequential_success_prob(const Noise& noise, const ClusterParams& cluster, double rho,
                               std::size_t n) {
  require_hops(n);
  return std::pow(per_hop(noise, cluster, rho), static_cast<double>(n));
}

double two_hop_success_prob(const teleport::PovmParams& p) {
  if (!(p.rho > 0.0)) throw UsageError("rho must be positive");
  if (std::abs(p.c00) == 0.0 || std::abs(p.c11) == 0.0) return 0.0;
  const double rg = p.rho * p.gamma();
  return (1.0 / rg) * (1.0 - 1.0 / (4.0 * rg));
}

double total_fidelity(const Noise& noise, const InputParams& input, const ClusterParams& cluster,
                      std::size_t n) {
  require_hops(n);
  const double b = noise.channel == Channel::AmplitudeDamping
                       ? teleport::amplitude_bracket(cluster, noise.xi)
                       : teleport::phase_bracket(cluster, noise.xi);
  const double w = input.weight();
  return std::pow(b, 2.0 * static_cast<double>(n)) * w * w;
}

}  // namespace qmesh::net
