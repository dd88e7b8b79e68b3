#include <cmath>

#include "qmesh/errors.hpp"
#include "qmesh/teleport.hpp"

namespace qmesh::teleport {

double hop_success_prob(const PovmParams& p) {
  if (!(p.rho > 0.0)) throw UsageError("rho must be positive");
  if (std::abs(p.c00) == 0.0 || std::abs(p.c11) == 0.0) return 0.0;
  return 1.0 / (2.0 * p.rho * p.gamma());
}

double amplitude_bracket(const ClusterParams& c, double xi) {
  Noise{Channel::AmplitudeDamping, xi}.validate();
  const auto& t = c.tau;
  const double xb = 1.0 - xi;
  const double xb2 = xb * xb;
  const double xi2 = xi * xi;
  return t[0] * t[0] * (xb2 * xb2 + xi2 * xi2) + (t[1] * t[1] + t[2] * t[2]) * xb2 -
         2.0 * t[0] * t[3] * xi2 + t[3] * t[3];
}

double phase_bracket(const ClusterParams& c, double xi) {
  Noise{Channel::PhaseDamping, xi}.validate();
  const auto& t = c.tau;
  const double xb2 = (1.0 - xi) * (1.0 - xi);
  const double xi2 = xi * xi;
  const double outer = xb2 + xi2;
  return t[0] * t[0] * outer * outer + (t[1] * t[1] + t[2] * t[2] + t[3] * t[3]) * xb2 * xb2 +
         2.0 * t[3] * t[3] * xi2 * xb2 + xi2 * xi2 * t[3] * t[3];
}

DensityMatrix hop_output_density(const InputParams& input, const ClusterParams& c, double xi_a) {
  const double b = amplitude_bracket(c, xi_a);
  DensityMatrix rho = make_input_density(input);
  rho(0, 0) *= b;
  rho(3, 3) *= b;
  return rho;
}

double hop_fidelity(const InputParams& input, const ClusterParams& c, const Noise& noise,
                    HopSpan span) {
  if (noise.channel != Channel::AmplitudeDamping) {
    throw UnsupportedVariant("a per-hop fidelity is only given for amplitude damping");
  }
  const double b = amplitude_bracket(c, noise.xi);
  const double w = input.weight();
  const double scale = span == HopSpan::SingleHop ? b : b * b * b;
  return scale * w * w;
}

}  // namespace qmesh::teleport
