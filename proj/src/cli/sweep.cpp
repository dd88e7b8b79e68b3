#include <algorithm>
#include <sstream>

#include "qmesh/cli.hpp"
#include "qmesh/errors.hpp"
#include "qmesh/montecarlo.hpp"

namespace qmesh::cli {

std::string sweep_csv(const SweepConfig& cfg) {
  cfg.cluster.validate();
  if (!(cfg.rho > 0.0)) throw UsageError("rho must be positive");
  auto xis = parse_real_values(cfg.xi_spec);
  auto ns = parse_count_values(cfg.n_spec);
  std::sort(xis.begin(), xis.end());
  xis.erase(std::unique(xis.begin(), xis.end()), xis.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (double xi : xis) Noise{cfg.channel, xi}.validate();
  if (ns.front() == 0) throw UsageError("hop counts start at 1");

  const std::size_t cols = ns.size();
  std::vector<double> values(xis.size() * cols);
  const auto total = static_cast<std::ptrdiff_t>(values.size());
  const int threads = mc::resolve_workers(cfg.workers);

#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const Noise noise{cfg.channel, xis[idx / cols]};
    const std::size_t n = ns[idx % cols];
    values[idx] = cfg.quantity == Quantity::SuccessProb
                      ? net::total_success_prob(noise, cfg.cluster, cfg.rho, n)
                      : net::total_fidelity(noise, cfg.input, cfg.cluster, n);
  }

  const auto& t = cfg.cluster.tau;
  const std::string tau_cols = format_number(t[0]) + "," + format_number(t[1]) + "," +
                               format_number(t[2]) + "," + format_number(t[3]);
  std::ostringstream os;
  os << "# qmesh " << QMESH_VERSION << "\n";
  os << "# command: sweep\n";
  os << "# channel: " << channel_name(cfg.channel) << "\n";
  os << "# quantity: " << quantity_name(cfg.quantity) << "\n";
  os << "# xi: " << cfg.xi_spec << "\n";
  os << "# N: " << cfg.n_spec << "\n";
  os << "# tau: " << tau_cols << "\n";
  os << "# rho: " << format_number(cfg.rho) << "\n";
  if (cfg.quantity == Quantity::Fidelity) {
    os << "# a0: " << format_number(cfg.input.a0.real()) << "," << format_number(cfg.input.a0.imag())
       << "\n";
    os << "# d0: " << format_number(cfg.input.d0.real()) << "," << format_number(cfg.input.d0.imag())
       << "\n";
  }
  os << "# seed: none (closed form)\n";
  os << "channel,quantity,xi,N,tau0,tau1,tau2,tau3,rho,value\n";
  const std::string prefix =
      std::string(channel_name(cfg.channel)) + "," + std::string(quantity_name(cfg.quantity)) + ",";
  const std::string suffix = "," + tau_cols + "," + format_number(cfg.rho) + ",";
  for (std::size_t i = 0; i < xis.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      os << prefix << format_number(xis[i]) << "," << ns[j] << suffix
         << format_number(values[i * cols + j]) << "\n";
    }
  }
  return os.str();
}

}  // namespace qmesh::cli
