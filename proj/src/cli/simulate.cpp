#include <sstream>

#include "qmesh/cli.hpp"
#include "qmesh/errors.hpp"

namespace qmesh::cli {

namespace {

std::string policy_name(teleport::BranchPolicy p) {
  return p == teleport::BranchPolicy::Designated ? "designated" : "all";
}

std::string positions_text(const std::vector<std::size_t>& pos) {
  std::string out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(pos[i]);
  }
  return out.empty() ? "none" : out;
}

void write_stats(std::ostringstream& os, const net::MultihopStats& s) {
  os << "semantics " << net::semantics_name(s.semantics) << "\n";
  os << "  success rate " << format_number(s.rate) << " +/- " << format_number(3.0 * s.sigma)
     << " (3 sigma), " << s.successes << " of " << s.trials << "\n";
  os << "  closed form " << format_number(s.closed_form) << "\n";
  os << "  mean fidelity of successful trials " << format_number(s.mean_fidelity) << "\n";
  os << "  hop attempts successes\n";
  for (std::size_t h = 0; h < s.hop_attempts.size(); ++h) {
    os << "  " << (h + 1) << " " << s.hop_attempts[h] << " " << s.hop_successes[h] << "\n";
  }
}

void write_row(std::ostringstream& os, const net::MultihopStats& s) {
  os << net::semantics_name(s.semantics) << "," << s.route.hop_count() << "," << s.trials << ","
     << s.successes << "," << format_number(s.rate) << "," << format_number(s.sigma) << ","
     << format_number(s.closed_form) << "," << format_number(s.at_least_one_law) << ","
     << format_number(s.mean_fidelity) << "\n";
}

}  // namespace

SimulateOutput run_simulate(const SimulateConfig& cfg) {
  net::Topology topo;
  std::string src = cfg.src;
  std::string dst = cfg.dst;
  std::string topo_label;
  if (cfg.topology_path.empty()) {
    topo = net::Topology::chain(cfg.chain_hops);
    if (src.empty()) src = "N0";
    if (dst.empty()) dst = "N" + std::to_string(cfg.chain_hops);
    topo_label = "chain:" + std::to_string(cfg.chain_hops);
  } else {
    topo = net::load_topology(cfg.topology_path);
    topo_label = cfg.topology_path;
    if (src.empty() || dst.empty()) throw UsageError("--src and --dst are required with --topology");
  }

  net::MultihopConfig mc;
  mc.input = cfg.input;
  mc.setup = cfg.setup;
  mc.seed = cfg.seed;
  mc.trials = cfg.trials;
  mc.workers = cfg.workers;

  SimulateOutput out;
  mc.semantics = net::Semantics::AnyHopSuccess;
  out.any_hop = net::simulate_multihop(topo, src, dst, mc);
  mc.semantics = net::Semantics::SequentialAllHops;
  out.all_hops = net::simulate_multihop(topo, src, dst, mc);
  out.route = out.any_hop.route;

  const auto& s = cfg.setup;
  const auto& t = s.cluster.tau;
  std::ostringstream manifest;
  manifest << "# qmesh " << QMESH_VERSION << "\n";
  manifest << "# command: simulate\n";
  manifest << "# topology: " << topo_label << "\n";
  manifest << "# src: " << src << "\n";
  manifest << "# dst: " << dst << "\n";
  manifest << "# seed: " << cfg.seed << "\n";
  manifest << "# trials: " << cfg.trials << "\n";
  manifest << "# semantics: any-hop-success,sequential-all-hops\n";
  manifest << "# channel: " << channel_name(s.noise.channel) << "\n";
  manifest << "# xi: " << format_number(s.noise.xi) << "\n";
  manifest << "# tau: " << format_number(t[0]) << "," << format_number(t[1]) << ","
           << format_number(t[2]) << "," << format_number(t[3]) << "\n";
  manifest << "# rho: " << format_number(s.rho) << "\n";
  manifest << "# a0: " << format_number(cfg.input.a0.real()) << "," << format_number(cfg.input.a0.imag())
           << "\n";
  manifest << "# d0: " << format_number(cfg.input.d0.real()) << "," << format_number(cfg.input.d0.imag())
           << "\n";
  manifest << "# policy: " << policy_name(s.policy) << "\n";
  manifest << "# noisy cluster positions: " << positions_text(s.noisy_positions) << "\n";

  const double p = teleport::hop_success_prob(
      teleport::PovmParams::for_channel(s.noise, s.cluster, s.rho));
  std::ostringstream sum;
  sum << manifest.str();
  sum << "route " << out.route.text() << " (" << out.route.hop_count() << " hops)\n";
  sum << "per-hop success 1/(2 rho gamma) " << format_number(p) << "\n";
  sum << "at-least-one law 1-(1-p)^N " << format_number(out.any_hop.at_least_one_law) << "\n";
  sum << "all-hops law p^N " << format_number(out.all_hops.closed_form) << "\n";
  write_stats(sum, out.any_hop);
  write_stats(sum, out.all_hops);
  out.summary = sum.str();

  std::ostringstream csv;
  csv << manifest.str();
  csv << "semantics,hops,trials,successes,rate,sigma,closed_form,at_least_one_law,mean_fidelity\n";
  write_row(csv, out.any_hop);
  write_row(csv, out.all_hops);
  out.csv = csv.str();
  return out;
}

}  // namespace qmesh::cli
