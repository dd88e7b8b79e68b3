#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "qmesh/cli.hpp"
#include "qmesh/errors.hpp"

namespace qmesh::cli {

namespace {

struct CommonOpts {
  std::string channel = "amp";
  std::string tau = "0.5,0.5,0.5,0.5";
  double rho = 1.0;
  double a0 = 1.0 / 1.4142135623730951;
  double d0 = 1.0 / 1.4142135623730951;
  int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--channel", o.channel, "Noise channel: amp or phase")->capture_default_str();
  cmd->add_option("--tau", o.tau, "Cluster coefficients tau0,tau1,tau2,tau3")->capture_default_str();
  cmd->add_option("--rho", o.rho, "POVM positivity parameter")->capture_default_str();
  cmd->add_option("--a0", o.a0, "Input amplitude of |00>");
  cmd->add_option("--d0", o.d0, "Input amplitude of |11>");
  cmd->add_option("--workers", o.workers, "Worker threads (0 = OpenMP default); never changes results");
}

std::filesystem::path resolve_out(const std::string& given, const std::string& fallback) {
  if (!given.empty()) return given;
  const auto dir = default_output_dir();
  std::filesystem::create_directories(dir);
  return dir / fallback;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << body;
  if (!f.flush()) throw UsageError("cannot write " + path.string());
}

std::vector<std::size_t> parse_positions(const std::string& spec) {
  if (spec == "none") return {};
  auto v = parse_count_values(spec);
  for (auto p : v) {
    if (p > 3) throw UsageError("noisy cluster positions are 0..3");
  }
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qmesh: multihop teleportation over noisy cluster-state links"};
  app.set_version_flag("--version", std::string("qmesh ") + QMESH_VERSION);
  app.require_subcommand(1);

  // sweep
  CommonOpts sw_common;
  std::string sw_quantity = "psuc";
  std::string sw_xi = "0..1:0.02";
  std::string sw_n = "1..120";
  std::string sw_out;
  auto* sweep = app.add_subcommand("sweep", "Closed-form success probability or fidelity over a (xi, N) grid");
  add_common(sweep, sw_common);
  sweep->add_option("--quantity", sw_quantity, "psuc or fidelity")->capture_default_str();
  sweep->add_option("--xi", sw_xi, "Decoherence rates: value, list, or a..b:step")->capture_default_str();
  sweep->add_option("--N", sw_n, "Hop counts: value, list, or a..b")->capture_default_str();
  sweep->add_option("--out", sw_out, "Output CSV (default $QMESH_OUT_DIR/sweep_<channel>_<quantity>.csv)");

  // simulate
  CommonOpts sim_common;
  std::string sim_topology;
  std::size_t sim_hops = 1;
  std::string sim_src;
  std::string sim_dst;
  double sim_xi = 0.0;
  std::uint64_t sim_seed = 42;
  std::size_t sim_trials = 100000;
  std::string sim_policy = "designated";
  std::string sim_noisy = "1,2,3";
  std::string sim_out;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo multihop teleportation along a discovered route");
  add_common(simulate, sim_common);
  simulate->add_option("--topology", sim_topology, "Topology file; omit for a chain");
  simulate->add_option("--hops", sim_hops, "Chain length when no topology is given")->capture_default_str();
  simulate->add_option("--src", sim_src, "Source node id");
  simulate->add_option("--dst", sim_dst, "Destination node id");
  simulate->add_option("--xi", sim_xi, "Decoherence rate")->capture_default_str();
  simulate->add_option("--seed", sim_seed, "Base seed")->capture_default_str();
  simulate->add_option("--trials", sim_trials, "Monte Carlo trials")->capture_default_str();
  simulate->add_option("--policy", sim_policy, "designated or all Bell outcomes recovered")->capture_default_str();
  simulate->add_option("--noisy", sim_noisy, "Cluster positions crossing the noisy link, or none")
      ->capture_default_str();
  simulate->add_option("--out", sim_out, "Summary CSV (default $QMESH_OUT_DIR/simulate_summary.csv)");

  // route
  std::string rt_topology;
  std::string rt_src;
  std::string rt_dst;
  auto* route = app.add_subcommand("route", "Route discovery over links with classical and quantum channels");
  route->add_option("--topology", rt_topology, "Topology file")->required();
  route->add_option("--src", rt_src, "Source node id")->required();
  route->add_option("--dst", rt_dst, "Destination node id")->required();

  // verify
  std::string vf_out;
  std::optional<double> vf_tamper;
  std::size_t vf_trials = 20000;
  std::uint64_t vf_seed = 7;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite and list known deviations");
  verify->add_option("--out", vf_out, "Report file (default $QMESH_OUT_DIR/verify_report.txt)");
  verify->add_option("--tamper-kraus-xi", vf_tamper, "Inject an out-of-range rate into a Kraus set");
  verify->add_option("--trials", vf_trials, "Monte Carlo trials for the oracle check")->capture_default_str();
  verify->add_option("--seed", vf_seed, "Seed for the oracle check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*sweep) {
      SweepConfig cfg;
      cfg.channel = parse_channel(sw_common.channel);
      cfg.quantity = parse_quantity(sw_quantity);
      cfg.xi_spec = sw_xi;
      cfg.n_spec = sw_n;
      cfg.cluster = parse_tau(sw_common.tau);
      cfg.rho = sw_common.rho;
      cfg.input = InputParams{cplx{sw_common.a0}, cplx{sw_common.d0}};
      cfg.workers = sw_common.workers;
      const std::string csv = sweep_csv(cfg);
      const auto path = resolve_out(
          sw_out, "sweep_" + std::string(channel_name(cfg.channel)) + "_" + sw_quantity + ".csv");
      write_file(path, csv);
      out << "wrote " << path.string() << "\n";
      return kExitOk;
    }
    if (*simulate) {
      SimulateConfig cfg;
      cfg.topology_path = sim_topology;
      cfg.chain_hops = sim_hops;
      cfg.src = sim_src;
      cfg.dst = sim_dst;
      cfg.input = InputParams{cplx{sim_common.a0}, cplx{sim_common.d0}};
      cfg.setup.cluster = parse_tau(sim_common.tau);
      cfg.setup.noise = Noise{parse_channel(sim_common.channel), sim_xi};
      cfg.setup.rho = sim_common.rho;
      cfg.setup.noisy_positions = parse_positions(sim_noisy);
      if (sim_policy == "designated") {
        cfg.setup.policy = teleport::BranchPolicy::Designated;
      } else if (sim_policy == "all") {
        cfg.setup.policy = teleport::BranchPolicy::AllBranches;
      } else {
        throw UsageError("policy must be designated or all");
      }
      cfg.seed = sim_seed;
      cfg.trials = sim_trials;
      cfg.workers = sim_common.workers;
      const auto res = run_simulate(cfg);
      const auto path = resolve_out(sim_out, "simulate_summary.csv");
      write_file(path, res.csv);
      out << res.summary;
      out << "wrote " << path.string() << "\n";
      return kExitOk;
    }
    if (*route) {
      const auto topo = net::load_topology(rt_topology);
      const auto r = net::discover_route(topo, rt_src, rt_dst);
      out << r.text() << "\n" << "hops " << r.hop_count() << "\n";
      return kExitOk;
    }
    if (*verify) {
      VerifyOptions opts;
      opts.tamper_kraus_xi = vf_tamper;
      opts.oracle_trials = vf_trials;
      opts.seed = vf_seed;
      const auto rep = run_verify(opts);
      const std::string text = rep.text();
      const auto path = resolve_out(vf_out, "verify_report.txt");
      write_file(path, text);
      out << text;
      return rep.ok() ? kExitOk : kExitFailure;
    }
  } catch (const RouteNotFound& e) {
    err << "error: " << e.what() << "\n";
    return kExitRouteNotFound;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace qmesh::cli
