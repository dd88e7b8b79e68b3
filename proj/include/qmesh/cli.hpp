#pragma once

// Command implementations behind tools/qmesh. Kept in the library so tests
// drive the same code paths as the executable.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmesh/network.hpp"
#include "qmesh/teleport.hpp"

namespace qmesh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitRouteNotFound = 2;

// Default output directory: $QMESH_OUT_DIR, else the working directory.
std::filesystem::path default_output_dir();

// "0.2", "0,0.5,1" or "a..b:step". Throws UsageError.
std::vector<double> parse_real_values(std::string_view spec);
// "10", "1,2,5" or "a..b". Throws UsageError.
std::vector<std::size_t> parse_count_values(std::string_view spec);
// Four comma-separated reals; must be normalized and recoverable.
ClusterParams parse_tau(std::string_view spec);
Channel parse_channel(std::string_view name);

// 12 significant digits, shortest form, independent of the C locale.
std::string format_number(double v);

enum class Quantity { SuccessProb, Fidelity };

std::string_view quantity_name(Quantity q);
Quantity parse_quantity(std::string_view name);

struct SweepConfig {
  Channel channel = Channel::AmplitudeDamping;
  Quantity quantity = Quantity::SuccessProb;
  std::string xi_spec = "0..1:0.02";
  std::string n_spec = "1..120";
  ClusterParams cluster;
  double rho = 1.0;
  InputParams input;
  int workers = 0;
};

// Manifest comment lines, header, then one row per (xi, N) in ascending order.
std::string sweep_csv(const SweepConfig& cfg);

struct SimulateConfig {
  std::string topology_path;  // empty: chain of chain_hops hops, N0 .. N<hops>
  std::size_t chain_hops = 1;
  std::string src;  // defaults to the chain ends
  std::string dst;
  InputParams input;
  teleport::HopSetup setup;
  std::uint64_t seed = 42;
  std::size_t trials = 100000;
  int workers = 0;
};

struct SimulateOutput {
  net::Route route;
  net::MultihopStats any_hop;
  net::MultihopStats all_hops;
  std::string summary;  // human-readable, manifest first
  std::string csv;
};

// Runs both composition semantics. Throws RouteNotFound.
SimulateOutput run_simulate(const SimulateConfig& cfg);

enum class Status { Pass, Warn, Fail };

struct VerifyItem {
  Status status = Status::Pass;
  std::string name;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyItem> items;

  bool ok() const;  // no Fail items
  std::string text() const;
};

struct VerifyOptions {
  // Feeds an unchecked Kraus set built at this rate through the completeness check.
  std::optional<double> tamper_kraus_xi;
  std::size_t oracle_trials = 20000;
  std::uint64_t seed = 7;
};

VerifyReport run_verify(const VerifyOptions& opts);

// Full command line: sweep | simulate | route | verify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmesh::cli
