#pragma once

// Mesh topology, route discovery over links that carry both a classical and
// a quantum channel, closed-form multihop laws, and the multihop Monte Carlo.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qmesh/teleport.hpp"

namespace qmesh::net {

enum class NodeKind { Unspecified, Source, Destination, Route, EdgeRoute };

std::string_view node_kind_name(NodeKind k);

struct Node {
  std::string id;
  NodeKind kind = NodeKind::Unspecified;
};

struct Link {
  std::string a;
  std::string b;
  bool classical = false;
  bool quantum = false;

  bool dual() const { return classical && quantum; }
};

class Topology {
 public:
  // Throws UsageError on a duplicate id.
  void add_node(std::string id, NodeKind kind = NodeKind::Unspecified);
  // Throws UsageError on an unknown endpoint, a self-loop or a repeated pair.
  void add_link(const std::string& a, const std::string& b, bool classical, bool quantum);

  // N0 - N1 - ... - N<hops>, every link dual.
  static Topology chain(std::size_t hops);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Link>& links() const noexcept { return links_; }
  bool has_node(std::string_view id) const;
  const Node& node(std::string_view id) const;
  // Ids sharing a dual link with `id`, ascending.
  std::vector<std::string> dual_neighbors(std::string_view id) const;
  const Link* find_link(std::string_view a, std::string_view b) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Link> links_;
};

// Line format, '#' starts a comment:
//   node <id> [source|destination|route|edge-route]
//   edge <id> <id> <q|c|qc>
// Throws ParseError with the offending line number.
Topology parse_topology(std::string_view text);
Topology load_topology(const std::filesystem::path& path);

struct Route {
  std::vector<std::string> hops;  // source first
  std::size_t hop_count() const { return hops.empty() ? 0 : hops.size() - 1; }
  std::string text() const;  // "S -> E -> T"
};

// Shortest route over dual links. The request floods breadth-first from src;
// the reply walks back from dst marking every node on a shortest path; the
// forward pass takes the smallest marked id at each step, which yields the
// lexicographically smallest shortest id sequence. Throws RouteNotFound.
Route discover_route(const Topology& t, const std::string& src, const std::string& dst);

// ---------------------------------------------------------------------------
// Closed forms

// 1 - (1 - p)^N
double at_least_one_success(double p, std::size_t n);

// Per-hop p = 1/(2 rho gamma) with channel-dressed gamma, composed as
// 1 - (1 - p)^N.
double total_success_prob(const Noise& noise, const ClusterParams& cluster, double rho,
                          std::size_t n);

// p^N: every hop has to succeed.
double sequential_success_prob(const Noise& noise, const ClusterParams& cluster, double rho,
                               std::size_t n);

// (1/(rho gamma)) (1 - 1/(4 rho gamma))
double two_hop_success_prob(const teleport::PovmParams& p);

// bracket^(2N) (|a0|^2 + |d0|^2)^2 with the channel's bracket.
double total_fidelity(const Noise& noise, const InputParams& input, const ClusterParams& cluster,
                      std::size_t n);

// ---------------------------------------------------------------------------
// Multihop simulation

enum class Semantics {
  // A trial succeeds only if every hop lands in P1 or P2; stops at the first failure.
  SequentialAllHops,
  // Every hop is attempted; a failed hop leaves the carried state alone. A
  // trial succeeds if at least one hop succeeds.
  AnyHopSuccess,
};

std::string_view semantics_name(Semantics s);

struct HopRecord {
  teleport::BsmOutcome bsm;
  std::optional<teleport::PovmOutcome> povm;
  bool success = false;
};

struct MultihopResult {
  bool success = false;
  std::size_t hops_attempted = 0;
  std::vector<HopRecord> per_hop_records;
  std::optional<double> empirical_fidelity;  // present iff success
};

// One trial over `hops` hops. Draws one uniform per attempted hop.
MultihopResult simulate_trial(const teleport::HopModel& model, std::size_t hops, const Ket& target,
                              Semantics semantics, std::mt19937_64& rng);

struct MultihopConfig {
  InputParams input;
  teleport::HopSetup setup;
  Semantics semantics = Semantics::AnyHopSuccess;
  std::uint64_t seed = 0;
  std::size_t trials = 100000;
  int workers = 0;  // 0 = OpenMP default; never changes the result
};

struct MultihopStats {
  Route route;
  Semantics semantics = Semantics::AnyHopSuccess;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double rate = 0.0;
  double sigma = 0.0;
  double mean_fidelity = 0.0;  // NaN without successes
  std::vector<std::size_t> hop_attempts;
  std::vector<std::size_t> hop_successes;
  double closed_form = 0.0;  // the law matching `semantics`
  double at_least_one_law = 0.0;
};

MultihopStats simulate_multihop(const Topology& t, const std::string& src, const std::string& dst,
                                const MultihopConfig& cfg);

}  // namespace qmesh::net
