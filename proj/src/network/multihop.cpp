#include <cmath>
#include <limits>

#include "qmesh/errors.hpp"
#include "qmesh/montecarlo.hpp"
#include "qmesh/network.hpp"

namespace qmesh::net {

std::string_view semantics_name(Semantics s) {
  return s == Semantics::SequentialAllHops ? "sequential-all-hops" : "any-hop-success";
}

MultihopResult simulate_trial(const teleport::HopModel& model, std::size_t hops, const Ket& target,
                              Semantics semantics, std::mt19937_64& rng) {
  if (hops == 0) throw UsageError("hop count must be at least 1");
  MultihopResult res;
  DensityMatrix carried = DensityMatrix::pure(target);
  bool any = false;
  bool all = true;
  for (std::size_t h = 0; h < hops; ++h) {
    const auto s = model.sample(carried, mc::uniform01(rng));
    const auto& o = model.outcomes()[s.outcome];
    res.per_hop_records.push_back({o.bsm, o.povm, o.success});
    ++res.hops_attempted;
    if (o.success) {
      carried = s.state;
      any = true;
    } else {
      all = false;
      if (semantics == Semantics::SequentialAllHops) break;
    }
  }
  res.success = semantics == Semantics::SequentialAllHops ? all : any;
  if (res.success) res.empirical_fidelity = fidelity_pure(carried, target);
  return res;
}

namespace {

struct BlockAcc {
  std::size_t successes = 0;
  double fidelity_sum = 0.0;
  std::vector<std::size_t> attempts;
  std::vector<std::size_t> hop_successes;
};

}  // namespace

MultihopStats simulate_multihop(const Topology& t, const std::string& src, const std::string& dst,
                                const MultihopConfig& cfg) {
  if (cfg.trials == 0) throw UsageError("simulation needs at least one trial");
  MultihopStats st;
  st.route = discover_route(t, src, dst);
  st.semantics = cfg.semantics;
  st.trials = cfg.trials;
  const std::size_t n = st.route.hop_count();

  const teleport::HopModel model(cfg.setup);
  const Ket target = make_input(cfg.input).normalized();

  const auto blocks = mc::run_blocks<BlockAcc>(
      cfg.trials, cfg.seed, cfg.workers, [&](BlockAcc& acc, std::mt19937_64& g, std::size_t count) {
        acc.attempts.assign(n, 0);
        acc.hop_successes.assign(n, 0);
        for (std::size_t i = 0; i < count; ++i) {
          const auto r = simulate_trial(model, n, target, cfg.semantics, g);
          for (std::size_t h = 0; h < r.per_hop_records.size(); ++h) {
            ++acc.attempts[h];
            if (r.per_hop_records[h].success) ++acc.hop_successes[h];
          }
          if (r.success) {
            ++acc.successes;
            acc.fidelity_sum += *r.empirical_fidelity;
          }
        }
      });

  st.hop_attempts.assign(n, 0);
  st.hop_successes.assign(n, 0);
  double fid = 0.0;
  for (const auto& b : blocks) {
    st.successes += b.successes;
    fid += b.fidelity_sum;
    for (std::size_t h = 0; h < n; ++h) {
      st.hop_attempts[h] += b.attempts[h];
      st.hop_successes[h] += b.hop_successes[h];
    }
  }
  const double trials = static_cast<double>(cfg.trials);
  st.rate = static_cast<double>(st.successes) / trials;
  st.sigma = std::sqrt(st.rate * (1.0 - st.rate) / trials);
  st.mean_fidelity = st.successes > 0 ? fid / static_cast<double>(st.successes)
                                      : std::numeric_limits<double>::quiet_NaN();

  const auto& s = cfg.setup;
  st.at_least_one_law = total_success_prob(s.noise, s.cluster, s.rho, n);
  st.closed_form = cfg.semantics == Semantics::AnyHopSuccess
                       ? st.at_least_one_law
                       : sequential_success_prob(s.noise, s.cluster, s.rho, n);
  return st;
}

}  // namespace qmesh::net
