#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "qmesh/errors.hpp"
#include "qmesh/montecarlo.hpp"
#include "qmesh/teleport.hpp"

namespace qmesh::teleport {

namespace {

struct BlockAcc {
  std::array<std::size_t, 16> count{};
  std::array<std::size_t, 16> successes{};
  std::array<double, 16> fidelity_sum{};
  double max_error = 0.0;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

OracleReport oracle_one_hop(const InputParams& input, const HopSetup& setup, std::uint64_t seed,
                            std::size_t trials, int workers) {
  if (trials == 0) throw UsageError("oracle needs at least one trial");
  const Ket target = make_input(input).normalized();
  const DensityMatrix payload = DensityMatrix::pure(target);
  const HopModel model(setup);
  const auto& outcomes = model.outcomes();

  OracleReport rep;
  rep.trials = trials;
  double fid_weighted = 0.0;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& o = outcomes[k];
    auto& br = rep.branches[o.bsm.index()];
    const double p = model.probability(k, payload);
    br.exact_prob += p;
    if (o.success) {
      rep.exact_success += p;
      if (p > 0.0) fid_weighted += p * fidelity_pure(model.apply(k, payload).normalized(), target);
    }
  }
  for (std::size_t b = 0; b < 16; ++b) {
    rep.branches[b].outcome = BsmOutcome::from_index(b);
    rep.branches[b].recoverable = model.plans()[b].recoverable;
  }
  rep.exact_fidelity = rep.exact_success > 0.0 ? fid_weighted / rep.exact_success
                                               : std::numeric_limits<double>::quiet_NaN();

  const auto blocks = mc::run_blocks<BlockAcc>(
      trials, seed, workers, [&](BlockAcc& acc, std::mt19937_64& g, std::size_t count) {
        for (std::size_t t = 0; t < count; ++t) {
          const auto s = model.sample(payload, mc::uniform01(g));
          const auto& o = outcomes[s.outcome];
          const std::size_t b = o.bsm.index();
          ++acc.count[b];
          if (!o.success) continue;
          ++acc.successes[b];
          const double f = fidelity_pure(s.state, target);
          acc.fidelity_sum[b] += f;
          acc.max_error = std::max(acc.max_error, std::abs(1.0 - f));
        }
      });

  double fid_total = 0.0;
  for (const auto& acc : blocks) {
    for (std::size_t b = 0; b < 16; ++b) {
      rep.branches[b].count += acc.count[b];
      rep.branches[b].successes += acc.successes[b];
      rep.branches[b].fidelity_sum += acc.fidelity_sum[b];
    }
    rep.max_fidelity_error = std::max(rep.max_fidelity_error, acc.max_error);
  }
  for (const auto& br : rep.branches) {
    rep.successes += br.successes;
    fid_total += br.fidelity_sum;
  }
  const double n = static_cast<double>(trials);
  rep.rate = static_cast<double>(rep.successes) / n;
  rep.sigma = std::sqrt(rep.rate * (1.0 - rep.rate) / n);
  rep.mean_fidelity = rep.successes > 0 ? fid_total / static_cast<double>(rep.successes)
                                        : std::numeric_limits<double>::quiet_NaN();

  rep.closed_form_success =
      hop_success_prob(PovmParams::for_channel(setup.noise, setup.cluster, setup.rho));
  if (setup.noise.channel == Channel::AmplitudeDamping) {
    rep.closed_form_fidelity = hop_fidelity(input, setup.cluster, setup.noise);
  }
  return rep;
}

std::string OracleReport::text() const {
  std::ostringstream os;
  os << "trials " << trials << ", successes " << successes << "\n";
  os << "success rate " << fmt(rate) << " +/- " << fmt(3.0 * sigma) << " (3 sigma)"
     << ", model " << fmt(exact_success) << ", closed form " << fmt(closed_form_success) << "\n";
  os << "fidelity (successful trials) " << fmt(mean_fidelity) << ", model " << fmt(exact_fidelity);
  if (closed_form_fidelity) os << ", closed form " << fmt(*closed_form_fidelity);
  os << "\n";
  os << "per Bell outcome: outcome recoverable p_exact count successes\n";
  for (const auto& b : branches) {
    os << "  " << to_string(b.outcome) << " " << (b.recoverable ? "yes" : "no") << " "
       << fmt(b.exact_prob) << " " << b.count << " " << b.successes << "\n";
  }
  return os.str();
}

}  // namespace qmesh::teleport
