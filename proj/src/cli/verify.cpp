#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qmesh/cli.hpp"
#include "qmesh/errors.hpp"
#include "qmesh/swap.hpp"

namespace qmesh::cli {

namespace {

using teleport::kDesignatedOutcome;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

class Collector {
 public:
  void hard(bool ok, std::string name, std::string detail) {
    items_.push_back({ok ? Status::Pass : Status::Fail, std::move(name), std::move(detail)});
  }
  void warn(std::string name, std::string detail) {
    items_.push_back({Status::Warn, std::move(name), std::move(detail)});
  }
  // Runs `fn`; an exception turns into a failed item.
  template <class Fn>
  void guarded(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      hard(false, name, std::string("threw: ") + e.what());
    }
  }
  std::vector<VerifyItem> take() { return std::move(items_); }

 private:
  std::vector<VerifyItem> items_;
};

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> out;
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) out.push_back(std::min(lo + static_cast<double>(i) * step, hi));
  return out;
}

void check_kraus(Collector& c, const VerifyOptions& opts) {
  c.guarded("kraus completeness", [&] {
    double worst = 0.0;
    std::size_t sets = 0;
    for (Channel ch : {Channel::AmplitudeDamping, Channel::PhaseDamping}) {
      for (double xi : grid(0.0, 1.0, 0.1)) {
        worst = std::max(worst, kraus_set(Noise{ch, xi}).completeness_error());
        ++sets;
      }
    }
    c.hard(worst < 1e-12, "kraus completeness",
           "max |sum K^+K - I| = " + sci(worst) + " over " + std::to_string(sets) + " sets");
  });
  if (opts.tamper_kraus_xi) {
    const double xi = *opts.tamper_kraus_xi;
    double worst = 0.0;
    for (Channel ch : {Channel::AmplitudeDamping, Channel::PhaseDamping}) {
      worst = std::max(worst, kraus_set_unchecked(Noise{ch, xi}).completeness_error());
    }
    c.hard(worst < 1e-12, "kraus completeness (injected xi = " + format_number(xi) + ")",
           "max |sum K^+K - I| = " + sci(worst));
  }
}

void check_povm(Collector& c) {
  c.guarded("povm identity and positivity", [&] {
    const ClusterParams clusters[] = {ClusterParams{}, ClusterParams{{0.6, 0.4, 0.4, std::sqrt(0.32)}}};
    double sum_err = 0.0;
    double min_eig = 1.0;
    for (const auto& cl : clusters) {
      for (Channel ch : {Channel::AmplitudeDamping, Channel::PhaseDamping}) {
        for (double xi : grid(0.0, 0.9, 0.1)) {
          const auto set = teleport::povm_set(teleport::PovmParams::for_channel(Noise{ch, xi}, cl, 1.0));
          sum_err = std::max(sum_err, max_abs_diff(set.p1 + set.p2 + set.p3, Matrix::identity(4)));
          for (const Matrix* m : {&set.p1, &set.p2, &set.p3}) {
            min_eig = std::min(min_eig, hermitian_eigenvalues(*m).front());
          }
        }
      }
    }
    c.hard(sum_err <= 1e-10 && min_eig >= -1e-9, "povm identity and positivity",
           "max |P1+P2+P3-I| = " + sci(sum_err) + ", min eigenvalue " + sci(min_eig) +
               " (rho = 1, tau1 = tau2, xi 0..0.9)");
  });
}

void check_g1_probability(Collector& c) {
  const InputParams in;
  const ClusterParams cl;
  for (double xi : {0.0, 0.25, 0.5}) {
    const std::string name = "<G1|P1|G1> at xi = " + format_number(xi);
    c.guarded(name, [&] {
      const Noise noise{Channel::AmplitudeDamping, xi};
      const auto branches = teleport::hop_branches(in, cl, noise);
      const auto rec = teleport::recovery_pipeline(branches[kDesignatedOutcome.index()]);
      const auto params = teleport::PovmParams::for_channel(noise, cl, 1.0);
      const auto set = teleport::povm_set(params);
      auto weight = [](const Ket& g, const Matrix& p) {
        return inner(g, apply_on_qubits(p, g, {2, 3})).real();
      };
      const double g1p1 = weight(rec.g1, set.p1);
      const double g1p2 = weight(rec.g1, set.p2);
      const double g2p1 = weight(rec.g2, set.p1);
      const double g2p2 = weight(rec.g2, set.p2);
      const double expected = 1.0 / (4.0 * params.rho * params.gamma());
      const double err = std::max({std::abs(g1p1 - expected), std::abs(g1p2 - expected),
                                   std::abs(g2p1 - expected), std::abs(g2p2 - expected)});
      const double psuc = teleport::hop_success_prob(params);
      const double psum_err = std::abs(psuc - (g2p1 + g2p2));
      c.hard(err <= 1e-10 && psum_err <= 1e-10, name,
             "⟨G1|P1|G1⟩ = " + fixed6(g1p1) + " expected 1/(4ϱγₐ) = " + fixed6(expected) +
                 "; ⟨G1|P2|G1⟩ = " + fixed6(g1p2) + "; G2 weights agree to " + sci(err) +
                 "; P1+P2 = 1/(2ϱγₐ) to " + sci(psum_err));
    });
  }
}

void check_recovery(Collector& c) {
  c.guarded("recovery restores the payload", [&] {
    const InputParams in{cplx{0.6}, cplx{0.0, 0.8}};
    const ClusterParams cl;
    const Noise noise{};
    const auto branches = teleport::hop_branches(in, cl, noise);
    const auto rec = teleport::recovery_pipeline(branches[kDesignatedOutcome.index()]);
    const auto set = teleport::povm_set(teleport::PovmParams::for_recovery(rec, 1.0));
    const Ket target = make_input(in);
    double worst = 0.0;
    std::string labels;
    for (auto [lam, outcome] : {std::pair{&set.lambda1, teleport::PovmOutcome::P1},
                                std::pair{&set.lambda2, teleport::PovmOutcome::P2}}) {
      const Ket left = project_measure(rec.g2, *lam, {2, 3}).residual.normalized();
      const Ket fixed = teleport::povm_correction(outcome) * left;
      worst = std::max(worst, 1.0 - std::norm(inner(target, fixed)));
      const double raw = std::norm(inner(target, left));
      labels += std::string(teleport::povm_name(outcome)) + " raw overlap " + fixed6(raw) + "; ";
    }
    c.hard(worst <= 1e-10, "recovery restores the payload",
           labels + "after correction 1 - F = " + sci(worst));

    // ¼ on both terms of G2.
    const double xb = noise.xi_bar();
    const auto& t = cl.tau;
    Ket plus = tensor(in.a0 * Ket::from_bits("00") + in.d0 * Ket::from_bits("11"),
                      cplx(xb * t[2]) * Ket::from_bits("00") - cplx(xb * t[1]) * Ket::from_bits("11"));
    Ket minus = tensor(in.a0 * Ket::from_bits("00") - in.d0 * Ket::from_bits("11"),
                       cplx(xb * t[2]) * Ket::from_bits("00") + cplx(xb * t[1]) * Ket::from_bits("11"));
    const Ket expected = cplx(0.25) * (plus + minus);
    const double diff = max_abs_diff(rec.g2, expected);
    c.hard(diff <= 1e-12, "G2 decomposition", "both terms carry 1/4; max deviation " + sci(diff));
  });
}

void check_branch_sums(Collector& c) {
  c.guarded("branch weights at xi = 0", [&] {
    const InputParams in;
    const ClusterParams cl;
    double printed = 0.0;
    double projected = 0.0;
    for (const auto& b : teleport::hop_branches(in, cl, Noise{})) printed += b.weight;
    for (const auto& b : teleport::projected_hop_branches(in, cl, Noise{}, {})) projected += b.weight;
    c.hard(std::abs(printed - 1.0) <= 1e-8 && std::abs(projected - 1.0) <= 1e-8,
           "branch weights at xi = 0",
           "printed table " + format_number(printed) + ", projection " + format_number(projected));
  });
}

void check_swap(Collector& c) {
  c.guarded("swap correction table", [&] {
    const ClusterParams cl;
    const auto table = swap::correction_table(cl);
    std::size_t good = 0;
    double worst = 1.0;
    for (const auto& e : table) {
      if (e.fidelity >= 1.0 - 1e-10) ++good;
      worst = std::min(worst, e.fidelity);
    }
    c.hard(good == 16, "swap correction table",
           std::to_string(good) + "/16 corrections at fidelity 1 (worst " + format_number(worst) + ")");

    Ket example(16);
    example[0b0100] = 1.0;
    example[0b0111] = -1.0;
    example[0b1000] = -1.0;
    example[0b1011] = -1.0;
    const auto e = swap::find_correction(example, cl);
    c.hard(e.pauli_string() == "XZ.I.I.I" && e.fidelity >= 1.0 - 1e-10,
           "swap worked example",
           "|0100>-|0111>-|1000>-|1011> corrected by " + e.pauli_string() + " (Z then X on R4), fidelity " +
               format_number(e.fidelity));

    std::mt19937_64 rng(11);
    const auto chain = swap::swap_chain(5, cl, rng);
    c.hard(chain.log.size() == 4 && std::abs(chain.fidelity - 1.0) <= 1e-8, "swap chain",
           std::to_string(chain.log.size()) + " swaps, final fidelity " + format_number(chain.fidelity));
  });
}

void check_closed_forms(Collector& c) {
  c.guarded("closed-form spot values", [&] {
    const ClusterParams cl;
    const InputParams in;
    const Noise amp0{};
    const Noise amp1{Channel::AmplitudeDamping, 1.0};
    const Noise ph{Channel::PhaseDamping, 0.2};
    struct Spot {
      std::string what;
      double got;
      double want;
      double tol;
    };
    const double p75 = 1.0 - std::pow(15.0 / 16.0, 75.0);
    const Spot spots[] = {
        {"P(N=75, xi=0)", net::total_success_prob(amp0, cl, 1.0, 75), p75, 1e-12},
        {"P(N=1, xi=0)", net::total_success_prob(amp0, cl, 1.0, 1), 0.0625, 1e-15},
        {"two-hop P(xi=0)", net::two_hop_success_prob(teleport::PovmParams::for_channel(amp0, cl, 1.0)),
         0.12109375, 1e-15},
        {"gamma_p(0.2)", teleport::PovmParams::for_channel(ph, cl, 1.0).gamma(), 19.53125, 1e-10},
        {"B(0.5)", teleport::amplitude_bracket(cl, 0.5), 0.28125, 1e-15},
        {"F(xi=0, N=40)", net::total_fidelity(amp0, in, cl, 40), 1.0, 1e-12},
        {"F(xi=1, N=3)", net::total_fidelity(amp1, in, cl, 3), 0.0, 1e-15},
    };
    std::string detail;
    bool ok = true;
    for (const auto& s : spots) {
      const bool good = std::abs(s.got - s.want) <= s.tol;
      ok = ok && good;
      detail += s.what + " = " + format_number(s.got) + (good ? "" : " (expected " + format_number(s.want) + ")") + "; ";
    }
    c.hard(ok, "closed-form spot values", detail);
  });
}

void check_hop_model(Collector& c) {
  c.guarded("hop model consistency", [&] {
    double worst = 0.0;
    double trace_err = 0.0;
    const DensityMatrix payload = make_input_density(InputParams{cplx{0.6}, cplx{0.0, 0.8}});
    for (auto policy : {teleport::BranchPolicy::Designated, teleport::BranchPolicy::AllBranches}) {
      teleport::HopSetup s;
      s.noise = Noise{Channel::AmplitudeDamping, 0.3};
      s.policy = policy;
      const teleport::HopModel m(s);
      double total = 0.0;
      for (std::size_t k = 0; k < m.outcomes().size(); ++k) {
        worst = std::max(worst, max_abs_diff(m.apply(k, payload), m.run_direct(k, payload)));
        total += m.probability(k, payload);
      }
      trace_err = std::max(trace_err, std::abs(total - 1.0));
    }
    c.hard(worst <= 1e-12 && trace_err <= 1e-10, "hop model consistency",
           "precomputed maps vs step-by-step pipeline " + sci(worst) + "; outcome probabilities sum to 1 within " +
               sci(trace_err));
  });
}

void check_oracle(Collector& c, const VerifyOptions& opts) {
  c.guarded("one-hop Monte Carlo at xi = 0", [&] {
    const auto rep = teleport::oracle_one_hop(InputParams{}, teleport::HopSetup{}, opts.seed, opts.oracle_trials);
    const bool ok = std::abs(rep.rate - rep.closed_form_success) <= 3.0 * rep.sigma + 1e-15 &&
                    rep.max_fidelity_error <= 1e-10;
    c.hard(ok, "one-hop Monte Carlo at xi = 0",
           "rate " + format_number(rep.rate) + " +/- " + format_number(3.0 * rep.sigma) + " vs 1/(2ϱγₐ) = " +
               format_number(rep.closed_form_success) + "; max |1 - F| " + sci(rep.max_fidelity_error));
  });
}

void warn_discrepancies(Collector& c) {
  const InputParams in;
  const ClusterParams cl;

  c.guarded("branch table signs", [&] {
    const auto printed = teleport::hop_branches(in, cl, Noise{});
    const auto exact = teleport::projected_hop_branches(in, cl, Noise{}, {});
    std::string rows;
    for (std::size_t i = 0; i < 16; ++i) {
      if (max_abs_diff(printed[i].residual, exact[i].residual) > 1e-12) {
        rows += teleport::to_string(printed[i].outcome) + " ";
      }
    }
    if (rows.empty()) {
      c.hard(true, "branch table signs", "printed table equals the projection at xi = 0");
    } else {
      c.warn("branch table signs",
             "at xi = 0 the printed d0 coefficient of the (Phi,Phi) rows has the opposite sign to the "
             "projection: " + rows + "(weights unaffected)");
    }
  });

  c.guarded("noisy branch table vs Kraus bookkeeping", [&] {
    const double xi = 0.3;
    const auto printed = teleport::hop_branches(in, cl, Noise{Channel::AmplitudeDamping, xi});
    double best = 1e300;
    std::string best_set;
    for (unsigned mask = 1; mask < 16; ++mask) {
      std::vector<std::size_t> pos;
      for (std::size_t q = 0; q < 4; ++q) {
        if (mask & (1u << (3 - q))) pos.push_back(q);
      }
      const auto proj = teleport::projected_hop_branches(in, cl, Noise{Channel::AmplitudeDamping, xi}, pos);
      double diff = 0.0;
      for (std::size_t i = 0; i < 16; ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
          diff = std::max(diff, std::abs(std::abs(printed[i].a_part[k]) - std::abs(proj[i].a_part[k])));
          diff = std::max(diff, std::abs(std::abs(printed[i].d_part[k]) - std::abs(proj[i].d_part[k])));
        }
      }
      if (diff < best) {
        best = diff;
        best_set.clear();
        for (std::size_t q : pos) best_set += (best_set.empty() ? "" : ",") + std::to_string(q);
      }
    }
    c.warn("noisy branch table vs Kraus bookkeeping",
           "at xi = 0.3 the closest no-jump subset of cluster positions is {" + best_set +
               "} with max coefficient mismatch " + sci(best) +
               "; the printed xi^2 tau0 interference term has no single-branch Kraus origin");
  });

  c.guarded("CPTP fidelity vs bracket", [&] {
    teleport::HopSetup s;
    s.noise = Noise{Channel::AmplitudeDamping, 0.3};
    const auto rep = teleport::oracle_one_hop(in, s, 1, 1);
    c.warn("CPTP fidelity vs bracket",
           "xi = 0.3: density-matrix oracle fidelity " + format_number(rep.exact_fidelity) +
               ", success " + format_number(rep.exact_success) + "; closed form fidelity " +
               format_number(*rep.closed_form_fidelity) + ", success " +
               format_number(rep.closed_form_success));
  });

  c.guarded("success law composition", [&] {
    const Noise n{};
    c.warn("success law composition",
           "N = 2, xi = 0: at-least-one law " + format_number(net::total_success_prob(n, cl, 1.0, 2)) +
               ", all-hops product " + format_number(net::sequential_success_prob(n, cl, 1.0, 2)) +
               ", printed two-hop formula " +
               format_number(net::two_hop_success_prob(teleport::PovmParams::for_channel(n, cl, 1.0))) +
               "; the closed form counts a trial as successful when any hop succeeds");
  });

  c.warn("POVM outcome labels",
         "P1 heralds a0|00>+d0|11> (no correction) and P2 heralds a0|00>-d0|11> (I x Z); the protocol "
         "text assigns them the other way round; probabilities are unchanged");
  c.warn("G2 prefactor", "the 1/4 missing from the printed second term of G2 is restored");
  c.warn("cluster normalization", "tau3 enters the normalization squared, not cubed");
  c.warn("phase bracket", "a '+' before the xi^4 tau3^2 term is restored");
}

}  // namespace

bool VerifyReport::ok() const {
  return std::none_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.status == Status::Fail; });
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << "qmesh " << QMESH_VERSION << " verification report\n";
  std::size_t pass = 0, warn = 0, fail = 0;
  for (const auto& i : items) {
    const char* tag = i.status == Status::Pass ? "PASS" : i.status == Status::Warn ? "WARN" : "FAIL";
    (i.status == Status::Pass ? pass : i.status == Status::Warn ? warn : fail)++;
    os << tag << "  " << i.name << ": " << i.detail << "\n";
  }
  os << "summary: " << pass << " pass, " << warn << " warn, " << fail << " fail\n";
  return os.str();
}

VerifyReport run_verify(const VerifyOptions& opts) {
  Collector c;
  check_kraus(c, opts);
  check_povm(c);
  check_g1_probability(c);
  check_recovery(c);
  check_branch_sums(c);
  check_swap(c);
  check_closed_forms(c);
  check_hop_model(c);
  check_oracle(c, opts);
  warn_discrepancies(c);
  return VerifyReport{c.take()};
}

}  // namespace qmesh::cli
