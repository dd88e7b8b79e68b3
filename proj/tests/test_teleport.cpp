#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "qmesh/errors.hpp"
#include "qmesh/teleport.hpp"

using namespace qmesh;
using namespace qmesh::teleport;

namespace {

const double kS = 1.0 / std::sqrt(2.0);
const ClusterParams kBalanced{};

oracle::Vec to_vec(const Ket& k) { return {k.amplitudes().begin(), k.amplitudes().end()}; }

// Payload (x) cluster built by bit loops, projected onto outcome `i`.
oracle::Vec naive_residual(cplx a0, cplx d0, const std::array<double, 4>& t, std::size_t i) {
  const auto payload = oracle::ket({{"00", a0}, {"11", d0}}, 2);
  const auto cs = oracle::ket({{"0000", t[0]}, {"0011", t[1]}, {"1100", t[2]}, {"1111", -t[3]}}, 4);
  auto step = oracle::project_pair(oracle::kron(payload, cs), 6, 0, 2, oracle::bell(static_cast<int>(i / 4)));
  return oracle::project_pair(step, 4, 0, 2, oracle::bell(static_cast<int>(i % 4)));
}

ClusterParams normalized_tau(std::array<double, 4> t) {
  double n = 0;
  for (double v : t) n += v * v;
  for (double& v : t) v /= std::sqrt(n);
  return ClusterParams{t};
}

}  // namespace

TEST(Outcome, IndexRoundTrip) {
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(BsmOutcome::from_index(i).index(), i);
  EXPECT_EQ(kDesignatedOutcome.index(), 4u * 2u + 1u);
  EXPECT_THROW(BsmOutcome::from_index(16), UsageError);
}

TEST(Branches, NoiselessProjectionMatchesNaive) {
  const InputParams in{cplx(0.6, 0.0), cplx(0.0, 0.8)};
  const ClusterParams c = normalized_tau({0.3, 0.6, 0.5, 0.4});
  const auto branches = projected_hop_branches(in, c, Noise{}, {});
  ASSERT_EQ(branches.size(), 16u);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(branches[i].outcome.index(), i);
    EXPECT_LE(oracle::max_diff(to_vec(branches[i].residual), naive_residual(in.a0, in.d0, c.tau, i)), 1e-14);
  }
}

TEST(Branches, WeightsSumToOneWithoutNoise) {
  std::mt19937_64 g(21);
  std::normal_distribution<double> d;
  for (int rep = 0; rep < 5; ++rep) {
    const double ang = d(g);
    const InputParams in{cplx(std::cos(ang)), cplx(0.0, std::sin(ang))};
    const ClusterParams c = normalized_tau({std::abs(d(g)) + 0.1, std::abs(d(g)) + 0.1, std::abs(d(g)) + 0.1,
                                            std::abs(d(g)) + 0.1});
    for (const auto& set : {hop_branches(in, c, Noise{}), projected_hop_branches(in, c, Noise{}, {})}) {
      double total = 0;
      for (const auto& b : set) total += b.weight;
      EXPECT_NEAR(total, 1.0, 1e-8);
    }
  }
}

TEST(Branches, DesignatedRowWithoutNoise) {
  const InputParams in{0.6, 0.8};
  const auto b = hop_branches(in, kBalanced, Noise{})[kDesignatedOutcome.index()];
  // (a0 tau2 |10> - d0 tau1 |01>) / 2
  EXPECT_NEAR(std::abs(b.residual[2] - 0.5 * 0.6 * 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(b.residual[1] + 0.5 * 0.8 * 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(b.residual[0]) + std::abs(b.residual[3]), 0.0, 1e-15);
}

TEST(Branches, PrintedAmplitudeRows) {
  const double xi = 0.3, xb = 0.7;
  const InputParams in{0.6, 0.8};
  const ClusterParams c = normalized_tau({0.3, 0.6, 0.5, 0.4});
  const auto& t = c.tau;
  const double mixed = xi * xi * t[0] - t[3];
  const auto rows = hop_branches(in, c, Noise{Channel::AmplitudeDamping, xi});
  for (std::size_t i = 0; i < 16; ++i) {
    const auto o = BsmOutcome::from_index(i);
    const double s = bell_sign(o.first), r = bell_sign(o.second);
    auto want = oracle::Vec(4);
    if (!is_phi(o.first) && !is_phi(o.second)) {
      want[0] = 0.5 * s * r * xb * xb * 0.8 * t[0];
      want[3] = 0.5 * 0.6 * mixed;
    } else if (!is_phi(o.first)) {
      want[1] = 0.5 * s * r * xb * 0.8 * t[1];
      want[2] = 0.5 * xb * 0.6 * t[2];
    } else if (!is_phi(o.second)) {
      want[2] = 0.5 * s * r * xb * 0.8 * t[2];
      want[1] = 0.5 * xb * 0.6 * t[1];
    } else {
      want[3] = -0.5 * s * r * 0.8 * mixed;
      want[0] = 0.5 * xb * xb * 0.6 * t[0];
    }
    EXPECT_LE(oracle::max_diff(to_vec(rows[i].residual), want), 1e-15) << to_string(o);
  }
}

// The printed (Phi, Phi) rows carry the opposite tau3 sign to the projection.
TEST(Branches, PrintedPhiPhiSignDiffersFromProjection) {
  const InputParams in{0.6, 0.8};
  const auto printed = hop_branches(in, kBalanced, Noise{})[0];
  const auto naive = naive_residual(in.a0, in.d0, kBalanced.tau, 0);
  EXPECT_NEAR(std::abs(printed.residual[3] + naive[3]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(naive[3] + 0.5 * 0.8 * 0.5), 0.0, 1e-15);
  // The other three families agree with the projection at zero noise.
  for (std::size_t i = 0; i < 16; ++i) {
    const auto o = BsmOutcome::from_index(i);
    if (is_phi(o.first) && is_phi(o.second)) continue;
    EXPECT_LE(oracle::max_diff(to_vec(hop_branches(in, kBalanced, Noise{})[i].residual),
                               naive_residual(in.a0, in.d0, kBalanced.tau, i)),
              1e-15);
  }
}

TEST(Branches, BasisPayloadKeepsOnlyTheA0Terms) {
  const auto rows = hop_branches(InputParams{1.0, 0.0}, kBalanced, Noise{});
  for (const auto& b : rows) EXPECT_LE(max_abs_diff(b.residual, b.a_part), 1e-15);
  // (Psi, Phi) rows: tau2 |10>. (Phi, Psi) rows: tau1 |01>.
  const BsmOutcome psi_phi{BellKind::PsiMinus, BellKind::PhiPlus};
  const BsmOutcome phi_psi{BellKind::PhiMinus, BellKind::PsiPlus};
  EXPECT_NEAR(rows[psi_phi.index()].residual[2].real(), 0.25, 1e-15);
  EXPECT_NEAR(rows[phi_psi.index()].residual[1].real(), 0.25, 1e-15);
}

TEST(Branches, PhaseRowsDressTauByNoJumpFactor) {
  const double xi = 0.2;
  const auto rows = hop_branches(InputParams{0.6, 0.8}, kBalanced, Noise{Channel::PhaseDamping, xi});
  const auto& b = rows[kDesignatedOutcome.index()];
  const double dress = (1 - xi) * (1 - xi);
  EXPECT_NEAR(b.residual[2].real(), 0.5 * dress * 0.6 * 0.5, 1e-15);
  EXPECT_NEAR(b.residual[1].real(), -0.5 * dress * 0.8 * 0.5, 1e-15);
}

TEST(Recovery, DesignatedPipeline) {
  const double xi = 0.2, xb = 0.8;
  const InputParams in{0.6, 0.8};
  const ClusterParams c = normalized_tau({0.3, 0.6, 0.5, 0.4});
  const auto& t = c.tau;
  const auto b = hop_branches(in, c, Noise{Channel::AmplitudeDamping, xi})[kDesignatedOutcome.index()];
  const auto r = recovery_pipeline(b);
  EXPECT_EQ(r.correction[0], Pauli::X);
  EXPECT_EQ(r.correction[1], Pauli::I);
  EXPECT_LE(oracle::max_diff(to_vec(r.g0), oracle::ket({{"00", 0.5 * xb * 0.6 * t[2]}, {"11", -0.5 * xb * 0.8 * t[1]}}, 2)),
            1e-15);
  EXPECT_LE(oracle::max_diff(to_vec(r.g1),
                             oracle::ket({{"0000", 0.5 * xb * 0.6 * t[2]}, {"1100", -0.5 * xb * 0.8 * t[1]}}, 4)),
            1e-15);
  // Quarter-weighted decomposition of G2.
  const auto plus = oracle::ket({{"00", 0.6}, {"11", 0.8}}, 2);
  const auto minus = oracle::ket({{"00", 0.6}, {"11", -0.8}}, 2);
  const auto anc_m = oracle::ket({{"00", xb * t[2]}, {"11", -xb * t[1]}}, 2);
  const auto anc_p = oracle::ket({{"00", xb * t[2]}, {"11", xb * t[1]}}, 2);
  auto want = oracle::kron(plus, anc_m);
  const auto second = oracle::kron(minus, anc_p);
  for (std::size_t i = 0; i < want.size(); ++i) want[i] = 0.25 * (want[i] + second[i]);
  EXPECT_LE(oracle::max_diff(to_vec(r.g2), want), 1e-15);
  EXPECT_NEAR(std::abs(r.c00 - xb * t[2]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.c11 + xb * t[1]), 0.0, 1e-15);
}

TEST(Recovery, BalancedCornerAmplitudes) {
  const auto b = hop_branches(InputParams{}, kBalanced, Noise{})[kDesignatedOutcome.index()];
  const auto r = recovery_pipeline(b);
  EXPECT_NEAR(r.g2[0].real(), 0.25 * kS, 1e-15);
  EXPECT_NEAR(r.g2[15].real(), -0.25 * kS, 1e-15);
}

TEST(Recovery, DegenerateBranchThrows) {
  // Full damping wipes out the designated residual.
  const auto b = hop_branches(InputParams{}, kBalanced, Noise{Channel::AmplitudeDamping, 1.0})
      [kDesignatedOutcome.index()];
  EXPECT_TRUE(b.residual.is_zero());
  EXPECT_THROW(recovery_pipeline(b), DegenerateError);
}

TEST(Recovery, EveryNoiselessBranchIsRecoverable) {
  const auto rows = projected_hop_branches(InputParams{0.6, 0.8}, kBalanced, Noise{}, {});
  for (const auto& b : rows) {
    const auto r = recovery_pipeline(b);
    const Ket a = pauli_string_matrix(r.correction) * b.a_part;
    const Ket d = pauli_string_matrix(r.correction) * b.d_part;
    EXPECT_NEAR(std::abs(a[1]) + std::abs(a[2]) + std::abs(a[3]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d[0]) + std::abs(d[1]) + std::abs(d[2]), 0.0, 1e-15);
  }
}

TEST(Povm, BalancedNoiselessElements) {
  const auto p = PovmParams::for_channel(Noise{}, kBalanced, 1.0);
  EXPECT_NEAR(p.gamma(), 8.0, 1e-12);
  const auto s = povm_set(p);
  EXPECT_NEAR(std::abs(inner(s.lambda1, Ket(std::vector<cplx>{kS, 0, 0, -kS}))), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(inner(s.lambda2, Ket(std::vector<cplx>{kS, 0, 0, kS}))), 1.0, 1e-15);
  const auto ev = hermitian_eigenvalues(s.p3);
  EXPECT_NEAR(ev[0], 0.0, 1e-12);
  EXPECT_NEAR(ev[1], 0.0, 1e-12);
  EXPECT_NEAR(ev[2], 1.0, 1e-12);
  EXPECT_NEAR(ev[3], 1.0, 1e-12);
  EXPECT_NEAR(s.p3(1, 1).real(), 1.0, 1e-15);
  EXPECT_NEAR(s.p3(0, 0).real(), 0.0, 1e-15);
}

TEST(Povm, GammaAtHalfRate) {
  EXPECT_NEAR(PovmParams::for_channel(Noise{Channel::AmplitudeDamping, 0.5}, kBalanced, 1.0).gamma(), 32.0, 1e-12);
}

TEST(Povm, UnequalCoefficientsOverlapAndIdentity) {
  const ClusterParams c = normalized_tau({0.3, 0.6, 0.5, 0.4});
  const auto p = PovmParams::for_channel(Noise{}, c, 3.0);
  const auto s = povm_set(p);
  const double g = p.gamma();
  const double want = std::abs(1.0 / std::norm(p.c00) - 1.0 / std::norm(p.c11)) / g;
  EXPECT_NEAR(std::abs(inner(s.lambda1, s.lambda2)), want, 1e-12);
  EXPECT_LE(max_abs_diff(s.p1 + s.p2 + s.p3, Matrix::identity(4)), 1e-10);
  EXPECT_NEAR(minimal_rho(p), 1.0 + want, 1e-12);
}

TEST(Povm, IdentityAndPositivityOnGrid) {
  for (int i = 0; i <= 90; ++i) {
    for (Channel ch : {Channel::AmplitudeDamping, Channel::PhaseDamping}) {
      const auto s = povm_set(PovmParams::for_channel(Noise{ch, i / 100.0}, kBalanced, 1.0));
      EXPECT_LE(max_abs_diff(s.p1 + s.p2 + s.p3, Matrix::identity(4)), 1e-10);
      for (const Matrix* m : {&s.p1, &s.p2, &s.p3}) EXPECT_GE(hermitian_eigenvalues(*m).front(), -1e-9);
    }
  }
}

TEST(Povm, PositivityErrorCarriesMinimalRho) {
  const ClusterParams c = normalized_tau({0.3, 0.6, 0.5, 0.4});
  const auto p = PovmParams::for_channel(Noise{}, c, 1.0);
  try {
    povm_set(p);
    FAIL() << "expected PositivityError";
  } catch (const PositivityError& e) {
    EXPECT_GT(e.minimal_rho(), 1.0);
    EXPECT_NO_THROW(povm_set(PovmParams{e.minimal_rho() * (1 + 1e-9), p.c00, p.c11}));
  }
  EXPECT_THROW(povm_set(PovmParams::for_channel(Noise{}, kBalanced, 0.5)), PositivityError);
}

// <G|P_k|G> by bit loops with the POVM elements written out independently.
TEST(Povm, ConclusiveWeightsMatchQuarterOverRhoGamma) {
  for (double rho : {1.0, 2.0})
    for (double xi : {0.0, 0.25, 0.5}) {
      const double xb = 1 - xi, a0 = 0.6, d0 = 0.8, t1 = 0.5, t2 = 0.5;
      const double c00 = xb * t2, c11 = -xb * t1;
      const double gamma = 1 / (c00 * c00) + 1 / (c11 * c11);
      oracle::Vec g(16);
      g[0b0000] = 0.5 * xb * a0 * t2;
      g[0b1111] = -0.5 * xb * d0 * t1;
      for (double sign : {1.0, -1.0}) {
        const oracle::Vec lambda{1 / c00 / std::sqrt(gamma), 0, 0, sign / c11 / std::sqrt(gamma)};
        double w = 0;
        for (std::size_t e = 0; e < 4; ++e) {
          cplx amp = 0;
          for (std::size_t de = 0; de < 4; ++de) amp += std::conj(lambda[de]) * g[4 * e + de];
          w += std::norm(amp) / rho;
        }
        EXPECT_NEAR(w, (a0 * a0 + d0 * d0) / (4 * rho * gamma), 1e-12);
      }
      // The library POVM on the library G2 gives the same joint weights.
      const auto b = hop_branches(InputParams{a0, d0}, kBalanced, Noise{Channel::AmplitudeDamping, xi})
          [kDesignatedOutcome.index()];
      const auto r = recovery_pipeline(b);
      std::mt19937_64 rng(1);
      const auto res = povm_measure(r.g2, povm_set(PovmParams::for_recovery(r, rho)), rng);
      EXPECT_NEAR(res.weights[0], 1 / (4 * rho * gamma), 1e-10);
      EXPECT_NEAR(res.weights[1], 1 / (4 * rho * gamma), 1e-10);
      EXPECT_NEAR(res.weights[0] + res.weights[1],
                  hop_success_prob(PovmParams::for_channel(Noise{Channel::AmplitudeDamping, xi}, kBalanced, rho)),
                  1e-10);
    }
}

TEST(Povm, RhoTwoHalvesBalancedWeights) {
  const auto b = hop_branches(InputParams{}, kBalanced, Noise{})[kDesignatedOutcome.index()];
  const auto r = recovery_pipeline(b);
  std::mt19937_64 rng(2);
  const auto res = povm_measure(r.g2, povm_set(PovmParams::for_recovery(r, 2.0)), rng);
  EXPECT_NEAR(res.weights[0], 1.0 / 64, 1e-12);
  EXPECT_NEAR(res.weights[1], 1.0 / 64, 1e-12);
}

TEST(Povm, ConclusiveOutcomesRestorePayload) {
  const InputParams in{cplx(0.6, 0.0), cplx(0.0, 0.8)};
  const Ket target = make_input(in);
  const auto b = hop_branches(in, kBalanced, Noise{})[kDesignatedOutcome.index()];
  const auto r = recovery_pipeline(b);
  const auto povm = povm_set(PovmParams::for_recovery(r, 1.5));
  std::mt19937_64 rng(3);
  int conclusive = 0, failed = 0;
  for (int i = 0; i < 400; ++i) {
    const auto res = povm_measure(r.g2, povm, rng);
    if (res.failed) {
      ++failed;
      EXPECT_EQ(res.outcome, PovmOutcome::P3);
      continue;
    }
    ++conclusive;
    EXPECT_NEAR(std::norm(inner(target, res.post_state)), 1.0, 1e-10);
  }
  EXPECT_GT(conclusive, 0);
  EXPECT_GT(failed, 0);
}

TEST(Povm, PayloadSignFlipNeedsZOnSecondQubit) {
  EXPECT_LE(max_abs_diff(povm_correction(PovmOutcome::P1), Matrix::identity(4)), 0.0);
  EXPECT_LE(max_abs_diff(povm_correction(PovmOutcome::P2), Matrix::diagonal(std::vector<cplx>{1, -1, 1, -1})), 0.0);
}

TEST(ClosedForm, HopSuccessExamples) {
  EXPECT_NEAR(hop_success_prob(PovmParams::for_channel(Noise{}, kBalanced, 1.0)), 0.0625, 1e-15);
  EXPECT_NEAR(hop_success_prob(PovmParams::for_channel(Noise{Channel::AmplitudeDamping, 0.5}, kBalanced, 1.0)),
              0.015625, 1e-15);
  const auto ph = PovmParams::for_channel(Noise{Channel::PhaseDamping, 0.2}, kBalanced, 1.0);
  EXPECT_NEAR(ph.gamma(), 19.53125, 1e-12);
  EXPECT_NEAR(hop_success_prob(ph), 0.0256, 1e-15);
  EXPECT_EQ(hop_success_prob(PovmParams::for_channel(Noise{Channel::AmplitudeDamping, 1.0}, kBalanced, 1.0)), 0.0);
}

TEST(ClosedForm, AmplitudeBracket) {
  EXPECT_NEAR(amplitude_bracket(normalized_tau({0.3, 0.6, 0.5, 0.4}), 0.0), 1.0, 1e-12);
  EXPECT_NEAR(amplitude_bracket(kBalanced, 0.5), 0.28125, 1e-15);
  EXPECT_NEAR(amplitude_bracket(kBalanced, 1.0), 0.0, 1e-15);
  for (int i = 0; i <= 100; ++i) {
    const double b = amplitude_bracket(kBalanced, i / 100.0);
    EXPECT_GE(b, 0.0);
    EXPECT_LE(b, 1.0);
  }
}

TEST(ClosedForm, PhaseBracket) {
  EXPECT_NEAR(phase_bracket(kBalanced, 0.0), 1.0, 1e-15);
  const double xi = 0.3, xb = 0.7;
  const double outer = xb * xb + xi * xi;
  const double want = 0.25 * outer * outer + 0.75 * std::pow(xb, 4) + 2 * 0.25 * xi * xi * xb * xb +
                      std::pow(xi, 4) * 0.25;
  EXPECT_NEAR(phase_bracket(kBalanced, xi), want, 1e-15);
}

TEST(ClosedForm, OutputDensityAndFidelity) {
  const InputParams in{0.6, 0.8};
  EXPECT_LE(max_abs_diff(hop_output_density(in, kBalanced, 0.0), make_input_density(in)), 1e-12);
  const auto out = hop_output_density(in, kBalanced, 0.5);
  EXPECT_NEAR(out(0, 0).real(), 0.36 * 0.28125, 1e-15);
  EXPECT_NEAR(out(0, 3).real(), 0.48, 1e-15);
  EXPECT_NEAR(hop_fidelity(in, kBalanced, Noise{}), 1.0, 1e-12);
  EXPECT_NEAR(hop_fidelity(in, kBalanced, Noise{Channel::AmplitudeDamping, 0.5}), 0.28125, 1e-12);
  EXPECT_NEAR(hop_fidelity(in, kBalanced, Noise{Channel::AmplitudeDamping, 0.5}, HopSpan::TwoHop),
              std::pow(0.28125, 3), 1e-12);
  EXPECT_THROW(hop_fidelity(in, kBalanced, Noise{Channel::PhaseDamping, 0.1}), UnsupportedVariant);
}

TEST(HopModel, LinearMapMatchesDirectPipeline) {
  const InputParams in{cplx(0.6, 0.0), cplx(0.0, 0.8)};
  for (auto policy : {BranchPolicy::Designated, BranchPolicy::AllBranches}) {
    HopSetup s;
    s.noise = Noise{Channel::AmplitudeDamping, 0.3};
    s.policy = policy;
    const HopModel m(s);
    const auto payload = make_input_density(in);
    double total = 0;
    for (std::size_t k = 0; k < m.outcomes().size(); ++k) {
      EXPECT_LE(max_abs_diff(m.apply(k, payload), m.run_direct(k, payload)), 1e-12);
      total += m.probability(k, payload);
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(HopModel, NoiselessDesignatedSuccessIsExact) {
  const InputParams in{0.6, 0.8};
  const HopModel m(HopSetup{});
  const auto payload = make_input_density(in);
  double success = 0;
  for (std::size_t k = 0; k < m.outcomes().size(); ++k) {
    if (!m.outcomes()[k].success) continue;
    const double p = m.probability(k, payload);
    success += p;
    if (p > 0) EXPECT_NEAR(fidelity_pure(m.apply(k, payload).normalized(), make_input(in)), 1.0, 1e-10);
  }
  EXPECT_NEAR(success, 1.0 / 16, 1e-12);
}

TEST(HopModel, RejectsBadPositions) {
  HopSetup s;
  s.noisy_positions = {1, 1};
  EXPECT_THROW(HopModel{s}, UsageError);
  s.noisy_positions = {4};
  EXPECT_THROW(HopModel{s}, UsageError);
}

TEST(Oracle, NoiselessRateAndFidelity) {
  const auto rep = oracle_one_hop(InputParams{}, HopSetup{}, 2024, 100000);
  EXPECT_EQ(rep.trials, 100000u);
  EXPECT_LE(std::abs(rep.rate - 0.0625), 3 * std::sqrt(0.0625 * 0.9375 / 1e5));
  EXPECT_NEAR(rep.max_fidelity_error, 0.0, 1e-10);
  EXPECT_NEAR(rep.exact_success, 0.0625, 1e-12);
  std::size_t counted = 0;
  for (const auto& b : rep.branches) counted += b.count;
  EXPECT_EQ(counted, rep.trials);
}

TEST(Oracle, IndependentOfWorkerCount) {
  HopSetup s;
  s.noise = Noise{Channel::AmplitudeDamping, 0.3};
  const auto a = oracle_one_hop(InputParams{0.6, 0.8}, s, 99, 30000, 1);
  const auto b = oracle_one_hop(InputParams{0.6, 0.8}, s, 99, 30000, 4);
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_EQ(a.mean_fidelity, b.mean_fidelity);
  EXPECT_EQ(a.text(), b.text());
  ASSERT_TRUE(a.closed_form_fidelity.has_value());
  EXPECT_NEAR(*a.closed_form_fidelity, amplitude_bracket(ClusterParams{}, 0.3), 1e-12);
}
