#pragma once

// One-hop teleportation of a0|00> + d0|11> over a noisy 4-qubit cluster.
//
// Register layout for the hop: S1 S2 S3 E1 E3 E2. The source holds S1 S2 (the
// payload) and S3; the cluster occupies S3 E1 E3 E2. Bell measurements on
// (S1,S3) and (S2,E3) leave the payload on (E1,E2). Recovery appends the
// ancilla pair D E, giving the register E1 E2 D E.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qmesh/channels.hpp"
#include "qmesh/qmath.hpp"
#include "qmesh/states.hpp"

namespace qmesh::teleport {

namespace reg {
inline constexpr std::size_t kS1 = 0;
inline constexpr std::size_t kS2 = 1;
inline constexpr std::size_t kS3 = 2;
inline constexpr std::size_t kE1 = 3;
inline constexpr std::size_t kE3 = 4;
inline constexpr std::size_t kE2 = 5;
}  // namespace reg

// Cluster positions (0 = S3, 1 = E1, 2 = E3, 3 = E2) that cross the noisy
// link by default: the three qubits shipped from S to E.
inline const std::vector<std::size_t> kDefaultNoisyPositions{1, 2, 3};

struct BsmOutcome {
  BellKind first = BellKind::PhiPlus;   // on (S1, S3)
  BellKind second = BellKind::PhiPlus;  // on (S2, E3)

  std::size_t index() const;
  static BsmOutcome from_index(std::size_t i);
  friend bool operator==(const BsmOutcome&, const BsmOutcome&) = default;
};

std::string to_string(const BsmOutcome& o);

// The outcome whose recovery path the protocol spells out.
inline constexpr BsmOutcome kDesignatedOutcome{BellKind::PsiPlus, BellKind::PhiMinus};

struct HopBranch {
  BsmOutcome outcome;
  Ket residual;  // on (E1, E2), unnormalized
  // residual = a0 * a_part + d0 * d_part
  Ket a_part;
  Ket d_part;
  double weight = 0.0;  // residual.norm_squared()
};

// Branch table with the noise folded into the amplitudes as the protocol
// writes it. Amplitude damping uses the printed closed-form coefficients;
// phase damping uses the no-jump Kraus element on all four cluster qubits,
// which dresses tau1, tau2 with (1-xi)^2 as in gamma_p. Ordered by
// BsmOutcome::index().
std::vector<HopBranch> hop_branches(const InputParams& input, const ClusterParams& cluster,
                                    const Noise& noise);

// Brute-force projection of payload x (K0 applied to `noisy_positions` of the
// cluster). With xi = 0 this is the exact noiseless branch table.
std::vector<HopBranch> projected_hop_branches(const InputParams& input, const ClusterParams& cluster,
                                              const Noise& noise,
                                              std::span<const std::size_t> noisy_positions);

struct Recovery {
  std::array<Pauli, 2> correction{Pauli::I, Pauli::I};  // on (E1, E2)
  Ket g0;  // corrected residual: a0*u|00> + d0*v|11>
  Ket g1;  // g0 (x) |00>_DE
  Ket g2;  // CNOT(E1,D) CNOT(E2,E) g1
  // 2u and 2v: the dressed coefficients with the Bell-measurement 1/2 removed.
  cplx c00;
  cplx c11;
};

// Finds the lowest-weight Pauli pair on (E1,E2) that maps the a0 component
// onto |00> and the d0 component onto |11>, then builds G0, G1, G2.
// Throws DegenerateError if either component vanishes or no pair works.
Recovery recovery_pipeline(const HopBranch& branch);

struct PovmParams {
  double rho = 1.0;
  // Coefficients of |00> and |11> in the ancilla state that pairs with
  // a0|00> + d0|11>. For the designated outcome these are (1-xi)tau2 and
  // -(1-xi)tau1.
  cplx c00{0.5};
  cplx c11{-0.5};

  // 1/|c00|^2 + 1/|c11|^2
  double gamma() const;

  // Dressed coefficients per channel: (1-xi) tau for amplitude damping,
  // (1-xi)^2 tau for phase damping.
  static PovmParams for_channel(const Noise& noise, const ClusterParams& cluster, double rho);
  static PovmParams for_recovery(const Recovery& r, double rho);
};

struct PovmSet {
  Ket lambda1;  // normalized (1/c00*)|00> + (1/c11*)|11>
  Ket lambda2;  // normalized (1/c00*)|00> - (1/c11*)|11>
  Matrix p1;
  Matrix p2;
  Matrix p3;
};

// Smallest rho for which I - (|L1><L1| + |L2><L2|)/rho is positive semidefinite.
double minimal_rho(const PovmParams& p);

// Throws PositivityError (carrying minimal_rho) when P3 is not PSD.
PovmSet povm_set(const PovmParams& p);

enum class PovmOutcome { P1, P2, P3 };

std::string_view povm_name(PovmOutcome o);

// Correction applied on (E1,E2) after a conclusive result. P1 singles out the
// ancilla state paired with a0|00> + d0|11> (nothing to undo); P2 the one
// paired with a0|00> - d0|11> (undo with I (x) Z).
Matrix povm_correction(PovmOutcome o);

struct PovmResult {
  PovmOutcome outcome = PovmOutcome::P3;
  // <G2| I (x) P_k |G2> for k = 1, 2, 3 (joint with the branch weight).
  std::array<double, 3> weights{};
  double prob = 0.0;  // weight of the sampled outcome
  bool failed = true;
  // Normalized (E1,E2) state after the correction; G2 unchanged on failure.
  Ket post_state;
};

// Samples with Born weights conditioned on G2. Throws InternalError when the
// three weights do not add up to |G2|^2 within kProductTol.
PovmResult povm_measure(const Ket& g2, const PovmSet& povm, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Closed forms

// 1 / (2 rho gamma); zero when a dressed coefficient vanishes.
double hop_success_prob(const PovmParams& p);

// tau0^2((1-xi)^4 + xi^4) + (tau1^2 + tau2^2)(1-xi)^2 - 2 tau0 tau3 xi^2 + tau3^2
double amplitude_bracket(const ClusterParams& c, double xi);

// tau0^2((1-xi)^2 + xi^2)^2 + (tau1^2+tau2^2+tau3^2)(1-xi)^4
//   + 2 tau3^2 xi^2 (1-xi)^2 + xi^4 tau3^2
double phase_bracket(const ClusterParams& c, double xi);

// Output density at E: off-diagonal corners untouched, diagonal corners
// scaled by amplitude_bracket. Not renormalized.
DensityMatrix hop_output_density(const InputParams& input, const ClusterParams& c, double xi_a);

enum class HopSpan { SingleHop, TwoHop };

// Amplitude damping only: bracket * w^2 (single hop) or bracket^3 * w^2
// (two hops), w = |a0|^2 + |d0|^2. Phase damping throws UnsupportedVariant.
double hop_fidelity(const InputParams& input, const ClusterParams& c, const Noise& noise,
                    HopSpan span = HopSpan::SingleHop);

// ---------------------------------------------------------------------------
// Density-matrix simulation of one hop

enum class BranchPolicy {
  // Only kDesignatedOutcome is recovered; every other outcome is a failure.
  // This is the event whose probability the closed forms describe.
  Designated,
  // Every outcome gets its own Pauli correction and POVM.
  AllBranches,
};

struct HopSetup {
  ClusterParams cluster;
  Noise noise;
  std::vector<std::size_t> noisy_positions = kDefaultNoisyPositions;
  double rho = 1.0;
  BranchPolicy policy = BranchPolicy::Designated;
};

// Receiver's recovery plan for one Bell outcome. Derived from the noiseless
// residual structure, so it never depends on the payload.
struct BranchPlan {
  BsmOutcome outcome;
  bool recoverable = false;
  std::array<Pauli, 2> correction{Pauli::I, Pauli::I};
  PovmParams povm_params;
  PovmSet povm;
};

// Every (Bell outcome, POVM outcome) pair of a hop as a linear map on the
// 2-qubit payload density matrix.
class HopModel {
 public:
  struct Outcome {
    BsmOutcome bsm;
    std::optional<PovmOutcome> povm;  // empty when the branch is not recovered
    bool success = false;
  };

  struct Sample {
    std::size_t outcome = 0;
    double prob = 0.0;
    DensityMatrix state;  // normalized (E1,E2) state
  };

  explicit HopModel(HopSetup setup);

  const HopSetup& setup() const noexcept { return setup_; }
  const std::vector<BranchPlan>& plans() const noexcept { return plans_; }
  const std::vector<Outcome>& outcomes() const noexcept { return outcomes_; }
  const DensityMatrix& noisy_cluster() const noexcept { return noisy_cluster_; }

  // Unnormalized output for outcome k; its trace is the joint probability.
  DensityMatrix apply(std::size_t k, const DensityMatrix& payload) const;
  double probability(std::size_t k, const DensityMatrix& payload) const;
  // Step-by-step pipeline (tensor, channel, Bell projections, correction,
  // ancilla, CNOTs, POVM element, final correction). Reference for apply().
  DensityMatrix run_direct(std::size_t k, const DensityMatrix& payload) const;

  // Picks an outcome from a uniform draw u in [0, 1).
  Sample sample(const DensityMatrix& payload, double u) const;

 private:
  DensityMatrix branch_residual(const BsmOutcome& o, const DensityMatrix& payload) const;
  DensityMatrix recover(const BranchPlan& plan, std::optional<PovmOutcome> povm,
                        const DensityMatrix& residual) const;

  HopSetup setup_;
  DensityMatrix noisy_cluster_;
  std::vector<BranchPlan> plans_;
  std::vector<Outcome> outcomes_;
  // images_[k][4*i + j] = outcome k applied to |i><j|
  std::vector<std::vector<Matrix>> images_;
  std::vector<std::array<cplx, 16>> trace_weights_;
};

struct BranchStats {
  BsmOutcome outcome;
  bool recoverable = false;
  double exact_prob = 0.0;  // probability of this Bell outcome
  std::size_t count = 0;
  std::size_t successes = 0;
  double fidelity_sum = 0.0;
};

struct OracleReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  double rate = 0.0;
  double sigma = 0.0;            // binomial standard error of `rate`
  double mean_fidelity = 0.0;    // over successful trials; NaN when there are none
  double max_fidelity_error = 0.0;  // max |1 - F| over successful trials
  double exact_success = 0.0;    // success probability from the model
  double exact_fidelity = 0.0;   // success-conditioned fidelity from the model
  double closed_form_success = 0.0;
  std::optional<double> closed_form_fidelity;  // amplitude damping only
  std::array<BranchStats, 16> branches{};

  std::string text() const;
};

// Monte Carlo over `trials` independent hops. Trials are split into fixed
// blocks seeded from (seed, block index), so the result does not depend on
// `workers` (0 = OpenMP default).
OracleReport oracle_one_hop(const InputParams& input, const HopSetup& setup, std::uint64_t seed,
                            std::size_t trials, int workers = 0);

}  // namespace qmesh::teleport
