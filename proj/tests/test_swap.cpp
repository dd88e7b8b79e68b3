#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "qmesh/errors.hpp"
#include "qmesh/swap.hpp"

using namespace qmesh;
using namespace qmesh::swap;

namespace {

oracle::Vec to_vec(const Ket& k) { return {k.amplitudes().begin(), k.amplitudes().end()}; }

oracle::Mat pauli_oracle(Pauli p) {
  switch (p) {
    case Pauli::I: return {{1, 0}, {0, 1}};
    case Pauli::X: return {{0, 1}, {1, 0}};
    case Pauli::Z: return {{1, 0}, {0, -1}};
    case Pauli::XZ: return {{0, -1}, {1, 0}};
  }
  return {};
}

oracle::Vec apply_string(oracle::Vec v, const std::array<Pauli, 4>& s) {
  for (std::size_t q = 0; q < 4; ++q) v = oracle::apply1(v, 4, q, pauli_oracle(s[q]));
  return v;
}

const oracle::Vec kCluster = oracle::ket({{"0000", 0.5}, {"0011", 0.5}, {"1100", 0.5}, {"1111", -0.5}}, 4);

// Printed sign pattern of the residual on R4 D1 D2 D3 for signs r (I3,I4) and z (I1,I2).
oracle::Vec printed_pattern(const SwapOutcome& o) {
  const double r = bell_sign(o.pair34), z = bell_sign(o.pair12);
  if (is_phi(o.pair34) && is_phi(o.pair12))
    return oracle::ket({{"0000", 1}, {"0011", 1}, {"1100", -r * z}, {"1111", r * z}}, 4);
  if (!is_phi(o.pair34) && is_phi(o.pair12))
    return oracle::ket({{"0100", 1}, {"0111", -1}, {"1000", -r * z}, {"1011", -r * z}}, 4);
  if (is_phi(o.pair34))
    return oracle::ket({{"0100", r}, {"0111", -r}, {"1000", z}, {"1011", z}}, 4);
  return oracle::ket({{"0000", r}, {"0011", r}, {"1100", z}, {"1111", -z}}, 4);
}

ClusterParams skewed() {
  std::array<double, 4> t{0.2, 0.7, 0.4, 0.5};
  double n = 0;
  for (double v : t) n += v * v;
  for (double& v : t) v /= std::sqrt(n);
  return ClusterParams{t};
}

}  // namespace

TEST(SwapOutcome, IndexRoundTrip) {
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(SwapOutcome::from_index(i).index(), i);
  EXPECT_THROW(SwapOutcome::from_index(16), UsageError);
}

TEST(SwapBranches, BalancedWeightsAreUniform) {
  const auto br = swap_branches(ClusterParams{});
  ASSERT_EQ(br.size(), 16u);
  for (const auto& b : br) EXPECT_NEAR(b.weight, 1.0 / 16, 1e-12);
}

TEST(SwapBranches, WeightsSumToOne) {
  double total = 0;
  for (const auto& b : swap_branches(skewed())) total += b.weight;
  EXPECT_NEAR(total, 1.0, 1e-8);
}

TEST(SwapBranches, PrintedPatternsUpToGlobalSign) {
  for (const auto& b : swap_branches(ClusterParams{})) {
    auto want = printed_pattern(b.outcome);
    for (auto& a : want) a *= 1.0 / 8;
    const auto got = to_vec(b.residual);
    const cplx overlap = oracle::dot(want, got);
    EXPECT_NEAR(std::abs(overlap), oracle::norm2(want), 1e-14) << to_string(b.outcome);
    EXPECT_NEAR(oracle::norm2(got), oracle::norm2(want), 1e-14);
  }
}

TEST(SwapBranches, ResidualMatchesDirectProjection) {
  const Ket cs = make_cluster(skewed());
  const auto br = swap_branches(skewed());
  for (const auto& b : br) EXPECT_LE(max_abs_diff(swap_residual(cs, cs, b.outcome), b.residual), 0.0);
}

TEST(FindCorrection, WorkedExample) {
  const Ket r(oracle::ket({{"0100", 1}, {"0111", -1}, {"1000", -1}, {"1011", -1}}, 4));
  const auto e = find_correction(r, ClusterParams{});
  EXPECT_EQ(e.pauli_string(), "XZ.I.I.I");
  EXPECT_NEAR(e.fidelity, 1.0, 1e-12);
  auto fixed = apply_string(to_vec(r.normalized()), e.paulis);
  EXPECT_NEAR(std::norm(oracle::dot(kCluster, fixed)), 1.0, 1e-12);
}

TEST(FindCorrection, ClusterNeedsNothing) {
  const auto e = find_correction(make_cluster(ClusterParams{}), ClusterParams{});
  EXPECT_EQ(e.pauli_string(), "I.I.I.I");
  EXPECT_NEAR(e.fidelity, 1.0, 1e-12);
  EXPECT_NEAR(std::abs(e.global_phase - 1.0), 0.0, 1e-12);
}

TEST(FindCorrection, ZeroResidualThrows) { EXPECT_THROW(find_correction(Ket(16), ClusterParams{}), DegenerateError); }

TEST(CorrectionTable, EveryBalancedBranchIsRestored) {
  const auto table = correction_table(ClusterParams{});
  const auto br = swap_branches(ClusterParams{});
  ASSERT_EQ(table.size(), 16u);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_GE(table[i].fidelity, 1.0 - 1e-10);
    const auto fixed = apply_string(to_vec(br[i].residual.normalized()), table[i].paulis);
    EXPECT_NEAR(std::norm(oracle::dot(kCluster, fixed)), 1.0, 1e-10) << table[i].pauli_string();
  }
}

TEST(CorrectionTable, CorrectionIsInvolutive) {
  const auto table = correction_table(ClusterParams{});
  const auto br = swap_branches(ClusterParams{});
  for (std::size_t i = 0; i < 16; ++i) {
    const auto start = to_vec(br[i].residual);
    const auto twice = apply_string(apply_string(start, table[i].paulis), table[i].paulis);
    EXPECT_NEAR(std::abs(oracle::dot(start, twice)), oracle::norm2(start), 1e-14);
  }
}

TEST(CorrectionTable, SkewedClusterIsDeterministicAndBounded) {
  const auto a = correction_table(skewed());
  const auto b = correction_table(skewed());
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(a[i].pauli_string(), b[i].pauli_string());
    EXPECT_EQ(a[i].fidelity, b[i].fidelity);
    EXPECT_GE(a[i].fidelity, 0.0);
    EXPECT_LE(a[i].fidelity, 1.0 + 1e-12);
  }
}

TEST(CorrectionTable, Csv) {
  std::ostringstream os;
  write_correction_csv(os, correction_table(ClusterParams{}));
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "outcome_pair34,outcome_pair12,pauli_string,fidelity");
  int rows = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#') ++rows;
  }
  EXPECT_EQ(rows, 16);
  EXPECT_NE(os.str().find("XZ.I.I.I"), std::string::npos);
}

TEST(SwapChain, SingleSegmentIsTheCluster) {
  std::mt19937_64 rng(5);
  const auto res = swap_chain(1, ClusterParams{}, rng);
  EXPECT_TRUE(res.log.empty());
  EXPECT_LE(oracle::max_diff(to_vec(res.resource), kCluster), 1e-15);
}

TEST(SwapChain, TwoSegmentsAnySeed) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    const auto res = swap_chain(2, ClusterParams{}, rng);
    ASSERT_EQ(res.log.size(), 1u);
    EXPECT_NEAR(std::norm(oracle::dot(kCluster, to_vec(res.resource))), 1.0, 1e-8);
  }
}

TEST(SwapChain, FiveSegmentsLogFourSwaps) {
  std::mt19937_64 rng(6);
  const auto res = swap_chain(5, ClusterParams{}, rng);
  EXPECT_EQ(res.log.size(), 4u);
  EXPECT_NEAR(res.fidelity, 1.0, 1e-8);
  EXPECT_THROW(swap_chain(0, ClusterParams{}, rng), UsageError);
}
