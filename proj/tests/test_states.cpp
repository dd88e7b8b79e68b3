#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "qmesh/errors.hpp"
#include "qmesh/states.hpp"

using namespace qmesh;

namespace {
const double kS = 1.0 / std::sqrt(2.0);
}

TEST(Input, BasisPayload) {
  const auto rho = make_input_density(InputParams{1.0, 0.0});
  EXPECT_EQ(rho(0, 0), cplx(1.0));
  EXPECT_NEAR(rho.trace(), 1.0, 1e-15);
}

TEST(Input, BalancedCornersAreHalf) {
  const auto rho = make_input_density(InputParams{});
  for (std::size_t r : {0u, 3u})
    for (std::size_t c : {0u, 3u}) EXPECT_NEAR(std::abs(rho(r, c) - 0.5), 0.0, 1e-15);
}

TEST(Input, SixEightPayload) {
  const auto rho = make_input_density(InputParams{0.6, 0.8});
  EXPECT_NEAR(rho(0, 0).real(), 0.36, 1e-15);
  EXPECT_NEAR(rho(3, 3).real(), 0.64, 1e-15);
  EXPECT_NEAR(rho(0, 3).real(), 0.48, 1e-15);
  EXPECT_NEAR(rho(3, 0).real(), 0.48, 1e-15);
  EXPECT_EQ(rho(1, 1), cplx(0.0));
}

TEST(Input, KetOuterProductIsDensity) {
  const InputParams in{cplx(0.6, 0.1), cplx(0.2, -0.3)};
  const Ket k = make_input(in);
  EXPECT_LE(max_abs_diff(Matrix::outer(k, k), make_input_density(in).matrix()), 1e-12);
}

TEST(Cluster, BalancedAmplitudes) {
  const Ket cs = make_cluster(ClusterParams{});
  const auto want = oracle::ket({{"0000", 0.5}, {"0011", 0.5}, {"1100", 0.5}, {"1111", -0.5}}, 4);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(cs[i], want[i]);
  EXPECT_NEAR(cs.norm(), 1.0, 1e-15);
}

TEST(Cluster, NormTracksCoefficients) {
  const ClusterParams c{{0.1, 0.7, 0.5, 0.3}};
  EXPECT_NEAR(make_cluster(c).norm(), std::sqrt(0.01 + 0.49 + 0.25 + 0.09), 1e-12);
}

TEST(Cluster, RejectsVanishingRecoveryCoefficients) {
  EXPECT_THROW(make_cluster(ClusterParams{{1.0, 0.0, 0.0, 0.0}}), UsageError);
  EXPECT_THROW(ClusterParams({{0.5, 0.5, 0.5, 0.6}}).validate(), UsageError);
  EXPECT_NO_THROW(ClusterParams{}.validate());
}

TEST(Bell, Definitions) {
  const Ket phi = make_bell(BellKind::PhiPlus);
  EXPECT_NEAR(phi[0].real(), kS, 1e-15);
  EXPECT_NEAR(phi[3].real(), kS, 1e-15);
  const Ket psi = make_bell(BellKind::PsiMinus);
  EXPECT_NEAR(psi[1].real(), kS, 1e-15);
  EXPECT_NEAR(psi[2].real(), -kS, 1e-15);
}

TEST(Bell, OrthonormalBasis) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx g = inner(make_bell(kBellKinds[i]), make_bell(kBellKinds[j]));
      EXPECT_NEAR(std::abs(g - (i == j ? 1.0 : 0.0)), 0.0, 1e-12);
    }
}

TEST(Bell, MatchesOracleVectors) {
  for (int i = 0; i < 4; ++i) {
    const Ket b = make_bell(kBellKinds[static_cast<std::size_t>(i)]);
    const auto o = oracle::bell(i);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(b[k] - o[k]), 0.0, 1e-15);
  }
}
