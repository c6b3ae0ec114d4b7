// Randomized invariants with fixed seeds.
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tangle/bipartite.hpp"
#include "tangle/monogamy.hpp"
#include "tangle/multipartite.hpp"
#include "tangle/named_states.hpp"
#include "tangle/roof.hpp"

using namespace tangle;

TEST(Monogamy, ThreeQubitConcurrenceInequality) {
  std::mt19937_64 rng(1001);
  double worst = 1.0;
  for (int k = 0; k < 1000; ++k) {
    const PureState psi = oracle::random_state(rng, 3);
    for (int focus = 0; focus < 3; ++focus) worst = std::min(worst, check_monogamy_tofv(psi, focus));
  }
  EXPECT_GE(worst, -1e-10);
}

TEST(Monogamy, FourQubitConcurrenceInequality) {
  std::mt19937_64 rng(1002);
  double worst = 1.0;
  for (int k = 0; k < 1000; ++k) {
    const PureState psi = oracle::random_state(rng, 4);
    for (int focus = 0; focus < 4; ++focus) worst = std::min(worst, check_monogamy_tofv(psi, focus));
  }
  EXPECT_GE(worst, -1e-10);
}

TEST(ThreeTangle, PermutationInvariance) {
  std::mt19937_64 rng(1003);
  for (int k = 0; k < 200; ++k) {
    const PureState psi = oracle::random_state(rng, 3);
    const double ref = three_tangle_pure(psi).tau;
    std::array<int, 3> perm{0, 1, 2};
    do {
      EXPECT_NEAR(three_tangle_pure(permute_qubits(psi, perm)).tau, ref, 1e-10);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(ThreeTangle, SloccCovariance) {
  // tau(A⊗B⊗C psi) = |det A det B det C|^2 tau(psi); with det 1 it is invariant.
  std::mt19937_64 rng(1004);
  for (int k = 0; k < 100; ++k) {
    const StateVector v = oracle::random_state(rng, 3).amplitudes();
    const std::array<Matrix2, 3> ops{oracle::random_sl2(rng), oracle::random_sl2(rng), oracle::random_sl2(rng)};
    const StateVector w = apply_local(v, ops);
    EXPECT_NEAR(oracle::three_tangle_epsilon(w), oracle::three_tangle_epsilon(v), 1e-9);
  }
}

TEST(FInvariants, SloccInvariance) {
  std::mt19937_64 rng(1005);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const StateVector v = oracle::random_state(rng, 4).amplitudes();
    const std::array<Matrix2, 4> ops{oracle::random_sl2(rng), oracle::random_sl2(rng), oracle::random_sl2(rng),
                                     oracle::random_sl2(rng)};
    const FInvariants a = f_invariants(v), b = f_invariants(apply_local(v, ops));
    worst = std::max({worst, std::abs(a.f1 - b.f1), std::abs(a.f2 - b.f2), std::abs(a.f3 - b.f3)});
  }
  EXPECT_LT(worst, 1e-7);
}

TEST(ReducedTripartite, SpectralReconstruction) {
  std::mt19937_64 rng(1007);
  std::uniform_real_distribution<double> up(1e-6, 1.0), uphi(0.0, 2 * std::numbers::pi);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double p = up(rng), phi = uphi(rng);
    const DensityMatrix target = reduced_density(z4(p, phi), QubitSubset::of({1, 2, 3}, 4));
    worst = std::max(worst, (reduced_tripartite_spectral(p, phi).density().matrix() - target.matrix())
                                .cwiseAbs()
                                .maxCoeff());
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Concurrence, LocalUnitaryInvariance) {
  std::mt19937_64 rng(1008);
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix rho = oracle::random_density(rng, 2, 2);
    // Random local unitaries from QR of Gaussian matrices.
    std::array<Matrix2, 2> us;
    for (auto& u : us) {
      const Matrix2 g = oracle::random_sl2(rng);
      Eigen::HouseholderQR<Matrix2> qr(g);
      u = qr.householderQ();
    }
    Matrix kron = Matrix::Zero(4, 4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) kron(2 * a + c, 2 * b + d) = us[0](a, b) * us[1](c, d);
    const Matrix rotated = kron * rho.matrix() * kron.adjoint();
    EXPECT_NEAR(concurrence_mixed(rho), concurrence_mixed(DensityMatrix(2, rotated)), 1e-9);
  }
}

TEST(Negativity, PureStateFormulaMatchesSpectrum) {
  std::mt19937_64 rng(1009);
  for (int k = 0; k < 100; ++k) {
    const PureState psi = oracle::random_state(rng, 4);
    const QubitSubset a = QubitSubset::single(k % 4, 4);
    EXPECT_NEAR(negativity_pure(psi, a), negativity(DensityMatrix::from_pure(psi), a), 1e-10);
    // For one qubit against the rest, negativity equals the one-vs-rest concurrence.
    EXPECT_NEAR(negativity_pure(psi, a), concurrence_one_vs_rest(psi, k % 4), 1e-10);
  }
}

TEST(Monogamy, RoofUpperBoundsFromRandomEnsembles) {
  // Any two-member split (Z4(q,0)+Z4(q,pi))/2 mixed with GHZ4/W4 realizing rho4(p)
  // cannot beat the solved roof value.
  const auto roof = solve_n2_roof(kInfinitePower);
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int k = 0; k < 100; ++k) {
    const double p = u(rng), a = u(rng);
    double avg = 0.0;
    if (p <= a) {
      avg = (1 - p / a) * n2(w4(), kInfinitePower) + p / a * n2(z4(a, 0.0), kInfinitePower);
    } else {
      avg = (p - a) / (1 - a) * n2(ghz4(), kInfinitePower) + (1 - p) / (1 - a) * n2(z4(a, 0.0), kInfinitePower);
    }
    EXPECT_LE(roof.value(p), avg + 1e-9) << p << " " << a;
  }
}
