#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tangle/appendix.hpp"
#include "tangle/bipartite.hpp"
#include "tangle/cli.hpp"
#include "tangle/errors.hpp"
#include "tangle/multipartite.hpp"
#include "tangle/named_states.hpp"
#include "tangle/roof.hpp"

using namespace tangle;

TEST(ThreeTangle, ReferenceStates) {
  EXPECT_NEAR(three_tangle_pure(ghz3()).tau, 1.0, 1e-14);
  EXPECT_NEAR(three_tangle_pure(w3()).tau, 0.0, 1e-14);
  EXPECT_NEAR(three_tangle_pure(PureState::basis(3, 6)).tau, 0.0, 1e-14);
  EXPECT_NEAR(three_tangle_pure(psi1_app()).tau, 0.794331, 1e-6);
  EXPECT_NEAR(three_tangle_pure(psi2_app()).tau, 0.294331, 1e-6);
  EXPECT_THROW(three_tangle_pure(ghz4()), DomainError);
}

TEST(ThreeTangle, MatchesEpsilonContractionOracle) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    const PureState psi = oracle::random_state(rng, 3);
    EXPECT_NEAR(three_tangle_pure(psi).tau, oracle::three_tangle_epsilon(psi.amplitudes()), 1e-12);
  }
}

TEST(ThreeTangle, EqualsConcurrenceLeftover) {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 300; ++k) {
    const PureState psi = oracle::random_state(rng, 3);
    EXPECT_NEAR(three_tangle_pure(psi).tau, residual_via_concurrences(psi), 1e-9);
  }
}

TEST(ThreeTangle, CoefficientCombination) {
  const auto t = three_tangle_pure(z3(0.4, 1.1));
  EXPECT_NEAR(t.tau, 4.0 * std::abs(t.coeffs.d1 - 2.0 * t.coeffs.d2 + 4.0 * t.coeffs.d3), 1e-14);
}

TEST(GhzWMixture, ThresholdOfStandardPair) {
  const double g = 1 / std::sqrt(2.0), w = 1 / std::sqrt(3.0);
  const double c = std::cbrt(2.0);
  EXPECT_NEAR(ghzw_zero_threshold({g, g, w, w, w}), 4 * c / (3 + 4 * c), 1e-12);
  // The threshold is the zero of the superposition family's three-tangle.
  EXPECT_NEAR(three_tangle_pure(z3(4 * c / (3 + 4 * c), 0.0)).tau, 0.0, 1e-10);
}

TEST(GhzWMixture, ZeroRegionAndUnsupportedAbove) {
  const double g = 1 / std::sqrt(2.0), w = 1 / std::sqrt(3.0);
  const GhzWAmplitudes amps{g, g, w, w, w};
  EXPECT_EQ(residual_ghzw_mixture(amps, 0.3), std::optional<double>(0.0));
  EXPECT_EQ(residual_ghzw_mixture(amps, 0.62), std::optional<double>(0.0));
  EXPECT_FALSE(residual_ghzw_mixture(amps, 0.63).has_value());
  EXPECT_THROW(ghzw_zero_threshold({1.0, 0.0, w, w, w}), DegenerateFamilyError);
  EXPECT_THROW(residual_ghzw_mixture({0.5, 0.5, w, w, w}, 0.2), InvalidStateError);
  EXPECT_THROW(residual_ghzw_mixture(amps, 1.5), DomainError);
}

TEST(G1G2Mixture, Endpoints) {
  EXPECT_NEAR(residual_g1g2_mixture(0.0), 1.0, 1e-15);
  EXPECT_NEAR(residual_g1g2_mixture(0.5), 0.0, 1e-15);
  EXPECT_NEAR(residual_g1g2_mixture(1.0), 1.0, 1e-15);
  EXPECT_THROW(residual_g1g2_mixture(-0.1), DomainError);
}

TEST(FInvariants, ReferenceTable) {
  const auto r = cli::compute_table("I");
  ASSERT_EQ(r.cells.size(), 12u);
  EXPECT_LT(r.max_deviation(), 1e-9);
  EXPECT_TRUE(r.pass());
}

TEST(FInvariants, HomogeneityDegrees) {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 20; ++k) {
    const StateVector v = oracle::random_state(rng, 4).amplitudes();
    const cplx c = std::polar(0.3 + 0.1 * k, 0.7 * k);
    const FInvariants f = f_invariants(v), fc = f_invariants(StateVector(c * v));
    const double a = std::abs(c);
    EXPECT_NEAR(fc.f1, std::pow(a, kFDegrees[0]) * f.f1, 1e-10 * std::max(1.0, std::pow(a, kFDegrees[0])));
    EXPECT_NEAR(fc.f2, std::pow(a, kFDegrees[1]) * f.f2, 1e-10 * std::max(1.0, std::pow(a, kFDegrees[1])));
    EXPECT_NEAR(fc.f3, std::pow(a, kFDegrees[2]) * f.f3, 1e-10 * std::max(1.0, std::pow(a, kFDegrees[2])));
  }
}

TEST(FInvariants, RejectsWrongSize) {
  EXPECT_THROW(f_invariants(StateVector(StateVector::Zero(8))), DomainError);
}

TEST(GMonotones, PowersOfF) {
  const GMonotones g = g_monotones(ghz4());
  EXPECT_NEAR(g.g1, 1.0, 1e-12);
  EXPECT_NEAR(g.g2, 1.0, 1e-12);
  EXPECT_NEAR(g.g3, std::pow(0.5, 2.0 / 12.0), 1e-12);
  const GMonotones p2 = g_monotones(phi2());
  EXPECT_NEAR(p2.g1, std::pow(8.0 / 9.0, 1.0 / 3.0), 1e-12);
  EXPECT_NEAR(std::pow(p2.g2, 4), 0.0, 1e-12);
  std::mt19937_64 rng(34);
  for (int k = 0; k < 20; ++k) {
    const PureState psi = oracle::random_state(rng, 4);
    const FInvariants f = f_invariants(psi);
    const GMonotones gm = g_monotones(psi);
    EXPECT_NEAR(gm.g1, std::pow(f.f1, 2.0 / 6.0), 1e-12);
    EXPECT_NEAR(gm.g2, std::pow(f.f2, 2.0 / 8.0), 1e-12);
    EXPECT_NEAR(gm.g3, std::pow(f.f3, 2.0 / 12.0), 1e-12);
  }
}

TEST(PauliContext, MetricAndMatrices) {
  const auto& ctx = pauli_context();
  EXPECT_EQ(ctx.metric[0], -1.0);
  EXPECT_EQ(ctx.metric[2], 0.0);
  EXPECT_NEAR((ctx.sigma[1] * ctx.sigma[2] - cplx(0, 1) * ctx.sigma[3]).norm(), 0.0, 1e-15);
}

TEST(ReducedTripartite, CoefficientsAndErrors) {
  const auto c1 = reduced_tripartite_coefficients(1.0);
  EXPECT_NEAR(c1.lambda, 0.5, 1e-14);
  const auto c = reduced_tripartite_coefficients(0.4);
  EXPECT_NEAR(c.lambda, (2 + std::sqrt(1 - 0.16)) / 4, 1e-14);
  EXPECT_THROW(reduced_tripartite_coefficients(1e-7), SingularFamilyError);
  EXPECT_THROW(reduced_tripartite_coefficients(1.2), DomainError);
}

TEST(ReducedTripartite, BranchResidualsMatchThreeTangle) {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> up(0.01, 1.0), uphi(0.0, 2 * std::numbers::pi);
  for (int k = 0; k < 100; ++k) {
    const double p = up(rng), phi = uphi(rng);
    const ReducedTripartite r = reduced_tripartite_spectral(p, phi);
    EXPECT_NEAR(residual_reduced_pure(p, phi, Branch::plus), three_tangle_pure(r.psi_plus).tau, 1e-9);
    EXPECT_NEAR(residual_reduced_pure(p, phi, Branch::minus), three_tangle_pure(r.psi_minus).tau, 1e-9);
  }
}

TEST(ResidualMixed, MarginalsOfReferenceStates) {
  const QubitSubset abc = QubitSubset::of({0, 1, 2}, 4);
  const auto g = residual_mixed(reduced_density(ghz4(), abc));
  ASSERT_TRUE(g.value.has_value());
  EXPECT_NEAR(*g.value, 0.0, 1e-12);
  EXPECT_EQ(g.kind, ResidualClass::qubit_block);

  const auto w = residual_mixed(reduced_density(w4(), abc));
  ASSERT_TRUE(w.value.has_value());
  EXPECT_NEAR(*w.value, 0.0, 1e-12);
  EXPECT_EQ(w.kind, ResidualClass::ghz_w_mixture);

  // Half (|000> + sqrt2 |111>)/sqrt3 and half W3: below the 2/3 threshold.
  const auto p2 = residual_mixed(reduced_density(phi2(), abc));
  ASSERT_TRUE(p2.value.has_value());
  EXPECT_NEAR(*p2.value, 0.0, 1e-12);
  EXPECT_EQ(p2.kind, ResidualClass::ghz_w_mixture);
  EXPECT_NEAR(ghzw_zero_threshold({1 / std::sqrt(3.0), std::sqrt(2.0 / 3.0), 1 / std::sqrt(3.0),
                                   1 / std::sqrt(3.0), 1 / std::sqrt(3.0)}),
              2.0 / 3.0, 1e-12);

  for (int drop = 0; drop < 4; ++drop) {
    std::vector<int> keep;
    for (int q = 0; q < 4; ++q)
      if (q != drop) keep.push_back(q);
    const auto r = residual_mixed(reduced_density(phi3(), QubitSubset(keep, 4)));
    EXPECT_TRUE(r.value.has_value()) << "drop " << drop << " kind " << to_string(r.kind);
  }
}

TEST(ResidualMixed, PureAndUnsupported) {
  const auto pure = residual_mixed(DensityMatrix::from_pure(ghz3()));
  EXPECT_EQ(pure.kind, ResidualClass::pure);
  EXPECT_NEAR(*pure.value, 1.0, 1e-12);

  // The three-qubit marginal of Z4 away from the known classes.
  const auto z = residual_mixed(reduced_tripartite_spectral(0.5, 0.7).density());
  EXPECT_EQ(z.kind, ResidualClass::unsupported);
  EXPECT_FALSE(z.value.has_value());
  EXPECT_THROW(residual_mixed(DensityMatrix::from_pure(ghz4())), DomainError);
}

TEST(ResidualMixed, G1G2Class) {
  const PureState g1 = PureState::normalized(3, [] {
    StateVector v = StateVector::Zero(8);
    v[0] = v[7] = 1.0;
    return v;
  }());
  const PureState g2 = PureState::normalized(3, [] {
    StateVector v = StateVector::Zero(8);
    v[1] = v[6] = 1.0;
    return v;
  }());
  const DensityMatrix rho = ensemble_to_density(Ensemble({{0.8, g1}, {0.2, g2}}));
  const auto r = residual_mixed(rho);
  EXPECT_EQ(r.kind, ResidualClass::g1_g2_mixture);
  EXPECT_NEAR(*r.value, residual_g1g2_mixture(0.8), 1e-12);
  EXPECT_EQ(to_string(ResidualClass::g1_g2_mixture).empty(), false);
}
