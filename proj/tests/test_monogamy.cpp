#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tangle/bipartite.hpp"
#include "tangle/cli.hpp"
#include "tangle/errors.hpp"
#include "tangle/monogamy.hpp"
#include "tangle/named_states.hpp"

using namespace tangle;

namespace {
const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);

double n1_w4(double nu) { return (3 + s3 - 3 * s2) / 2 - 3 * weighted_power((3 - 2 * s2) / 2, nu); }
double n2_w4(double nu) { return 1.5 * (s2 - 1) - 3 * weighted_power((4 * s2 - 5) / 4, nu); }
}  // namespace

TEST(WeightedPower, FiniteAndInfiniteExponents) {
  EXPECT_EQ(weighted_power(-0.3, 2.0), 0.0);
  EXPECT_NEAR(weighted_power(0.25, 0.5), 0.5, 1e-15);
  EXPECT_EQ(weighted_power(0.999, kInfinitePower), 0.0);
  EXPECT_EQ(weighted_power(1.0 + 1e-12, kInfinitePower), 1.0);
  EXPECT_TRUE(std::isinf(weighted_power(1.01, kInfinitePower)));
  EXPECT_EQ(weighted_power(-2.0, kInfinitePower), 0.0);
}

TEST(NuStar, ClosedFormValues) {
  const NuStar s = nu_star();
  EXPECT_NEAR(s.nu1_star, 1.02053, 5e-6);
  EXPECT_NEAR(s.nu2_star, 0.871544, 5e-7);
  EXPECT_NEAR(n1(w4(), s.nu1_star), 0.0, 1e-9);
  EXPECT_NEAR(n2(w4(), s.nu2_star), 0.0, 1e-9);
}

TEST(TableTwo, AllCellsWithinTolerance) {
  const auto r = cli::compute_table("II");
  EXPECT_EQ(r.cells.size(), 4u * 8u);
  for (const auto& c : r.cells) EXPECT_LE(c.deviation, 1e-9) << c.row << " " << c.column;
}

TEST(TableTwo, ExplicitRows) {
  for (double nu : {nu_star().nu1_star, 2.0}) {
    EXPECT_NEAR(n1(phi2(), nu), 1 - 3 * std::pow(2.0 / 3.0, nu), 1e-9);
    EXPECT_NEAR(n1(phi3(), nu), -1.0, 1e-9);
  }
  for (double nu : {nu_star().nu2_star, 2.0}) {
    EXPECT_NEAR(n2(phi2(), nu), 1 - 3 * std::pow(4.0 / 9.0, nu), 1e-9);
    EXPECT_NEAR(n2(phi3(), nu), -1.0, 1e-9);
  }
  EXPECT_NEAR(t1(ghz4()), 1.0, 1e-12);
  EXPECT_NEAR(t1(phi2()), 1.0, 1e-12);
  EXPECT_NEAR(t1(phi3()), 1.0, 1e-12);
  EXPECT_NEAR(t1(w4()), 0.0, 1e-12);
  EXPECT_NEAR(*t2(ghz4()), 1.0, 1e-12);
  EXPECT_NEAR(*t2(w4()), 0.0, 1e-12);
}

TEST(W4Row, InfiniteExponent) {
  EXPECT_NEAR(n1(w4(), kInfinitePower), (3 + s3 - 3 * s2) / 2, 1e-12);
  EXPECT_NEAR(n2(w4(), kInfinitePower), 1.5 * (s2 - 1), 1e-12);
  for (double nu : {0.5, 1.0, 3.0}) {
    EXPECT_NEAR(n1(w4(), nu), n1_w4(nu), 1e-10);
    EXPECT_NEAR(n2(w4(), nu), n2_w4(nu), 1e-10);
  }
}

TEST(GhzProductState, T1AndT2) {
  EXPECT_NEAR(t1(g3()), 0.75, 1e-12);
  const auto v = t2(g3());
  ASSERT_TRUE(v.has_value());
  EXPECT_NEAR(*v, 0.0, 1e-12);
}

TEST(T1, Z4FamilyFormula) {
  for (int k = 0; k < 100; ++k) {
    const double p = k / 99.0;
    const double c = closed_form_concurrence_z4(p).value;
    const double expected = (3 + p * p) / 4 - 3 * c * c;
    for (double phi : {0.0, 1.0, 4.0}) EXPECT_NEAR(t1(z4(p, phi)), expected, 1e-9) << p;
  }
}

TEST(Breakdown, ReportsAreConsistent) {
  const MonogamyResult r = monogamy_breakdown(z4(0.4, 0.3), MonogamyMeasure::n2);
  ASSERT_TRUE(r.value.has_value());
  double sum = 0.0;
  for (int q = 0; q < 4; ++q) {
    const MonogamyReport& rep = r.reports[static_cast<std::size_t>(q)];
    EXPECT_EQ(rep.focus, q);
    EXPECT_EQ(rep.pairwise.size(), 3u);
    EXPECT_EQ(rep.triple_terms.size(), 3u);
    double pw = 0.0, tr = 0.0;
    for (const auto& [k, v] : rep.pairwise) pw += v;
    for (const auto& [k, v] : rep.triple_terms) tr += v;
    EXPECT_NEAR(rep.leftover, rep.one_vs_rest - pw - tr, 1e-12);
    sum += rep.leftover;
  }
  EXPECT_NEAR(*r.value, sum / 4, 1e-12);
}

TEST(Invariance, QubitRelabeling) {
  std::mt19937_64 rng(41);
  std::array<int, 4> perm{0, 1, 2, 3};
  for (int k = 0; k < 20; ++k) {
    const PureState psi = oracle::random_state(rng, 4);
    std::shuffle(perm.begin(), perm.end(), rng);
    const PureState q = permute_qubits(psi, perm);
    EXPECT_NEAR(t1(psi), t1(q), 1e-10);
    EXPECT_NEAR(n1(psi, 2.0), n1(q, 2.0), 1e-10);
    EXPECT_NEAR(n2(psi, nu_star().nu2_star), n2(q, nu_star().nu2_star), 1e-10);
  }
}

TEST(EnsembleAverages, WeightedMeanOfMembers) {
  const Ensemble e({{0.3, ghz4()}, {0.7, w4()}});
  EXPECT_NEAR(t1(e), 0.3, 1e-12);
  EXPECT_NEAR(n1(e, kInfinitePower), 0.3 + 0.7 * (3 + s3 - 3 * s2) / 2, 1e-12);
  EXPECT_NEAR(n2(e, 2.0), 0.3 + 0.7 * n2_w4(2.0), 1e-10);
}

TEST(Tofv, LeftoverNonNegativeAndDomain) {
  std::mt19937_64 rng(42);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < 10; ++k) {
      const PureState psi = oracle::random_state(rng, n);
      EXPECT_GE(check_monogamy_tofv(psi, k % n), -1e-10);
    }
  }
  EXPECT_NEAR(check_monogamy_tofv(w3(), 0), 0.0, 1e-12);
  EXPECT_THROW(check_monogamy_tofv(oracle::random_state(rng, 7), 0), DomainError);
}

TEST(T2, UnsupportedForGenericZ4) {
  EXPECT_FALSE(t2(z4(0.5, 0.7)).has_value());
}
