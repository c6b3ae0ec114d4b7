#include <cmath>
#include <cstring>
#include <numbers>

#include <gtest/gtest.h>

#include "tangle/bipartite.hpp"
#include "tangle/curves.hpp"
#include "tangle/envelope.hpp"
#include "tangle/errors.hpp"
#include "tangle/multipartite.hpp"
#include "tangle/named_states.hpp"
#include "tangle/scalar_search.hpp"

using namespace tangle;

TEST(Rank2Family, GeneratesSuperpositions) {
  const Rank2Family z4f = family_by_name("Z4");
  EXPECT_TRUE(amplitudes_equal(z4f.at(0.3, 1.2), z4(0.3, 1.2)));
  EXPECT_TRUE(amplitudes_equal(family_by_name("Z_app").at(0.6, 2.0), z_app(0.6, 2.0)));
  EXPECT_EQ(family_by_name("Zapp").n_qubits(), 3);
  EXPECT_THROW(family_by_name("Z5"), UnsupportedError);
  EXPECT_THROW(Rank2Family("bad", ghz3(), psi1_app()), InvalidStateError);
  EXPECT_THROW(z4f.at(1.5, 0.0), DomainError);
  EXPECT_EQ(family_names().size(), 3u);
}

TEST(Measures, Registry) {
  for (auto name : measure_names()) {
    if (name == "t2") continue;
    const PureState psi = name == "tau3" ? z3(0.5, 0.0) : z4(0.5, 0.0);
    EXPECT_NO_THROW(measure_by_name(name)(psi)) << name;
  }
  EXPECT_THROW(measure_by_name("bogus"), UnsupportedError);
  EXPECT_NEAR(measure_by_name("tau3")(ghz3()), 1.0, 1e-12);
  EXPECT_NEAR(measure_by_name("concurrence_IJ")(z4(0.5, 0.0)), closed_form_concurrence_z4(0.5).value, 1e-10);
}

TEST(CharacteristicCurves, SerialAndParallelAreIdentical) {
  const auto p = linspace(0.0, 1.0, 61);
  const auto phi = phase_grid(12);
  for (const char* m : {"n2", "negativity_IJ", "tau3"}) {
    const Rank2Family fam = family_by_name(std::string_view(m) == "tau3" ? "Zapp" : "Z4");
    const auto a = characteristic_curves_serial(fam, measure_by_name(m), p, phi);
    const auto b = characteristic_curves_omp(fam, measure_by_name(m), p, phi);
    ASSERT_EQ(a.values.size(), b.values.size());
    EXPECT_EQ(std::memcmp(a.values.data(), b.values.data(), a.values.size() * sizeof(double)), 0) << m;
    EXPECT_EQ(a.min_curve, b.min_curve);
  }
}

TEST(CharacteristicCurves, MinCurveIsRowMinimum) {
  const auto set = characteristic_curves(family_by_name("Z3"), measure_by_name("tau3"), linspace(0.0, 1.0, 21),
                                         phase_grid(16));
  for (std::size_t i = 0; i < set.p_grid.size(); ++i) {
    double m = set.at(i, 0);
    for (std::size_t j = 1; j < set.phi_grid.size(); ++j) m = std::min(m, set.at(i, j));
    EXPECT_EQ(set.min_curve[i], m);
  }
}

TEST(CharacteristicCurves, FailuresCarryGridPoint) {
  const StateMeasure bad = [](const PureState& s) -> double {
    if (std::abs(s[0]) < 0.3) throw DomainError("boom");
    return 0.0;
  };
  try {
    characteristic_curves(family_by_name("Z4"), bad, linspace(0.0, 1.0, 11), phase_grid(4));
    FAIL() << "no error";
  } catch (const CurveEvaluationError& e) {
    EXPECT_EQ(e.p(), 0.0);
    EXPECT_EQ(e.phi(), 0.0);
    EXPECT_NE(std::string(e.what()).find("boom"), std::string::npos);
  }
  EXPECT_THROW(characteristic_curves(family_by_name("Z4"), measure_by_name("tau3"), {0.0, 1.0}, {0.0}),
               CurveEvaluationError);
}

TEST(CharacteristicCurves, GridValidation) {
  const auto fam = family_by_name("Z4");
  EXPECT_THROW(characteristic_curves(fam, measure_by_name("t1"), {}, {0.0}), DomainError);
  EXPECT_THROW(characteristic_curves(fam, measure_by_name("t1"), {0.5, 0.2}, {0.0}), DomainError);
  EXPECT_THROW(characteristic_curves(fam, measure_by_name("t1"), {0.0, 1.0}, {}), DomainError);
}

TEST(CharacteristicCurves, Z4MeasuresIgnoreThePhase) {
  const auto p = linspace(0.0, 1.0, 101);
  const auto phi = phase_grid(24);
  for (const char* m : {"t1", "n1", "n2", "concurrence_IJ", "negativity_IJ"}) {
    const auto set = characteristic_curves(family_by_name("Z4"), measure_by_name(m), p, phi);
    double spread = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      double lo = set.at(i, 0), hi = lo;
      for (std::size_t j = 0; j < phi.size(); ++j) {
        lo = std::min(lo, set.at(i, j));
        hi = std::max(hi, set.at(i, j));
      }
      spread = std::max(spread, hi - lo);
    }
    EXPECT_LT(spread, 1e-9) << m;
  }
}

TEST(CharacteristicCurves, Z3ThreeTangleZero) {
  const StateMeasure tau = measure_by_name("tau3");
  const auto m = minimize_scalar([&](double p) { return tau(z3(p, 0.0)); }, 0.4, 0.8);
  EXPECT_NEAR(m.x, 0.627, 0.005);
  EXPECT_NEAR(m.fx, 0.0, 1e-6);
}

TEST(PhaseGrid, Spacing) {
  const auto g = phase_grid(4);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_NEAR(g[1], std::numbers::pi / 2, 1e-15);
  EXPECT_LT(g.back(), 2 * std::numbers::pi);
}
