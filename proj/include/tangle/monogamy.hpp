#pragma once

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <utility>

#include "tangle/state.hpp"

namespace tangle {

// Exponent value standing for the nu -> infinity limit.
inline constexpr double kInfinitePower = std::numeric_limits<double>::infinity();

struct PowerFactors {
  double mu3 = 1.5;
  double nu1 = kInfinitePower;
  double nu2 = kInfinitePower;
};

// [x]^nu with negative bases clamped to 0. For nu = infinity:
// 0 when x < 1, 1 when x is 1 within 1e-9, +inf above.
double weighted_power(double base, double nu);

struct NuStar {
  double nu1_star;
  double nu2_star;
};
// Exponents at which n1(W4) and n2(W4) vanish.
NuStar nu_star();

// Leftover of one focus qubit in a monogamy relation.
struct MonogamyReport {
  int focus = 0;
  double one_vs_rest = 0.0;                       // C^2, N or N^2
  std::map<std::pair<int, int>, double> pairwise;  // (focus, j)
  std::map<std::array<int, 3>, double> triple_terms;  // sorted triple, after the power
  std::map<std::array<int, 3>, double> triple_raw;    // base before clamping
  double leftover = 0.0;
};

enum class MonogamyMeasure { t1, t2, n1, n2 };

struct MonogamyResult {
  std::optional<double> value;  // average of the four leftovers
  std::array<MonogamyReport, 4> reports;
};

// Full per-qubit breakdown. For t2 the value is nullopt when some
// three-qubit marginal is outside the computable residual classes.
MonogamyResult monogamy_breakdown(const PureState& psi, MonogamyMeasure measure,
                                  const PowerFactors& factors = {});

double t1(const PureState& psi);
std::optional<double> t2(const PureState& psi, const PowerFactors& factors = {});
double n1(const PureState& psi, double nu1);
double n2(const PureState& psi, double nu2);

// Ensemble averages; upper bounds of the convex roof at the ensemble's density.
double t1(const Ensemble& e);
double n1(const Ensemble& e, double nu1);
double n2(const Ensemble& e, double nu2);

// C^2_{focus|rest} - sum_j C^2_{focus|j}, for 2 <= n <= 6.
double check_monogamy_tofv(const PureState& psi, int focus);

}  // namespace tangle
