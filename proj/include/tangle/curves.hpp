#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/monogamy.hpp"
#include "tangle/state.hpp"

namespace tangle {

// sqrt(p) psi1 - e^{i phi} sqrt(1-p) psi2 over p in [0,1], phi in [0, 2pi).
class Rank2Family {
 public:
  Rank2Family(std::string name, PureState psi1, PureState psi2, const Tolerances& tol = {});

  PureState at(double p, double phi) const;
  const std::string& name() const { return name_; }
  const PureState& psi1() const { return psi1_; }
  const PureState& psi2() const { return psi2_; }
  int n_qubits() const { return psi1_.n_qubits(); }

 private:
  std::string name_;
  PureState psi1_;
  PureState psi2_;
};

// "Z3", "Z4" or "Zapp" (alias "Z_app").
Rank2Family family_by_name(std::string_view name);
const std::vector<std::string_view>& family_names();

using StateMeasure = std::function<double(const PureState&)>;

// Measures usable on family members: concurrence_IJ, negativity_IJ,
// concurrence_I_rest, negativity_I_rest, tau3, t1, t2, n1, n2.
StateMeasure measure_by_name(std::string_view name, const PowerFactors& factors = {});
const std::vector<std::string_view>& measure_names();

struct CharacteristicCurveSet {
  std::vector<double> p_grid;
  std::vector<double> phi_grid;
  std::vector<double> values;     // row-major, p-major: values[i * phi_grid.size() + j]
  std::vector<double> min_curve;  // min over phi for each p

  double at(std::size_t i, std::size_t j) const { return values[i * phi_grid.size() + j]; }
};

enum class Execution { serial, parallel };

// Measure failures are rethrown as CurveEvaluationError carrying the first
// failing (p, phi) in grid order. Both executions give bitwise identical sets.
CharacteristicCurveSet characteristic_curves(const Rank2Family& family, const StateMeasure& measure,
                                             const std::vector<double>& p_grid,
                                             const std::vector<double>& phi_grid,
                                             Execution execution = Execution::parallel);

CharacteristicCurveSet characteristic_curves_serial(const Rank2Family& family, const StateMeasure& measure,
                                                    const std::vector<double>& p_grid,
                                                    const std::vector<double>& phi_grid);
CharacteristicCurveSet characteristic_curves_omp(const Rank2Family& family, const StateMeasure& measure,
                                                 const std::vector<double>& p_grid,
                                                 const std::vector<double>& phi_grid);

// n points 2 pi k / n, k = 0..n-1.
std::vector<double> phase_grid(std::size_t n);

namespace detail {
// Grid validation and min_curve fill shared by both executions.
void validate_grids(const std::vector<double>& p_grid, const std::vector<double>& phi_grid);
void fill_min_curve(CharacteristicCurveSet& set);
}  // namespace detail

}  // namespace tangle
