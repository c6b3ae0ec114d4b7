#include <algorithm>
#include <cmath>
#include <numbers>

#include "tangle/bipartite.hpp"
#include "tangle/curves.hpp"
#include "tangle/errors.hpp"
#include "tangle/multipartite.hpp"
#include "tangle/named_states.hpp"

namespace tangle {

Rank2Family::Rank2Family(std::string name, PureState psi1, PureState psi2, const Tolerances& tol)
    : name_(std::move(name)), psi1_(std::move(psi1)), psi2_(std::move(psi2)) {
  if (psi1_.n_qubits() != psi2_.n_qubits()) throw InvalidStateError("family members differ in qubit count");
  if (std::abs(psi1_.amplitudes().dot(psi2_.amplitudes())) > tol.equality) {
    throw InvalidStateError("family members are not orthogonal");
  }
}

PureState Rank2Family::at(double p, double phi) const { return superposition(psi1_, psi2_, p, phi); }

const std::vector<std::string_view>& family_names() {
  static const std::vector<std::string_view> names{"Z3", "Z4", "Zapp"};
  return names;
}

Rank2Family family_by_name(std::string_view name) {
  if (name == "Z3") return Rank2Family("Z3", ghz3(), w3());
  if (name == "Z4") return Rank2Family("Z4", ghz4(), w4());
  if (name == "Zapp" || name == "Z_app") return Rank2Family("Zapp", psi1_app(), psi2_app());
  throw UnsupportedError("unknown family: " + std::string(name));
}

const std::vector<std::string_view>& measure_names() {
  static const std::vector<std::string_view> names{"concurrence_IJ",     "negativity_IJ", "concurrence_I_rest",
                                                   "negativity_I_rest", "tau3",          "t1",
                                                   "t2",                 "n1",            "n2"};
  return names;
}

StateMeasure measure_by_name(std::string_view name, const PowerFactors& factors) {
  if (name == "concurrence_IJ") {
    return [](const PureState& s) {
      return concurrence_mixed(reduced_density(s, QubitSubset::of({0, 1}, s.n_qubits())));
    };
  }
  if (name == "negativity_IJ") {
    return [](const PureState& s) {
      return negativity(reduced_density(s, QubitSubset::of({0, 1}, s.n_qubits())), QubitSubset::single(0, 2));
    };
  }
  if (name == "concurrence_I_rest") {
    return [](const PureState& s) { return concurrence_one_vs_rest(s, 0); };
  }
  if (name == "negativity_I_rest") {
    return [](const PureState& s) { return negativity_pure(s, QubitSubset::single(0, s.n_qubits())); };
  }
  if (name == "tau3") {
    return [](const PureState& s) { return three_tangle_pure(s).tau; };
  }
  if (name == "t1") {
    return [](const PureState& s) { return t1(s); };
  }
  if (name == "t2") {
    return [factors](const PureState& s) {
      const auto v = t2(s, factors);
      if (!v) throw UnsupportedError("t2: a three-qubit marginal has no computable residual tangle");
      return *v;
    };
  }
  if (name == "n1") {
    return [nu = factors.nu1](const PureState& s) { return n1(s, nu); };
  }
  if (name == "n2") {
    return [nu = factors.nu2](const PureState& s) { return n2(s, nu); };
  }
  throw UnsupportedError("unknown measure: " + std::string(name));
}

std::vector<double> phase_grid(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return v;
}

namespace detail {

void validate_grids(const std::vector<double>& p_grid, const std::vector<double>& phi_grid) {
  if (p_grid.empty() || phi_grid.empty()) throw DomainError("curve grids must be non-empty");
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    check_probability(p_grid[i]);
    if (i > 0 && !(p_grid[i] > p_grid[i - 1])) throw DomainError("p grid must be strictly increasing");
  }
  for (std::size_t j = 1; j < phi_grid.size(); ++j) {
    if (!(phi_grid[j] > phi_grid[j - 1])) throw DomainError("phi grid must be strictly increasing");
  }
}

void fill_min_curve(CharacteristicCurveSet& set) {
  const std::size_t m = set.phi_grid.size();
  set.min_curve.resize(set.p_grid.size());
  for (std::size_t i = 0; i < set.p_grid.size(); ++i) {
    const auto row = set.values.begin() + static_cast<std::ptrdiff_t>(i * m);
    set.min_curve[i] = *std::min_element(row, row + static_cast<std::ptrdiff_t>(m));
  }
}

}  // namespace detail

// Reference implementation; the OpenMP version must match it exactly.
CharacteristicCurveSet characteristic_curves_serial(const Rank2Family& family, const StateMeasure& measure,
                                                    const std::vector<double>& p_grid,
                                                    const std::vector<double>& phi_grid) {
  detail::validate_grids(p_grid, phi_grid);
  CharacteristicCurveSet set{p_grid, phi_grid, std::vector<double>(p_grid.size() * phi_grid.size()), {}};
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    for (std::size_t j = 0; j < phi_grid.size(); ++j) {
      try {
        set.values[i * phi_grid.size() + j] = measure(family.at(p_grid[i], phi_grid[j]));
      } catch (const std::exception& e) {
        throw CurveEvaluationError(p_grid[i], phi_grid[j], e.what());
      }
    }
  }
  detail::fill_min_curve(set);
  return set;
}

CharacteristicCurveSet characteristic_curves(const Rank2Family& family, const StateMeasure& measure,
                                             const std::vector<double>& p_grid,
                                             const std::vector<double>& phi_grid, Execution execution) {
  return execution == Execution::serial ? characteristic_curves_serial(family, measure, p_grid, phi_grid)
                                        : characteristic_curves_omp(family, measure, p_grid, phi_grid);
}

}  // namespace tangle
