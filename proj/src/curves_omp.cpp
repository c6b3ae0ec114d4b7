#include <cstdint>
#include <limits>
#include <string>

#include <omp.h>

#include "tangle/curves.hpp"
#include "tangle/errors.hpp"

namespace tangle {

CharacteristicCurveSet characteristic_curves_omp(const Rank2Family& family, const StateMeasure& measure,
                                                 const std::vector<double>& p_grid,
                                                 const std::vector<double>& phi_grid) {
  detail::validate_grids(p_grid, phi_grid);
  const std::size_t m = phi_grid.size();
  const auto total = static_cast<std::int64_t>(p_grid.size() * m);
  CharacteristicCurveSet set{p_grid, phi_grid, std::vector<double>(static_cast<std::size_t>(total)), {}};

  // Lowest failing cell wins so the reported point matches the serial path.
  std::int64_t first_failure = std::numeric_limits<std::int64_t>::max();
  std::string failure_what;

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      set.values[idx] = measure(family.at(p_grid[idx / m], phi_grid[idx % m]));
    } catch (const std::exception& e) {
#pragma omp critical(tangle_curve_failure)
      {
        if (k < first_failure) {
          first_failure = k;
          failure_what = e.what();
        }
      }
    }
  }

  if (first_failure != std::numeric_limits<std::int64_t>::max()) {
    const auto idx = static_cast<std::size_t>(first_failure);
    throw CurveEvaluationError(p_grid[idx / m], phi_grid[idx % m], failure_what);
  }
  detail::fill_min_curve(set);
  return set;
}

}  // namespace tangle
