#include "tangle/tolerances.hpp"

#include <cstdlib>
#include <string>

namespace tangle {

Tolerances Tolerances::from_environment() {
  Tolerances tol;
  if (const char* raw = std::getenv("TANGLE_LAB_TOL")) {
    try {
      std::size_t used = 0;
      const double value = std::stod(raw, &used);
      if (used > 0 && value > 0.0) tol.equality = value;
    } catch (const std::exception&) {
      // unparseable: keep the default
    }
  }
  return tol;
}

}  // namespace tangle
