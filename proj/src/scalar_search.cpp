#include "tangle/scalar_search.hpp"

#include <cstdint>
#include <limits>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "tangle/errors.hpp"

namespace tangle {

ScalarMinimum minimize_scalar(const ScalarFn& f, double lo, double hi) {
  if (!(lo < hi)) throw BracketError("empty minimization interval");
  const int bits = std::numeric_limits<double>::digits / 2;
  std::uintmax_t max_iter = 500;
  const auto [x, fx] = boost::math::tools::brent_find_minima(f, lo, hi, bits, max_iter);
  return {x, fx};
}

double bisect_root(const ScalarFn& f, double lo, double hi, double xtol) {
  const double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw BracketError("no sign change in bisection bracket");
  auto done = [xtol](double a, double b) { return b - a <= xtol; };
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::bisect(f, lo, hi, done, max_iter);
  return 0.5 * (a + b);
}

std::vector<std::pair<double, double>> sign_change_brackets(const ScalarFn& f, double lo, double hi,
                                                            int samples) {
  std::vector<std::pair<double, double>> out;
  if (samples < 2) return out;
  double x_prev = lo, f_prev = f(lo);
  for (int k = 1; k < samples; ++k) {
    const double x = lo + (hi - lo) * k / (samples - 1);
    const double fx = f(x);
    if ((f_prev < 0.0) != (fx < 0.0) || fx == 0.0) out.emplace_back(x_prev, x);
    x_prev = x;
    f_prev = fx;
  }
  return out;
}

}  // namespace tangle
