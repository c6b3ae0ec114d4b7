#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace tangle {

using ScalarFn = std::function<double(double)>;

struct ScalarMinimum {
  double x;
  double fx;
};

// Brent minimization (golden section with parabolic steps) on [lo, hi].
// Locates x to about 1e-8 relative.
ScalarMinimum minimize_scalar(const ScalarFn& f, double lo, double hi);

// Root of f in [lo, hi] by bisection; BracketError when f(lo), f(hi) share a sign.
double bisect_root(const ScalarFn& f, double lo, double hi, double xtol = 1e-12);

// Sub-intervals of a uniform sampling of [lo, hi] across which f changes sign.
std::vector<std::pair<double, double>> sign_change_brackets(const ScalarFn& f, double lo, double hi,
                                                            int samples);

}  // namespace tangle
