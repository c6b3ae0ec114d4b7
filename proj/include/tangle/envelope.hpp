#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tangle {

struct Envelope {
  std::vector<double> values;         // greatest convex minorant, one per grid point
  std::vector<std::size_t> vertices;  // hull vertex indices, ascending, endpoints included
};

// Lower convex hull of the points (x[i], y[i]) (monotone chain), evaluated
// back on x by linear interpolation. x must be strictly increasing.
Envelope lower_convex_envelope(std::span<const double> x, std::span<const double> y);

// Indices i where the three-point midpoint test y[i] <= (y[i-1] + y[i+1]) / 2 + slack
// fails on a uniform grid.
std::vector<std::size_t> convexity_violations(std::span<const double> y, double slack);

std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace tangle
