#include "tangle/envelope.hpp"

#include "tangle/errors.hpp"

namespace tangle {

namespace {

// z-component of (b - a) x (c - a)
double cross(double ax, double ay, double bx, double by, double cx, double cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

}  // namespace

Envelope lower_convex_envelope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) throw DomainError("envelope needs matching non-empty grids");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw DomainError("envelope grid must be strictly increasing");
  }
  Envelope env;
  std::vector<std::size_t>& hull = env.vertices;
  for (std::size_t i = 0; i < x.size(); ++i) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2], b = hull.back();
      if (cross(x[a], y[a], x[b], y[b], x[i], y[i]) <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }

  env.values.resize(x.size());
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const std::size_t a = hull[k], b = hull[k + 1];
    env.values[a] = y[a];
    const double slope = (y[b] - y[a]) / (x[b] - x[a]);
    for (std::size_t i = a + 1; i < b; ++i) env.values[i] = y[a] + slope * (x[i] - x[a]);
  }
  env.values[hull.back()] = y[hull.back()];
  return env;
}

std::vector<std::size_t> convexity_violations(std::span<const double> y, double slack) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] > 0.5 * (y[i - 1] + y[i + 1]) + slack) out.push_back(i);
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return v;
}

}  // namespace tangle
