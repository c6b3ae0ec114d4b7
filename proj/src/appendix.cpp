#include "tangle/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tangle/errors.hpp"
#include "tangle/multipartite.hpp"
#include "tangle/named_states.hpp"
#include "tangle/scalar_search.hpp"

namespace tangle {

namespace {

const double kC = 2.0 / (3.0 * std::sqrt(6.0));

// (1-z)^3 / 8 + c (1+z)^3
cplx cubic_factor(cplx z) { return std::pow(1.0 - z, 3) / 8.0 + kC * std::pow(1.0 + z, 3); }
cplx cubic_factor_derivative(cplx z) {
  return -3.0 * std::pow(1.0 - z, 2) / 8.0 + 3.0 * kC * std::pow(1.0 + z, 2);
}

cplx z_of(double p, double phi) { return std::polar(std::sqrt((1.0 - p) / p), phi); }

struct Polar {
  double p;
  double phi;  // in [0, 2pi)
};

Polar from_z(cplx z) {
  double phi = std::arg(z);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  return {1.0 / (1.0 + std::norm(z)), phi};
}

double find_phi_pi_root() {
  // On phi = pi, z = -r is real and so is the cubic factor.
  const ScalarFn f = [](double p) { return cubic_factor(z_of(p, std::numbers::pi)).real(); };
  const auto brackets = sign_change_brackets(f, 1e-4, 0.999, 400);
  if (brackets.size() != 1) throw BracketError("expected one zero of tau3 on phi = pi");
  return bisect_root(f, brackets[0].first, brackets[0].second, 1e-14);
}

double find_phi_zero_root() {
  // Signed product of the two real factors on phi = 0.
  const ScalarFn f = [](double p) {
    const cplx z = z_of(p, 0.0);
    return (1.0 - z).real() * cubic_factor(z).real();
  };
  const auto brackets = sign_change_brackets(f, 1e-4, 0.999, 400);
  if (brackets.size() != 1) throw BracketError("expected one zero of tau3 on phi = 0");
  return bisect_root(f, brackets[0].first, brackets[0].second, 1e-14);
}

// Zero of the cubic factor with 0 < phi < pi: coarse grid search, then
// complex Newton in z.
cplx find_complex_root() {
  double best = std::numeric_limits<double>::infinity();
  cplx z{};
  const double pi = std::numbers::pi;
  for (int i = 1; i < 200; ++i) {
    const double p = i / 200.0;
    for (int j = 1; j < 200; ++j) {
      const double phi = 0.05 + (pi - 0.1) * j / 200.0;
      const cplx zz = z_of(p, phi);
      // scale out the growth of the cubic as p -> 0
      const double v = std::abs(cubic_factor(zz)) / std::pow(1.0 + std::abs(zz), 3);
      if (v < best) {
        best = v;
        z = zz;
      }
    }
  }
  for (int it = 0; it < 50; ++it) {
    const cplx step = cubic_factor(z) / cubic_factor_derivative(z);
    z -= step;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
  }
  if (std::abs(cubic_factor(z)) > 1e-12) throw BracketError("complex zero of tau3 did not converge");
  return z;
}

}  // namespace

double appendix_phi0() {
  static const double phi0 = std::numbers::pi - from_z(find_complex_root()).phi;
  return phi0;
}

AppendixTau3 appendix_tau3(double p, double phi) {
  check_probability(p);
  const double s = std::sqrt(p * (1.0 - p));
  const double g = 155.0 / 1728.0, h = (2.0 * p - 1.0) / (6.0 * std::sqrt(6.0));

  AppendixTau3 out{};
  AppendixTau3Params& prm = out.params;
  prm.f0 = g * (1.0 + 6.0 * p - 6.0 * p * p) + h * (1.0 - 10.0 * p + 10.0 * p * p);
  prm.f1 = 101.0 / 288.0 * s * (1.0 + p - p * p);
  prm.f2 = 6.0 * p * (1.0 - p) * (g + h);
  prm.f3 = 101.0 / 864.0 * s * s * s;
  prm.phi0 = appendix_phi0();

  const double series = prm.f0 + prm.f1 * std::cos(phi) + prm.f2 * std::cos(2.0 * phi) + prm.f3 * std::cos(3.0 * phi);
  out.cosine_form = 2.0 * std::sqrt(std::max((1.0 - 2.0 * s * std::cos(phi)) * series, 0.0));

  if (p >= 1e-6) {
    prm.z = z_of(p, phi);
    out.product_form = 4.0 * p * p * std::abs((1.0 - prm.z) / 2.0) * std::abs(cubic_factor(prm.z));
    out.value = *out.product_form;
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    prm.z = {nan, nan};
    out.value = out.cosine_form;
  }
  return out;
}

double appendix_tau3_psi1() { return (8.0 * std::sqrt(6.0) + 9.0) / 36.0; }
double appendix_tau3_psi2() { return (8.0 * std::sqrt(6.0) - 9.0) / 36.0; }
double appendix_upper_bound(double p) { return p / 2.0 + appendix_tau3_psi2(); }

std::vector<AppendixZero> appendix_zeros() {
  const double pi = std::numbers::pi;
  const Polar c = from_z(find_complex_root());
  const double phi0 = pi - c.phi;
  return {{find_phi_pi_root(), pi, "pi"},
          {find_phi_zero_root(), 0.0, "0"},
          {c.p, pi - phi0, "pi-phi0"},
          {c.p, pi + phi0, "pi+phi0"}};
}

AppendixEnvelope appendix_conjectured_envelope(std::vector<double> p_grid, std::vector<double> phi_grid,
                                               Execution execution) {
  const auto zeros = appendix_zeros();
  for (const auto& z : zeros) {
    p_grid.push_back(z.p);
    phi_grid.push_back(z.phi);
  }
  auto tidy = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(), [](double a, double b) { return std::abs(a - b) < 1e-13; }), v.end());
  };
  tidy(p_grid);
  tidy(phi_grid);

  const Rank2Family family = family_by_name("Zapp");
  const StateMeasure tau = [](const PureState& s) { return three_tangle_pure(s).tau; };
  AppendixEnvelope out{characteristic_curves(family, tau, p_grid, phi_grid, execution), {}, zeros[0].p, zeros[2].p};
  out.envelope = lower_convex_envelope(out.curves.p_grid, out.curves.min_curve);
  return out;
}

}  // namespace tangle
