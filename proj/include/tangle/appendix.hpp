#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tangle/curves.hpp"
#include "tangle/envelope.hpp"
#include "tangle/state.hpp"

namespace tangle {

// Three-tangle of sqrt(p) psi1 - e^{i phi} sqrt(1-p) psi2 with
// psi1,2 = (GHZ3 ± W3)/sqrt2, in its two closed forms.
struct AppendixTau3Params {
  cplx z;  // e^{i phi} sqrt((1-p)/p); undefined (nan) at p = 0
  double f0;
  double f1;
  double f2;
  double f3;
  double phi0;
};

struct AppendixTau3 {
  double value;                  // product form for p >= 1e-6, cosine-series form below
  std::optional<double> product_form;  // absent at p < 1e-6
  double cosine_form;
  AppendixTau3Params params;
};

AppendixTau3 appendix_tau3(double p, double phi);

// tau3(psi1) and tau3(psi2)
double appendix_tau3_psi1();
double appendix_tau3_psi2();
// p/2 + tau3(psi2), the spectral-decomposition bound on tau3(Pi(p)).
double appendix_upper_bound(double p);

struct AppendixZero {
  double p;
  double phi;
  std::string label;  // "pi", "0", "pi-phi0", "pi+phi0"
};

// Non-trivial zeros over p in (0,1): one on phi = pi, one on phi = 0 and the
// pair at pi ± phi0.
std::vector<AppendixZero> appendix_zeros();
// phi0 of the complex zero pair.
double appendix_phi0();

// Convex envelope of the minimum of the characteristic curves. Never a
// certified roof: the mixing ensembles suggested by its zeros do not
// reproduce Pi(p).
struct AppendixEnvelope {
  CharacteristicCurveSet curves;
  Envelope envelope;
  double zero_lo;  // p1
  double zero_hi;  // p3
  bool conjectured = true;
};

// The zeros' p and phi values are merged into the grids before sampling.
AppendixEnvelope appendix_conjectured_envelope(std::vector<double> p_grid, std::vector<double> phi_grid,
                                               Execution execution = Execution::parallel);

}  // namespace tangle
