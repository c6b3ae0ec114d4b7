#pragma once

#include <array>

#include "tangle/state.hpp"

namespace tangle {

// Raw components of the closed-form pairwise concurrence of the Z4 family.
struct ConcurrenceClosedForm {
  double Lambda;
  double Lambda_plus;
  double Lambda_minus;
  double alpha;
  double beta;
  double theta;  // atan2(beta, alpha) / 3, in [0, pi/3] on p in [0,1]
  double raw;    // sqrt(Lambda) - sqrt(Lambda_plus) - sqrt(Lambda_minus), unclamped
};

// Raw components of the closed-form pairwise negativity of the Z4 family.
struct NegativityClosedForm {
  double lambda;
  double lambda_plus;
  double lambda_minus;
  double r0;
  double theta0;
  double alpha0;
  double beta0;
  double raw;
};

template <class Detail>
struct ClosedFormValue {
  double value;
  Detail detail;
};

enum class LogBase { natural, two };

double concurrence_pure(const PureState& psi);

// Square roots of the spin-flip eigenvalues of rho (rho (Y⊗Y) rho* (Y⊗Y)),
// in decreasing order. Obtained as the singular values of
// sqrt(rho) (Y⊗Y) sqrt(rho)* (Y⊗Y), which share those eigenvalues but avoid
// square roots of round-off sized eigenvalues of the non-Hermitian product.
std::array<double, 4> wootters_spectrum(const DensityMatrix& rho, const Tolerances& tol = {});
double concurrence_mixed(const DensityMatrix& rho, const Tolerances& tol = {});

double binary_entropy(double x, LogBase base = LogBase::natural);
double eof_from_concurrence(double concurrence, LogBase base = LogBase::natural);

// ||rho^{T_A}||_1 - 1, evaluated as twice the magnitude of the negative spectrum.
double negativity(const DensityMatrix& rho, const QubitSubset& part_a);
// Pure-state negativity from the Schmidt coefficients: (sum s_k)^2 - 1.
double negativity_pure(const PureState& psi, const QubitSubset& part_a);

// 2 sqrt(det rho_focus)
double concurrence_one_vs_rest(const PureState& psi, int focus);

ClosedFormValue<ConcurrenceClosedForm> closed_form_concurrence_z4(double p);
ClosedFormValue<NegativityClosedForm> closed_form_negativity_z4(double p);

// The two-qubit and one-qubit marginals of |Z4(p,phi)> written out entrywise.
DensityMatrix z4_pair_marginal(double p, double phi);
DensityMatrix z4_single_marginal(double p, double phi);

}  // namespace tangle
