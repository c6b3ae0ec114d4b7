#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "tangle/state.hpp"

namespace tangle {

struct ThreeTangleCoefficients {
  cplx d1;
  cplx d2;
  cplx d3;
};

struct ThreeTangle {
  double tau;  // 4 |d1 - 2 d2 + 4 d3|
  ThreeTangleCoefficients coeffs;
};

ThreeTangle three_tangle_pure(const PureState& psi);

// C^2_{A|(BC)} - C^2_{A|B} - C^2_{A|C}, the monogamy leftover with focus qubit 0.
double residual_via_concurrences(const PureState& psi);

// a|000> + b|111> and c|001> + d|010> + f|100>
struct GhzWAmplitudes {
  double a;
  double b;
  double c;
  double d;
  double f;
};

// s^{2/3} / (1 + s^{2/3}) with s = 4 c d f / (a^2 b).
double ghzw_zero_threshold(const GhzWAmplitudes& amps);
// Residual tangle of p|gGHZ><gGHZ| + (1-p)|gW><gW|. Only the zero region
// p <= threshold is known in closed form; nullopt above it.
std::optional<double> residual_ghzw_mixture(const GhzWAmplitudes& amps, double p);
// p|g1><g1| + (1-p)|g2><g2|, g1 = (|000>+|111>)/sqrt2, g2 = (|001>+|110>)/sqrt2.
double residual_g1g2_mixture(double p);

struct PauliContext {
  std::array<Matrix2, 4> sigma;   // identity, X, Y, Z
  std::array<double, 4> metric;   // diag(-1, 1, 0, 1)
};
const PauliContext& pauli_context();

struct FInvariants {
  double f1;
  double f2;
  double f3;
};

// Homogeneity degrees of F1..F3 in the amplitudes.
inline constexpr std::array<int, 3> kFDegrees{6, 8, 12};

FInvariants f_invariants(const PureState& psi);
// Works on unnormalized 4-qubit amplitude vectors as well.
FInvariants f_invariants(const StateVector& amplitudes);

struct GMonotones {
  double g1;
  double g2;
  double g3;
};
GMonotones g_monotones(const PureState& psi);

enum class Branch { plus, minus };

// Scalar data of the spectral form of the three-qubit marginal of |Z4(p,phi)>.
struct ReducedTripartiteCoefficients {
  double lambda;
  double N_plus;
  double N_minus;
  double mu_plus;
  double mu_minus;
  double nu_plus;
  double nu_minus;
};

// Throws SingularFamilyError for p < 1e-6.
ReducedTripartiteCoefficients reduced_tripartite_coefficients(double p);
double residual_reduced_pure(double p, double phi, Branch branch);

enum class ResidualClass {
  pure,
  qubit_block,        // no coherence across one qubit: biseparable members
  ghz_w_mixture,
  g1_g2_mixture,
  zero_spectral,      // non-degenerate spectrum with tangle-free eigenvectors
  unsupported,
};
std::string_view to_string(ResidualClass c);

struct MixedResidual {
  std::optional<double> value;
  ResidualClass kind;
};

// Residual tangle of a three-qubit state when it falls in one of the
// classes above; value is nullopt otherwise.
MixedResidual residual_mixed(const DensityMatrix& rho, const Tolerances& tol = {});

}  // namespace tangle
