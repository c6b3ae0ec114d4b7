#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/curves.hpp"
#include "tangle/envelope.hpp"
#include "tangle/multipartite.hpp"
#include "tangle/scalar_search.hpp"
#include "tangle/state.hpp"

namespace tangle {

struct DecompositionCheck {
  bool ok;
  double max_deviation;
};

// Elementwise comparison of the ensemble's density with `target`.
DecompositionCheck verify_decomposition(const Ensemble& e, const DensityMatrix& target, double tol = 1e-9);

// Anchor a in `bracket` minimizing objective(p_eval, a). BracketError when the
// minimum sits on the bracket edge.
double stationary_mix_point(const std::function<double(double, double)>& objective, double p_eval,
                            std::pair<double, double> bracket);

enum class RoofScenario { t1, n1, n2 };
std::string_view to_string(RoofScenario s);

enum class SegmentKind {
  spectral,   // p GHZ4 + (1-p) W4
  w4_chord,   // W4 and Z4(a,0), Z4(a,pi) mixed
  curve,      // (Z4(p,0) + Z4(p,pi)) / 2
  ghz_chord,  // GHZ4 and Z4(a,0), Z4(a,pi) mixed
};
std::string_view to_string(SegmentKind k);

struct RoofSegment {
  double p_lo;
  double p_hi;
  SegmentKind kind;
  double anchor;        // a of the chord kinds; unused otherwise
  std::string formula;  // human-readable value expression
};

struct RoofPoint {
  double p;
  double value;             // piecewise value of the roof
  Ensemble decomposition;   // realizes rho4(p)
  double ensemble_average;  // measure averaged over the decomposition members
  std::size_t segment;
};

// Piecewise convex-roof solution for rho4(p) = p GHZ4 + (1-p) W4.
class ConvexRoofResult {
 public:
  ConvexRoofResult(RoofScenario scenario, double nu, std::vector<RoofSegment> segments, bool conjectured = false);

  RoofScenario scenario() const { return scenario_; }
  double nu() const { return nu_; }
  bool conjectured() const { return conjectured_; }
  const std::vector<RoofSegment>& segments() const { return segments_; }
  std::vector<double> breakpoints() const;

  // Measure evaluated on a single pure state for this scenario.
  double pure_measure(const PureState& psi) const;
  double value(double p) const;
  Ensemble decomposition(double p) const;
  // Names of the decomposition members, in ensemble order ("W4", "Z4(a,0)", ...).
  std::vector<std::string> member_labels(double p) const;
  RoofPoint at(double p) const;

 private:
  std::size_t segment_of(double p) const;
  Ensemble ensemble_at(std::size_t segment, double p) const;

  RoofScenario scenario_;
  double nu_;
  std::vector<RoofSegment> segments_;
  bool conjectured_;
};

// nu arguments accept the threshold nu_star() values (within 1e-9) or
// kInfinitePower; anything else is UnsupportedError.
ConvexRoofResult solve_t1_roof();
ConvexRoofResult solve_n1_roof(double nu1);
ConvexRoofResult solve_n2_roof(double nu2);

RoofPoint t1_roof_ghzw4(double p);
RoofPoint n1_roof_ghzw4(double p, double nu1);
RoofPoint n2_roof_ghzw4(double p, double nu2);

struct RoofSample {
  double p;
  double value;
  double envelope;   // lower convex envelope of the min-curve
  double min_curve;
  double gap;        // min_curve - value
  double verify_deviation;
};

struct RoofCertificate {
  std::vector<RoofSample> samples;
  std::vector<double> hull_vertices;  // p of the envelope vertices
};

// Compares the solution against the characteristic curves of the Z4 family.
RoofCertificate certify_roof(const ConvexRoofResult& roof, const CharacteristicCurveSet& curves);

// Spectral form lambda |psi+><psi+| + (1-lambda) |psi-><psi-| of every
// three-qubit marginal of |Z4(p,phi)>.
struct ReducedTripartite {
  ReducedTripartiteCoefficients coefficients;
  PureState psi_plus;
  PureState psi_minus;

  DensityMatrix density() const;
};
ReducedTripartite reduced_tripartite_spectral(double p, double phi);

// lambda tau(psi+) + (1-lambda) tau(psi-), an upper bound of tau(rho_IJK).
double tripartite_residual_upper_bound(double p, double phi);

}  // namespace tangle
