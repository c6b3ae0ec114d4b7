#include "tangle/roof.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <numbers>

#include "tangle/errors.hpp"
#include "tangle/monogamy.hpp"
#include "tangle/named_states.hpp"

namespace tangle {

DecompositionCheck verify_decomposition(const Ensemble& e, const DensityMatrix& target, double tol) {
  if (e.n_qubits() != target.n_qubits()) throw DomainError("ensemble and target differ in qubit count");
  const double dev = (ensemble_to_density(e).matrix() - target.matrix()).cwiseAbs().maxCoeff();
  return {dev < tol, dev};
}

double stationary_mix_point(const std::function<double(double, double)>& objective, double p_eval,
                            std::pair<double, double> bracket) {
  const auto [lo, hi] = bracket;
  const ScalarMinimum m = minimize_scalar([&](double a) { return objective(p_eval, a); }, lo, hi);
  const double edge = 1e-5 * (hi - lo);
  if (m.x - lo < edge || hi - m.x < edge) {
    throw BracketError("mixing objective has no interior stationary point in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  return m.x;
}

std::string_view to_string(RoofScenario s) {
  switch (s) {
    case RoofScenario::t1: return "t1";
    case RoofScenario::n1: return "n1";
    case RoofScenario::n2: return "n2";
  }
  return "?";
}

std::string_view to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::spectral: return "spectral";
    case SegmentKind::w4_chord: return "w4_chord";
    case SegmentKind::curve: return "curve";
    case SegmentKind::ghz_chord: return "ghz_chord";
  }
  return "?";
}

// ------------------------------------------------------------ roof result

ConvexRoofResult::ConvexRoofResult(RoofScenario scenario, double nu, std::vector<RoofSegment> segments,
                                   bool conjectured)
    : scenario_(scenario), nu_(nu), segments_(std::move(segments)), conjectured_(conjectured) {
  if (segments_.empty() || segments_.front().p_lo != 0.0 || segments_.back().p_hi != 1.0) {
    throw DomainError("roof segments must cover [0, 1]");
  }
  for (std::size_t k = 1; k < segments_.size(); ++k) {
    if (segments_[k].p_lo != segments_[k - 1].p_hi) throw DomainError("roof segments must be contiguous");
  }
}

std::vector<double> ConvexRoofResult::breakpoints() const {
  std::vector<double> out;
  for (std::size_t k = 1; k < segments_.size(); ++k) out.push_back(segments_[k].p_lo);
  return out;
}

double ConvexRoofResult::pure_measure(const PureState& psi) const {
  switch (scenario_) {
    case RoofScenario::t1: return t1(psi);
    case RoofScenario::n1: return n1(psi, nu_);
    case RoofScenario::n2: return n2(psi, nu_);
  }
  return 0.0;
}

std::size_t ConvexRoofResult::segment_of(double p) const {
  check_probability(p);
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    if (p <= segments_[k].p_hi) return k;
  }
  return segments_.size() - 1;
}

double ConvexRoofResult::value(double p) const {
  const RoofSegment& s = segments_[segment_of(p)];
  const double a = s.anchor;
  switch (s.kind) {
    case SegmentKind::spectral:
      return p * pure_measure(ghz4()) + (1.0 - p) * pure_measure(w4());
    case SegmentKind::curve:
      return pure_measure(z4(p, 0.0));
    case SegmentKind::w4_chord:
      return (1.0 - p / a) * pure_measure(w4()) + p / a * pure_measure(z4(a, 0.0));
    case SegmentKind::ghz_chord:
      return (p - a) / (1.0 - a) * pure_measure(ghz4()) + (1.0 - p) / (1.0 - a) * pure_measure(z4(a, 0.0));
  }
  return 0.0;
}

Ensemble ConvexRoofResult::ensemble_at(std::size_t segment, double p) const {
  const RoofSegment& s = segments_[segment];
  const double a = s.anchor;
  const double pi = std::numbers::pi;
  std::vector<EnsembleMember> members;
  auto add = [&](double w, PureState psi) {
    if (w > 0.0) members.push_back({w, std::move(psi)});
  };
  switch (s.kind) {
    case SegmentKind::spectral:
      add(p, ghz4());
      add(1.0 - p, w4());
      break;
    case SegmentKind::curve:
      add(0.5, z4(p, 0.0));
      add(0.5, z4(p, pi));
      break;
    case SegmentKind::w4_chord:
      add(1.0 - p / a, w4());
      add(p / (2.0 * a), z4(a, 0.0));
      add(p / (2.0 * a), z4(a, pi));
      break;
    case SegmentKind::ghz_chord:
      add((p - a) / (1.0 - a), ghz4());
      add((1.0 - p) / (2.0 * (1.0 - a)), z4(a, 0.0));
      add((1.0 - p) / (2.0 * (1.0 - a)), z4(a, pi));
      break;
  }
  return Ensemble(std::move(members));
}

Ensemble ConvexRoofResult::decomposition(double p) const { return ensemble_at(segment_of(p), p); }

std::vector<std::string> ConvexRoofResult::member_labels(double p) const {
  const std::size_t seg = segment_of(p);
  const RoofSegment& s = segments_[seg];
  auto z = [](double a, const char* phase) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "Z4(%.11e,%s)", a, phase);
    return std::string(buf);
  };
  // Same member order and zero-weight pruning as ensemble_at.
  std::vector<std::pair<double, std::string>> all;
  const double a = s.anchor;
  switch (s.kind) {
    case SegmentKind::spectral:
      all = {{p, "GHZ4"}, {1.0 - p, "W4"}};
      break;
    case SegmentKind::curve:
      all = {{0.5, z(p, "0")}, {0.5, z(p, "pi")}};
      break;
    case SegmentKind::w4_chord:
      all = {{1.0 - p / a, "W4"}, {p / (2.0 * a), z(a, "0")}, {p / (2.0 * a), z(a, "pi")}};
      break;
    case SegmentKind::ghz_chord:
      all = {{(p - a) / (1.0 - a), "GHZ4"}, {(1.0 - p) / (2.0 * (1.0 - a)), z(a, "0")},
             {(1.0 - p) / (2.0 * (1.0 - a)), z(a, "pi")}};
      break;
  }
  std::vector<std::string> out;
  for (auto& [w, label] : all) {
    if (w > 0.0) out.push_back(std::move(label));
  }
  return out;
}

RoofPoint ConvexRoofResult::at(double p) const {
  const std::size_t seg = segment_of(p);
  Ensemble e = ensemble_at(seg, p);
  double avg = 0.0;
  for (const auto& m : e.members()) avg += m.weight * pure_measure(m.state);
  return {p, value(p), std::move(e), avg, seg};
}

// ------------------------------------------------------------ scenarios

namespace {

enum class NuKind { star, infinite };

NuKind classify_nu(double nu, double star, const char* which) {
  if (std::isinf(nu) && nu > 0.0) return NuKind::infinite;
  if (std::abs(nu - star) <= 1e-9) return NuKind::star;
  throw UnsupportedError(std::string(which) + " roof is solved only at the threshold exponent or infinity");
}

// Sign change of m[Z4(p,0)] from negative to non-negative inside (0,1).
double zero_crossing(const ScalarFn& curve) {
  const auto brackets = sign_change_brackets(curve, 0.02, 0.98, 49);
  if (brackets.empty()) throw BracketError("characteristic curve has no sign change");
  return bisect_root(curve, brackets.front().first, brackets.front().second, 1e-12);
}

ConvexRoofResult solve_negativity_roof(RoofScenario scenario, double nu, NuKind kind) {
  const ConvexRoofResult probe(scenario, nu, {{0.0, 1.0, SegmentKind::curve, 0.0, ""}});
  const std::string name(to_string(scenario));
  const ScalarFn curve = [&](double p) { return probe.pure_measure(z4(p, 0.0)); };
  const std::string curve_formula = name + "[Z4(p,0)]";
  const std::string w4_formula = "(1-p/a) " + name + "(W4) + (p/a) " + name + "[Z4(a,0)]";

  if (kind == NuKind::star) {
    const double p0 = zero_crossing(curve);
    return ConvexRoofResult(scenario, nu,
                            {{0.0, p0, SegmentKind::w4_chord, p0, "0"},
                             {p0, 1.0, SegmentKind::curve, 0.0, curve_formula}});
  }

  const double m_w4 = probe.pure_measure(w4());
  const auto w4_chord = [&](double p, double a) { return (1.0 - p / a) * m_w4 + p / a * curve(a); };
  if (scenario == RoofScenario::n1) {
    const double p1 = stationary_mix_point(w4_chord, 0.25, {0.5, 0.99});
    return ConvexRoofResult(scenario, nu,
                            {{0.0, p1, SegmentKind::w4_chord, p1, w4_formula},
                             {p1, 1.0, SegmentKind::curve, 0.0, curve_formula}});
  }

  const double m_ghz = probe.pure_measure(ghz4());
  const auto ghz_chord = [&](double p, double a) {
    return (p - a) / (1.0 - a) * m_ghz + (1.0 - p) / (1.0 - a) * curve(a);
  };
  const double p1 = stationary_mix_point(w4_chord, 0.1, {0.25, 0.95});
  const double p2 = stationary_mix_point(ghz_chord, 0.995, {p1, 0.99});
  return ConvexRoofResult(
      scenario, nu,
      {{0.0, p1, SegmentKind::w4_chord, p1, w4_formula},
       {p1, p2, SegmentKind::curve, 0.0, curve_formula},
       {p2, 1.0, SegmentKind::ghz_chord, p2, "(p-a)/(1-a) " + name + "(GHZ4) + (1-p)/(1-a) " + name + "[Z4(a,0)]"}});
}

}  // namespace

ConvexRoofResult solve_t1_roof() {
  return ConvexRoofResult(RoofScenario::t1, 0.0, {{0.0, 1.0, SegmentKind::spectral, 0.0, "p"}});
}

ConvexRoofResult solve_n1_roof(double nu1) {
  return solve_negativity_roof(RoofScenario::n1, nu1, classify_nu(nu1, nu_star().nu1_star, "n1"));
}

ConvexRoofResult solve_n2_roof(double nu2) {
  return solve_negativity_roof(RoofScenario::n2, nu2, classify_nu(nu2, nu_star().nu2_star, "n2"));
}

RoofPoint t1_roof_ghzw4(double p) { return solve_t1_roof().at(p); }
RoofPoint n1_roof_ghzw4(double p, double nu1) { return solve_n1_roof(nu1).at(p); }
RoofPoint n2_roof_ghzw4(double p, double nu2) { return solve_n2_roof(nu2).at(p); }

RoofCertificate certify_roof(const ConvexRoofResult& roof, const CharacteristicCurveSet& curves) {
  const Envelope env = lower_convex_envelope(curves.p_grid, curves.min_curve);
  RoofCertificate cert;
  for (std::size_t v : env.vertices) cert.hull_vertices.push_back(curves.p_grid[v]);
  cert.samples.reserve(curves.p_grid.size());
  for (std::size_t i = 0; i < curves.p_grid.size(); ++i) {
    const double p = curves.p_grid[i];
    const double value = roof.value(p);
    const double dev = verify_decomposition(roof.decomposition(p), rho4(p)).max_deviation;
    cert.samples.push_back({p, value, env.values[i], curves.min_curve[i], curves.min_curve[i] - value, dev});
  }
  return cert;
}

// ------------------------------------------------- reduced tripartite form

DensityMatrix ReducedTripartite::density() const {
  const double l = coefficients.lambda;
  return ensemble_to_density(Ensemble({{l, psi_plus}, {1.0 - l, psi_minus}}));
}

ReducedTripartite reduced_tripartite_spectral(double p, double phi) {
  const ReducedTripartiteCoefficients c = reduced_tripartite_coefficients(p);
  const cplx e_plus = std::polar(1.0, phi), e_minus = std::polar(1.0, -phi);
  auto build = [&](double n, double mu, double nu) {
    StateVector v = StateVector::Zero(8);
    v[0] = mu;
    v[7] = -e_minus;
    v[1] = v[2] = v[4] = -nu * e_plus;
    return PureState(3, v / n);
  };
  return {c, build(c.N_plus, c.mu_plus, c.nu_plus), build(c.N_minus, c.mu_minus, c.nu_minus)};
}

double tripartite_residual_upper_bound(double p, double phi) {
  const double l = reduced_tripartite_coefficients(p).lambda;
  return l * residual_reduced_pure(p, phi, Branch::plus) + (1.0 - l) * residual_reduced_pure(p, phi, Branch::minus);
}

}  // namespace tangle
