#include "tangle/named_states.hpp"

#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>

#include "tangle/errors.hpp"

namespace tangle {

namespace {

struct Term {
  double coeff;
  const char* ket;
};

PureState from_terms(std::initializer_list<Term> terms) {
  const int n = static_cast<int>(std::string_view(terms.begin()->ket).size());
  StateVector v = StateVector::Zero(Eigen::Index{1} << n);
  for (const auto& t : terms) {
    Eigen::Index index = 0;
    for (char c : std::string_view(t.ket)) index = (index << 1) | (c == '1' ? 1 : 0);
    v[index] += t.coeff;
  }
  return PureState::normalized(n, std::move(v));
}

PureState mix_pair(const PureState& a, const PureState& b, double sign) {
  return PureState::normalized(a.n_qubits(), a.amplitudes() + sign * b.amplitudes());
}

}  // namespace

void check_probability(double p, std::string_view what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(what) + " = " + std::to_string(p) + " outside [0,1]");
  }
}

PureState superposition(const PureState& a, const PureState& b, double p, double phi) {
  check_probability(p);
  if (a.n_qubits() != b.n_qubits()) throw DomainError("superposed states differ in qubit count");
  const cplx phase = std::polar(1.0, phi);
  return PureState(a.n_qubits(), std::sqrt(p) * a.amplitudes() - phase * std::sqrt(1.0 - p) * b.amplitudes());
}

PureState ghz3() { return from_terms({{1, "000"}, {1, "111"}}); }
PureState w3() { return from_terms({{1, "001"}, {1, "010"}, {1, "100"}}); }
PureState ghz4() { return from_terms({{1, "0000"}, {1, "1111"}}); }
PureState w4() { return from_terms({{1, "1000"}, {1, "0100"}, {1, "0010"}, {1, "0001"}}); }
PureState wtilde4() { return from_terms({{1, "0111"}, {1, "1011"}, {1, "1101"}, {1, "1110"}}); }
PureState phi2() {
  return from_terms({{std::sqrt(2.0), "1111"}, {1, "1000"}, {1, "0100"}, {1, "0010"}, {1, "0001"}});
}
PureState phi3() { return from_terms({{1, "1111"}, {1, "1100"}, {1, "0010"}, {1, "0001"}}); }
PureState g3() { return from_terms({{1, "0000"}, {1, "1110"}}); }
PureState psi1_app() { return mix_pair(ghz3(), w3(), +1.0); }
PureState psi2_app() { return mix_pair(ghz3(), w3(), -1.0); }

PureState z3(double p, double phi) { return superposition(ghz3(), w3(), p, phi); }
PureState z4(double p, double phi) { return superposition(ghz4(), w4(), p, phi); }
PureState z_app(double p, double phi) { return superposition(psi1_app(), psi2_app(), p, phi); }

const std::vector<std::string_view>& named_state_names() {
  static const std::vector<std::string_view> names = {
      "GHZ3", "W3",  "GHZ4",     "W4",       "Wtilde4", "Phi2", "Phi3",
      "g3",   "Z3",  "Z4",       "psi1_app", "psi2_app", "Z_app"};
  return names;
}

bool is_family(std::string_view name) { return name == "Z3" || name == "Z4" || name == "Z_app"; }

PureState named_state(std::string_view name, std::optional<FamilyParams> params) {
  if (is_family(name)) {
    if (!params) throw DomainError(std::string(name) + " requires (p, phi)");
    check_probability(params->p);
    if (name == "Z3") return z3(params->p, params->phi);
    if (name == "Z4") return z4(params->p, params->phi);
    return z_app(params->p, params->phi);
  }
  if (params) throw DomainError(std::string(name) + " takes no parameters");
  if (name == "GHZ3") return ghz3();
  if (name == "W3") return w3();
  if (name == "GHZ4") return ghz4();
  if (name == "W4") return w4();
  if (name == "Wtilde4") return wtilde4();
  if (name == "Phi2") return phi2();
  if (name == "Phi3") return phi3();
  if (name == "g3") return g3();
  if (name == "psi1_app") return psi1_app();
  if (name == "psi2_app") return psi2_app();
  throw UnsupportedError("unknown state name '" + std::string(name) + "'");
}

namespace {
DensityMatrix rank2_mixture(const PureState& a, const PureState& b, double p) {
  check_probability(p);
  return ensemble_to_density(Ensemble({{p, a}, {1.0 - p, b}}));
}
}  // namespace

DensityMatrix rho4(double p) { return rank2_mixture(ghz4(), w4(), p); }
DensityMatrix pi_app(double p) { return rank2_mixture(psi1_app(), psi2_app(), p); }

}  // namespace tangle
