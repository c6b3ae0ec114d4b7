#include "tangle/monogamy.hpp"

#include <cmath>
#include <string>

#include "tangle/bipartite.hpp"
#include "tangle/errors.hpp"
#include "tangle/multipartite.hpp"

namespace tangle {

double weighted_power(double base, double nu) {
  if (!(nu > 0.0)) throw DomainError("power factor must be positive");
  const double x = std::max(base, 0.0);
  if (std::isinf(nu)) {
    if (std::abs(x - 1.0) <= 1e-9) return 1.0;
    return x < 1.0 ? 0.0 : kInfinitePower;
  }
  return std::pow(x, nu);
}

NuStar nu_star() {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  return {std::log((3.0 - 3.0 * s2 + s3) / 6.0) / std::log(1.5 - s2),
          std::log((s2 - 1.0) / 2.0) / std::log(s2 - 1.25)};
}

namespace {

constexpr int kQubits = 4;

int pair_index(int i, int j) {
  // 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
  if (i > j) std::swap(i, j);
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[i][j];
}

// The triple that leaves out `missing`.
std::array<int, 3> triple_without(int missing) {
  std::array<int, 3> t{};
  int k = 0;
  for (int q = 0; q < kQubits; ++q)
    if (q != missing) t[static_cast<std::size_t>(k++)] = q;
  return t;
}

struct Marginals {
  std::array<double, 4> one_vs_rest{};  // C^2 or N
  std::array<double, 6> pair{};         // C^2 or N
  // N_{I|(JK)} for triple index (= left-out qubit) and position of I.
  std::array<std::array<double, 3>, 4> one_vs_two{};
  std::array<std::optional<double>, 4> tau{};
};

Marginals concurrence_marginals(const PureState& psi) {
  Marginals m;
  for (int q = 0; q < kQubits; ++q) {
    const double c = concurrence_one_vs_rest(psi, q);
    m.one_vs_rest[static_cast<std::size_t>(q)] = c * c;
  }
  for (int i = 0; i < kQubits; ++i)
    for (int j = i + 1; j < kQubits; ++j) {
      const double c = concurrence_mixed(reduced_density(psi, QubitSubset::of({i, j}, kQubits)));
      m.pair[static_cast<std::size_t>(pair_index(i, j))] = c * c;
    }
  return m;
}

Marginals negativity_marginals(const PureState& psi) {
  Marginals m;
  for (int q = 0; q < kQubits; ++q) {
    m.one_vs_rest[static_cast<std::size_t>(q)] = negativity_pure(psi, QubitSubset::single(q, kQubits));
  }
  for (int i = 0; i < kQubits; ++i)
    for (int j = i + 1; j < kQubits; ++j) {
      const DensityMatrix rho = reduced_density(psi, QubitSubset::of({i, j}, kQubits));
      m.pair[static_cast<std::size_t>(pair_index(i, j))] = negativity(rho, QubitSubset::single(0, 2));
    }
  for (int missing = 0; missing < kQubits; ++missing) {
    const auto t = triple_without(missing);
    const DensityMatrix rho = reduced_density(psi, QubitSubset({t[0], t[1], t[2]}, kQubits));
    for (int pos = 0; pos < 3; ++pos) {
      m.one_vs_two[static_cast<std::size_t>(missing)][static_cast<std::size_t>(pos)] =
          negativity(rho, QubitSubset::single(pos, 3));
    }
  }
  return m;
}

}  // namespace

MonogamyResult monogamy_breakdown(const PureState& psi, MonogamyMeasure measure,
                                  const PowerFactors& factors) {
  if (psi.n_qubits() != kQubits) {
    throw DomainError("monogamy measures need 4 qubits, got " + std::to_string(psi.n_qubits()));
  }
  const bool negativity_based = measure == MonogamyMeasure::n1 || measure == MonogamyMeasure::n2;
  const bool squared = measure == MonogamyMeasure::n2;
  Marginals m = negativity_based ? negativity_marginals(psi) : concurrence_marginals(psi);

  if (measure == MonogamyMeasure::t2) {
    for (int missing = 0; missing < kQubits; ++missing) {
      const auto t = triple_without(missing);
      const MixedResidual r = residual_mixed(reduced_density(psi, QubitSubset({t[0], t[1], t[2]}, kQubits)));
      m.tau[static_cast<std::size_t>(missing)] = r.value;
    }
  }

  auto sq = [&](double x) { return squared ? x * x : x; };
  const double power = measure == MonogamyMeasure::t2   ? factors.mu3
                       : measure == MonogamyMeasure::n1 ? factors.nu1
                                                        : factors.nu2;

  MonogamyResult result;
  bool supported = true;
  double total = 0.0;
  for (int focus = 0; focus < kQubits; ++focus) {
    MonogamyReport& rep = result.reports[static_cast<std::size_t>(focus)];
    rep.focus = focus;
    rep.one_vs_rest = sq(m.one_vs_rest[static_cast<std::size_t>(focus)]);
    double pair_sum = 0.0;
    for (int j = 0; j < kQubits; ++j) {
      if (j == focus) continue;
      const double v = sq(m.pair[static_cast<std::size_t>(pair_index(focus, j))]);
      rep.pairwise[{focus, j}] = v;
      pair_sum += v;
    }
    double triple_sum = 0.0;
    if (measure != MonogamyMeasure::t1) {
      for (int missing = 0; missing < kQubits; ++missing) {
        if (missing == focus) continue;
        const auto t = triple_without(missing);
        double base = 0.0;
        if (measure == MonogamyMeasure::t2) {
          const auto& tau = m.tau[static_cast<std::size_t>(missing)];
          if (!tau) {
            supported = false;
            continue;
          }
          base = *tau;
        } else {
          // N_{I||J|K} = N_{I|(JK)} - N_{I|J} - N_{I|K} (squared terms for n2)
          int pos = 0;
          while (t[static_cast<std::size_t>(pos)] != focus) ++pos;
          base = sq(m.one_vs_two[static_cast<std::size_t>(missing)][static_cast<std::size_t>(pos)]);
          for (int q : t) {
            if (q != focus) base -= sq(m.pair[static_cast<std::size_t>(pair_index(focus, q))]);
          }
        }
        const double term = weighted_power(base, power);
        rep.triple_raw[t] = base;
        rep.triple_terms[t] = term;
        triple_sum += term;
      }
    }
    rep.leftover = rep.one_vs_rest - pair_sum - triple_sum;
    total += rep.leftover;
  }
  if (supported) result.value = total / kQubits;
  return result;
}

double t1(const PureState& psi) { return *monogamy_breakdown(psi, MonogamyMeasure::t1).value; }

std::optional<double> t2(const PureState& psi, const PowerFactors& factors) {
  return monogamy_breakdown(psi, MonogamyMeasure::t2, factors).value;
}

double n1(const PureState& psi, double nu1) {
  PowerFactors f;
  f.nu1 = nu1;
  return *monogamy_breakdown(psi, MonogamyMeasure::n1, f).value;
}

double n2(const PureState& psi, double nu2) {
  PowerFactors f;
  f.nu2 = nu2;
  return *monogamy_breakdown(psi, MonogamyMeasure::n2, f).value;
}

namespace {

template <class F>
double ensemble_average(const Ensemble& e, F&& f) {
  double acc = 0.0;
  for (const auto& m : e.members()) {
    if (m.weight > 0.0) acc += m.weight * f(m.state);
  }
  return acc;
}

}  // namespace

double t1(const Ensemble& e) {
  return ensemble_average(e, [](const PureState& s) { return t1(s); });
}
double n1(const Ensemble& e, double nu1) {
  return ensemble_average(e, [nu1](const PureState& s) { return n1(s, nu1); });
}
double n2(const Ensemble& e, double nu2) {
  return ensemble_average(e, [nu2](const PureState& s) { return n2(s, nu2); });
}

double check_monogamy_tofv(const PureState& psi, int focus) {
  const int n = psi.n_qubits();
  if (n < 2 || n > 6) throw DomainError("monogamy check supports 2..6 qubits");
  if (focus < 0 || focus >= n) throw InvalidSubsetError("focus qubit out of range");
  const double c = concurrence_one_vs_rest(psi, focus);
  double slack = c * c;
  for (int j = 0; j < n; ++j) {
    if (j == focus) continue;
    const double cj = concurrence_mixed(reduced_density(psi, QubitSubset::of({focus, j}, n)));
    slack -= cj * cj;
  }
  return slack;
}

}  // namespace tangle
