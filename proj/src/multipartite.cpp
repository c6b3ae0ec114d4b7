#include "tangle/multipartite.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tangle/bipartite.hpp"
#include "tangle/errors.hpp"
#include "tangle/named_states.hpp"

namespace tangle {

namespace {

void require_qubits(int actual, int expected, const char* op) {
  if (actual != expected) {
    throw DomainError(std::string(op) + " needs " + std::to_string(expected) + " qubits, got " +
                      std::to_string(actual));
  }
}

double clamped_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

}  // namespace

ThreeTangle three_tangle_pure(const PureState& psi) {
  require_qubits(psi.n_qubits(), 3, "three_tangle_pure");
  auto a = [&](int i, int j, int k) { return psi[static_cast<std::size_t>(4 * i + 2 * j + k)]; };
  ThreeTangleCoefficients c;
  c.d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
         a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
         a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
         a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  // The four antipodal pairs; d2 sums the products of distinct pairs.
  const cplx p0 = a(0, 0, 0) * a(1, 1, 1);
  const cplx p1 = a(0, 1, 1) * a(1, 0, 0);
  const cplx p2 = a(1, 0, 1) * a(0, 1, 0);
  const cplx p3 = a(1, 1, 0) * a(0, 0, 1);
  c.d2 = p0 * p1 + p0 * p2 + p0 * p3 + p1 * p2 + p1 * p3 + p2 * p3;
  c.d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
         a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return {4.0 * std::abs(c.d1 - 2.0 * c.d2 + 4.0 * c.d3), c};
}

double residual_via_concurrences(const PureState& psi) {
  require_qubits(psi.n_qubits(), 3, "residual_via_concurrences");
  const double c_rest = concurrence_one_vs_rest(psi, 0);
  const double c_ab = concurrence_mixed(reduced_density(psi, QubitSubset::of({0, 1}, 3)));
  const double c_ac = concurrence_mixed(reduced_density(psi, QubitSubset::of({0, 2}, 3)));
  return c_rest * c_rest - c_ab * c_ab - c_ac * c_ac;
}

// ------------------------------------------------------ quoted mixed results

double ghzw_zero_threshold(const GhzWAmplitudes& amps) {
  if (amps.a * amps.b == 0.0) throw DegenerateFamilyError("GHZ component has a*b = 0");
  const double s = 4.0 * std::abs(amps.c * amps.d * amps.f) / (amps.a * amps.a * std::abs(amps.b));
  const double s23 = std::cbrt(s * s);
  return s23 / (1.0 + s23);
}

std::optional<double> residual_ghzw_mixture(const GhzWAmplitudes& amps, double p) {
  check_probability(p);
  const Tolerances tol;
  if (std::abs(amps.a * amps.a + amps.b * amps.b - 1.0) > tol.equality ||
      std::abs(amps.c * amps.c + amps.d * amps.d + amps.f * amps.f - 1.0) > tol.equality) {
    throw InvalidStateError("GHZ/W amplitudes are not normalized");
  }
  if (p <= ghzw_zero_threshold(amps) + tol.norm) return 0.0;
  return std::nullopt;
}

double residual_g1g2_mixture(double p) {
  check_probability(p);
  return (2.0 * p - 1.0) * (2.0 * p - 1.0);
}

// ------------------------------------------------------------ F invariants

const PauliContext& pauli_context() {
  static const PauliContext ctx = [] {
    PauliContext c;
    const cplx i{0.0, 1.0};
    c.sigma[0] << 1, 0, 0, 1;
    c.sigma[1] << 0, 1, 1, 0;
    c.sigma[2] << 0, -i, i, 0;
    c.sigma[3] << 1, 0, 0, -1;
    c.metric = {-1.0, 1.0, 0.0, 1.0};
    return c;
  }();
  return ctx;
}

FInvariants f_invariants(const StateVector& v) {
  if (v.size() != 16) throw DomainError("f_invariants needs a 4-qubit amplitude vector");
  const auto& ctx = pauli_context();
  // B[a][b][c][d] = <psi*| s_a ⊗ s_b ⊗ s_c ⊗ s_d |psi> = psi^T (...) psi
  cplx B[4][4][4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const std::array<Matrix2, 4> ops{ctx.sigma[a], ctx.sigma[b], ctx.sigma[c], ctx.sigma[d]};
          B[a][b][c][d] = v.transpose() * apply_local(v, ops);
        }
  const auto& g = ctx.metric;
  constexpr int Y = 2;

  cplx f1 = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int la = 0; la < 4; ++la) {
        const double w = g[mu] * g[nu] * g[la];
        if (w == 0.0) continue;
        f1 += w * B[mu][nu][Y][Y] * B[mu][Y][la][Y] * B[Y][nu][la][Y];
      }

  cplx f2 = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int la = 0; la < 4; ++la)
        for (int ta = 0; ta < 4; ++ta) {
          const double w = g[mu] * g[nu] * g[la] * g[ta];
          if (w == 0.0) continue;
          f2 += w * B[mu][nu][Y][Y] * B[mu][Y][la][Y] * B[Y][nu][Y][ta] * B[Y][Y][la][ta];
        }

  cplx s12 = 0.0, s13 = 0.0, s14 = 0.0;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const double w = g[x] * g[y];
      if (w == 0.0) continue;
      s12 += w * B[x][y][Y][Y] * B[x][y][Y][Y];
      s13 += w * B[x][Y][y][Y] * B[x][Y][y][Y];
      s14 += w * B[x][Y][Y][y] * B[x][Y][Y][y];
    }
  const cplx f3 = 0.5 * s12 * s13 * s14;

  return {std::abs(f1), std::abs(f2), std::abs(f3)};
}

FInvariants f_invariants(const PureState& psi) {
  require_qubits(psi.n_qubits(), 4, "f_invariants");
  return f_invariants(psi.amplitudes());
}

GMonotones g_monotones(const PureState& psi) {
  const FInvariants f = f_invariants(psi);
  return {std::pow(f.f1, 2.0 / kFDegrees[0]), std::pow(f.f2, 2.0 / kFDegrees[1]),
          std::pow(f.f3, 2.0 / kFDegrees[2])};
}

// ---------------------------------------------- reduced tripartite of Z4

ReducedTripartiteCoefficients reduced_tripartite_coefficients(double p) {
  check_probability(p);
  if (p < 1e-6) throw SingularFamilyError("reduced tripartite form diverges as p -> 0");
  const double q = std::sqrt(1.0 - p * p);
  ReducedTripartiteCoefficients c{};
  c.lambda = (2.0 + q) / 4.0;
  c.N_plus = std::sqrt(((1.0 + p) * (3.0 - p) + (3.0 + p) * q) / (2.0 * p * p));
  c.N_minus = std::sqrt(((1.0 + p) * (3.0 - p) - (3.0 + p) * q) / (2.0 * p * p));
  // (2(1-p) ± sqrt(1-p^2)) / sqrt(2p(1-p)) with the common sqrt(1-p) cancelled,
  // which stays finite at p = 1.
  c.mu_plus = (2.0 * std::sqrt(1.0 - p) + std::sqrt(1.0 + p)) / std::sqrt(2.0 * p);
  c.mu_minus = (2.0 * std::sqrt(1.0 - p) - std::sqrt(1.0 + p)) / std::sqrt(2.0 * p);
  c.nu_plus = ((3.0 + p) * (1.0 - p) + (3.0 - p) * q) / (2.0 * p * (2.0 + q));
  c.nu_minus = ((3.0 + p) * (1.0 - p) - (3.0 - p) * q) / (2.0 * p * (2.0 - q));
  return c;
}

double residual_reduced_pure(double p, double phi, Branch branch) {
  const auto c = reduced_tripartite_coefficients(p);
  const bool plus = branch == Branch::plus;
  const double n = plus ? c.N_plus : c.N_minus;
  const double mu = plus ? c.mu_plus : c.mu_minus;
  const double nu = plus ? c.nu_plus : c.nu_minus;
  const double mu2 = mu * mu, nu3 = nu * nu * nu;
  const double n4 = n * n * n * n;
  return 4.0 / n4 * clamped_sqrt(mu2 * mu2 + 16.0 * nu3 * nu3 + 8.0 * mu2 * nu3 * std::cos(4.0 * phi));
}

// ------------------------------------------------- mixed three-qubit states

std::string_view to_string(ResidualClass c) {
  switch (c) {
    case ResidualClass::pure: return "pure";
    case ResidualClass::qubit_block: return "qubit_block";
    case ResidualClass::ghz_w_mixture: return "ghz_w_mixture";
    case ResidualClass::g1_g2_mixture: return "g1_g2_mixture";
    case ResidualClass::zero_spectral: return "zero_spectral";
    case ResidualClass::unsupported: return "unsupported";
  }
  return "unsupported";
}

namespace {

// True when every entry coupling different blocks (or touching an index
// outside all blocks) is below `eps`.
bool block_diagonal(const Matrix& m, const std::vector<std::vector<int>>& blocks, double eps) {
  std::array<int, 8> block_of;
  block_of.fill(-1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int i : blocks[b]) block_of[static_cast<std::size_t>(i)] = static_cast<int>(b);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const int bi = block_of[static_cast<std::size_t>(i)];
      const int bj = block_of[static_cast<std::size_t>(j)];
      if ((bi < 0 || bj < 0 || bi != bj) && std::abs(m(i, j)) > eps) return false;
    }
  return true;
}

Matrix sub_block(const Matrix& m, const std::vector<int>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  Matrix out(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < k; ++c) out(r, c) = m(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
  return out;
}

// A PSD block that is (numerically) rank <= 1, returned as weight and unit vector.
struct RankOne {
  double weight;
  StateVector vec;
};

std::optional<RankOne> as_rank_one(const Matrix& block, double eps) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(block);
  const auto n = eig.eigenvalues().size();
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (std::abs(eig.eigenvalues()[k]) > eps) return std::nullopt;
  }
  return RankOne{std::max(eig.eigenvalues()[n - 1], 0.0), eig.eigenvectors().col(n - 1)};
}

bool has_qubit_block_structure(const Matrix& m, double eps) {
  for (int q = 0; q < 3; ++q) {
    const std::size_t bit = qubit_bit(q, 3);
    bool coherent = false;
    for (std::size_t i = 0; i < 8 && !coherent; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        if (((i ^ j) & bit) && std::abs(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) > eps) {
          coherent = true;
          break;
        }
      }
    if (!coherent) return true;
  }
  return false;
}

}  // namespace

MixedResidual residual_mixed(const DensityMatrix& rho, const Tolerances& tol) {
  require_qubits(rho.n_qubits(), 3, "residual_mixed");
  const Matrix& m = rho.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
  const auto& ev = eig.eigenvalues();

  int rank = 0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) rank += ev[k] > tol.degenerate ? 1 : 0;
  if (rank <= 1) {
    const PureState top = PureState::normalized(3, eig.eigenvectors().col(7));
    return {three_tangle_pure(top).tau, ResidualClass::pure};
  }

  if (has_qubit_block_structure(m, tol.equality)) return {0.0, ResidualClass::qubit_block};

  const std::vector<int> ghz_idx{0, 7}, w_idx{1, 2, 4};
  if (block_diagonal(m, {ghz_idx, w_idx}, tol.equality)) {
    const auto g = as_rank_one(sub_block(m, ghz_idx), tol.equality);
    const auto w = as_rank_one(sub_block(m, w_idx), tol.equality);
    if (g && w) {
      const double p = g->weight / (g->weight + w->weight);
      const GhzWAmplitudes amps{std::abs(g->vec[0]), std::abs(g->vec[1]), std::abs(w->vec[0]),
                                std::abs(w->vec[1]), std::abs(w->vec[2])};
      // Both members tangle-free when the GHZ part is a product state.
      if (amps.a * amps.b < tol.equality) return {0.0, ResidualClass::ghz_w_mixture};
      return {residual_ghzw_mixture(amps, p), ResidualClass::ghz_w_mixture};
    }
  }

  const std::vector<int> g1_idx{0, 7}, g2_idx{1, 6};
  if (block_diagonal(m, {g1_idx, g2_idx}, tol.equality)) {
    const auto g1 = as_rank_one(sub_block(m, g1_idx), tol.equality);
    const auto g2 = as_rank_one(sub_block(m, g2_idx), tol.equality);
    auto balanced = [&](const RankOne& r) {
      return std::abs(r.vec[0] - r.vec[1]) < std::sqrt(tol.equality);
    };
    if (g1 && g2 && balanced(*g1) && balanced(*g2)) {
      const double p = g1->weight / (g1->weight + g2->weight);
      return {residual_g1g2_mixture(p), ResidualClass::g1_g2_mixture};
    }
  }

  // Unique eigen-decomposition whose members all have zero tangle.
  bool nondegenerate = true;
  for (Eigen::Index k = 0; k + 1 < ev.size(); ++k) {
    if (ev[k + 1] > tol.degenerate && ev[k + 1] - ev[k] < 1e-8) nondegenerate = false;
  }
  if (nondegenerate) {
    bool all_zero = true;
    for (Eigen::Index k = 0; k < ev.size() && all_zero; ++k) {
      if (ev[k] <= tol.degenerate) continue;
      const PureState member = PureState::normalized(3, eig.eigenvectors().col(k));
      all_zero = three_tangle_pure(member).tau < tol.equality;
    }
    if (all_zero) return {0.0, ResidualClass::zero_spectral};
  }

  return {std::nullopt, ResidualClass::unsupported};
}

}  // namespace tangle
