#include "tangle/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tangle/errors.hpp"
#include "tangle/named_states.hpp"

namespace tangle {

namespace {

using std::numbers::pi;

void require_qubits(int actual, int expected, const char* op) {
  if (actual != expected) {
    throw DomainError(std::string(op) + " needs " + std::to_string(expected) + " qubits, got " +
                      std::to_string(actual));
  }
}

const Matrix& sigma_y_y() {
  static const Matrix yy = [] {
    Matrix m = Matrix::Zero(4, 4);
    // sigma_y ⊗ sigma_y in the |00>,|01>,|10>,|11> basis
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return yy;
}

double clamped_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

}  // namespace

double concurrence_pure(const PureState& psi) {
  require_qubits(psi.n_qubits(), 2, "concurrence_pure");
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

std::array<double, 4> wootters_spectrum(const DensityMatrix& rho, const Tolerances& tol) {
  require_qubits(rho.n_qubits(), 2, "concurrence_mixed");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho.matrix());
  Eigen::Vector4d roots;
  for (int k = 0; k < 4; ++k) {
    const double e = eig.eigenvalues()[k];
    if (e < -tol.psd) {
      throw InvalidStateError("two-qubit state has negative eigenvalue " + std::to_string(e));
    }
    roots[k] = e > tol.rank_cutoff ? std::sqrt(e) : 0.0;
  }
  const Matrix sqrt_rho = eig.eigenvectors() * roots.asDiagonal() * eig.eigenvectors().adjoint();
  const Matrix& yy = sigma_y_y();
  const Matrix sqrt_flipped = yy * sqrt_rho.conjugate() * yy;
  Eigen::JacobiSVD<Matrix> svd(sqrt_rho * sqrt_flipped);
  const auto& s = svd.singularValues();  // already sorted decreasing
  return {s[0], s[1], s[2], s[3]};
}

double concurrence_mixed(const DensityMatrix& rho, const Tolerances& tol) {
  const auto l = wootters_spectrum(rho, tol);
  return std::max(l[0] - l[1] - l[2] - l[3], 0.0);
}

double binary_entropy(double x, LogBase base) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary entropy argument outside [0,1]");
  auto term = [](double v) { return v > 0.0 ? -v * std::log(v) : 0.0; };
  const double h = term(x) + term(1.0 - x);
  return base == LogBase::natural ? h : h / std::numbers::ln2;
}

double eof_from_concurrence(double concurrence, LogBase base) {
  if (!(concurrence >= 0.0 && concurrence <= 1.0)) {
    throw DomainError("concurrence " + std::to_string(concurrence) + " outside [0,1]");
  }
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - concurrence * concurrence)), base);
}

double negativity(const DensityMatrix& rho, const QubitSubset& part_a) {
  if (!part_a.is_proper()) throw InvalidSubsetError("negativity needs a proper subset");
  const Matrix pt = partial_transpose(rho, part_a);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(pt, Eigen::EigenvaluesOnly);
  double negative = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
    negative += std::min(eig.eigenvalues()[k], 0.0);
  }
  return -2.0 * negative;
}

double negativity_pure(const PureState& psi, const QubitSubset& part_a) {
  if (part_a.n_qubits() != psi.n_qubits()) throw InvalidSubsetError("subset/state qubit count mismatch");
  if (!part_a.is_proper()) throw InvalidSubsetError("negativity needs a proper subset");
  const std::size_t a_mask = part_a.mask();
  const std::size_t b_mask = (psi.dim() - 1) & ~a_mask;
  const std::size_t rows = std::size_t{1} << part_a.size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(psi.dim() / rows));
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    std::size_t r = 0, c = 0;
    for (int q = 0; q < psi.n_qubits(); ++q) {
      const std::size_t bit = qubit_bit(q, psi.n_qubits());
      const std::size_t v = (i & bit) ? 1 : 0;
      if (a_mask & bit) r = (r << 1) | v;
      if (b_mask & bit) c = (c << 1) | v;
    }
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = psi[i];
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  const double sum = svd.singularValues().sum();
  return std::max(sum * sum - 1.0, 0.0);
}

double concurrence_one_vs_rest(const PureState& psi, int focus) {
  if (psi.n_qubits() < 2) throw DomainError("concurrence_one_vs_rest needs at least 2 qubits");
  if (focus < 0 || focus >= psi.n_qubits()) throw DomainError("focus qubit out of range");
  const DensityMatrix r = reduced_density(psi, QubitSubset::single(focus, psi.n_qubits()));
  const double det = (r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0)).real();
  return 2.0 * clamped_sqrt(det);
}

ClosedFormValue<ConcurrenceClosedForm> closed_form_concurrence_z4(double p) {
  check_probability(p);
  const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
  ConcurrenceClosedForm d{};
  d.alpha = 1.0 - 9.0 * p + 39.0 * p2 - 90.0 * p3 + 115.5 * p4 - 81.0 * p5 + 23.5 * p6;
  const double inner = 4.0 - 28.0 * p + 96.0 * p2 - 147.0 * p3 + 110.0 * p4 - 31.0 * p5;
  d.beta = 1.5 * p2 * (1.0 - p) * clamped_sqrt(3.0 * p * inner);
  d.theta = std::atan2(d.beta, d.alpha) / 3.0;
  const double r = std::pow(d.alpha * d.alpha + d.beta * d.beta, 1.0 / 6.0);
  const double base = 1.0 + p2;
  d.Lambda = (base + 2.0 * r * std::cos(d.theta)) / 12.0;
  d.Lambda_plus = (base - 2.0 * r * std::cos(pi / 3.0 + d.theta)) / 12.0;
  d.Lambda_minus = (base - 2.0 * r * std::cos(pi / 3.0 - d.theta)) / 12.0;
  d.raw = clamped_sqrt(d.Lambda) - clamped_sqrt(d.Lambda_plus) - clamped_sqrt(d.Lambda_minus);
  return {std::max(d.raw, 0.0), d};
}

ClosedFormValue<NegativityClosedForm> closed_form_negativity_z4(double p) {
  check_probability(p);
  const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
  NegativityClosedForm d{};
  d.alpha0 = 17.0 + 147.0 * p - 153.0 * p2 - 428.0 * p3 + 729.0 * p4 - 447.0 * p5 + 127.0 * p6;
  const double inner = 2.0 + 4.0 * p - 71.0 * p2 + 214.0 * p3 - 129.0 * p4;
  d.beta0 = 3.0 * std::sqrt(3.0) * (1.0 - p + 5.0 * p2 - 7.0 * p3 + 2.0 * p4) * clamped_sqrt(inner);
  d.r0 = std::pow(d.alpha0 * d.alpha0 + d.beta0 * d.beta0, 1.0 / 6.0);
  d.theta0 = std::atan2(d.beta0, d.alpha0) / 3.0;
  const double base = 7.0 + 2.0 * p - p2;
  d.lambda = (base + 4.0 * d.r0 * std::cos(d.theta0)) / 48.0;
  d.lambda_plus = (base - 4.0 * d.r0 * std::cos(pi / 3.0 + d.theta0)) / 48.0;
  // The smallest root vanishes like (3p-1)^4 and cancels catastrophically in the
  // trigonometric form; take it from the product of the roots instead.
  const double q = (1.0 - p) * (3.0 * p - 1.0) * (3.0 * p - 1.0);
  const double others = d.lambda * d.lambda_plus;
  d.lambda_minus = others > 0.0 ? q * q / (4096.0 * others)
                                : (base - 4.0 * d.r0 * std::cos(pi / 3.0 - d.theta0)) / 48.0;
  d.raw = clamped_sqrt(d.lambda) + clamped_sqrt(d.lambda_plus) + clamped_sqrt(d.lambda_minus) -
          (3.0 + p) / 4.0;
  return {std::max(d.raw, 0.0), d};
}

DensityMatrix z4_pair_marginal(double p, double phi) {
  check_probability(p);
  const cplx off = -std::sqrt(p * (1.0 - p) / 2.0) * std::polar(1.0, -phi);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(0, 1) = m(0, 2) = off;
  m(1, 0) = m(2, 0) = std::conj(off);
  m(1, 1) = m(1, 2) = m(2, 1) = m(2, 2) = (1.0 - p) / 2.0;
  m(3, 3) = p;
  return DensityMatrix(2, 0.5 * m);
}

DensityMatrix z4_single_marginal(double p, double phi) {
  check_probability(p);
  const cplx off = -0.5 * std::sqrt(p * (1.0 - p) / 2.0) * std::polar(1.0, -phi);
  Matrix m(2, 2);
  m(0, 0) = (3.0 - p) / 4.0;
  m(0, 1) = off;
  m(1, 0) = std::conj(off);
  m(1, 1) = (1.0 + p) / 4.0;
  return DensityMatrix(1, m);
}

}  // namespace tangle
