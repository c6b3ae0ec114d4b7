#pragma once

// Independent reference computations used to cross-check the library. They
// deliberately take different numerical routes from the production code.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "tangle/state.hpp"

namespace oracle {

using tangle::cplx;
using tangle::Matrix;

// Literal spin-flip route: eigenvalues of the non-Hermitian product
// rho (Y⊗Y) rho* (Y⊗Y), real parts clamped at zero, square-rooted.
inline double wootters_product_route(const Matrix& rho) {
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix prod = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix> es(prod);
  std::array<double, 4> l{};
  for (int k = 0; k < 4; ++k) l[static_cast<std::size_t>(k)] = std::sqrt(std::max(es.eigenvalues()[k].real(), 0.0));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(l[0] - l[1] - l[2] - l[3], 0.0);
}

// Three-tangle as the Cayley hyperdeterminant written with epsilon tensors.
inline double three_tangle_epsilon(const tangle::StateVector& psi) {
  auto a = [&](int i, int j, int k) { return psi[4 * i + 2 * j + k]; };
  const int eps[2][2] = {{0, 1}, {-1, 0}};
  cplx sum = 0.0;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int i3 = 0; i3 < 2; ++i3)
        for (int i4 = 0; i4 < 2; ++i4) {
          const int ei = eps[i1][i2] * eps[i3][i4];
          if (ei == 0) continue;
          for (int j1 = 0; j1 < 2; ++j1)
            for (int j2 = 0; j2 < 2; ++j2)
              for (int j3 = 0; j3 < 2; ++j3)
                for (int j4 = 0; j4 < 2; ++j4) {
                  const int ej = eps[j1][j2] * eps[j3][j4];
                  if (ej == 0) continue;
                  for (int k1 = 0; k1 < 2; ++k1)
                    for (int k2 = 0; k2 < 2; ++k2)
                      for (int k3 = 0; k3 < 2; ++k3)
                        for (int k4 = 0; k4 < 2; ++k4) {
                          const int ek = eps[k1][k3] * eps[k2][k4];
                          if (ek == 0) continue;
                          sum += static_cast<double>(ei * ej * ek) * a(i1, j1, k1) * a(i2, j2, k2) *
                                 a(i3, j3, k3) * a(i4, j4, k4);
                        }
                }
        }
  return 2.0 * std::abs(sum);
}

// Partial trace by explicit index bookkeeping over every (i, j) pair.
inline Matrix brute_partial_trace(const Matrix& rho, int n, const std::vector<int>& keep) {
  const int k = static_cast<int>(keep.size());
  Matrix out = Matrix::Zero(1 << k, 1 << k);
  auto bit = [n](std::size_t idx, int q) { return (idx >> (n - 1 - q)) & 1U; };
  auto sub_index = [&](std::size_t idx) {
    std::size_t s = 0;
    for (int q : keep) s = (s << 1) | bit(idx, q);
    return s;
  };
  auto rest_equal = [&](std::size_t i, std::size_t j) {
    for (int q = 0; q < n; ++q) {
      if (std::find(keep.begin(), keep.end(), q) != keep.end()) continue;
      if (bit(i, q) != bit(j, q)) return false;
    }
    return true;
  };
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (rest_equal(i, j)) {
        out(static_cast<Eigen::Index>(sub_index(i)), static_cast<Eigen::Index>(sub_index(j))) +=
            rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
  return out;
}

// Trace norm minus one, via singular values.
inline double trace_norm_negativity(const Matrix& pt) {
  Eigen::JacobiSVD<Matrix> svd(pt);
  return svd.singularValues().sum() - 1.0;
}

inline tangle::StateVector random_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  tangle::StateVector v(1 << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = cplx(g(rng), g(rng));
  return v;
}

inline tangle::PureState random_state(std::mt19937_64& rng, int n) {
  return tangle::PureState::normalized(n, random_vector(rng, n));
}

inline tangle::DensityMatrix random_density(std::mt19937_64& rng, int n, int rank) {
  Matrix a(1 << n, rank);
  std::normal_distribution<double> g;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = cplx(g(rng), g(rng));
  Matrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return tangle::DensityMatrix(n, rho);
}

// Random 2x2 complex matrix with determinant 1, kept reasonably conditioned.
inline tangle::Matrix2 random_sl2(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 0.4);
  tangle::Matrix2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = (i == j ? 1.0 : 0.0) + cplx(g(rng), g(rng));
  return m / std::sqrt(m.determinant());
}

}  // namespace oracle
