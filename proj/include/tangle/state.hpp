#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tangle/tolerances.hpp"

namespace tangle {

using cplx = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr int kMaxQubits = 12;

// Qubit q of an n-qubit register lives at bit (n - 1 - q) of the basis
// index, so qubit 0 is the leftmost ket label.
constexpr std::size_t qubit_bit(int q, int n_qubits) {
  return std::size_t{1} << (n_qubits - 1 - q);
}

class PureState {
 public:
  PureState(int n_qubits, StateVector amplitudes, const Tolerances& tol = {});

  // Rescales to unit norm; the input must be non-zero.
  static PureState normalized(int n_qubits, StateVector amplitudes);
  static PureState basis(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const StateVector& amplitudes() const { return amplitudes_; }
  cplx operator[](std::size_t index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }
  // Amplitude of a ket label such as "0110".
  cplx amplitude(std::string_view bits) const;

 private:
  int n_qubits_;
  StateVector amplitudes_;
};

class DensityMatrix {
 public:
  // Validates Hermiticity, unit trace and positivity.
  DensityMatrix(int n_qubits, Matrix matrix, const Tolerances& tol = {});

  static DensityMatrix from_pure(const PureState& psi);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  cplx operator()(std::size_t i, std::size_t j) const {
    return matrix_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  double purity() const;
  // Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;

 private:
  struct Trusted {};
  DensityMatrix(Trusted, int n_qubits, Matrix matrix);

  friend DensityMatrix make_trusted_density(int n_qubits, Matrix matrix);

  int n_qubits_;
  Matrix matrix_;
};

// Library-internal: wraps a matrix that is a density matrix by construction
// (reduction or mixture of valid states); Hermitian part only, no eigen-check.
DensityMatrix make_trusted_density(int n_qubits, Matrix matrix);

class QubitSubset {
 public:
  // Indices may come in any order; duplicates and out-of-range labels throw.
  QubitSubset(std::vector<int> indices, int n_qubits);

  static QubitSubset single(int qubit, int n_qubits);
  static QubitSubset of(std::initializer_list<int> indices, int n_qubits) {
    return QubitSubset(std::vector<int>(indices), n_qubits);
  }

  QubitSubset complement() const;
  bool contains(int qubit) const;
  bool is_proper() const { return size() < static_cast<std::size_t>(n_qubits_); }
  std::size_t size() const { return indices_.size(); }
  int n_qubits() const { return n_qubits_; }
  const std::vector<int>& indices() const { return indices_; }
  // Bit mask over basis indices selecting the subset's qubits.
  std::size_t mask() const;
  // Position of `qubit` inside the subset.
  int position_of(int qubit) const;

 private:
  std::vector<int> indices_;
  int n_qubits_;
};

struct EnsembleMember {
  double weight;
  PureState state;
};

class Ensemble {
 public:
  explicit Ensemble(std::vector<EnsembleMember> members, const Tolerances& tol = {});

  const std::vector<EnsembleMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  int n_qubits() const { return members_.front().state.n_qubits(); }

 private:
  std::vector<EnsembleMember> members_;
};

PureState tensor_product(const PureState& a, const PureState& b);

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep);
// Same result as partial_trace(from_pure(psi), keep), computed in O(2^n * 2^|keep|).
DensityMatrix reduced_density(const PureState& psi, const QubitSubset& keep);

// Transposes the indices of `subset`; applying it twice is the identity.
Matrix partial_transpose(const Matrix& rho, const QubitSubset& subset);
Matrix partial_transpose(const DensityMatrix& rho, const QubitSubset& subset);

DensityMatrix ensemble_to_density(const Ensemble& ensemble);
// Eigen-decomposition as an ensemble; eigenvalues below tol.degenerate are dropped.
Ensemble spectral_ensemble(const DensityMatrix& rho, const Tolerances& tol = {});

// perm[k] is the old label of the qubit placed at position k.
PureState permute_qubits(const PureState& psi, std::span<const int> perm);
// (op_0 ⊗ op_1 ⊗ ... ) |v>, no renormalization; one 2x2 operator per qubit.
StateVector apply_local(const StateVector& v, std::span<const Matrix2> ops);

double fidelity(const PureState& a, const PureState& b);
// |<a|b>| > 1 - tol.equality
bool equal_up_to_phase(const PureState& a, const PureState& b, const Tolerances& tol = {});
bool amplitudes_equal(const PureState& a, const PureState& b, const Tolerances& tol = {});

}  // namespace tangle
