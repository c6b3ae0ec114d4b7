#include "tangle/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tangle/errors.hpp"

namespace tangle {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DomainError("qubit count " + std::to_string(n_qubits) + " outside 1.." +
                      std::to_string(kMaxQubits));
  }
}

std::size_t dim_of(int n_qubits) { return std::size_t{1} << n_qubits; }

// Gathers the bits selected by `mask` (most significant first) into a
// compact integer.
std::size_t extract_bits(std::size_t index, std::size_t mask) {
  std::size_t out = 0;
  for (std::size_t bit = std::size_t{1} << 63; bit != 0; bit >>= 1) {
    if (mask & bit) out = (out << 1) | ((index & bit) ? 1 : 0);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- PureState

PureState::PureState(int n_qubits, StateVector amplitudes, const Tolerances& tol)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (dim() != dim_of(n_qubits)) {
    throw InvalidStateError("amplitude vector has length " + std::to_string(dim()) +
                            ", expected 2^" + std::to_string(n_qubits));
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol.norm) {
    throw InvalidStateError("state is not normalized: sum |a|^2 = " + std::to_string(norm2));
  }
}

PureState PureState::normalized(int n_qubits, StateVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw InvalidStateError("cannot normalize a zero vector");
  amplitudes /= norm;
  return PureState(n_qubits, std::move(amplitudes));
}

PureState PureState::basis(int n_qubits, std::size_t index) {
  check_qubit_count(n_qubits);
  if (index >= dim_of(n_qubits)) throw DomainError("basis index out of range");
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(dim_of(n_qubits)));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return PureState(n_qubits, std::move(v));
}

cplx PureState::amplitude(std::string_view bits) const {
  if (bits.size() != static_cast<std::size_t>(n_qubits_)) {
    throw DomainError("ket label length does not match qubit count");
  }
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("ket label must be binary");
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return (*this)[index];
}

// ------------------------------------------------------------ DensityMatrix

DensityMatrix::DensityMatrix(int n_qubits, Matrix matrix, const Tolerances& tol)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  check_qubit_count(n_qubits);
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw InvalidStateError("density matrix must be 2^n x 2^n");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > tol.norm) {
    throw InvalidStateError("density matrix is not Hermitian");
  }
  const cplx tr = matrix_.trace();
  if (std::abs(tr - 1.0) > tol.norm) {
    throw InvalidStateError("density matrix trace is " + std::to_string(tr.real()));
  }
  // Symmetrize away sub-tolerance asymmetry before the eigen-check.
  matrix_ = (0.5 * (matrix_ + matrix_.adjoint())).eval();
  const double lowest = eigenvalues()[0];
  if (lowest < -tol.psd) {
    throw InvalidStateError("density matrix has negative eigenvalue " + std::to_string(lowest));
  }
}

DensityMatrix::DensityMatrix(Trusted, int n_qubits, Matrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {}

DensityMatrix make_trusted_density(int n_qubits, Matrix matrix) {
  Matrix hermitian = 0.5 * (matrix + matrix.adjoint());
  return DensityMatrix(DensityMatrix::Trusted{}, n_qubits, std::move(hermitian));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return make_trusted_density(psi.n_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// -------------------------------------------------------------- QubitSubset

QubitSubset::QubitSubset(std::vector<int> indices, int n_qubits)
    : indices_(std::move(indices)), n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw InvalidSubsetError("invalid qubit count");
  if (indices_.empty()) throw InvalidSubsetError("qubit subset is empty");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw InvalidSubsetError("qubit subset has duplicate labels");
  }
  if (indices_.front() < 0 || indices_.back() >= n_qubits) {
    throw InvalidSubsetError("qubit label out of range 0.." + std::to_string(n_qubits - 1));
  }
}

QubitSubset QubitSubset::single(int qubit, int n_qubits) { return QubitSubset({qubit}, n_qubits); }

QubitSubset QubitSubset::complement() const {
  std::vector<int> rest;
  for (int q = 0; q < n_qubits_; ++q) {
    if (!contains(q)) rest.push_back(q);
  }
  return QubitSubset(std::move(rest), n_qubits_);
}

bool QubitSubset::contains(int qubit) const {
  return std::binary_search(indices_.begin(), indices_.end(), qubit);
}

std::size_t QubitSubset::mask() const {
  std::size_t m = 0;
  for (int q : indices_) m |= qubit_bit(q, n_qubits_);
  return m;
}

int QubitSubset::position_of(int qubit) const {
  const auto it = std::lower_bound(indices_.begin(), indices_.end(), qubit);
  if (it == indices_.end() || *it != qubit) throw InvalidSubsetError("qubit not in subset");
  return static_cast<int>(it - indices_.begin());
}

// ----------------------------------------------------------------- Ensemble

Ensemble::Ensemble(std::vector<EnsembleMember> members, const Tolerances& tol)
    : members_(std::move(members)) {
  if (members_.empty()) throw InvalidStateError("ensemble has no members");
  double total = 0.0;
  const int n = members_.front().state.n_qubits();
  for (const auto& m : members_) {
    if (m.weight < 0.0) throw InvalidStateError("ensemble weight is negative");
    if (m.state.n_qubits() != n) throw InvalidStateError("ensemble members have mismatched qubit counts");
    total += m.weight;
  }
  if (std::abs(total - 1.0) > tol.norm) {
    throw InvalidStateError("ensemble weights sum to " + std::to_string(total));
  }
}

// --------------------------------------------------------------- operations

PureState tensor_product(const PureState& a, const PureState& b) {
  const int n = a.n_qubits() + b.n_qubits();
  check_qubit_count(n);
  StateVector out(static_cast<Eigen::Index>(a.dim() * b.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out.segment(static_cast<Eigen::Index>(i * b.dim()), static_cast<Eigen::Index>(b.dim())) =
        a[i] * b.amplitudes();
  }
  return PureState::normalized(n, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep) {
  if (keep.n_qubits() != rho.n_qubits()) throw InvalidSubsetError("subset/state qubit count mismatch");
  const std::size_t keep_mask = keep.mask();
  const std::size_t full = rho.dim();
  const std::size_t trace_mask = (full - 1) & ~keep_mask;
  const std::size_t out_dim = std::size_t{1} << keep.size();

  // Bucket the basis indices by their traced-out bits.
  const std::size_t n_groups = full / out_dim;
  std::vector<std::vector<std::size_t>> groups(n_groups);
  for (std::size_t i = 0; i < full; ++i) groups[extract_bits(i, trace_mask)].push_back(i);

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(out_dim), static_cast<Eigen::Index>(out_dim));
  for (const auto& g : groups) {
    for (std::size_t i : g) {
      const auto ki = static_cast<Eigen::Index>(extract_bits(i, keep_mask));
      for (std::size_t j : g) {
        out(ki, static_cast<Eigen::Index>(extract_bits(j, keep_mask))) += rho(i, j);
      }
    }
  }
  return make_trusted_density(static_cast<int>(keep.size()), std::move(out));
}

DensityMatrix reduced_density(const PureState& psi, const QubitSubset& keep) {
  if (keep.n_qubits() != psi.n_qubits()) throw InvalidSubsetError("subset/state qubit count mismatch");
  const std::size_t keep_mask = keep.mask();
  const std::size_t trace_mask = (psi.dim() - 1) & ~keep_mask;
  const std::size_t rows = std::size_t{1} << keep.size();
  const std::size_t cols = psi.dim() / rows;
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    m(static_cast<Eigen::Index>(extract_bits(i, keep_mask)),
      static_cast<Eigen::Index>(extract_bits(i, trace_mask))) = psi[i];
  }
  return make_trusted_density(static_cast<int>(keep.size()), m * m.adjoint());
}

Matrix partial_transpose(const Matrix& rho, const QubitSubset& subset) {
  const auto d = static_cast<std::size_t>(rho.rows());
  if (d != (std::size_t{1} << subset.n_qubits()) || rho.cols() != rho.rows()) {
    throw InvalidSubsetError("subset/matrix dimension mismatch");
  }
  const std::size_t m = subset.mask();
  Matrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t si = (i & ~m) | (j & m);
      const std::size_t sj = (j & ~m) | (i & m);
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rho(static_cast<Eigen::Index>(si), static_cast<Eigen::Index>(sj));
    }
  }
  return out;
}

Matrix partial_transpose(const DensityMatrix& rho, const QubitSubset& subset) {
  if (subset.n_qubits() != rho.n_qubits()) throw InvalidSubsetError("subset/state qubit count mismatch");
  return partial_transpose(rho.matrix(), subset);
}

DensityMatrix ensemble_to_density(const Ensemble& ensemble) {
  const auto d = static_cast<Eigen::Index>(ensemble.members().front().state.dim());
  Matrix out = Matrix::Zero(d, d);
  for (const auto& m : ensemble.members()) {
    out.noalias() += m.weight * (m.state.amplitudes() * m.state.amplitudes().adjoint());
  }
  return make_trusted_density(ensemble.n_qubits(), std::move(out));
}

Ensemble spectral_ensemble(const DensityMatrix& rho, const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix());
  std::vector<EnsembleMember> members;
  double kept = 0.0;
  for (Eigen::Index k = solver.eigenvalues().size() - 1; k >= 0; --k) {
    const double w = solver.eigenvalues()[k];
    if (w <= tol.degenerate) continue;
    members.push_back({w, PureState::normalized(rho.n_qubits(), solver.eigenvectors().col(k))});
    kept += w;
  }
  for (auto& m : members) m.weight /= kept;
  return Ensemble(std::move(members));
}

PureState permute_qubits(const PureState& psi, std::span<const int> perm) {
  const int n = psi.n_qubits();
  if (perm.size() != static_cast<std::size_t>(n)) throw DomainError("permutation size mismatch");
  std::vector<int> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (int k = 0; k < n; ++k) {
    if (check[static_cast<std::size_t>(k)] != k) throw DomainError("not a permutation");
  }
  StateVector out(static_cast<Eigen::Index>(psi.dim()));
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    std::size_t src = 0;
    for (int k = 0; k < n; ++k) {
      if (i & qubit_bit(k, n)) src |= qubit_bit(perm[static_cast<std::size_t>(k)], n);
    }
    out[static_cast<Eigen::Index>(i)] = psi[src];
  }
  return PureState(n, std::move(out));
}

StateVector apply_local(const StateVector& v, std::span<const Matrix2> ops) {
  const auto dim = static_cast<std::size_t>(v.size());
  const int n = static_cast<int>(ops.size());
  if (dim != (std::size_t{1} << n)) throw DomainError("one local operator per qubit required");
  StateVector out = v;
  for (int q = 0; q < n; ++q) {
    const std::size_t bit = qubit_bit(q, n);
    const Matrix2& op = ops[static_cast<std::size_t>(q)];
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const auto i0 = static_cast<Eigen::Index>(i);
      const auto i1 = static_cast<Eigen::Index>(i | bit);
      const cplx a0 = out[i0];
      const cplx a1 = out[i1];
      out[i0] = op(0, 0) * a0 + op(0, 1) * a1;
      out[i1] = op(1, 0) * a0 + op(1, 1) * a1;
    }
  }
  return out;
}

double fidelity(const PureState& a, const PureState& b) {
  if (a.n_qubits() != b.n_qubits()) return 0.0;
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

bool equal_up_to_phase(const PureState& a, const PureState& b, const Tolerances& tol) {
  return a.n_qubits() == b.n_qubits() && fidelity(a, b) > 1.0 - tol.equality;
}

bool amplitudes_equal(const PureState& a, const PureState& b, const Tolerances& tol) {
  return a.n_qubits() == b.n_qubits() &&
         (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff() <= tol.equality;
}

}  // namespace tangle
