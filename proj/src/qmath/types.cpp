#include <algorithm>
#include <cmath>
#include <numeric>

#include "qmesh/errors.hpp"
#include "qmesh/qmath.hpp"

namespace qmesh {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t qubit_count(std::size_t dim) {
  if (!is_power_of_two(dim)) {
    throw UsageError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Ket

Ket::Ket(std::size_t dim) : amps_(dim) { qubit_count(dim); }

Ket::Ket(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
  qubit_count(amps_.size());
}

Ket Ket::basis(std::size_t num_qubits, std::size_t index) {
  Ket k(std::size_t{1} << num_qubits);
  if (index >= k.dim()) throw UsageError("basis index out of range");
  k.amps_[index] = 1.0;
  return k;
}

Ket Ket::from_bits(std::string_view bits) {
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw UsageError("ket label must be binary: " + std::string(bits));
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return basis(bits.size(), index);
}

double Ket::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

double Ket::norm() const noexcept { return std::sqrt(norm_squared()); }

bool Ket::is_zero(double tol) const noexcept { return norm() <= tol; }

Ket Ket::normalized() const {
  const double n = norm();
  if (!(n > 1e-14)) throw DegenerateError("cannot normalize a zero vector");
  Ket out = *this;
  out *= 1.0 / n;
  return out;
}

Ket& Ket::operator+=(const Ket& other) {
  if (other.dim() != dim()) throw UsageError("ket dimension mismatch");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
  return *this;
}

Ket& Ket::operator-=(const Ket& other) {
  if (other.dim() != dim()) throw UsageError("ket dimension mismatch");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] -= other.amps_[i];
  return *this;
}

Ket& Ket::operator*=(cplx s) noexcept {
  for (auto& a : amps_) a *= s;
  return *this;
}

cplx inner(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw UsageError("inner product of kets with different dimensions");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double max_abs_diff(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw UsageError("ket dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (std::isnan(d)) return d;
    m = std::max(m, d);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw UsageError("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const cplx> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::outer(const Ket& a, const Ket& b) {
  Matrix m(a.dim(), b.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

Matrix Matrix::conjugate() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = std::conj(x);
  return m;
}

cplx Matrix::trace() const {
  if (!is_square()) throw UsageError("trace of a non-square matrix");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool Matrix::is_unitary(double tol) const {
  if (!is_square()) return false;
  return max_abs_diff(adjoint() * (*this), identity(rows_)) <= tol;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw UsageError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw UsageError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) noexcept {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix product shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx x = a(r, k);
      if (x == cplx{}) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
    }
  return m;
}

Ket operator*(const Matrix& m, const Ket& v) {
  if (m.cols_ != v.dim()) throw UsageError("matrix-vector shape mismatch");
  std::vector<cplx> out(m.rows_);
  for (std::size_t r = 0; r < m.rows_; ++r) {
    cplx s = 0.0;
    for (std::size_t c = 0; c < m.cols_; ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return Ket(std::move(out));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("matrix shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const double d = std::abs(a.data()[i] - b.data()[i]);
    if (std::isnan(d)) return d;
    m = std::max(m, d);
  }
  return m;
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(std::size_t dim) : m_(dim, dim) { qubit_count(dim); }

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw UsageError("density matrix must be square");
  qubit_count(m_.rows());
}

DensityMatrix DensityMatrix::pure(const Ket& psi) { return DensityMatrix(Matrix::outer(psi, psi)); }

DensityMatrix DensityMatrix::normalized() const {
  const double t = trace();
  if (!(std::abs(t) > 1e-14)) throw DegenerateError("cannot normalize a zero-trace density matrix");
  DensityMatrix out = *this;
  out *= 1.0 / t;
  return out;
}

double DensityMatrix::min_eigenvalue() const { return hermitian_eigenvalues(m_).front(); }

DensityMatrix& DensityMatrix::operator+=(const DensityMatrix& other) {
  m_ += other.m_;
  return *this;
}

DensityMatrix& DensityMatrix::operator*=(double s) noexcept {
  m_ *= s;
  return *this;
}

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

// ---------------------------------------------------------------------------
// Gates and Pauli strings

namespace gates {

Matrix pauli_x() { return Matrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
Matrix pauli_y() { return Matrix(2, 2, {0.0, cplx(0, -1), cplx(0, 1), 0.0}); }
Matrix pauli_z() { return Matrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

Matrix cnot() {
  Matrix m(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

}  // namespace gates

Matrix pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I: return Matrix::identity(2);
    case Pauli::X: return gates::pauli_x();
    case Pauli::Z: return gates::pauli_z();
    case Pauli::XZ: return gates::pauli_x() * gates::pauli_z();
  }
  throw UsageError("unknown Pauli");
}

std::string_view pauli_name(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Z: return "Z";
    case Pauli::XZ: return "XZ";
  }
  return "?";
}

Matrix pauli_string_matrix(std::span<const Pauli> paulis) {
  if (paulis.empty()) throw UsageError("empty Pauli string");
  Matrix m = pauli_matrix(paulis.front());
  for (std::size_t i = 1; i < paulis.size(); ++i) m = tensor(m, pauli_matrix(paulis[i]));
  return m;
}

std::string pauli_string_name(std::span<const Pauli> paulis) {
  std::string s;
  for (std::size_t i = 0; i < paulis.size(); ++i) {
    if (i) s += '.';
    s += pauli_name(paulis[i]);
  }
  return s;
}

std::size_t pauli_weight(std::span<const Pauli> paulis) {
  return static_cast<std::size_t>(
      std::count_if(paulis.begin(), paulis.end(), [](Pauli p) { return p != Pauli::I; }));
}

std::vector<std::vector<Pauli>> pauli_strings_by_weight(std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 4;
  std::vector<std::vector<Pauli>> all;
  all.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Pauli> s(n);
    std::size_t c = code;
    for (std::size_t q = n; q-- > 0;) {
      s[q] = static_cast<Pauli>(c % 4);
      c /= 4;
    }
    all.push_back(std::move(s));
  }
  // `code` order is already lexicographic; a stable sort by weight keeps it within ties.
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return pauli_weight(a) < pauli_weight(b);
  });
  return all;
}

// ---------------------------------------------------------------------------
// Tensor products

Ket tensor(const Ket& a, const Ket& b) {
  std::vector<cplx> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return Ket(std::move(out));
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const cplx x = a(ar, ac);
      if (x == cplx{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          m(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
    }
  return m;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(tensor(a.matrix(), b.matrix()));
}

}  // namespace qmesh
