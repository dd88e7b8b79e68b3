#pragma once

// Dense complex linear algebra on small multi-qubit registers.
//
// Qubit 0 is the leftmost symbol of a ket label and the most significant bit
// of the amplitude index, so |q0 q1 ... q(n-1)> lives at index
// q0*2^(n-1) + ... + q(n-1).

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmesh {

using cplx = std::complex<double>;
using QubitList = std::vector<std::size_t>;

inline constexpr double kEqualityTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kProductTol = 1e-8;
inline constexpr std::size_t kMaxQubits = 8;

bool is_power_of_two(std::size_t n) noexcept;

// log2(dim); throws UsageError unless dim is a power of two. dim 1 is a
// zero-qubit scalar (what a projection onto every qubit leaves behind).
std::size_t qubit_count(std::size_t dim);

class Ket {
 public:
  Ket() = default;
  explicit Ket(std::size_t dim);
  explicit Ket(std::vector<cplx> amplitudes);

  static Ket basis(std::size_t num_qubits, std::size_t index);
  // Ket::from_bits("0110") is |0110>.
  static Ket from_bits(std::string_view bits);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::size_t num_qubits() const { return qubit_count(amps_.size()); }

  cplx operator[](std::size_t i) const { return amps_[i]; }
  cplx& operator[](std::size_t i) { return amps_[i]; }

  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  std::span<cplx> amplitudes() noexcept { return amps_; }

  double norm_squared() const noexcept;
  double norm() const noexcept;
  bool is_zero(double tol = kEqualityTol) const noexcept;
  // Throws DegenerateError on a zero vector.
  Ket normalized() const;

  Ket& operator+=(const Ket& other);
  Ket& operator-=(const Ket& other);
  Ket& operator*=(cplx s) noexcept;

  friend Ket operator+(Ket a, const Ket& b) { return a += b; }
  friend Ket operator-(Ket a, const Ket& b) { return a -= b; }
  friend Ket operator*(cplx s, Ket a) { return a *= s; }

 private:
  std::vector<cplx> amps_;
};

// <a|b>
cplx inner(const Ket& a, const Ket& b);
// NaN if any entry differs by NaN.
double max_abs_diff(const Ket& a, const Ket& b);

// Row-major dense complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const cplx> diag);
  // |a><b|
  static Matrix outer(const Ket& a, const Ket& b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const cplx> data() const noexcept { return data_; }
  std::span<cplx> data() noexcept { return data_; }

  Matrix adjoint() const;
  Matrix conjugate() const;
  cplx trace() const;

  bool is_hermitian(double tol = kEqualityTol) const;
  bool is_unitary(double tol = kEqualityTol) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(cplx s) noexcept;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Ket operator*(const Matrix& m, const Ket& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

using Operator = Matrix;

double max_abs_diff(const Matrix& a, const Matrix& b);

// Ascending eigenvalues of a Hermitian matrix (only the lower triangle is read).
std::vector<double> hermitian_eigenvalues(const Matrix& m);
// Principal square root of a positive semidefinite matrix; eigenvalues above
// -kPsdTol are clamped to zero, anything more negative throws UsageError.
Matrix psd_sqrt(const Matrix& m);

class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(std::size_t dim);
  // Requires a square matrix with power-of-two dimension.
  explicit DensityMatrix(Matrix m);

  static DensityMatrix pure(const Ket& psi);

  std::size_t dim() const noexcept { return m_.rows(); }
  std::size_t num_qubits() const { return qubit_count(m_.rows()); }

  cplx operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  cplx& operator()(std::size_t r, std::size_t c) { return m_(r, c); }

  const Matrix& matrix() const noexcept { return m_; }
  Matrix& matrix() noexcept { return m_; }

  double trace() const { return m_.trace().real(); }
  DensityMatrix normalized() const;
  bool is_hermitian(double tol = kEqualityTol) const { return m_.is_hermitian(tol); }
  double min_eigenvalue() const;

  DensityMatrix& operator+=(const DensityMatrix& other);
  DensityMatrix& operator*=(double s) noexcept;

 private:
  Matrix m_;
};

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b);

namespace gates {
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
// Control is the first qubit of the pair.
Matrix cnot();
}  // namespace gates

// Single-qubit Pauli correction element; XZ means Z is applied first, then X.
enum class Pauli { I, X, Z, XZ };

Matrix pauli_matrix(Pauli p);
std::string_view pauli_name(Pauli p);
// Tensor product of the listed Paulis, first element on the most significant qubit.
Matrix pauli_string_matrix(std::span<const Pauli> paulis);
// Dot-joined names, e.g. "XZ.I.I.I".
std::string pauli_string_name(std::span<const Pauli> paulis);
std::size_t pauli_weight(std::span<const Pauli> paulis);
// All 4^n strings, ordered by weight, then lexicographically with I < X < Z < XZ
// and qubit 0 most significant.
std::vector<std::vector<Pauli>> pauli_strings_by_weight(std::size_t n);

Ket tensor(const Ket& a, const Ket& b);
Matrix tensor(const Matrix& a, const Matrix& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Embeds op on the listed qubits (identity elsewhere). op must be
// 2^k x 2^k for k = qubits.size(). The density-matrix form returns U rho U^+.
Ket apply_on_qubits(const Matrix& op, const Ket& target, std::span<const std::size_t> qubits);
DensityMatrix apply_on_qubits(const Matrix& op, const DensityMatrix& target,
                              std::span<const std::size_t> qubits);

Ket apply_on_qubits(const Matrix& op, const Ket& target, std::initializer_list<std::size_t> qubits);
DensityMatrix apply_on_qubits(const Matrix& op, const DensityMatrix& target,
                              std::initializer_list<std::size_t> qubits);

struct KetProjection {
  double prob = 0.0;
  // <phi|_measured |psi>, unnormalized, on the unmeasured qubits in ascending order.
  Ket residual;
  Ket normalized() const { return residual.normalized(); }
};

struct DensityProjection {
  double prob = 0.0;
  DensityMatrix residual;
  DensityMatrix normalized() const { return residual.normalized(); }
};

KetProjection project_measure(const Ket& state, const Ket& projector,
                              std::span<const std::size_t> qubits);
DensityProjection project_measure(const DensityMatrix& state, const Ket& projector,
                                  std::span<const std::size_t> qubits);
KetProjection project_measure(const Ket& state, const Ket& projector,
                              std::initializer_list<std::size_t> qubits);
DensityProjection project_measure(const DensityMatrix& state, const Ket& projector,
                                  std::initializer_list<std::size_t> qubits);

// <psi|rho|psi>.
double fidelity_pure(const DensityMatrix& rho, const Ket& psi);

// Reduced state on `keep`, in the order given.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

// Reference kernels: build the full 2^n x 2^n embedding and use plain dense
// products. Slow; kept to check the strided OpenMP kernels above.
namespace serial {
Matrix embed(const Matrix& op, std::size_t num_qubits, std::span<const std::size_t> qubits);
Ket apply_on_qubits(const Matrix& op, const Ket& target, std::span<const std::size_t> qubits);
DensityMatrix apply_on_qubits(const Matrix& op, const DensityMatrix& target,
                              std::span<const std::size_t> qubits);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityProjection project_measure(const DensityMatrix& state, const Ket& projector,
                                  std::span<const std::size_t> qubits);
}  // namespace serial

}  // namespace qmesh
