#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "qmesh/errors.hpp"
#include "qmesh/qmath.hpp"

namespace qmesh {

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  if (!m.is_square()) throw UsageError("eigenvalues of a non-square matrix");
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd e(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) e(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InternalError("eigenvalue solver did not converge");
  const auto& vals = solver.eigenvalues();
  return {vals.data(), vals.data() + vals.size()};
}

Matrix psd_sqrt(const Matrix& m) {
  if (!m.is_square()) throw UsageError("square root of a non-square matrix");
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd e(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) e(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e);
  if (solver.info() != Eigen::Success) throw InternalError("eigen decomposition did not converge");
  Eigen::VectorXd vals = solver.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -kPsdTol) throw UsageError("matrix is not positive semidefinite");
    vals(i) = std::sqrt(std::max(vals(i), 0.0));
  }
  const Eigen::MatrixXcd root = solver.eigenvectors() * vals.asDiagonal() * solver.eigenvectors().adjoint();
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = root(r, c);
  return out;
}

}  // namespace qmesh
