#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace redlap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// A point of a catalog manifold: a real vector for euclidean(n), a unitary
/// matrix for group manifolds. Tangent vectors use the same carrier.
using ManifoldPoint = std::variant<RealVector, Matrix>;
using TangentVector = std::variant<RealVector, Matrix>;

/// Rejected input: shapes, unknown identifiers, illegal configuration.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation at or beyond a section boundary (density degenerates there).
class BoundaryError : public std::runtime_error {
 public:
  explicit BoundaryError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical invariant broke at run time (non-Hermitian matrix,
/// dim V^K = 0, broken K-invariance, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

inline double hermiticity_residual(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline double antihermiticity_residual(const Matrix& m) {
  return (m + m.adjoint()).cwiseAbs().maxCoeff();
}

inline double unitarity_residual(const Matrix& u) {
  return (u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const RealMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_euclidean(const ManifoldPoint& p) {
  return std::holds_alternative<RealVector>(p);
}

inline const RealVector& euclidean(const ManifoldPoint& p) {
  return std::get<RealVector>(p);
}

inline const Matrix& group_point(const ManifoldPoint& p) {
  return std::get<Matrix>(p);
}

}  // namespace redlap
