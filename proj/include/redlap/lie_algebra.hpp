#pragma once

#include "redlap/types.hpp"

namespace redlap {

/// Rank-3 array of structure constants f^c_{ab}: [X_a, X_b] = sum_c f^c_{ab} X_c.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int dim) : dim_(dim), f_(static_cast<size_t>(dim) * dim * dim, 0.0) {}

  int dim() const { return dim_; }
  double operator()(int a, int b, int c) const { return f_[index(a, b, c)]; }
  double& at(int a, int b, int c) { return f_[index(a, b, c)]; }

 private:
  size_t index(int a, int b, int c) const {
    return (static_cast<size_t>(a) * dim_ + b) * dim_ + c;
  }
  int dim_ = 0;
  std::vector<double> f_;
};

/// A compact Lie algebra in a fixed basis, with a faithful matrix realization,
/// an invariant positive definite form B, and a designated subalgebra K given
/// by basis indices. Immutable after construction.
class LieAlgebraSpec {
 public:
  LieAlgebraSpec(std::string id, std::vector<std::string> labels, std::vector<Matrix> basis,
                 StructureConstants f, RealMatrix invariant_form, std::vector<int> subalgebra_K);

  const std::string& id() const { return id_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  const StructureConstants& f() const { return f_; }
  const RealMatrix& invariant_form() const { return B_; }
  const std::vector<int>& subalgebra_K() const { return K_; }

  /// Coordinates of a realized algebra element in the basis (least squares
  /// against the flattened basis matrices; exact for elements in the span).
  RealVector decompose(const Matrix& xi) const;
  /// Residual of the least-squares decomposition; ~0 for genuine elements.
  double decomposition_residual(const Matrix& xi) const;
  /// sum_a c_a X_a in the faithful realization.
  Matrix realize(const RealVector& coords) const;
  /// B-pairing of two coordinate vectors.
  double pairing(const RealVector& u, const RealVector& v) const { return u.dot(B_ * v); }

  /// Copy with a different designated subalgebra.
  LieAlgebraSpec with_subalgebra(std::vector<int> k) const;
  /// Copy with the invariant form rescaled by c > 0 (covariance testing).
  LieAlgebraSpec with_rescaled_form(double c) const;

 private:
  std::string id_;
  int dim_;
  std::vector<std::string> labels_;
  std::vector<Matrix> basis_;
  StructureConstants f_;
  RealMatrix B_;
  std::vector<int> K_;
  RealMatrix basis_flat_;  // (2*m*n) x dim, real+imag stacked
  Eigen::ColPivHouseholderQR<RealMatrix> basis_solver_;
};

struct AlgebraValidationReport {
  double antisymmetry_residual = 0.0;
  double jacobi_residual = 0.0;
  double b_symmetry_residual = 0.0;
  double b_min_eigenvalue = 0.0;  // > 0 required
  double ad_invariance_residual = 0.0;
  double k_closure_residual = 0.0;
  double realization_bracket_residual = 0.0;
  double tolerance = 1e-12;

  bool pass() const {
    return antisymmetry_residual < tolerance && jacobi_residual < tolerance &&
           b_symmetry_residual < tolerance && b_min_eigenvalue > 0.0 &&
           ad_invariance_residual < tolerance && k_closure_residual < tolerance &&
           realization_bracket_residual < tolerance;
  }
  std::string summary() const;
};

/// Checks antisymmetry, Jacobi, B symmetry/positivity/ad-invariance, closure
/// of K, and that the matrix realization reproduces f. Throws ValidationError
/// on dimensional mismatch.
AlgebraValidationReport validate_algebra(const LieAlgebraSpec& spec, double tol = 1e-12);

/// Dual bases {T_alpha}, {T^alpha} of the B-orthogonal complement of K.
/// Columns hold coordinates in the algebra basis. T_alpha are the basis
/// vectors outside K projected B-orthogonally off K; T^alpha solve
/// B(T^alpha, T_beta) = delta.
struct DualBasisPair {
  RealMatrix t_lower;  // dim x count
  RealMatrix t_upper;  // dim x count

  int count() const { return static_cast<int>(t_lower.cols()); }
  /// max |B(T^a, T_b) - delta_ab|
  double pairing_residual(const RealMatrix& B) const;
  /// max |B(T_a, K_j)| over complement and K columns
  double orthogonality_residual(const RealMatrix& B, const RealMatrix& k_columns) const;
};

/// Throws ValidationError when K spans the whole algebra.
DualBasisPair dual_bases(const LieAlgebraSpec& spec);

/// Group element exp(sum_a c_a X_a) in the faithful realization. Closed form
/// for su(2)/so(3)/rotations, scaling-and-squaring otherwise.
Matrix exp_map(const LieAlgebraSpec& spec, const RealVector& coords);

struct CasimirReport {
  Matrix matrix;               // sum_ab (B^-1)^ab R_a R_b
  Complex scalar;              // mean diagonal value
  double off_scalar_residual;  // ||matrix - scalar*I||_max
};

/// Compiled structure constants from an explicit matrix basis.
StructureConstants structure_constants_from_basis(const std::vector<Matrix>& basis);

/// Catalog algebras: "u1" (= "so2"), "so3", "su2", "su3".
/// The designated subalgebra is empty; scenarios select their own K.
const LieAlgebraSpec& algebra_catalog(const std::string& id);
std::vector<std::string> algebra_catalog_ids();

}  // namespace redlap
