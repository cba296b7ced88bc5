#include "redlap/lie_algebra.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <map>
#include <sstream>

namespace redlap {

namespace {

RealMatrix flatten_basis(const std::vector<Matrix>& basis) {
  const long rows = basis[0].rows() * basis[0].cols() * 2;
  RealMatrix flat(rows, static_cast<long>(basis.size()));
  for (size_t a = 0; a < basis.size(); ++a) {
    long r = 0;
    for (long j = 0; j < basis[a].cols(); ++j)
      for (long i = 0; i < basis[a].rows(); ++i) {
        flat(r++, static_cast<long>(a)) = basis[a](i, j).real();
        flat(r++, static_cast<long>(a)) = basis[a](i, j).imag();
      }
  }
  return flat;
}

RealVector flatten_element(const Matrix& xi) {
  RealVector v(xi.rows() * xi.cols() * 2);
  long r = 0;
  for (long j = 0; j < xi.cols(); ++j)
    for (long i = 0; i < xi.rows(); ++i) {
      v(r++) = xi(i, j).real();
      v(r++) = xi(i, j).imag();
    }
  return v;
}

int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  if ((a == 0 && b == 1 && c == 2) || (a == 1 && b == 2 && c == 0) || (a == 2 && b == 0 && c == 1))
    return 1;
  return -1;
}

StructureConstants epsilon_constants() {
  StructureConstants f(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) f.at(a, b, c) = levi_civita(a, b, c);
  return f;
}

std::vector<Matrix> pauli_basis() {
  const Complex i(0.0, 1.0);
  Matrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -i, i, 0;
  s3 << 1, 0, 0, -1;
  return {-0.5 * i * s1, -0.5 * i * s2, -0.5 * i * s3};
}

std::vector<Matrix> rotation_generators() {
  std::vector<Matrix> l(3, Matrix::Zero(3, 3));
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) l[a](i, j) = -levi_civita(a, i, j);
  return l;
}

std::vector<Matrix> gell_mann_basis() {
  const Complex i(0.0, 1.0);
  const double s3 = 1.0 / std::sqrt(3.0);
  std::vector<Matrix> lambda(8, Matrix::Zero(3, 3));
  lambda[0] << 0, 1, 0, 1, 0, 0, 0, 0, 0;
  lambda[1] << 0, -i, 0, i, 0, 0, 0, 0, 0;
  lambda[2] << 1, 0, 0, 0, -1, 0, 0, 0, 0;
  lambda[3] << 0, 0, 1, 0, 0, 0, 1, 0, 0;
  lambda[4] << 0, 0, -i, 0, 0, 0, i, 0, 0;
  lambda[5] << 0, 0, 0, 0, 0, 1, 0, 1, 0;
  lambda[6] << 0, 0, 0, 0, 0, -i, 0, i, 0;
  lambda[7] << s3, 0, 0, 0, s3, 0, 0, 0, -2.0 * s3;
  std::vector<Matrix> basis;
  basis.reserve(8);
  for (const auto& l : lambda) basis.push_back(-0.5 * i * l);
  return basis;
}

}  // namespace

LieAlgebraSpec::LieAlgebraSpec(std::string id, std::vector<std::string> labels,
                               std::vector<Matrix> basis, StructureConstants f,
                               RealMatrix invariant_form, std::vector<int> subalgebra_K)
    : id_(std::move(id)),
      dim_(static_cast<int>(basis.size())),
      labels_(std::move(labels)),
      basis_(std::move(basis)),
      f_(std::move(f)),
      B_(std::move(invariant_form)),
      K_(std::move(subalgebra_K)) {
  if (dim_ <= 0) throw ValidationError("algebra basis is empty");
  if (static_cast<int>(labels_.size()) != dim_)
    throw ValidationError("basis_labels size does not match dim");
  basis_flat_ = flatten_basis(basis_);
  basis_solver_.compute(basis_flat_);
  for (int k : K_)
    if (k < 0 || k >= dim_) throw ValidationError("subalgebra index out of range");
}

RealVector LieAlgebraSpec::decompose(const Matrix& xi) const {
  return basis_solver_.solve(flatten_element(xi));
}

double LieAlgebraSpec::decomposition_residual(const Matrix& xi) const {
  const RealVector v = flatten_element(xi);
  return (basis_flat_ * decompose(xi) - v).cwiseAbs().maxCoeff();
}

Matrix LieAlgebraSpec::realize(const RealVector& coords) const {
  Matrix out = Matrix::Zero(basis_[0].rows(), basis_[0].cols());
  for (int a = 0; a < dim_; ++a) out += coords(a) * basis_[a];
  return out;
}

LieAlgebraSpec LieAlgebraSpec::with_subalgebra(std::vector<int> k) const {
  return LieAlgebraSpec(id_, labels_, basis_, f_, B_, std::move(k));
}

LieAlgebraSpec LieAlgebraSpec::with_rescaled_form(double c) const {
  if (c <= 0.0) throw ValidationError("invariant form scale must be positive");
  return LieAlgebraSpec(id_, labels_, basis_, f_, c * B_, K_);
}

std::string AlgebraValidationReport::summary() const {
  std::ostringstream os;
  os << (pass() ? "pass" : "FAIL") << " antisym=" << antisymmetry_residual
     << " jacobi=" << jacobi_residual << " Bsym=" << b_symmetry_residual
     << " Bmin=" << b_min_eigenvalue << " adinv=" << ad_invariance_residual
     << " Kclose=" << k_closure_residual << " bracket=" << realization_bracket_residual;
  return os.str();
}

AlgebraValidationReport validate_algebra(const LieAlgebraSpec& spec, double tol) {
  const int n = spec.dim();
  if (spec.f().dim() != n) throw ValidationError("structure constants do not match dim");
  if (spec.invariant_form().rows() != n || spec.invariant_form().cols() != n)
    throw ValidationError("invariant form does not match dim");

  AlgebraValidationReport r;
  r.tolerance = tol;
  const auto& f = spec.f();
  const auto& B = spec.invariant_form();

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        r.antisymmetry_residual = std::max(r.antisymmetry_residual, std::abs(f(a, b, c) + f(b, a, c)));

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double s = 0.0;
          for (int e = 0; e < n; ++e)
            s += f(a, b, e) * f(e, c, d) + f(b, c, e) * f(e, a, d) + f(c, a, e) * f(e, b, d);
          r.jacobi_residual = std::max(r.jacobi_residual, std::abs(s));
        }

  r.b_symmetry_residual = max_abs(RealMatrix(B - B.transpose()));
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(B);
  r.b_min_eigenvalue = es.eigenvalues().minCoeff();

  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double s = 0.0;
        for (int e = 0; e < n; ++e) s += f(c, a, e) * B(e, b) + f(c, b, e) * B(a, e);
        r.ad_invariance_residual = std::max(r.ad_invariance_residual, std::abs(s));
      }

  std::vector<bool> in_k(n, false);
  for (int k : spec.subalgebra_K()) in_k[k] = true;
  for (int ki : spec.subalgebra_K())
    for (int kj : spec.subalgebra_K())
      for (int c = 0; c < n; ++c)
        if (!in_k[c])
          r.k_closure_residual = std::max(r.k_closure_residual, std::abs(f(ki, kj, c)));

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Matrix lhs = spec.basis()[a] * spec.basis()[b] - spec.basis()[b] * spec.basis()[a];
      for (int c = 0; c < n; ++c) lhs -= f(a, b, c) * spec.basis()[c];
      r.realization_bracket_residual = std::max(r.realization_bracket_residual, max_abs(lhs));
    }

  return r;
}

double DualBasisPair::pairing_residual(const RealMatrix& B) const {
  const RealMatrix p = t_upper.transpose() * B * t_lower;
  return max_abs(RealMatrix(p - RealMatrix::Identity(p.rows(), p.cols())));
}

double DualBasisPair::orthogonality_residual(const RealMatrix& B, const RealMatrix& k_columns) const {
  if (k_columns.cols() == 0) return 0.0;
  double r = max_abs(RealMatrix(k_columns.transpose() * B * t_lower));
  r = std::max(r, max_abs(RealMatrix(k_columns.transpose() * B * t_upper)));
  return r;
}

DualBasisPair dual_bases(const LieAlgebraSpec& spec) {
  const int n = spec.dim();
  std::vector<bool> in_k(n, false);
  for (int k : spec.subalgebra_K()) in_k[k] = true;

  std::vector<int> complement;
  for (int a = 0; a < n; ++a)
    if (!in_k[a]) complement.push_back(a);
  if (complement.empty()) throw ValidationError("K equals the whole algebra: empty complement");

  const auto& B = spec.invariant_form();
  const int nk = static_cast<int>(spec.subalgebra_K().size());
  RealMatrix k_cols = RealMatrix::Zero(n, nk);
  for (int j = 0; j < nk; ++j) k_cols(spec.subalgebra_K()[j], j) = 1.0;

  RealMatrix t_lower(n, static_cast<long>(complement.size()));
  for (size_t j = 0; j < complement.size(); ++j) {
    RealVector e = RealVector::Zero(n);
    e(complement[j]) = 1.0;
    if (nk > 0) {
      // B-orthogonal projection off K
      RealMatrix kg = k_cols.transpose() * B * k_cols;
      RealVector coeff = kg.ldlt().solve(k_cols.transpose() * B * e);
      e -= k_cols * coeff;
    }
    t_lower.col(static_cast<long>(j)) = e;
  }

  const RealMatrix gram = t_lower.transpose() * B * t_lower;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram);
  if (es.eigenvalues().minCoeff() < 1e-12)
    throw ValidationError("degenerate complement Gram matrix");
  const RealMatrix t_upper = t_lower * gram.inverse();

  return DualBasisPair{t_lower, t_upper};
}

Matrix exp_map(const LieAlgebraSpec& spec, const RealVector& coords) {
  if (coords.size() != spec.dim()) throw ValidationError("exp_map: coordinate size mismatch");
  const Matrix xi = spec.realize(coords);
  const double theta = coords.norm();

  if (spec.id() == "su2") {
    // Rodrigues-type closed form for X_a = -(i/2) sigma_a
    if (theta < 1e-8)
      return Matrix::Identity(2, 2) + xi + 0.5 * xi * xi;
    return std::cos(0.5 * theta) * Matrix::Identity(2, 2) + (2.0 * std::sin(0.5 * theta) / theta) * xi;
  }
  if (spec.id() == "so3") {
    if (theta < 1e-8)
      return Matrix::Identity(3, 3) + xi + 0.5 * xi * xi;
    return Matrix::Identity(3, 3) + (std::sin(theta) / theta) * xi +
           ((1.0 - std::cos(theta)) / (theta * theta)) * (xi * xi);
  }
  if (spec.id() == "u1") {
    const double t = coords(0);
    Matrix g(2, 2);
    g << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return g;
  }
  return xi.exp();
}

StructureConstants structure_constants_from_basis(const std::vector<Matrix>& basis) {
  const int n = static_cast<int>(basis.size());
  const RealMatrix flat = flatten_basis(basis);
  Eigen::ColPivHouseholderQR<RealMatrix> solver(flat);
  StructureConstants f(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Matrix bracket = basis[a] * basis[b] - basis[b] * basis[a];
      const RealVector c = solver.solve(flatten_element(bracket));
      for (int k = 0; k < n; ++k) f.at(a, b, k) = c(k);
    }
  return f;
}

const LieAlgebraSpec& algebra_catalog(const std::string& id) {
  static const std::map<std::string, LieAlgebraSpec> catalog = [] {
    std::map<std::string, LieAlgebraSpec> m;

    Matrix rot(2, 2);
    rot << 0, -1, 1, 0;
    RealMatrix b_u1(1, 1);
    b_u1 << 2.0;  // -tr(T T) in the 2x2 embedding
    m.emplace("u1", LieAlgebraSpec("u1", {"T"}, {rot}, StructureConstants(1), b_u1, {}));

    // B = 2 Id = -tr(L_a L_b) in the defining representation
    m.emplace("so3", LieAlgebraSpec("so3", {"L1", "L2", "L3"}, rotation_generators(),
                                    epsilon_constants(), 2.0 * RealMatrix::Identity(3, 3), {}));

    // B = Id in the basis X_a = -(i/2) sigma_a; fixed by the catalog's
    // normalization tests (the bi-invariant metric then gives B(X3,X3) = 1).
    m.emplace("su2", LieAlgebraSpec("su2", {"X1", "X2", "X3"}, pauli_basis(), epsilon_constants(),
                                    RealMatrix::Identity(3, 3), {}));

    auto su3_basis = gell_mann_basis();
    auto su3_f = structure_constants_from_basis(su3_basis);
    std::vector<std::string> su3_labels;
    for (int a = 1; a <= 8; ++a) su3_labels.push_back("X" + std::to_string(a));
    // B = -tr(XY) in the defining representation = Id/2 in this basis
    m.emplace("su3", LieAlgebraSpec("su3", su3_labels, std::move(su3_basis), std::move(su3_f),
                                    0.5 * RealMatrix::Identity(8, 8), {}));
    return m;
  }();

  const std::string key = (id == "so2") ? "u1" : id;
  auto it = catalog.find(key);
  if (it == catalog.end()) throw ValidationError("unknown algebra id: " + id);
  return it->second;
}

std::vector<std::string> algebra_catalog_ids() { return {"u1", "so3", "su2", "su3"}; }

}  // namespace redlap
