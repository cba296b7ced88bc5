#include "redlap/representation.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace redlap {

namespace {

double factorial(int n) {
  double v = 1.0;
  for (int k = 2; k <= n; ++k) v *= k;
  return v;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

std::vector<Complex> power_table(Complex z, int n_max) {
  std::vector<Complex> p(static_cast<size_t>(n_max) + 1);
  p[0] = Complex(1.0, 0.0);
  for (int k = 1; k <= n_max; ++k) p[static_cast<size_t>(k)] = p[static_cast<size_t>(k - 1)] * z;
  return p;
}

double rotation_angle(const Matrix& g) {
  return std::atan2(g(1, 0).real(), g(0, 0).real());
}

}  // namespace

Matrix Representation::apply_generators(const RealVector& coords) const {
  Matrix out = Matrix::Zero(dim_V, dim_V);
  for (size_t a = 0; a < generators.size(); ++a) out += coords(static_cast<long>(a)) * generators[a];
  return out;
}

std::vector<Matrix> spin_matrices(int twoj) {
  const int d = twoj + 1;
  const double j = 0.5 * twoj;
  Matrix j3 = Matrix::Zero(d, d);
  Matrix jp = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = j - i;
    j3(i, i) = m;
    if (i > 0) jp(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const Matrix jm = jp.adjoint();
  const Complex im(0.0, 1.0);
  return {0.5 * (jp + jm), -0.5 * im * (jp - jm), j3};
}

Matrix wigner_matrix(int twoj, const Matrix& g) {
  const int d = twoj + 1;
  if (twoj == 0) return Matrix::Identity(1, 1);
  const Complex a = g(0, 0), b = g(0, 1), c = g(1, 0), dd = g(1, 1);
  const auto pa = power_table(a, twoj), pb = power_table(b, twoj), pc = power_table(c, twoj),
             pd = power_table(dd, twoj);

  Matrix out = Matrix::Zero(d, d);
  for (int col = 0; col < d; ++col) {
    const int p = twoj - col;  // j + m
    const int q = col;         // j - m
    const double norm_in = factorial(p) * factorial(q);
    for (int k = 0; k <= p; ++k)
      for (int l = 0; l <= q; ++l) {
        const int r = k + l;  // j + m'
        const int row = twoj - r;
        const Complex term = binomial(p, k) * binomial(q, l) * pa[k] * pc[p - k] * pb[l] * pd[q - l];
        out(row, col) += term * std::sqrt(factorial(r) * factorial(twoj - r) / norm_in);
      }
  }
  return out;
}

Matrix su2_lift(const Matrix& rotation) {
  RealMatrix r(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = rotation(i, j).real();

  // Shepperd's method: pick the dominant quaternion component first.
  const double tr = r.trace();
  double w, x, y, z;
  if (tr >= r(0, 0) && tr >= r(1, 1) && tr >= r(2, 2)) {
    const double s = std::sqrt(1.0 + tr) * 2.0;
    w = 0.25 * s;
    x = (r(2, 1) - r(1, 2)) / s;
    y = (r(0, 2) - r(2, 0)) / s;
    z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
    x = 0.25 * s;
    w = (r(2, 1) - r(1, 2)) / s;
    y = (r(0, 1) + r(1, 0)) / s;
    z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) >= r(2, 2)) {
    const double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
    y = 0.25 * s;
    w = (r(0, 2) - r(2, 0)) / s;
    x = (r(0, 1) + r(1, 0)) / s;
    z = (r(1, 2) + r(2, 1)) / s;
  } else {
    const double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
    z = 0.25 * s;
    w = (r(1, 0) - r(0, 1)) / s;
    x = (r(0, 2) + r(2, 0)) / s;
    y = (r(1, 2) + r(2, 1)) / s;
  }

  const Complex i(0.0, 1.0);
  Matrix g(2, 2);
  g << w - i * z, -i * x - y, -i * x + y, w + i * z;
  return g;
}

RepresentationValidationReport validate_representation(const Representation& rep,
                                                       const LieAlgebraSpec& spec, double tol) {
  if (static_cast<int>(rep.generators.size()) != spec.dim())
    throw ValidationError("representation generator count does not match algebra dim");

  RepresentationValidationReport r;
  r.tolerance = tol;
  const int n = spec.dim();
  for (const auto& g : rep.generators)
    r.antihermiticity_residual = std::max(r.antihermiticity_residual, antihermiticity_residual(g));

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Matrix lhs = rep.generators[a] * rep.generators[b] - rep.generators[b] * rep.generators[a];
      for (int c = 0; c < n; ++c) lhs -= spec.f()(a, b, c) * rep.generators[c];
      r.bracket_residual = std::max(r.bracket_residual, max_abs(lhs));
    }

  // Probe the group evaluator against exp(rho'(xi)) on a few fixed elements.
  for (int a = 0; a < n; ++a) {
    RealVector c = RealVector::Zero(n);
    c(a) = 0.7;
    if (n > 1) c((a + 1) % n) = -0.3;
    const Matrix lhs = rep.evaluate(exp_map(spec, c));
    const Matrix rhs = rep.apply_generators(c).exp();
    r.evaluator_residual = std::max(r.evaluator_residual, max_abs(Matrix(lhs - rhs)));
  }
  return r;
}

CasimirReport casimir(const Representation& rep, const LieAlgebraSpec& spec) {
  const RealMatrix binv = spec.invariant_form().inverse();
  const int n = spec.dim();
  Matrix c = Matrix::Zero(rep.dim_V, rep.dim_V);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (binv(a, b) != 0.0) c += binv(a, b) * (rep.generators[a] * rep.generators[b]);
  CasimirReport rep_out;
  rep_out.matrix = c;
  rep_out.scalar = c.trace() / static_cast<double>(rep.dim_V);
  rep_out.off_scalar_residual =
      max_abs(Matrix(c - rep_out.scalar * Matrix::Identity(rep.dim_V, rep.dim_V)));
  return rep_out;
}

int parse_two_j(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      const int whole = std::stoi(text);
      if (whole < 0) throw ValidationError("negative spin: " + text);
      return 2 * whole;
    }
    const int num = std::stoi(text.substr(0, slash));
    const int den = std::stoi(text.substr(slash + 1));
    if (den != 2 || num < 0) throw ValidationError("not a half-integer spin: " + text);
    return num;
  } catch (const std::invalid_argument&) {
    throw ValidationError("cannot parse spin label: " + text);
  }
}

namespace {

Representation trivial_representation(const std::string& group_id, int algebra_dim) {
  Representation rep;
  rep.group_id = group_id;
  rep.label = "trivial";
  rep.dim_V = 1;
  rep.generators.assign(static_cast<size_t>(algebra_dim), Matrix::Zero(1, 1));
  rep.group_evaluator = [](const Matrix&) { return Matrix::Identity(1, 1); };
  return rep;
}

Representation u1_charge(int m) {
  Representation rep;
  rep.group_id = "u1";
  rep.label = "charge:" + std::to_string(m);
  rep.dim_V = 1;
  Matrix gen(1, 1);
  gen(0, 0) = Complex(0.0, static_cast<double>(m));
  rep.generators = {gen};
  rep.group_evaluator = [m](const Matrix& g) {
    Matrix out(1, 1);
    out(0, 0) = std::exp(Complex(0.0, m * rotation_angle(g)));
    return out;
  };
  return rep;
}

Representation su2_spin(int twoj) {
  Representation rep;
  rep.group_id = "su2";
  rep.label = (twoj % 2 == 0) ? "spin:" + std::to_string(twoj / 2)
                              : "spin:" + std::to_string(twoj) + "/2";
  rep.dim_V = twoj + 1;
  const Complex i(0.0, 1.0);
  for (const auto& jm : spin_matrices(twoj)) rep.generators.push_back(-i * jm);
  rep.group_evaluator = [twoj](const Matrix& g) { return wigner_matrix(twoj, g); };
  return rep;
}

Representation so3_spin(int l) {
  Representation rep = su2_spin(2 * l);
  rep.group_id = "so3";
  rep.label = "spin:" + std::to_string(l);
  rep.group_evaluator = [l](const Matrix& g) { return wigner_matrix(2 * l, su2_lift(g)); };
  return rep;
}

Representation su3_defining() {
  const auto& spec = algebra_catalog("su3");
  Representation rep;
  rep.group_id = "su3";
  rep.label = "defining";
  rep.dim_V = 3;
  rep.generators = spec.basis();
  rep.group_evaluator = [](const Matrix& g) { return g; };
  return rep;
}

Representation su3_adjoint() {
  const auto& spec = algebra_catalog("su3");
  Representation rep;
  rep.group_id = "su3";
  rep.label = "adjoint";
  rep.dim_V = 8;
  for (int a = 0; a < 8; ++a) {
    Matrix r = Matrix::Zero(8, 8);
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) r(c, b) = spec.f()(a, b, c);
    rep.generators.push_back(r);
  }
  rep.group_evaluator = [&spec](const Matrix& g) {
    Matrix ad = Matrix::Zero(8, 8);
    for (int b = 0; b < 8; ++b) {
      const RealVector col = spec.decompose(g * spec.basis()[static_cast<size_t>(b)] * g.adjoint());
      for (int c = 0; c < 8; ++c) ad(c, b) = col(c);
    }
    return ad;
  };
  return rep;
}

}  // namespace

Representation representation_catalog(const std::string& group_id, const std::string& label) {
  const std::string gid = (group_id == "so2") ? "u1" : group_id;

  if (label == "trivial") return trivial_representation(gid, algebra_catalog(gid).dim());

  if (gid == "u1") {
    if (label.rfind("charge:", 0) == 0) return u1_charge(std::stoi(label.substr(7)));
    throw ValidationError("unknown u1 representation label: " + label);
  }
  if (gid == "su2") {
    if (label == "defining") return su2_spin(1);
    if (label == "adjoint") return su2_spin(2);
    if (label.rfind("spin:", 0) == 0) return su2_spin(parse_two_j(label.substr(5)));
    throw ValidationError("unknown su2 representation label: " + label);
  }
  if (gid == "so3") {
    if (label == "defining" || label == "adjoint") return so3_spin(1);
    if (label.rfind("spin:", 0) == 0) {
      const int twol = parse_two_j(label.substr(5));
      if (twol % 2 != 0) throw ValidationError("so3 spins must be integers: " + label);
      return so3_spin(twol / 2);
    }
    throw ValidationError("unknown so3 representation label: " + label);
  }
  if (gid == "su3") {
    if (label == "defining") return su3_defining();
    if (label == "adjoint") return su3_adjoint();
    throw ValidationError("unknown su3 representation label: " + label);
  }
  throw ValidationError("unknown group id: " + group_id);
}

std::vector<std::string> representation_labels(const std::string& group_id) {
  const std::string gid = (group_id == "so2") ? "u1" : group_id;
  if (gid == "u1") return {"trivial", "charge:1", "charge:2", "charge:3"};
  if (gid == "su2") return {"trivial", "spin:1/2", "spin:1", "spin:3/2", "spin:2", "spin:3"};
  if (gid == "so3") return {"trivial", "spin:1", "spin:2"};
  if (gid == "su3") return {"trivial", "defining", "adjoint"};
  throw ValidationError("unknown group id: " + group_id);
}

}  // namespace redlap
