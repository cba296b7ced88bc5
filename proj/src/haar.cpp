#include "redlap/haar.hpp"

#include "redlap/lie_algebra.hpp"

#include <cmath>
#include <numeric>

namespace redlap {

double HaarQuadrature::weight_sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev-based initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<size_t>(i)] = x;
    weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

Matrix rotation2(double t) {
  Matrix g(2, 2);
  g << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return g;
}

Matrix rotation3_z(double t) {
  Matrix g = Matrix::Identity(3, 3);
  g(0, 0) = std::cos(t);
  g(0, 1) = -std::sin(t);
  g(1, 0) = std::sin(t);
  g(1, 1) = std::cos(t);
  return g;
}

Matrix rotation3_y(double t) {
  Matrix g = Matrix::Identity(3, 3);
  g(0, 0) = std::cos(t);
  g(0, 2) = std::sin(t);
  g(2, 0) = -std::sin(t);
  g(2, 2) = std::cos(t);
  return g;
}

Matrix su2_z(double t) {
  Matrix g = Matrix::Zero(2, 2);
  g(0, 0) = std::exp(Complex(0.0, -0.5 * t));
  g(1, 1) = std::exp(Complex(0.0, 0.5 * t));
  return g;
}

Matrix su2_y(double t) {
  Matrix g(2, 2);
  g << std::cos(0.5 * t), -std::sin(0.5 * t), std::sin(0.5 * t), std::cos(0.5 * t);
  return g;
}

HaarQuadrature u1_rule(int order) {
  HaarQuadrature q;
  q.group_id = "u1";
  q.order = order;
  for (int k = 0; k < order; ++k) {
    q.nodes.push_back(rotation2(2.0 * M_PI * k / order));
    q.weights.push_back(1.0 / order);
  }
  return q;
}

HaarQuadrature so3_rule(int order) {
  const int na = order, ng = order, nb = (order + 2) / 2;
  std::vector<double> bx, bw;
  gauss_legendre(nb, bx, bw);
  HaarQuadrature q;
  q.group_id = "so3";
  q.order = order;
  q.nodes.reserve(static_cast<size_t>(na) * ng * nb);
  for (int ia = 0; ia < na; ++ia) {
    const Matrix ra = rotation3_z(2.0 * M_PI * ia / na);
    for (int ib = 0; ib < nb; ++ib) {
      const Matrix rb = rotation3_y(std::acos(bx[static_cast<size_t>(ib)]));
      const Matrix rab = ra * rb;
      for (int ig = 0; ig < ng; ++ig) {
        q.nodes.push_back(rab * rotation3_z(2.0 * M_PI * ig / ng));
        q.weights.push_back(bw[static_cast<size_t>(ib)] / (2.0 * na * ng));
      }
    }
  }
  return q;
}

HaarQuadrature su2_rule(int order) {
  // alpha in [0,2pi), beta Gauss in cos(beta), gamma in [0,4pi)
  const int na = order, ng = 2 * order, nb = (order + 2) / 2;
  std::vector<double> bx, bw;
  gauss_legendre(nb, bx, bw);
  HaarQuadrature q;
  q.group_id = "su2";
  q.order = order;
  q.nodes.reserve(static_cast<size_t>(na) * ng * nb);
  for (int ia = 0; ia < na; ++ia) {
    const Matrix ga = su2_z(2.0 * M_PI * ia / na);
    for (int ib = 0; ib < nb; ++ib) {
      const Matrix gab = ga * su2_y(std::acos(bx[static_cast<size_t>(ib)]));
      for (int ig = 0; ig < ng; ++ig) {
        q.nodes.push_back(gab * su2_z(4.0 * M_PI * ig / ng));
        q.weights.push_back(bw[static_cast<size_t>(ib)] / (2.0 * na * ng));
      }
    }
  }
  return q;
}

/// Unitary completion of a unit vector z to an SU(3) element with first
/// column z. The choice of completion is deterministic; any measurable
/// section gives the same pushforward measure.
Matrix complete_to_su3(const Vector& z) {
  Matrix a = Matrix::Zero(3, 3);
  a.col(0) = z;
  int filled = 1;
  // candidate standard basis vectors, least-aligned first
  int idx[3] = {0, 1, 2};
  for (int i = 0; i < 2; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::norm(z(idx[j])) < std::norm(z(idx[i]))) std::swap(idx[i], idx[j]);
  for (int t = 0; t < 3 && filled < 3; ++t) {
    Vector e = Vector::Zero(3);
    e(idx[t]) = 1.0;
    for (int c = 0; c < filled; ++c) e -= (a.col(c).adjoint() * e)(0, 0) * a.col(c);
    const double nrm = e.norm();
    if (nrm > 0.3) {
      a.col(filled++) = e / nrm;
    }
  }
  if (filled < 3) throw NumericalError("su3 column completion failed");
  a.col(2) /= a.determinant();  // unit-modulus determinant correction
  return a;
}

HaarQuadrature su3_rule(int order) {
  // SU(3) = S^5 x SU(2) fibration: g = A(z) diag(1, u) with z uniform on S^5
  // (phases uniform, |z_i|^2 uniform on the simplex) and u Haar on the
  // stabilizer SU(2).
  const int np = order;
  const int nr = (order + 2) / 2;
  std::vector<double> rx, rw;
  gauss_legendre(nr, rx, rw);
  // map to [0,1]
  std::vector<double> ux(rx.size()), uw(rw.size());
  for (size_t i = 0; i < rx.size(); ++i) {
    ux[i] = 0.5 * (rx[i] + 1.0);
    uw[i] = 0.5 * rw[i];
  }
  const HaarQuadrature fiber = su2_rule(order);

  HaarQuadrature q;
  q.group_id = "su3";
  q.order = order;
  q.nodes.reserve(static_cast<size_t>(np) * np * np * nr * nr * fiber.size());
  for (int iu = 0; iu < nr; ++iu)
    for (int iv = 0; iv < nr; ++iv) {
      const double t1 = ux[static_cast<size_t>(iu)];
      const double t2 = (1.0 - t1) * ux[static_cast<size_t>(iv)];
      const double t3 = 1.0 - t1 - t2;
      const double wr = 2.0 * (1.0 - t1) * uw[static_cast<size_t>(iu)] * uw[static_cast<size_t>(iv)];
      for (int i1 = 0; i1 < np; ++i1)
        for (int i2 = 0; i2 < np; ++i2)
          for (int i3 = 0; i3 < np; ++i3) {
            Vector z(3);
            z << std::sqrt(t1) * std::exp(Complex(0.0, 2.0 * M_PI * i1 / np)),
                std::sqrt(t2) * std::exp(Complex(0.0, 2.0 * M_PI * i2 / np)),
                std::sqrt(t3) * std::exp(Complex(0.0, 2.0 * M_PI * i3 / np));
            const Matrix a = complete_to_su3(z);
            const double wz = wr / (static_cast<double>(np) * np * np);
            for (size_t k = 0; k < fiber.size(); ++k) {
              Matrix h = Matrix::Identity(3, 3);
              h.block(1, 1, 2, 2) = fiber.nodes[k];
              q.nodes.push_back(a * h);
              q.weights.push_back(wz * fiber.weights[k]);
            }
          }
    }
  return q;
}

}  // namespace

HaarQuadrature haar_quadrature(const std::string& group_id, int order) {
  const std::string gid = (group_id == "so2") ? "u1" : group_id;
  if (gid == "u1") {
    if (order < 1) throw ValidationError("u1 quadrature needs order >= 1");
    return u1_rule(order);
  }
  if (gid == "so3") {
    if (order < 2) throw ValidationError("so3 quadrature needs order >= 2");
    return so3_rule(order);
  }
  if (gid == "su2") {
    if (order < 2) throw ValidationError("su2 quadrature needs order >= 2");
    return su2_rule(order);
  }
  if (gid == "su3") {
    if (order < 2) throw ValidationError("su3 quadrature needs order >= 2");
    return su3_rule(order);
  }
  throw ValidationError("unknown group id for Haar quadrature: " + group_id);
}

}  // namespace redlap
