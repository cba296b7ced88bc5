#pragma once

#include "redlap/types.hpp"

namespace redlap {

/// Quadrature for the bi-invariant probability Haar measure of a catalog
/// group. Nodes are realized group elements (2x2 rotations for u1/so2, 3x3
/// rotations for so3, SU(2)/SU(3) unitaries). Product Gauss/trigonometric
/// rules in Euler-type coordinates; exact on matrix elements of irreducibles
/// up to an order-dependent cutoff.
struct HaarQuadrature {
  std::string group_id;
  int order = 0;
  std::vector<Matrix> nodes;
  std::vector<double> weights;

  size_t size() const { return nodes.size(); }
  double weight_sum() const;
};

/// group_id in {"u1", "so2", "so3", "su2", "su3"}. Throws ValidationError for
/// unknown groups or orders below the group minimum.
///
/// Exactness in terms of the order n:
///   u1/so2: characters e^{im theta} with |m| < n
///   so3:    matrix elements of spins l <= (n-1)/2 (and products within that span)
///   su2:    matrix elements of spins j <= (n-1)/2
///   su3:    matrix elements of irreps with (p+q)-degree < n in the first-column
///           sphere coordinates and stabilizer spins <= (n-1)/2
HaarQuadrature haar_quadrature(const std::string& group_id, int order);

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace redlap
