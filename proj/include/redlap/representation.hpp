#pragma once

#include "redlap/lie_algebra.hpp"
#include "redlap/types.hpp"

#include <functional>

namespace redlap {

/// A finite dimensional unitary irreducible representation of a catalog
/// group, stored as explicit matrices: generators R_a = rho'(X_a)
/// (anti-Hermitian) plus a closed-form evaluator for the group-level rho(g)
/// acting on realized group elements.
struct Representation {
  std::string group_id;
  std::string label;
  int dim_V = 0;
  std::vector<Matrix> generators;
  std::function<Matrix(const Matrix&)> group_evaluator;

  Matrix evaluate(const Matrix& g) const { return group_evaluator(g); }
  /// rho'(xi) for xi given in algebra-basis coordinates.
  Matrix apply_generators(const RealVector& coords) const;
};

struct RepresentationValidationReport {
  double antihermiticity_residual = 0.0;
  double bracket_residual = 0.0;    // ||[R_a,R_b] - sum_c f^c_ab R_c||
  double evaluator_residual = 0.0;  // rho(exp xi) vs exp(rho' xi) on probes
  double tolerance = 1e-12;
  bool pass() const {
    return antihermiticity_residual < tolerance && bracket_residual < tolerance &&
           evaluator_residual < 100 * tolerance;
  }
};

RepresentationValidationReport validate_representation(const Representation& rep,
                                                       const LieAlgebraSpec& spec,
                                                       double tol = 1e-12);

CasimirReport casimir(const Representation& rep, const LieAlgebraSpec& spec);

/// Hermitian angular momentum matrices J_1, J_2, J_3 for spin j (2j integer),
/// built from ladder operators; [J_a, J_b] = i eps_abc J_c.
std::vector<Matrix> spin_matrices(int twoj);

/// Wigner matrix D^j(g) for g in SU(2), via the polynomial realization on
/// homogeneous degree-2j polynomials. Rows/columns ordered m = j..-j.
Matrix wigner_matrix(int twoj, const Matrix& g);

/// Lift of a 3x3 rotation matrix to SU(2) (sign ambiguity is irrelevant for
/// integer spin evaluations).
Matrix su2_lift(const Matrix& rotation);

/// Representation labels:
///   u1:  "charge:m" (integer m), "trivial"
///   su2: "spin:j" with j = "0","1/2","1","3/2",... ; "trivial", "defining", "adjoint"
///   so3: "spin:l" integer l; "trivial", "defining", "adjoint"
///   su3: "trivial", "defining", "adjoint"
Representation representation_catalog(const std::string& group_id, const std::string& label);
std::vector<std::string> representation_labels(const std::string& group_id);

/// Parses "p/q" or "p" into twice the value; throws on non-half-integers.
int parse_two_j(const std::string& text);

}  // namespace redlap
