#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace acm {

/// Almost contact metric structure (phi, xi, eta, g) on a (2n+1)-dimensional
/// real vector space.
///
/// phi acts on column vectors; eta holds the coefficients of the covector, so
/// eta(x) = eta.dot(x). Most of the library expects the structure expressed in
/// a g-orthonormal basis with xi as the last basis vector (see
/// normalized_frame); validate_structure works on any basis.
struct AcmStructure {
  int n = 0;    // complex dimension of the horizontal space
  int dim = 0;  // 2n + 1
  Eigen::MatrixXd phi;
  Eigen::VectorXd xi;
  Eigen::VectorXd eta;
  Eigen::MatrixXd g;
};

struct ValidationReport {
  bool ok = false;
  double max_residual = 0.0;
  std::vector<std::string> violated_axioms;
};

/// Structure on the standard orthonormal basis: xi = e_{2n+1}, g = I,
/// phi e_{2i-1} = e_{2i}, phi e_{2i} = -e_{2i-1}.
AcmStructure standard_structure(int n);

/// Checks the five axiom families on all basis tuples. max_residual is the
/// largest absolute violation; ok iff it stays within the algebraic tolerance.
/// Inconsistent dimensions are an error, not a failed validation.
ValidationReport validate_structure(const AcmStructure& s);

/// Horizontal projection h x = -phi^2 x = x - eta(x) xi.
Eigen::VectorXd h_map(const AcmStructure& s, const Eigen::VectorXd& x);

/// Matrix of h in the structure's basis.
Eigen::MatrixXd h_matrix(const AcmStructure& s);

/// Re-expresses a valid structure in a g-orthonormal basis with xi pinned to
/// the last slot (Gram-Schmidt over the coordinate basis). Returns the
/// transformed structure with g = I, xi = e_dim, eta = e_dim.
AcmStructure normalized_frame(const AcmStructure& s);

bool is_normalized(const AcmStructure& s, double tol = 1e-9);

/// Throws InvalidArgument when s is not in the normalized frame.
void require_normalized(const AcmStructure& s);

}  // namespace acm
