#include "acm/equivariance.hpp"

#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "acm/errors.hpp"

namespace acm {

StructureIsometry isometry_from_generator(const AcmStructure& s,
                                          const Eigen::MatrixXd& generator) {
  require_normalized(s);
  if (generator.rows() != s.dim || generator.cols() != s.dim)
    throw DimensionError("isometry_from_generator: wrong generator size");

  const Eigen::MatrixXd h = h_matrix(s);
  const Eigen::MatrixXd skew = 0.5 * (generator - generator.transpose());
  const Eigen::MatrixXd horizontal = h * skew * h;
  // Averaging with the phi-conjugate makes the generator commute with phi.
  const Eigen::MatrixXd commuting =
      0.5 * (horizontal - s.phi * horizontal * s.phi);

  StructureIsometry iso;
  iso.a = commuting.exp();
  iso.a_inv = iso.a.transpose();  // orthogonal by construction
  return iso;
}

StructureIsometry random_isometry(const AcmStructure& s, std::uint64_t seed) {
  require_normalized(s);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd k(s.dim, s.dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(s.dim));
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) k(i, j) = scale * normal(gen);
  return isometry_from_generator(s, k);
}

double isometry_residual(const AcmStructure& s, const StructureIsometry& a) {
  const double fix_xi = (a.a * s.xi - s.xi).cwiseAbs().maxCoeff();
  const double commute = (a.a * s.phi - s.phi * a.a).cwiseAbs().maxCoeff();
  const double orth =
      (a.a.transpose() * s.g * a.a - s.g).cwiseAbs().maxCoeff();
  return std::max({fix_xi, commute, orth});
}

Tensor3 act(const StructureIsometry& a, const Tensor3& f) {
  if (a.a_inv.rows() != f.dim())
    throw DimensionError("act: isometry/tensor dimension mismatch");
  return contract_slot(contract_slot(contract_slot(f, a.a_inv, 0), a.a_inv, 1),
                       a.a_inv, 2);
}

Eigen::VectorXd act_covector(const StructureIsometry& a,
                             const Eigen::VectorXd& w) {
  return a.a_inv.transpose() * w;
}

}  // namespace acm
