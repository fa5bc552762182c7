#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "acm/constants.hpp"
#include "acm/structure.hpp"
#include "acm/tensor.hpp"

namespace acm {

/// Smooth field data on one chart: the structure tensors as closed-form
/// callbacks of the chart coordinates.
struct ChartField {
  int n = 0;
  std::string name;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> metric_at;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> phi_at;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> xi_at;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> eta_at;
};

/// g-orthonormal basis at a point, xi in the last column.
struct PointFrame {
  Eigen::VectorXd point;
  Eigen::MatrixXd frame;
};

/// Pointwise structure in the coordinate basis.
AcmStructure structure_at(const ChartField& chart, const Eigen::VectorXd& p);

/// Gram-Schmidt over the coordinate basis with xi pinned last.
PointFrame orthonormal_frame(const ChartField& chart, const Eigen::VectorXd& p);

/// Levi-Civita connection coefficients by central differences:
/// gamma[k](i,j) = 1/2 g^{kl} (d_i g_{jl} + d_j g_{il} - d_l g_{ij}).
std::vector<Eigen::MatrixXd> christoffel(const ChartField& chart,
                                         const Eigen::VectorXd& p,
                                         double step);

/// The covariant derivative of phi lowered to (0,3) form and re-expressed in
/// the orthonormal point frame, together with the frame structure and the
/// constraint-space residual of the extracted tensor.
struct PointSample {
  AcmStructure structure;  // normalized frame structure at the point
  Tensor3 tensor;          // F(x,y,z) = g((nabla_x phi) y, z) in that frame
  PointFrame frame;
  double membership = 0.0;
};
PointSample fundamental_tensor(const ChartField& chart,
                               const Eigen::VectorXd& p,
                               double step = kDefaultStep);

/// Built-in example charts: flat products (n = 1, 2), the standard contact
/// structure on R^3 and the exponentially warped product on R^3.
const std::vector<ChartField>& builtin_charts();
const ChartField* find_chart(std::string_view name);

}  // namespace acm
