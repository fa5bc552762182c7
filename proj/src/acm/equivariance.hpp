#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "acm/structure.hpp"
#include "acm/tensor.hpp"

namespace acm {

/// Structure-preserving isometry fixing xi and commuting with phi; the group
/// acting on the constraint space.
struct StructureIsometry {
  Eigen::MatrixXd a;
  Eigen::MatrixXd a_inv;
};

/// exp of a generator, after forcing it skew, horizontal and phi-commuting.
StructureIsometry isometry_from_generator(const AcmStructure& s,
                                          const Eigen::MatrixXd& generator);

/// Deterministic-in-seed sample: exponential of a random skew-symmetric
/// generator commuting with phi on the horizontal space, identity on xi.
StructureIsometry random_isometry(const AcmStructure& s, std::uint64_t seed);

/// Max violation of a xi = xi, a phi = phi a, a^T g a = g.
double isometry_residual(const AcmStructure& s, const StructureIsometry& a);

/// (a.F)(x,y,z) = F(a^{-1}x, a^{-1}y, a^{-1}z).
Tensor3 act(const StructureIsometry& a, const Tensor3& f);

/// (w . a^{-1})(z) = w(a^{-1} z), for trace-equivariance checks.
Eigen::VectorXd act_covector(const StructureIsometry& a,
                             const Eigen::VectorXd& w);

}  // namespace acm
