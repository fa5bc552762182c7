#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "acm/structure.hpp"

namespace acm {

/// Dense (0,3)-tensor over a (2n+1)-dimensional space, stored row-major with
/// entry (i,j,k) = F(e_i, e_j, e_k) in the orthonormal frame.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n);
  Tensor3(int n, std::vector<double> values);

  int n() const { return n_; }
  int dim() const { return dim_; }
  std::size_t size() const { return v_.size(); }

  double operator()(int i, int j, int k) const {
    return v_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  double& operator()(int i, int j, int k) {
    return v_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  const std::vector<double>& values() const { return v_; }
  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }

  Eigen::Map<const Eigen::VectorXd> as_vector() const {
    return {v_.data(), static_cast<Eigen::Index>(v_.size())};
  }
  static Tensor3 from_vector(int n, const Eigen::VectorXd& v);

  double max_abs() const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(double c);

 private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<double> v_;
};

Tensor3 operator+(Tensor3 a, const Tensor3& b);
Tensor3 operator-(Tensor3 a, const Tensor3& b);
Tensor3 operator*(double c, Tensor3 a);
Tensor3 operator-(Tensor3 a);

/// G(.., M e_s, ..) : applies M to one argument slot,
/// e.g. slot 0: G(i,j,k) = sum_p M(p,i) F(p,j,k).
Tensor3 contract_slot(const Tensor3& f, const Eigen::MatrixXd& m, int slot);

/// Sum over all index triples of A(i,j,k) B(i,j,k), in ascending lexicographic
/// order (fixed summation order keeps output reproducible).
double inner_product(const Tensor3& a, const Tensor3& b);
double tensor_norm(const Tensor3& a);

/// The covectors f(z) = sum_i F(e_i,e_i,z), f*(z) = sum_i F(e_i,phi e_i,z),
/// omega(z) = F(xi,xi,z).
struct TraceTriple {
  Eigen::VectorXd f;
  Eigen::VectorXd f_star;
  Eigen::VectorXd omega;
};
TraceTriple traces(const AcmStructure& s, const Tensor3& f);

/// Max absolute violation of the two constraint-space identities
///   F(x,y,z) = -F(x,z,y)
///   F(x,y,z) = -F(x,phi y,phi z) + eta(y) F(x,xi,z) + eta(z) F(x,y,xi)
/// over all basis triples.
double membership_residual(const AcmStructure& s, const Tensor3& f);

/// Orthogonal projector onto the constraint space, built by assembling the
/// linear system of both identities over all index triples and extracting its
/// null space with a singular value decomposition. Serves as an oracle that is
/// independent of the associated-form operators.
class SpaceProjector {
 public:
  explicit SpaceProjector(const AcmStructure& s);

  const AcmStructure& structure() const { return s_; }
  Tensor3 project(const Tensor3& t) const;

  /// Dimension of the constraint space (rank decision at the relative
  /// singular-value cutoff).
  int space_dim() const { return static_cast<int>(basis_.cols()); }

  /// Orthonormal basis of the constraint space, one column per basis tensor.
  const Eigen::MatrixXd& basis() const { return basis_; }

 private:
  AcmStructure s_;
  Eigen::MatrixXd basis_;  // dim^3 x space_dim
};

Tensor3 project_to_space(const AcmStructure& s, const Tensor3& t);

/// Deterministic-in-seed element of the constraint space: i.i.d. standard
/// normal entries projected onto the space.
Tensor3 random_element(const SpaceProjector& p, std::uint64_t seed);
Tensor3 random_element(const AcmStructure& s, std::uint64_t seed);

/// Raw gaussian tensor (not in the constraint space); test utility.
Tensor3 random_raw_tensor(int n, std::uint64_t seed);

}  // namespace acm
