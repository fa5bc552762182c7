#include "acm/tensor.hpp"

#include <cmath>
#include <random>

#include "acm/constants.hpp"
#include "acm/errors.hpp"

namespace acm {

Tensor3::Tensor3(int n) : n_(n), dim_(2 * n + 1) {
  if (n < 1) throw InvalidArgument("Tensor3 requires n >= 1");
  v_.assign(static_cast<std::size_t>(dim_) * dim_ * dim_, 0.0);
}

Tensor3::Tensor3(int n, std::vector<double> values) : Tensor3(n) {
  if (values.size() != v_.size())
    throw DimensionError("Tensor3: values must have (2n+1)^3 entries");
  v_ = std::move(values);
}

Tensor3 Tensor3::from_vector(int n, const Eigen::VectorXd& v) {
  Tensor3 t(n);
  if (v.size() != static_cast<Eigen::Index>(t.size()))
    throw DimensionError("Tensor3::from_vector: wrong length");
  for (std::size_t i = 0; i < t.size(); ++i) t.v_[i] = v(static_cast<Eigen::Index>(i));
  return t;
}

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (o.n_ != n_) throw DimensionError("tensor dimension mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (o.n_ != n_) throw DimensionError("tensor dimension mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(double c) {
  for (double& x : v_) x *= c;
  return *this;
}

Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
Tensor3 operator*(double c, Tensor3 a) { return a *= c; }
Tensor3 operator-(Tensor3 a) { return a *= -1.0; }

Tensor3 contract_slot(const Tensor3& f, const Eigen::MatrixXd& m, int slot) {
  const int d = f.dim();
  if (m.rows() != d || m.cols() != d)
    throw DimensionError("contract_slot: matrix dimension mismatch");
  if (slot < 0 || slot > 2) throw InvalidArgument("contract_slot: slot must be 0..2");
  Tensor3 out(f.n());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double acc = 0.0;
        switch (slot) {
          case 0:
            for (int p = 0; p < d; ++p) acc += m(p, i) * f(p, j, k);
            break;
          case 1:
            for (int p = 0; p < d; ++p) acc += m(p, j) * f(i, p, k);
            break;
          default:
            for (int p = 0; p < d; ++p) acc += m(p, k) * f(i, j, p);
            break;
        }
        out(i, j, k) = acc;
      }
  return out;
}

double inner_product(const Tensor3& a, const Tensor3& b) {
  if (a.n() != b.n()) throw DimensionError("inner_product: dimension mismatch");
  double acc = 0.0;
  const double* pa = a.data();
  const double* pb = b.data();
  for (std::size_t i = 0; i < a.size(); ++i) acc += pa[i] * pb[i];
  return acc;
}

double tensor_norm(const Tensor3& a) { return std::sqrt(inner_product(a, a)); }

TraceTriple traces(const AcmStructure& s, const Tensor3& f) {
  require_normalized(s);
  const int d = f.dim();
  if (d != s.dim) throw DimensionError("traces: tensor/structure mismatch");
  TraceTriple t;
  t.f = Eigen::VectorXd::Zero(d);
  t.f_star = Eigen::VectorXd::Zero(d);
  t.omega = Eigen::VectorXd::Zero(d);
  for (int z = 0; z < d; ++z) {
    double fv = 0.0, fsv = 0.0, ov = 0.0;
    for (int i = 0; i < d; ++i) {
      fv += f(i, i, z);
      for (int p = 0; p < d; ++p) {
        const double c = s.phi(p, i);
        if (c != 0.0) fsv += c * f(i, p, z);
      }
    }
    for (int p = 0; p < d; ++p) {
      if (s.xi(p) == 0.0) continue;
      for (int q = 0; q < d; ++q)
        if (s.xi(q) != 0.0) ov += s.xi(p) * s.xi(q) * f(p, q, z);
    }
    t.f(z) = fv;
    t.f_star(z) = fsv;
    t.omega(z) = ov;
  }
  return t;
}

double membership_residual(const AcmStructure& s, const Tensor3& f) {
  require_normalized(s);
  const int d = f.dim();
  if (d != s.dim) throw DimensionError("membership_residual: dimension mismatch");

  double r = 0.0;
  // antisymmetry in the last two arguments
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        r = std::max(r, std::abs(f(i, j, k) + f(i, k, j)));

  // F(x,y,z) + F(x,phi y,phi z) - eta(y) F(x,xi,z) - eta(z) F(x,y,xi) = 0
  const Tensor3 fpp = contract_slot(contract_slot(f, s.phi, 1), s.phi, 2);
  const int last = d - 1;  // xi slot in the normalized frame
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const double v = f(i, j, k) + fpp(i, j, k) - s.eta(j) * f(i, last, k) -
                         s.eta(k) * f(i, j, last);
        r = std::max(r, std::abs(v));
      }
  return r;
}

SpaceProjector::SpaceProjector(const AcmStructure& s) : s_(s) {
  require_normalized(s);
  const int d = s.dim;
  const int nn = d * d * d;
  const int last = d - 1;
  auto flat = [d](int i, int j, int k) { return (i * d + j) * d + k; };

  Eigen::MatrixXd constraints = Eigen::MatrixXd::Zero(2 * nn, nn);
  int row = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        constraints(row, flat(i, j, k)) += 1.0;
        constraints(row, flat(i, k, j)) += 1.0;
        ++row;
        constraints(row, flat(i, j, k)) += 1.0;
        for (int p = 0; p < d; ++p) {
          const double cj = s.phi(p, j);
          if (cj == 0.0) continue;
          for (int q = 0; q < d; ++q) {
            const double ck = s.phi(q, k);
            if (ck != 0.0) constraints(row, flat(i, p, q)) += cj * ck;
          }
        }
        constraints(row, flat(i, last, k)) -= s.eta(j);
        constraints(row, flat(i, j, last)) -= s.eta(k);
        ++row;
      }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraints, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = kRankCutoff * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  basis_ = svd.matrixV().rightCols(nn - rank);
}

Tensor3 SpaceProjector::project(const Tensor3& t) const {
  if (t.n() != s_.n) throw DimensionError("SpaceProjector: dimension mismatch");
  const Eigen::VectorXd coords = basis_.transpose() * t.as_vector();
  return Tensor3::from_vector(t.n(), basis_ * coords);
}

Tensor3 project_to_space(const AcmStructure& s, const Tensor3& t) {
  return SpaceProjector(s).project(t);
}

Tensor3 random_raw_tensor(int n, std::uint64_t seed) {
  Tensor3 t(n);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t i = 0; i < t.size(); ++i) t.data()[i] = normal(gen);
  return t;
}

Tensor3 random_element(const SpaceProjector& p, std::uint64_t seed) {
  return p.project(random_raw_tensor(p.structure().n, seed));
}

Tensor3 random_element(const AcmStructure& s, std::uint64_t seed) {
  return SpaceProjector(s).project(random_raw_tensor(s.n, seed));
}

}  // namespace acm
