#include "acm/structure.hpp"

#include <cmath>

#include "acm/constants.hpp"
#include "acm/errors.hpp"

namespace acm {

namespace {

void check_dimensions(const AcmStructure& s) {
  if (s.n < 1) throw InvalidArgument("structure requires n >= 1");
  const int d = 2 * s.n + 1;
  if (s.dim != d) throw DimensionError("dim must equal 2n+1");
  if (s.phi.rows() != d || s.phi.cols() != d)
    throw DimensionError("phi must be dim x dim");
  if (s.g.rows() != d || s.g.cols() != d)
    throw DimensionError("g must be dim x dim");
  if (s.xi.size() != d) throw DimensionError("xi must have length dim");
  if (s.eta.size() != d) throw DimensionError("eta must have length dim");
}

}  // namespace

AcmStructure standard_structure(int n) {
  if (n < 1) throw InvalidArgument("standard_structure requires n >= 1");
  AcmStructure s;
  s.n = n;
  s.dim = 2 * n + 1;
  s.phi = Eigen::MatrixXd::Zero(s.dim, s.dim);
  for (int i = 0; i < n; ++i) {
    s.phi(2 * i + 1, 2 * i) = 1.0;   // phi e_{2i-1} = e_{2i}
    s.phi(2 * i, 2 * i + 1) = -1.0;  // phi e_{2i}   = -e_{2i-1}
  }
  s.xi = Eigen::VectorXd::Zero(s.dim);
  s.xi(s.dim - 1) = 1.0;
  s.eta = s.xi;
  s.g = Eigen::MatrixXd::Identity(s.dim, s.dim);
  return s;
}

ValidationReport validate_structure(const AcmStructure& s) {
  check_dimensions(s);
  const int d = s.dim;

  ValidationReport report;
  auto record = [&report](const std::string& axiom, double residual) {
    report.max_residual = std::max(report.max_residual, residual);
    if (residual > kTauAlg) report.violated_axioms.push_back(axiom);
  };

  // phi^2 x = -x + eta(x) xi, as matrices phi^2 = -I + xi eta^T.
  const Eigen::MatrixXd phi2 = s.phi * s.phi;
  record("phi^2=-id+eta(x)xi",
         (phi2 + Eigen::MatrixXd::Identity(d, d) - s.xi * s.eta.transpose())
             .cwiseAbs()
             .maxCoeff());

  // phi(xi) = 0 and eta(phi x) = 0.
  const double deg = std::max((s.phi * s.xi).cwiseAbs().maxCoeff(),
                              (s.eta.transpose() * s.phi).cwiseAbs().maxCoeff());
  record("phi(xi)=0;eta(phi x)=0", deg);

  record("g(xi,xi)=1", std::abs(s.xi.dot(s.g * s.xi) - 1.0));

  // g(phi x, phi y) = g(x, y) - eta(x) eta(y).
  record("g(phi x,phi y)=g(x,y)-eta(x)eta(y)",
         (s.phi.transpose() * s.g * s.phi - s.g + s.eta * s.eta.transpose())
             .cwiseAbs()
             .maxCoeff());

  // Metric duality eta(x) = g(x, xi).
  record("eta(x)=g(x,xi)", (s.eta - s.g * s.xi).cwiseAbs().maxCoeff());

  report.ok = report.max_residual <= kTauAlg;
  return report;
}

Eigen::VectorXd h_map(const AcmStructure& s, const Eigen::VectorXd& x) {
  if (x.size() != s.dim) throw DimensionError("h_map: vector length mismatch");
  return -(s.phi * (s.phi * x));
}

Eigen::MatrixXd h_matrix(const AcmStructure& s) { return -(s.phi * s.phi); }

AcmStructure normalized_frame(const AcmStructure& s) {
  check_dimensions(s);
  const int d = s.dim;

  // Gram-Schmidt over the coordinate basis, with xi pinned to the last slot.
  std::vector<Eigen::VectorXd> frame;
  frame.reserve(d);
  auto dot = [&s](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return a.dot(s.g * b);
  };
  const double xi_norm2 = dot(s.xi, s.xi);
  if (xi_norm2 <= 0.0) throw ValidationError("normalized_frame: g(xi,xi) <= 0");
  const Eigen::VectorXd xi_unit = s.xi / std::sqrt(xi_norm2);

  for (int i = 0; i < d && static_cast<int>(frame.size()) < 2 * s.n; ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(d, i);
    v -= dot(v, xi_unit) * xi_unit;
    for (const auto& u : frame) v -= dot(v, u) * u;
    const double nrm2 = dot(v, v);
    if (nrm2 > 1e-12) frame.push_back(v / std::sqrt(nrm2));
  }
  if (static_cast<int>(frame.size()) != 2 * s.n)
    throw ValidationError("normalized_frame: could not complete horizontal frame");
  frame.push_back(xi_unit);

  Eigen::MatrixXd e(d, d);
  for (int a = 0; a < d; ++a) e.col(a) = frame[a];

  AcmStructure out;
  out.n = s.n;
  out.dim = d;
  out.phi = e.transpose() * s.g * s.phi * e;
  out.g = Eigen::MatrixXd::Identity(d, d);
  out.xi = Eigen::VectorXd::Unit(d, d - 1);
  out.eta = out.xi;
  return out;
}

bool is_normalized(const AcmStructure& s, double tol) {
  if (s.n < 1 || s.dim != 2 * s.n + 1) return false;
  if (s.g.rows() != s.dim || s.xi.size() != s.dim || s.eta.size() != s.dim)
    return false;
  const Eigen::VectorXd last = Eigen::VectorXd::Unit(s.dim, s.dim - 1);
  return (s.g - Eigen::MatrixXd::Identity(s.dim, s.dim)).cwiseAbs().maxCoeff() <= tol &&
         (s.xi - last).cwiseAbs().maxCoeff() <= tol &&
         (s.eta - last).cwiseAbs().maxCoeff() <= tol;
}

void require_normalized(const AcmStructure& s) {
  if (!is_normalized(s))
    throw InvalidArgument(
        "operation requires the structure in a g-orthonormal frame with xi "
        "last; use normalized_frame first");
}

}  // namespace acm
