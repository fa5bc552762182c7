#include "acm/geometry.hpp"

#include <cmath>

#include "acm/errors.hpp"

namespace acm {

namespace {

void check_point(const ChartField& chart, const Eigen::VectorXd& p) {
  if (p.size() != 2 * chart.n + 1)
    throw DimensionError("chart point must have 2n+1 coordinates");
}

Eigen::MatrixXd metric_derivative(const ChartField& chart,
                                  const Eigen::VectorXd& p, int i,
                                  double step) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(p.size());
  e(i) = step;
  return (chart.metric_at(p + e) - chart.metric_at(p - e)) / (2.0 * step);
}

Eigen::MatrixXd phi_derivative(const ChartField& chart,
                               const Eigen::VectorXd& p, int i, double step) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(p.size());
  e(i) = step;
  return (chart.phi_at(p + e) - chart.phi_at(p - e)) / (2.0 * step);
}

}  // namespace

AcmStructure structure_at(const ChartField& chart, const Eigen::VectorXd& p) {
  check_point(chart, p);
  AcmStructure s;
  s.n = chart.n;
  s.dim = 2 * chart.n + 1;
  s.g = chart.metric_at(p);
  s.phi = chart.phi_at(p);
  s.xi = chart.xi_at(p);
  s.eta = chart.eta_at(p);
  return s;
}

PointFrame orthonormal_frame(const ChartField& chart,
                             const Eigen::VectorXd& p) {
  const AcmStructure s = structure_at(chart, p);
  const int d = s.dim;
  auto dot = [&s](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return a.dot(s.g * b);
  };

  const double xi_norm2 = dot(s.xi, s.xi);
  if (xi_norm2 <= 0.0)
    throw ValidationError("orthonormal_frame: g(xi,xi) <= 0 at the point");
  const Eigen::VectorXd xi_unit = s.xi / std::sqrt(xi_norm2);

  std::vector<Eigen::VectorXd> frame;
  for (int i = 0; i < d && static_cast<int>(frame.size()) < 2 * chart.n; ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(d, i);
    v -= dot(v, xi_unit) * xi_unit;
    for (const auto& u : frame) v -= dot(v, u) * u;
    const double nrm2 = dot(v, v);
    if (nrm2 > 1e-12) frame.push_back(v / std::sqrt(nrm2));
  }
  if (static_cast<int>(frame.size()) != 2 * chart.n)
    throw ValidationError("orthonormal_frame: degenerate coordinate basis");
  frame.push_back(xi_unit);

  PointFrame out;
  out.point = p;
  out.frame.resize(d, d);
  for (int a = 0; a < d; ++a) out.frame.col(a) = frame[a];
  return out;
}

std::vector<Eigen::MatrixXd> christoffel(const ChartField& chart,
                                         const Eigen::VectorXd& p,
                                         double step) {
  check_point(chart, p);
  if (step <= 0.0) throw InvalidArgument("christoffel: step must be positive");
  const int d = 2 * chart.n + 1;

  const Eigen::MatrixXd g = chart.metric_at(p);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
  if (!lu.isInvertible())
    throw ValidationError("christoffel: singular metric at the point");
  const Eigen::MatrixXd ginv = lu.inverse();

  std::vector<Eigen::MatrixXd> dg(d);
  for (int i = 0; i < d; ++i) dg[i] = metric_derivative(chart, p, i, step);

  std::vector<Eigen::MatrixXd> gamma(d, Eigen::MatrixXd::Zero(d, d));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double acc = 0.0;
        for (int l = 0; l < d; ++l)
          acc += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        gamma[k](i, j) = 0.5 * acc;
      }
  return gamma;
}

PointSample fundamental_tensor(const ChartField& chart,
                               const Eigen::VectorXd& p, double step) {
  const AcmStructure coord = structure_at(chart, p);
  const ValidationReport report = validate_structure(coord);
  if (report.max_residual > kTauGeo)
    throw ValidationError("fundamental_tensor: structure validation failed at "
                          "the point (residual " +
                          std::to_string(report.max_residual) + ")");

  const int d = coord.dim;
  const std::vector<Eigen::MatrixXd> gamma = christoffel(chart, p, step);
  const Eigen::MatrixXd phi = coord.phi;

  // (nabla_i phi)^k_j = d_i phi^k_j + Gamma^k_{il} phi^l_j - Gamma^l_{ij} phi^k_l
  std::vector<Eigen::MatrixXd> nabla(d);
  for (int i = 0; i < d; ++i) {
    const Eigen::MatrixXd dphi = phi_derivative(chart, p, i, step);
    Eigen::MatrixXd m(d, d);
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) {
        double acc = dphi(k, j);
        for (int l = 0; l < d; ++l)
          acc += gamma[k](i, l) * phi(l, j) - gamma[l](i, j) * phi(k, l);
        m(k, j) = acc;
      }
    nabla[i] = m;
  }

  // Lower the derivative index: F_coord(i,j,k) = g_{kl} (nabla_i phi)^l_j.
  Tensor3 f_coord(chart.n);
  for (int i = 0; i < d; ++i) {
    const Eigen::MatrixXd lowered = coord.g * nabla[i];
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) f_coord(i, j, k) = lowered(k, j);
  }

  PointSample sample;
  sample.frame = orthonormal_frame(chart, p);
  const Eigen::MatrixXd& e = sample.frame.frame;

  sample.tensor =
      contract_slot(contract_slot(contract_slot(f_coord, e, 0), e, 1), e, 2);

  sample.structure.n = chart.n;
  sample.structure.dim = d;
  sample.structure.phi = e.transpose() * coord.g * phi * e;
  sample.structure.g = Eigen::MatrixXd::Identity(d, d);
  sample.structure.xi = Eigen::VectorXd::Unit(d, d - 1);
  sample.structure.eta = sample.structure.xi;

  const ValidationReport frame_report = validate_structure(sample.structure);
  if (frame_report.max_residual > kTauGeo)
    throw ValidationError(
        "fundamental_tensor: frame structure validation failed at the point");

  sample.membership = membership_residual(sample.structure, sample.tensor);
  return sample;
}

namespace {

ChartField flat_product_chart(int n, const std::string& name) {
  // Flat metric on C^n x R with a constant phi; the last coordinate is the
  // xi direction.
  ChartField chart;
  chart.n = n;
  chart.name = name;
  const int d = 2 * n + 1;
  chart.metric_at = [d](const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Identity(d, d);
  };
  chart.phi_at = [n, d](const Eigen::VectorXd&) {
    Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < n; ++i) {
      phi(2 * i + 1, 2 * i) = 1.0;
      phi(2 * i, 2 * i + 1) = -1.0;
    }
    return phi;
  };
  chart.xi_at = [d](const Eigen::VectorXd&) {
    return Eigen::VectorXd::Unit(d, d - 1);
  };
  chart.eta_at = [d](const Eigen::VectorXd&) {
    return Eigen::VectorXd::Unit(d, d - 1);
  };
  return chart;
}

ChartField sasakian_r3_chart() {
  // Coordinates (x, y, z); eta = (dz - y dx)/2, xi = 2 d/dz,
  // g = eta (x) eta + (dx^2 + dy^2)/4, phi(dx) = -dy, phi(dy) = dx + y dz.
  ChartField chart;
  chart.n = 1;
  chart.name = "sasakian-r3";
  chart.eta_at = [](const Eigen::VectorXd& p) {
    Eigen::VectorXd eta(3);
    eta << -p(1) / 2.0, 0.0, 0.5;
    return eta;
  };
  chart.xi_at = [](const Eigen::VectorXd&) {
    Eigen::VectorXd xi(3);
    xi << 0.0, 0.0, 2.0;
    return xi;
  };
  chart.metric_at = [](const Eigen::VectorXd& p) {
    Eigen::VectorXd eta(3);
    eta << -p(1) / 2.0, 0.0, 0.5;
    Eigen::MatrixXd g = eta * eta.transpose();
    g(0, 0) += 0.25;
    g(1, 1) += 0.25;
    return g;
  };
  chart.phi_at = [](const Eigen::VectorXd& p) {
    Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(3, 3);
    phi(1, 0) = -1.0;             // phi d/dx = -d/dy
    phi(0, 1) = 1.0;              // phi d/dy = d/dx + y d/dz
    phi(2, 1) = p(1);
    return phi;
  };
  return chart;
}

ChartField kenmotsu_r3_chart() {
  // Coordinates (t, x, y); g = dt^2 + e^{2t}(dx^2 + dy^2), xi = d/dt,
  // phi(dx) = dy, phi(dy) = -dx.
  ChartField chart;
  chart.n = 1;
  chart.name = "kenmotsu-r3";
  chart.metric_at = [](const Eigen::VectorXd& p) {
    const double w = std::exp(2.0 * p(0));
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(3, 3);
    g(0, 0) = 1.0;
    g(1, 1) = w;
    g(2, 2) = w;
    return g;
  };
  chart.phi_at = [](const Eigen::VectorXd&) {
    Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(3, 3);
    phi(2, 1) = 1.0;
    phi(1, 2) = -1.0;
    return phi;
  };
  chart.xi_at = [](const Eigen::VectorXd&) {
    return Eigen::VectorXd(Eigen::Vector3d(1.0, 0.0, 0.0));
  };
  chart.eta_at = [](const Eigen::VectorXd&) {
    return Eigen::VectorXd(Eigen::Vector3d(1.0, 0.0, 0.0));
  };
  return chart;
}

}  // namespace

const std::vector<ChartField>& builtin_charts() {
  static const std::vector<ChartField> charts = {
      flat_product_chart(1, "cosymplectic-n1"),
      flat_product_chart(2, "cosymplectic-n2"),
      sasakian_r3_chart(),
      kenmotsu_r3_chart(),
  };
  return charts;
}

const ChartField* find_chart(std::string_view name) {
  for (const ChartField& chart : builtin_charts())
    if (chart.name == name) return &chart;
  return nullptr;
}

}  // namespace acm
