#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "acm/classifier.hpp"
#include "acm/constants.hpp"
#include "acm/decomposition.hpp"
#include "acm/errors.hpp"
#include "acm/geometry.hpp"
#include "acm/structure.hpp"
#include "acm/tensor.hpp"

using namespace acm;

namespace {

Eigen::VectorXd origin(int dim) { return Eigen::VectorXd::Zero(dim); }

std::vector<double> spectrum_values(const ComponentSpectrum& spec) {
  std::vector<double> out;
  for (const auto& v : spec.norms) out.push_back(v ? *v : 0.0);
  return out;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

}  // namespace

TEST_CASE("there are at least four built-in charts and all validate") {
  const auto& charts = builtin_charts();
  CHECK(charts.size() >= 4);
  for (const ChartField& chart : charts) {
    const AcmStructure s = structure_at(chart, origin(2 * chart.n + 1));
    CHECK(validate_structure(s).max_residual <= kTauGeo);
  }
  CHECK(find_chart("cosymplectic-n1") != nullptr);
  CHECK(find_chart("cosymplectic-n2") != nullptr);
  CHECK(find_chart("sasakian-r3") != nullptr);
  CHECK(find_chart("kenmotsu-r3") != nullptr);
  CHECK(find_chart("no-such-chart") == nullptr);
}

TEST_CASE("charts validate on a coordinate grid") {
  for (const ChartField& chart : builtin_charts()) {
    const int d = 2 * chart.n + 1;
    for (double a : {-0.2, 0.0, 0.2})
      for (double b : {-0.2, 0.0, 0.2})
        for (double c : {-0.2, 0.0, 0.2}) {
          Eigen::VectorXd p = origin(d);
          p(0) = a;
          p(1) = b;
          p(d - 1) = c;
          const ValidationReport report =
              validate_structure(structure_at(chart, p));
          CHECK(report.max_residual <= kTauGeo);
        }
  }
}

TEST_CASE("christoffel symbols vanish on a flat chart") {
  const ChartField* chart = find_chart("cosymplectic-n1");
  REQUIRE(chart != nullptr);
  const auto gamma = christoffel(*chart, origin(3), 1e-5);
  for (const auto& m : gamma) CHECK(m.cwiseAbs().maxCoeff() <= kTauGeo);
}

TEST_CASE("christoffel symbols of the warped product at the origin") {
  const ChartField* chart = find_chart("kenmotsu-r3");
  REQUIRE(chart != nullptr);
  // coordinates (t, x, y): the hand-derived values at the origin are
  // Gamma^x_{tx} = 1 and Gamma^t_{xx} = -1; two step widths agree.
  for (double step : {1e-4, 1e-5}) {
    const auto gamma = christoffel(*chart, origin(3), step);
    CHECK(gamma[1](0, 1) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(gamma[0](1, 1) == doctest::Approx(-1.0).epsilon(1e-6));
  }
}

TEST_CASE("christoffel symbols are symmetric in the lower indices") {
  const ChartField* chart = find_chart("sasakian-r3");
  REQUIRE(chart != nullptr);
  Eigen::VectorXd p(3);
  p << 0.1, -0.2, 0.3;
  const auto gamma = christoffel(*chart, p, 1e-5);
  for (int k = 0; k < 3; ++k)
    CHECK((gamma[k] - gamma[k].transpose()).cwiseAbs().maxCoeff() <= kTauGeo);
}

TEST_CASE("the point frame is g-orthonormal with xi last") {
  const ChartField* chart = find_chart("sasakian-r3");
  REQUIRE(chart != nullptr);
  Eigen::VectorXd p(3);
  p << 0.4, -0.1, 0.2;
  const PointFrame frame = orthonormal_frame(*chart, p);
  const AcmStructure s = structure_at(*chart, p);
  const Eigen::MatrixXd gram = frame.frame.transpose() * s.g * frame.frame;
  CHECK((gram - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((frame.frame.col(2) - s.xi).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("flat product charts extract a vanishing tensor") {
  for (const char* name : {"cosymplectic-n1", "cosymplectic-n2"}) {
    const ChartField* chart = find_chart(name);
    REQUIRE(chart != nullptr);
    const int d = 2 * chart->n + 1;
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> uniform(-0.5, 0.5);
    for (int trial = 0; trial < 5; ++trial) {
      Eigen::VectorXd p = origin(d);
      if (trial > 0)
        for (int c = 0; c < d; ++c) p(c) = uniform(gen);
      const PointSample sample = fundamental_tensor(*chart, p);
      CHECK(sample.tensor.max_abs() <= kTauGeo);
      CHECK(sample.membership <= kTauGeo);
    }
  }
}

TEST_CASE("the warped product at the origin is a pure component 3 with f*(xi) = 2") {
  const ChartField* chart = find_chart("kenmotsu-r3");
  REQUIRE(chart != nullptr);
  const PointSample sample = fundamental_tensor(*chart, origin(3));
  CHECK(sample.membership <= kTauGeo);

  const TraceTriple t = traces(sample.structure, sample.tensor);
  CHECK(t.f_star.dot(sample.structure.xi) ==
        doctest::Approx(2.0).epsilon(1e-3));

  const ComponentSpectrum spec =
      spectrum(sample.structure, sample.tensor, kTauGeo);
  CHECK(*spec.norms[2] > 1.0);
  for (int i = 1; i <= 12; ++i) {
    if (i == 3 || !component_defined(1, i)) continue;
    CHECK(*spec.norms[i - 1] <= kTauGeo);
  }
}

TEST_CASE("the standard contact structure at the origin is a pure component 2") {
  const ChartField* chart = find_chart("sasakian-r3");
  REQUIRE(chart != nullptr);
  const PointSample sample = fundamental_tensor(*chart, origin(3));
  CHECK(sample.membership <= kTauGeo);

  const ComponentSpectrum spec =
      spectrum(sample.structure, sample.tensor, kTauGeo);
  const ClassLabel label = classify(
      spec, all_defining_residuals(sample.structure, sample.tensor),
      kGeometryClassifyTol, kTauGeo);
  CHECK(label.kind == VerdictKind::single);
  REQUIRE(label.classes.size() == 1);
  CHECK(label.classes.front() == 2);

  const TraceTriple t = traces(sample.structure, sample.tensor);
  CHECK(std::abs(t.f.dot(sample.structure.xi)) ==
        doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("step halving is consistent with second-order differences") {
  for (const char* name : {"kenmotsu-r3", "sasakian-r3"}) {
    const ChartField* chart = find_chart(name);
    REQUIRE(chart != nullptr);
    Eigen::VectorXd p(3);
    p << 0.05, -0.1, 0.15;
    const double h = 1e-2;
    std::vector<std::vector<double>> specs;
    for (double step : {h, h / 2, h / 4}) {
      const PointSample sample = fundamental_tensor(*chart, p, step);
      specs.push_back(spectrum_values(
          spectrum(sample.structure, sample.tensor, 1e-2)));
    }
    const double delta1 = max_abs_diff(specs[0], specs[1]);
    const double delta2 = max_abs_diff(specs[1], specs[2]);
    // second-order error estimate from the first halving
    const double estimate = delta1 / 3.0;
    CHECK(delta2 <= 4.0 * estimate + 1e-12);
  }
}

TEST_CASE("spectra agree across different orthonormal frames") {
  const ChartField* chart = find_chart("kenmotsu-r3");
  REQUIRE(chart != nullptr);
  Eigen::VectorXd p(3);
  p << 0.1, 0.2, -0.05;
  const PointSample sample = fundamental_tensor(*chart, p);
  const ComponentSpectrum spec =
      spectrum(sample.structure, sample.tensor, kTauGeo);

  // a xi-fixing orthogonal frame change that does not commute with phi
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(3, 3);
  r(1, 1) = -1.0;
  AcmStructure other = sample.structure;
  other.phi = r.transpose() * sample.structure.phi * r;
  CHECK(validate_structure(other).ok);
  const Tensor3 rotated = contract_slot(
      contract_slot(contract_slot(sample.tensor, r, 0), r, 1), r, 2);
  const ComponentSpectrum other_spec = spectrum(other, rotated, kTauGeo);
  CHECK(max_abs_diff(spectrum_values(spec), spectrum_values(other_spec)) <=
        kTauGeo);
}

TEST_CASE("wrong point dimension and degenerate steps are rejected") {
  const ChartField* chart = find_chart("kenmotsu-r3");
  REQUIRE(chart != nullptr);
  CHECK_THROWS_AS(fundamental_tensor(*chart, origin(5)), DimensionError);
  CHECK_THROWS_AS(christoffel(*chart, origin(3), 0.0), InvalidArgument);
}

TEST_CASE("a broken chart fails structure validation at the point") {
  ChartField chart = *find_chart("cosymplectic-n1");
  chart.metric_at = [](const Eigen::VectorXd&) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(3, 3);
    g(2, 2) = 4.0;  // g(xi,xi) != 1
    return g;
  };
  CHECK_THROWS_AS(fundamental_tensor(chart, origin(3)), ValidationError);
}
