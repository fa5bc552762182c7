#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "acm/errors.hpp"
#include "acm/structure.hpp"
#include "test_helpers.hpp"

using namespace acm;

TEST_CASE("standard structure n=1 has the fixed phi matrix") {
  const AcmStructure s = standard_structure(1);
  Eigen::MatrixXd expected(3, 3);
  expected << 0, -1, 0, 1, 0, 0, 0, 0, 0;
  CHECK((s.phi - expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK(s.dim == 3);
  CHECK(s.xi(2) == 1.0);
}

TEST_CASE("standard structure validates for n = 1, 2, 3") {
  for (int n : {1, 2, 3}) {
    const ValidationReport report = validate_structure(standard_structure(n));
    CHECK(report.ok);
    CHECK(report.max_residual <= 1e-12);
    CHECK(report.violated_axioms.empty());
  }
}

TEST_CASE("phi^2 = -I + xi eta^T as matrices") {
  const AcmStructure s = standard_structure(2);
  const Eigen::MatrixXd lhs = s.phi * s.phi;
  const Eigen::MatrixXd rhs =
      -Eigen::MatrixXd::Identity(s.dim, s.dim) + s.xi * s.eta.transpose();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("bad n is rejected") {
  CHECK_THROWS_AS(standard_structure(0), InvalidArgument);
  CHECK_THROWS_AS(standard_structure(-3), InvalidArgument);
}

TEST_CASE("tampered metric is reported with the axiom name") {
  AcmStructure s = standard_structure(2);
  s.g(s.dim - 1, s.dim - 1) = 2.0;
  const ValidationReport report = validate_structure(s);
  CHECK_FALSE(report.ok);
  CHECK(std::find(report.violated_axioms.begin(), report.violated_axioms.end(),
                  "g(xi,xi)=1") != report.violated_axioms.end());
}

TEST_CASE("negating phi on one invariant plane keeps the structure valid") {
  AcmStructure s = standard_structure(2);
  s.phi(1, 0) = -1.0;  // flip the sign of the first plane
  s.phi(0, 1) = 1.0;
  const ValidationReport report = validate_structure(s);
  CHECK(report.ok);
}

TEST_CASE("dimension mismatch is an error, not a failed validation") {
  AcmStructure s = standard_structure(2);
  s.phi = Eigen::MatrixXd::Zero(3, 3);
  CHECK_THROWS_AS(validate_structure(s), DimensionError);
}

TEST_CASE("h_map projects onto the horizontal space") {
  const AcmStructure s = standard_structure(2);
  const Eigen::VectorXd xi = s.xi;
  const Eigen::VectorXd e1 = Eigen::VectorXd::Unit(s.dim, 0);

  CHECK(h_map(s, xi).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((h_map(s, e1) - e1).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((h_map(s, e1 + xi) - e1).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("h is a self-adjoint projection of rank 2n commuting with phi") {
  for (int n : {1, 2, 3}) {
    const AcmStructure s = standard_structure(n);
    const Eigen::MatrixXd h = h_matrix(s);
    CHECK((h * h - h).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((s.g * h - h.transpose() * s.g).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(std::abs(h.trace() - 2.0 * n) <= 1e-12);
    CHECK((h * s.xi).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((s.phi * h - s.phi).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((h * s.phi - s.phi).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("a skewed basis normalizes to the orthonormal frame") {
  const AcmStructure raw = acm::testing::skewed_structure(2);
  CHECK(validate_structure(raw).ok);
  CHECK_FALSE(is_normalized(raw));

  const AcmStructure s = normalized_frame(raw);
  CHECK(is_normalized(s));
  const ValidationReport report = validate_structure(s);
  CHECK(report.ok);
  CHECK(report.max_residual <= 1e-12);
}

TEST_CASE("operations that need the orthonormal frame reject other bases") {
  const AcmStructure raw = acm::testing::skewed_structure(1);
  CHECK_THROWS_AS(require_normalized(raw), InvalidArgument);
  CHECK_NOTHROW(require_normalized(standard_structure(1)));
}
