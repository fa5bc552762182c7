#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acm/classifier.hpp"
#include "acm/constants.hpp"
#include "acm/decomposition.hpp"
#include "acm/errors.hpp"
#include "acm/structure.hpp"
#include "acm/tensor.hpp"
#include "test_helpers.hpp"

using namespace acm;

TEST_CASE("defining residuals of canonical shapes") {
  const AcmStructure s = standard_structure(2);
  const Tensor3 metric_shape = acm::testing::metric_vertical_shape(s);
  CHECK(defining_residual(s, 2, metric_shape) <= kTauAlg);

  Eigen::VectorXd w = Eigen::VectorXd::Zero(s.dim);
  w(0) = 1.0;
  const Tensor3 vertical = acm::testing::f3_shape(s, w);
  CHECK(defining_residual(s, 1, vertical) <= kTauAlg);
  // wrong class: reported, not thresholded
  CHECK(defining_residual(s, 2, vertical) > 0.1);
}

TEST_CASE("the zero tensor satisfies every defining condition") {
  for (int n : {1, 2}) {
    const AcmStructure s = standard_structure(n);
    const Tensor3 zero(n);
    for (int i = 1; i <= 12; ++i) {
      if (!component_defined(n, i)) continue;
      CHECK(defining_residual(s, i, zero) == 0.0);
    }
  }
}

TEST_CASE("classify: zero spectrum is cosymplectic") {
  const AcmStructure s = standard_structure(2);
  const Tensor3 zero(2);
  const ClassLabel label = classify(spectrum(s, zero),
                                    all_defining_residuals(s, zero),
                                    kAlgebraicClassifyTol);
  CHECK(label.kind == VerdictKind::cosymplectic);
  CHECK(label.classes.empty());
}

TEST_CASE("classify: single class with agreeing defining condition") {
  const AcmStructure s = standard_structure(2);
  const Tensor3 f = acm::testing::metric_vertical_shape(s);
  const ClassLabel label = classify(spectrum(s, f),
                                    all_defining_residuals(s, f),
                                    kAlgebraicClassifyTol);
  CHECK(label.kind == VerdictKind::single);
  REQUIRE(label.classes.size() == 1);
  CHECK(label.classes.front() == 2);
  CHECK(label.diagnostics.at("W2") <= kTauAlg);
}

TEST_CASE("classify: two components produce a sum, never two singles") {
  const AcmStructure s = standard_structure(2);
  const Tensor3 f = acm::testing::metric_vertical_shape(s) +
                    acm::testing::twisted_vertical_shape(s);
  const ClassLabel label = classify(spectrum(s, f),
                                    all_defining_residuals(s, f),
                                    kAlgebraicClassifyTol);
  CHECK(label.kind == VerdictKind::sum);
  CHECK(label.classes == std::vector<int>{2, 3});
}

TEST_CASE("classify: disagreement between norm and condition downgrades") {
  ComponentSpectrum spec;
  spec.n = 2;
  for (auto& v : spec.norms) v = 0.0;
  spec.norms[4] = 1.0;  // claims component 5
  spec.residual = 0.0;
  spec.membership = 0.0;
  std::array<std::optional<double>, 12> residuals;
  for (auto& r : residuals) r = 1.0;  // no defining condition agrees
  const ClassLabel label = classify(spec, residuals, 1e-6);
  CHECK(label.kind == VerdictKind::sum);
  CHECK(label.classes == std::vector<int>{5});
  CHECK(label.diagnostics.count("downgraded_from_single") == 1);
}

TEST_CASE("classify: the n=1 gap verdict") {
  ComponentSpectrum spec;
  spec.n = 1;
  for (int i = 1; i <= 12; ++i)
    if (component_defined(1, i)) spec.norms[i - 1] = 0.0;
  spec.residual = 1.0;  // defined components vanish but the tensor does not
  spec.membership = 0.0;
  std::array<std::optional<double>, 12> residuals;
  for (int i = 1; i <= 12; ++i)
    if (component_defined(1, i)) residuals[i - 1] = 0.0;
  const ClassLabel label = classify(spec, residuals, 1e-6);
  CHECK(label.kind == VerdictKind::unclassified_n1_gap);
}

TEST_CASE("classify: membership gate") {
  ComponentSpectrum spec;
  spec.n = 2;
  for (auto& v : spec.norms) v = 0.0;
  spec.membership = 1.0;
  std::array<std::optional<double>, 12> residuals;
  for (auto& r : residuals) r = 0.0;
  CHECK_THROWS_AS(classify(spec, residuals, 1e-6), NotInSpaceError);
  CHECK_NOTHROW(classify(spec, residuals, 1e-6, /*membership_tol=*/2.0));
}

TEST_CASE("classify: spectrum/residual mismatch is an error") {
  ComponentSpectrum spec;
  spec.n = 1;
  for (int i = 1; i <= 12; ++i)
    if (component_defined(1, i)) spec.norms[i - 1] = 0.0;
  std::array<std::optional<double>, 12> residuals;
  for (auto& r : residuals) r = 0.0;  // includes the absent slots
  CHECK_THROWS_AS(classify(spec, residuals, 1e-6), DimensionError);
}

TEST_CASE("enlarging tol never grows the class set") {
  const AcmStructure s = standard_structure(2);
  const Tensor3 f = random_element(s, 15);
  const ComponentSpectrum spec = spectrum(s, f);
  const auto residuals = all_defining_residuals(s, f);
  std::vector<int> previous;
  bool first = true;
  for (double tol : {1e-9, 1e-6, 1e-3, 1e-1, 0.5}) {
    const ClassLabel label = classify(spec, residuals, tol);
    if (!first) {
      for (int c : label.classes)
        CHECK(std::find(previous.begin(), previous.end(), c) != previous.end());
    }
    previous = label.classes;
    first = false;
  }
}

TEST_CASE("projection components classify as their own single class") {
  for (int n : {1, 2}) {
    const AcmStructure s = standard_structure(n);
    const SpaceProjector proj(s);
    for (std::uint64_t seed : {61u, 62u}) {
      const Tensor3 f = random_element(proj, seed);
      for (int i = 1; i <= 12; ++i) {
        if (!component_defined(n, i)) continue;
        const Tensor3 p = project_component(s, i, f);
        const ClassLabel label = classify(spectrum(s, p),
                                          all_defining_residuals(s, p),
                                          kAlgebraicClassifyTol);
        if (tensor_norm(p) <= kTauAlg * std::max(1.0, tensor_norm(f))) {
          CHECK(label.kind == VerdictKind::cosymplectic);
        } else {
          CHECK(label.kind == VerdictKind::single);
          REQUIRE(label.classes.size() == 1);
          CHECK(label.classes.front() == i);
        }
      }
    }
  }
}

TEST_CASE("two defining conditions force a vanishing tensor") {
  const AcmStructure s = standard_structure(2);
  const SpaceProjector proj(s);
  for (std::uint64_t seed : {71u, 72u, 73u}) {
    const Tensor3 f = random_element(proj, seed);
    for (int i = 1; i <= 12; ++i) {
      const Tensor3 p = project_component(s, i, f);
      const double scale = std::max(1.0, tensor_norm(p));
      const auto residuals = all_defining_residuals(s, p);
      int satisfied = 0;
      for (const auto& r : residuals)
        if (r && *r <= kTauAlg * scale) ++satisfied;
      if (satisfied >= 2) CHECK(tensor_norm(p) <= kTauAlg);
    }
  }
}
