#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acm/constants.hpp"
#include "acm/errors.hpp"
#include "acm/forms.hpp"
#include "acm/structure.hpp"
#include "acm/tensor.hpp"
#include "test_helpers.hpp"

using namespace acm;

TEST_CASE("F3 fixes pure vertical shapes") {
  const AcmStructure s = standard_structure(2);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(s.dim);
  w(1) = 2.0;
  w(3) = -0.5;
  const Tensor3 f = acm::testing::f3_shape(s, w);
  CHECK(tensor_norm(associated_form(s, 3, f) - f) <= kTauAlg);
}

TEST_CASE("F1 annihilates tensors with no xi in the first slot") {
  const AcmStructure s = standard_structure(2);
  const Tensor3 g = random_element(s, 31);
  const Tensor3 horizontal = h_form(s, g);  // first slot is horizontal
  CHECK(tensor_norm(associated_form(s, 1, horizontal)) <= kTauAlg);
}

TEST_CASE("F4 composed with itself gives F2 - F3") {
  const AcmStructure s = standard_structure(2);
  const Tensor3 f = random_element(s, 17);
  const Tensor3 f44 = associated_form(s, 4, associated_form(s, 4, f));
  const Tensor3 expected = associated_form(s, 2, f) - associated_form(s, 3, f);
  CHECK(tensor_norm(f44 - expected) <= kTauAlg);
}

TEST_CASE("h_form is idempotent and fixes horizontal tensors") {
  const AcmStructure s = standard_structure(2);
  const Tensor3 f = random_element(s, 19);
  const Tensor3 hf = h_form(s, f);
  CHECK(tensor_norm(h_form(s, hf) - hf) <= kTauAlg);
}

TEST_CASE("h_form kills pure vertical shapes") {
  const AcmStructure s = standard_structure(2);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(s.dim);
  w(0) = 1.0;
  CHECK(tensor_norm(h_form(s, acm::testing::f3_shape(s, w))) <= kTauAlg);
}

TEST_CASE("reconstruction from the basic forms") {
  for (int n : {1, 2, 3}) {
    const AcmStructure s = standard_structure(n);
    const SpaceProjector p(s);
    for (std::uint64_t seed = 40; seed < 50; ++seed) {
      const Tensor3 f = random_element(p, seed);
      const Tensor3 rebuilt = h_form(s, f) + associated_form(s, 1, f) +
                              associated_form(s, 2, f) -
                              associated_form(s, 3, f);
      CHECK(tensor_norm(f - rebuilt) <= kTauAlg * std::max(1.0, tensor_norm(f)));
    }
  }
}

TEST_CASE("composition table holds on random members") {
  for (int n : {1, 2}) {
    const AcmStructure s = standard_structure(n);
    const Tensor3 f = random_element(s, 7);
    CHECK(composition_table_residual(s, f) <= 1e-9);
  }
}

TEST_CASE("composition table residual of the zero tensor is zero") {
  const AcmStructure s = standard_structure(2);
  CHECK(composition_table_residual(s, Tensor3(2)) == 0.0);
}

TEST_CASE("composition table returns (not throws) off the constraint space") {
  const AcmStructure s = standard_structure(2);
  const Tensor3 raw = random_raw_tensor(2, 99);
  const double residual = composition_table_residual(s, raw);
  CHECK(residual > kTauAlg);  // relations are not claimed for non-members
}

TEST_CASE("trace table holds on random members") {
  for (int n : {1, 2}) {
    const AcmStructure s = standard_structure(n);
    const Tensor3 f = random_element(s, 3);
    CHECK(trace_table_residual(s, f) <= 1e-9);
  }
}

TEST_CASE("trace table residual of the zero tensor is zero") {
  const AcmStructure s = standard_structure(2);
  CHECK(trace_table_residual(s, Tensor3(2)) == 0.0);
}

TEST_CASE("traces of F3 on a pure vertical shape") {
  const AcmStructure s = standard_structure(2);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(s.dim);
  w(2) = 1.25;
  const Tensor3 f = acm::testing::f3_shape(s, w);
  const Tensor3 f3 = associated_form(s, 3, f);
  const TraceTriple before = traces(s, f);
  const TraceTriple after = traces(s, f3);
  CHECK((after.f - before.omega).cwiseAbs().maxCoeff() <= kTauAlg);
  CHECK(after.f_star.cwiseAbs().maxCoeff() <= kTauAlg);
}

TEST_CASE("every form is linear") {
  const AcmStructure s = standard_structure(2);
  const SpaceProjector p(s);
  const Tensor3 f = random_element(p, 61);
  const Tensor3 g = random_element(p, 62);
  const double a = 1.7, b = -0.4;
  for (int i = 1; i <= 12; ++i) {
    const Tensor3 lhs = associated_form(s, i, a * f + b * g);
    const Tensor3 rhs =
        a * associated_form(s, i, f) + b * associated_form(s, i, g);
    CHECK(tensor_norm(lhs - rhs) <= kTauAlg);
  }
  const Tensor3 lhs = h_form(s, a * f + b * g);
  const Tensor3 rhs = a * h_form(s, f) + b * h_form(s, g);
  CHECK(tensor_norm(lhs - rhs) <= kTauAlg);
}

TEST_CASE("horizontal restriction identities") {
  const AcmStructure s = standard_structure(2);
  const Tensor3 f = random_element(s, 23);
  const Tensor3 hf = h_form(s, f);
  const Tensor3 pulled = contract_slot(contract_slot(hf, s.phi, 1), s.phi, 2);
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j)
      for (int k = 0; k < s.dim; ++k) {
        CHECK(std::abs(hf(i, j, k) + hf(i, k, j)) <= kTauAlg);
        CHECK(std::abs(hf(i, j, k) + pulled(i, j, k)) <= kTauAlg);
      }
}

TEST_CASE("forms 9 and 10 are undefined for n = 1") {
  const AcmStructure s = standard_structure(1);
  const Tensor3 f = random_element(s, 5);
  CHECK_THROWS_AS(associated_form(s, 9, f), DomainError);
  CHECK_THROWS_AS(associated_form(s, 10, f), DomainError);
  CHECK_NOTHROW(associated_form(s, 11, f));
  CHECK_NOTHROW(associated_form(s, 12, f));
}

TEST_CASE("form index out of range") {
  const AcmStructure s = standard_structure(1);
  CHECK_THROWS_AS(associated_form(s, 0, Tensor3(1)), InvalidArgument);
  CHECK_THROWS_AS(associated_form(s, 13, Tensor3(1)), InvalidArgument);
}

TEST_CASE("mismatched tensor size is rejected") {
  const AcmStructure s = standard_structure(2);
  CHECK_THROWS_AS(associated_form(s, 1, Tensor3(1)), DimensionError);
}
