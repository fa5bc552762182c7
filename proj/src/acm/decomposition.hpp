#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "acm/constants.hpp"
#include "acm/structure.hpp"
#include "acm/tensor.hpp"

namespace acm {

// Component index i (1..12) names the i-th orthogonal invariant summand of
// the constraint space; the same index labels the manifold class W_i. The
// projector formulas are assembled from the associated forms:
//
//   i  projector                            defining condition
//   1  F3                                   F = F3(F)
//   2  F7                                   F = F7(F)
//   3  F8                                   F = F8(F)
//   4  (F2+F4+F5+F6-4F7-F3)/4               F = F4(F) = F5(F),  f(xi) = 0
//   5  (F2+F4-F5-F6-4F8-F3)/4               F = F4(F) = -F5(F), f*(xi) = 0
//   6  (F2-F4+F5-F6-F3)/4                   F = -F4(F) = F5(F)
//   7  (F2-F4-F5+F6-F3)/4                   F = -F4(F) = -F5(F)
//   8  F1-F3                                hF = 0, F(x,y,xi) = 0
//   9  F9 . h                               F = hF = F9(F)
//  10  (F10-F9) . h                         F = hF, phi-invariant, f = 0
//  11  F11 . h                              F = hF, F(x,x,z) = 0
//  12  (F12-F11) . h                        F = hF, cyclic sum = 0
//
// Components 9 and 10 are absent for n = 1.

/// Norms of the twelve components plus the decomposition residual.
struct ComponentSpectrum {
  int n = 0;
  std::array<std::optional<double>, 12> norms;  // nullopt = component absent
  double residual = 0.0;    // || F - sum_i p_i(F) ||
  double membership = 0.0;  // constraint-space residual of the input
};

/// Orthonormal sampled basis of one component subspace.
struct SubspaceBasis {
  int component = 0;
  std::vector<Tensor3> vectors;
};

bool component_defined(int n, int i);

/// The involutive isometries L_1..L_7. Each operator is only meaningful on
/// its stated domain; membership is checked by residual against the domain's
/// defining conditions and violations raise DomainError naming the failed
/// condition.
Tensor3 involution(const AcmStructure& s, int k, const Tensor3& f);

/// i-th component projector p_i, i = 1..12.
Tensor3 project_component(const AcmStructure& s, int i, const Tensor3& f);

/// Component norms, decomposition residual and membership residual.
/// Raises NotInSpaceError when the input's membership residual exceeds
/// membership_tol.
ComponentSpectrum spectrum(const AcmStructure& s, const Tensor3& f,
                           double membership_tol = kTauAlg);

/// Independent reconstruction of component i: orthonormalized span of
/// projections of seeded random elements. The rank must stabilize within the
/// seed budget (the rank using all seeds equals the rank without the last
/// five), otherwise RankUnstableError asks for more seeds.
SubspaceBasis subspace_basis_oracle(const SpaceProjector& p, int i,
                                    std::span<const std::uint64_t> seeds);
SubspaceBasis subspace_basis_oracle(const AcmStructure& s, int i,
                                    std::span<const std::uint64_t> seeds);

/// Gram-matrix projection onto the sampled basis.
Tensor3 gram_project(const SubspaceBasis& basis, const Tensor3& t);

}  // namespace acm
