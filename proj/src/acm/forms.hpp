#pragma once

#include <string>
#include <vector>

#include "acm/structure.hpp"
#include "acm/tensor.hpp"

namespace acm {

/// The associated form F_i applied to a tensor, i = 1..12.
///
/// F_1..F_8 follow the contraction formulas over eta, phi, g and the traces;
/// F_9..F_12 act on the horizontal part h(F) so they are total on the whole
/// constraint space and vanish on the vertical summands. F_9 and F_10 carry a
/// 1/(2(n-1)) style normalization and are undefined for n = 1 (DomainError).
///
/// Inputs are accepted unconditionally; the outputs are elements of the
/// constraint space when the input is (enforced by the closure test suites).
Tensor3 associated_form(const AcmStructure& s, int i, const Tensor3& f);

/// hF(x,y,z) = F(hx, hy, hz).
Tensor3 h_form(const AcmStructure& s, const Tensor3& f);

struct IdentityResidual {
  std::string name;
  double residual;
};

/// Norm residuals of every composition identity F_i(F_j(F)) in the table,
/// plus h(F_i(F)) = F_i(hF) = 0 for i = 1..8.
std::vector<IdentityResidual> composition_table(const AcmStructure& s,
                                                const Tensor3& f);
double composition_table_residual(const AcmStructure& s, const Tensor3& f);

/// Component-wise residuals of the 24 trace identities relating f, f*, omega
/// of F_i(F) to the traces of F.
std::vector<IdentityResidual> trace_table(const AcmStructure& s,
                                          const Tensor3& f);
double trace_table_residual(const AcmStructure& s, const Tensor3& f);

}  // namespace acm
