#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acm/constants.hpp"
#include "acm/decomposition.hpp"
#include "acm/structure.hpp"
#include "acm/tensor.hpp"

namespace acm {

enum class VerdictKind { cosymplectic, single, sum, unclassified_n1_gap };

const char* verdict_kind_name(VerdictKind kind);

struct ClassLabel {
  VerdictKind kind = VerdictKind::cosymplectic;
  std::vector<int> classes;  // ascending, 1..12
  double tol = 0.0;
  // per-class defining-condition residuals plus context values
  std::map<std::string, double> diagnostics;
};

/// Max violation over all basis triples of the defining condition(s) of class
/// W_i, including the side conditions (f(xi) = 0 for W_4, f*(xi) = 0 for W_5,
/// f = 0 for W_10, and the vertical-slot prefixes for W_9..W_12).
double defining_residual(const AcmStructure& s, int i, const Tensor3& f);

/// All twelve defining residuals (nullopt where the class is absent).
std::array<std::optional<double>, 12> all_defining_residuals(
    const AcmStructure& s, const Tensor3& f);

/// Verdict from a component spectrum and the defining-condition residuals.
///
/// cosymplectic when every defined component norm stays within tol (relative
/// to max(1, ||F||)); single W_i when exactly one norm exceeds it AND the
/// defining condition of W_i agrees (otherwise the verdict is downgraded to a
/// sum with a diagnostic); sum of the exceeding set otherwise. For n = 1 the
/// absent components are excluded, and a tensor whose defined components all
/// vanish while the tensor itself does not reports the degenerate-dimension
/// gap instead of a class.
ClassLabel classify(const ComponentSpectrum& spec,
                    const std::array<std::optional<double>, 12>& residuals,
                    double tol, double membership_tol = kTauAlg);

}  // namespace acm
