#pragma once

#include <cstdint>

namespace acm {

// Absolute residual tolerance for pure-algebra identities.
inline constexpr double kTauAlg = 1e-9;

// Tolerance for the finite-difference geometry pipeline.
inline constexpr double kTauGeo = 1e-5;

// Relative singular-value cutoff for rank decisions.
inline constexpr double kRankCutoff = 1e-8;

// Default central-difference step for chart derivatives.
inline constexpr double kDefaultStep = 1e-5;

// Default relative classification tolerances by input provenance.
inline constexpr double kAlgebraicClassifyTol = 1e-6;
inline constexpr double kGeometryClassifyTol = 1e-3;

inline constexpr std::uint64_t kDefaultSeed = 42;

}  // namespace acm
