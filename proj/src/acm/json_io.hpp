#pragma once

#include <string>

#include <json.hpp>

#include "acm/classifier.hpp"
#include "acm/decomposition.hpp"
#include "acm/selftest.hpp"
#include "acm/structure.hpp"
#include "acm/tensor.hpp"

namespace acm {

// Wire formats:
//   structure: {"n": int, "phi": [[...]], "xi": [...], "eta": [...], "g": [[...]]}
//              omitted tensor fields default to the standard structure of n
//   tensor:    {"n": int, "values": [2n+1]^3 nested array}
//   spectrum:  {"n": int, "norms": [12 numbers or null], "residual": x,
//               "membership": x}
//   verdict:   {"kind": str, "classes": [ints], "tol": x, "diagnostics": {...}}

/// Parses a structure as given (no validation, no frame change).
AcmStructure structure_from_json_text(const std::string& text);

/// Parses, validates and re-expresses in the orthonormal frame with xi last.
AcmStructure load_structure_from_json_text(const std::string& text);

Tensor3 tensor_from_json_text(const std::string& text);
nlohmann::ordered_json tensor_json(const Tensor3& t);

nlohmann::ordered_json validation_report_json(const ValidationReport& report);
nlohmann::ordered_json spectrum_json(const ComponentSpectrum& spec);
nlohmann::ordered_json verdict_json(const ClassLabel& label);
nlohmann::ordered_json selftest_report_json(const SelftestReport& report);

}  // namespace acm
