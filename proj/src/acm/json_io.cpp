#include "acm/json_io.hpp"

#include "acm/errors.hpp"

namespace acm {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

Eigen::MatrixXd matrix_from_json(const json& j, int dim, const char* field) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw DimensionError(std::string(field) + " must be a dim x dim matrix");
  Eigen::MatrixXd m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw DimensionError(std::string(field) + " must be a dim x dim matrix");
    for (int c = 0; c < dim; ++c) {
      if (!row.at(c).is_number())
        throw ParseError(std::string(field) + " entries must be numbers");
      m(r, c) = row.at(c).get<double>();
    }
  }
  return m;
}

Eigen::VectorXd vector_from_json(const json& j, int dim, const char* field) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw DimensionError(std::string(field) + " must have length dim");
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) {
    if (!j.at(i).is_number())
      throw ParseError(std::string(field) + " entries must be numbers");
    v(i) = j.at(i).get<double>();
  }
  return v;
}

}  // namespace

AcmStructure structure_from_json_text(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) throw ParseError("structure JSON must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw ParseError("structure JSON requires an integer field \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 1) throw InvalidArgument("structure requires n >= 1");

  AcmStructure s = standard_structure(n);
  if (j.contains("phi")) s.phi = matrix_from_json(j.at("phi"), s.dim, "phi");
  if (j.contains("g")) s.g = matrix_from_json(j.at("g"), s.dim, "g");
  if (j.contains("xi")) s.xi = vector_from_json(j.at("xi"), s.dim, "xi");
  if (j.contains("eta")) s.eta = vector_from_json(j.at("eta"), s.dim, "eta");
  return s;
}

AcmStructure load_structure_from_json_text(const std::string& text) {
  const AcmStructure raw = structure_from_json_text(text);
  const ValidationReport report = validate_structure(raw);
  if (!report.ok) {
    std::string axioms;
    for (const auto& a : report.violated_axioms) {
      if (!axioms.empty()) axioms += ", ";
      axioms += a;
    }
    throw ValidationError("structure axioms violated: " + axioms);
  }
  return normalized_frame(raw);
}

Tensor3 tensor_from_json_text(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) throw ParseError("tensor JSON must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw ParseError("tensor JSON requires an integer field \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 1) throw InvalidArgument("tensor requires n >= 1");
  if (!j.contains("values")) throw ParseError("tensor JSON requires \"values\"");

  const int d = 2 * n + 1;
  const json& values = j.at("values");
  if (!values.is_array() || static_cast<int>(values.size()) != d)
    throw DimensionError("tensor values must be a [2n+1]^3 nested array");
  Tensor3 t(n);
  for (int i = 0; i < d; ++i) {
    const json& plane = values.at(i);
    if (!plane.is_array() || static_cast<int>(plane.size()) != d)
      throw DimensionError("tensor values must be a [2n+1]^3 nested array");
    for (int jj = 0; jj < d; ++jj) {
      const json& row = plane.at(jj);
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        throw DimensionError("tensor values must be a [2n+1]^3 nested array");
      for (int k = 0; k < d; ++k) {
        if (!row.at(k).is_number())
          throw ParseError("tensor entries must be numbers");
        t(i, jj, k) = row.at(k).get<double>();
      }
    }
  }
  return t;
}

ordered_json tensor_json(const Tensor3& t) {
  const int d = t.dim();
  ordered_json values = ordered_json::array();
  for (int i = 0; i < d; ++i) {
    ordered_json plane = ordered_json::array();
    for (int j = 0; j < d; ++j) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < d; ++k) row.push_back(t(i, j, k));
      plane.push_back(std::move(row));
    }
    values.push_back(std::move(plane));
  }
  ordered_json out;
  out["n"] = t.n();
  out["values"] = std::move(values);
  return out;
}

ordered_json validation_report_json(const ValidationReport& report) {
  ordered_json out;
  out["ok"] = report.ok;
  out["max_residual"] = report.max_residual;
  out["violated_axioms"] = report.violated_axioms;
  return out;
}

ordered_json spectrum_json(const ComponentSpectrum& spec) {
  ordered_json norms = ordered_json::array();
  for (const auto& v : spec.norms) {
    if (v)
      norms.push_back(*v);
    else
      norms.push_back(nullptr);
  }
  ordered_json out;
  out["n"] = spec.n;
  out["norms"] = std::move(norms);
  out["residual"] = spec.residual;
  out["membership"] = spec.membership;
  return out;
}

ordered_json verdict_json(const ClassLabel& label) {
  ordered_json out;
  out["kind"] = verdict_kind_name(label.kind);
  out["classes"] = label.classes;
  out["tol"] = label.tol;
  ordered_json diag;
  for (const auto& [key, value] : label.diagnostics) diag[key] = value;
  out["diagnostics"] = std::move(diag);
  return out;
}

ordered_json selftest_report_json(const SelftestReport& report) {
  ordered_json suites = ordered_json::array();
  for (const auto& suite : report.suites) {
    ordered_json s;
    s["name"] = suite.name;
    s["max_residual"] = suite.max_residual;
    s["tolerance"] = suite.tolerance;
    s["pass"] = suite.pass;
    suites.push_back(std::move(s));
  }
  ordered_json out;
  out["n"] = report.n;
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  out["pass"] = report.pass;
  out["suites"] = std::move(suites);
  return out;
}

}  // namespace acm
