#include "acm/acm.h"

#include <cstring>
#include <new>
#include <string>

#include "acm/classifier.hpp"
#include "acm/constants.hpp"
#include "acm/decomposition.hpp"
#include "acm/errors.hpp"
#include "acm/forms.hpp"
#include "acm/geometry.hpp"
#include "acm/json_io.hpp"
#include "acm/selftest.hpp"
#include "acm/structure.hpp"
#include "acm/tensor.hpp"

struct acm_structure {
  acm::AcmStructure value;
};

struct acm_tensor {
  acm::Tensor3 value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename Fn>
acm_status guarded(Fn&& fn) {
  try {
    fn();
    return ACM_OK;
  } catch (const acm::ParseError& e) {
    g_last_error = e.what();
    return ACM_ERROR_PARSE;
  } catch (const acm::DimensionError& e) {
    g_last_error = e.what();
    return ACM_ERROR_DIMENSION;
  } catch (const acm::NotInSpaceError& e) {
    g_last_error = e.what();
    return ACM_ERROR_NOT_IN_SPACE;
  } catch (const acm::DomainError& e) {
    g_last_error = e.what();
    return ACM_ERROR_DOMAIN;
  } catch (const acm::ValidationError& e) {
    g_last_error = e.what();
    return ACM_ERROR_VALIDATION;
  } catch (const acm::UnknownChartError& e) {
    g_last_error = e.what();
    return ACM_ERROR_UNKNOWN_CHART;
  } catch (const acm::RankUnstableError& e) {
    g_last_error = e.what();
    return ACM_ERROR_RANK_UNSTABLE;
  } catch (const acm::InvalidArgument& e) {
    g_last_error = e.what();
    return ACM_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ACM_ERROR_INTERNAL;
  }
}

acm_status require(bool condition, const char* message) {
  if (condition) return ACM_OK;
  g_last_error = message;
  return ACM_ERROR_INVALID_ARGUMENT;
}

acm::PointSample sample_chart(const char* chart_name, const double* point,
                              int point_len, double step) {
  const acm::ChartField* chart = acm::find_chart(chart_name);
  if (!chart)
    throw acm::UnknownChartError(std::string("unknown chart: ") + chart_name);
  if (point_len != 2 * chart->n + 1)
    throw acm::DimensionError("point must have 2n+1 coordinates");
  Eigen::VectorXd p(point_len);
  for (int i = 0; i < point_len; ++i) p(i) = point[i];
  const double h = step > 0 ? step : acm::kDefaultStep;
  return acm::fundamental_tensor(*chart, p, h);
}

}  // namespace

extern "C" {

const char* acm_status_name(acm_status status) {
  switch (status) {
    case ACM_OK:
      return "ok";
    case ACM_ERROR_INVALID_ARGUMENT:
      return "invalid-argument";
    case ACM_ERROR_PARSE:
      return "parse-error";
    case ACM_ERROR_DIMENSION:
      return "dimension-mismatch";
    case ACM_ERROR_DOMAIN:
      return "domain-error";
    case ACM_ERROR_NOT_IN_SPACE:
      return "not-in-constraint-space";
    case ACM_ERROR_VALIDATION:
      return "validation-failed";
    case ACM_ERROR_UNKNOWN_CHART:
      return "unknown-chart";
    case ACM_ERROR_RANK_UNSTABLE:
      return "rank-unstable";
    default:
      return "internal-error";
  }
}

const char* acm_last_error(void) { return g_last_error.c_str(); }

void acm_string_free(char* text) { delete[] text; }

acm_status acm_structure_standard(int n, acm_structure** out) {
  if (acm_status st = require(out != nullptr, "null output pointer"); st != ACM_OK)
    return st;
  return guarded([&] { *out = new acm_structure{acm::standard_structure(n)}; });
}

acm_status acm_structure_from_json(const char* json_text,
                                   acm_structure** out) {
  if (acm_status st = require(json_text && out, "null argument"); st != ACM_OK)
    return st;
  return guarded([&] {
    *out = new acm_structure{acm::load_structure_from_json_text(json_text)};
  });
}

acm_status acm_structure_validate_json(const char* json_text, int* ok_out,
                                       char** report_json_out) {
  if (acm_status st = require(json_text != nullptr, "null argument");
      st != ACM_OK)
    return st;
  return guarded([&] {
    const acm::AcmStructure s = acm::structure_from_json_text(json_text);
    const acm::ValidationReport report = acm::validate_structure(s);
    if (ok_out) *ok_out = report.ok ? 1 : 0;
    if (report_json_out)
      *report_json_out = dup_string(acm::validation_report_json(report).dump());
  });
}

int acm_structure_n(const acm_structure* s) { return s ? s->value.n : 0; }
int acm_structure_dim(const acm_structure* s) { return s ? s->value.dim : 0; }
void acm_structure_free(acm_structure* s) { delete s; }

acm_status acm_tensor_zero(int n, acm_tensor** out) {
  if (acm_status st = require(out != nullptr, "null output pointer"); st != ACM_OK)
    return st;
  return guarded([&] { *out = new acm_tensor{acm::Tensor3(n)}; });
}

acm_status acm_tensor_from_json(const char* json_text, acm_tensor** out) {
  if (acm_status st = require(json_text && out, "null argument"); st != ACM_OK)
    return st;
  return guarded(
      [&] { *out = new acm_tensor{acm::tensor_from_json_text(json_text)}; });
}

acm_status acm_tensor_to_json(const acm_tensor* t, char** json_out) {
  if (acm_status st = require(t && json_out, "null argument"); st != ACM_OK)
    return st;
  return guarded(
      [&] { *json_out = dup_string(acm::tensor_json(t->value).dump()); });
}

acm_status acm_tensor_random(const acm_structure* s, uint64_t seed,
                             acm_tensor** out) {
  if (acm_status st = require(s && out, "null argument"); st != ACM_OK)
    return st;
  return guarded(
      [&] { *out = new acm_tensor{acm::random_element(s->value, seed)}; });
}

int acm_tensor_n(const acm_tensor* t) { return t ? t->value.n() : 0; }

acm_status acm_tensor_get(const acm_tensor* t, int i, int j, int k,
                          double* out) {
  if (acm_status st = require(t && out, "null argument"); st != ACM_OK)
    return st;
  const int d = t->value.dim();
  if (i < 0 || j < 0 || k < 0 || i >= d || j >= d || k >= d) {
    g_last_error = "tensor index out of range";
    return ACM_ERROR_INVALID_ARGUMENT;
  }
  *out = t->value(i, j, k);
  return ACM_OK;
}

acm_status acm_tensor_set(acm_tensor* t, int i, int j, int k, double value) {
  if (acm_status st = require(t != nullptr, "null argument"); st != ACM_OK)
    return st;
  const int d = t->value.dim();
  if (i < 0 || j < 0 || k < 0 || i >= d || j >= d || k >= d) {
    g_last_error = "tensor index out of range";
    return ACM_ERROR_INVALID_ARGUMENT;
  }
  t->value(i, j, k) = value;
  return ACM_OK;
}

void acm_tensor_free(acm_tensor* t) { delete t; }

acm_status acm_membership_residual(const acm_structure* s, const acm_tensor* t,
                                   double* out) {
  if (acm_status st = require(s && t && out, "null argument"); st != ACM_OK)
    return st;
  return guarded(
      [&] { *out = acm::membership_residual(s->value, t->value); });
}

acm_status acm_inner_product(const acm_tensor* a, const acm_tensor* b,
                             double* out) {
  if (acm_status st = require(a && b && out, "null argument"); st != ACM_OK)
    return st;
  return guarded([&] { *out = acm::inner_product(a->value, b->value); });
}

acm_status acm_project_to_space(const acm_structure* s, const acm_tensor* t,
                                acm_tensor** out) {
  if (acm_status st = require(s && t && out, "null argument"); st != ACM_OK)
    return st;
  return guarded([&] {
    *out = new acm_tensor{acm::project_to_space(s->value, t->value)};
  });
}

acm_status acm_associated_form(const acm_structure* s, int i,
                               const acm_tensor* t, acm_tensor** out) {
  if (acm_status st = require(s && t && out, "null argument"); st != ACM_OK)
    return st;
  return guarded([&] {
    *out = new acm_tensor{acm::associated_form(s->value, i, t->value)};
  });
}

acm_status acm_project_component(const acm_structure* s, int i,
                                 const acm_tensor* t, acm_tensor** out) {
  if (acm_status st = require(s && t && out, "null argument"); st != ACM_OK)
    return st;
  return guarded([&] {
    *out = new acm_tensor{acm::project_component(s->value, i, t->value)};
  });
}

acm_status acm_spectrum_json(const acm_structure* s, const acm_tensor* t,
                             double membership_tol, char** json_out) {
  if (acm_status st = require(s && t && json_out, "null argument");
      st != ACM_OK)
    return st;
  return guarded([&] {
    const double tol = membership_tol > 0 ? membership_tol : acm::kTauAlg;
    const acm::ComponentSpectrum spec = acm::spectrum(s->value, t->value, tol);
    *json_out = dup_string(acm::spectrum_json(spec).dump());
  });
}

acm_status acm_classify_tensor_json(const acm_structure* s,
                                    const acm_tensor* t, double tol,
                                    double membership_tol, char** json_out) {
  if (acm_status st = require(s && t && json_out, "null argument");
      st != ACM_OK)
    return st;
  return guarded([&] {
    const double class_tol = tol > 0 ? tol : acm::kAlgebraicClassifyTol;
    const double member_tol =
        membership_tol > 0 ? membership_tol : acm::kTauAlg;
    const acm::ComponentSpectrum spec =
        acm::spectrum(s->value, t->value, member_tol);
    const acm::ClassLabel label =
        acm::classify(spec, acm::all_defining_residuals(s->value, t->value),
                      class_tol, member_tol);
    *json_out = dup_string(acm::verdict_json(label).dump());
  });
}

acm_status acm_chart_list_json(char** json_out) {
  if (acm_status st = require(json_out != nullptr, "null argument");
      st != ACM_OK)
    return st;
  return guarded([&] {
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (const acm::ChartField& chart : acm::builtin_charts())
      names.push_back(chart.name);
    *json_out = dup_string(names.dump());
  });
}

acm_status acm_classify_chart_json(const char* chart_name, const double* point,
                                   int point_len, double step, double tol,
                                   char** json_out) {
  if (acm_status st = require(chart_name && point && json_out, "null argument");
      st != ACM_OK)
    return st;
  return guarded([&] {
    const acm::PointSample sample =
        sample_chart(chart_name, point, point_len, step);
    const double class_tol = tol > 0 ? tol : acm::kGeometryClassifyTol;
    const acm::ComponentSpectrum spec =
        acm::spectrum(sample.structure, sample.tensor, acm::kTauGeo);
    acm::ClassLabel label = acm::classify(
        spec, acm::all_defining_residuals(sample.structure, sample.tensor),
        class_tol, acm::kTauGeo);
    nlohmann::ordered_json out = acm::verdict_json(label);
    out["spectrum"] = acm::spectrum_json(spec);
    *json_out = dup_string(out.dump());
  });
}

acm_status acm_chart_spectrum_json(const char* chart_name, const double* point,
                                   int point_len, double step,
                                   char** json_out) {
  if (acm_status st = require(chart_name && point && json_out, "null argument");
      st != ACM_OK)
    return st;
  return guarded([&] {
    const acm::PointSample sample =
        sample_chart(chart_name, point, point_len, step);
    const acm::ComponentSpectrum spec =
        acm::spectrum(sample.structure, sample.tensor, acm::kTauGeo);
    *json_out = dup_string(acm::spectrum_json(spec).dump());
  });
}

acm_status acm_selftest_json(int n, int trials, uint64_t seed, int* pass_out,
                             char** report_json_out) {
  return guarded([&] {
    const acm::SelftestReport report = acm::run_selftest(n, trials, seed);
    if (pass_out) *pass_out = report.pass ? 1 : 0;
    if (report_json_out)
      *report_json_out = dup_string(acm::selftest_report_json(report).dump());
  });
}

}  // extern "C"
