// Command-line front end over the C API: validate / decompose / classify /
// selftest. JSON results go to standard output, the human-readable report to
// standard error. Exit codes: 0 success, 1 verification or classification
// failure, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acm/acm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct StringGuard {
  char* text = nullptr;
  ~StringGuard() { acm_string_free(text); }
};

int exit_code_for(acm_status status) {
  switch (status) {
    case ACM_OK:
      return kExitOk;
    case ACM_ERROR_INVALID_ARGUMENT:
    case ACM_ERROR_PARSE:
    case ACM_ERROR_DIMENSION:
    case ACM_ERROR_UNKNOWN_CHART:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

int report_error(acm_status status) {
  std::cerr << "error (" << acm_status_name(status) << "): " << acm_last_error()
            << "\n";
  return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool parse_point(const std::string& text, std::vector<double>& out) {
  out.clear();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) return false;
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

int run_validate(const std::string& input_path, int n, bool quiet) {
  std::string text;
  if (!input_path.empty()) {
    if (!read_file(input_path, text)) {
      std::cerr << "error: cannot read " << input_path << "\n";
      return kExitUsage;
    }
  } else {
    text = "{\"n\": " + std::to_string(n) + "}";
  }

  int ok = 0;
  StringGuard report;
  const acm_status status =
      acm_structure_validate_json(text.c_str(), &ok, &report.text);
  if (status != ACM_OK) return report_error(status);

  std::cout << report.text << "\n";
  if (!quiet)
    std::cerr << (ok ? "structure is valid" : "structure axioms violated")
              << "\n";
  return ok ? kExitOk : kExitFailure;
}

int run_decompose(const std::string& input_path,
                  const std::string& structure_path, bool quiet) {
  std::string tensor_text;
  if (!read_file(input_path, tensor_text)) {
    std::cerr << "error: cannot read " << input_path << "\n";
    return kExitUsage;
  }

  acm_tensor* tensor = nullptr;
  acm_status status = acm_tensor_from_json(tensor_text.c_str(), &tensor);
  if (status != ACM_OK) return report_error(status);
  std::unique_ptr<acm_tensor, decltype(&acm_tensor_free)> tensor_guard(
      tensor, acm_tensor_free);

  acm_structure* structure = nullptr;
  if (!structure_path.empty()) {
    std::string structure_text;
    if (!read_file(structure_path, structure_text)) {
      std::cerr << "error: cannot read " << structure_path << "\n";
      return kExitUsage;
    }
    status = acm_structure_from_json(structure_text.c_str(), &structure);
  } else {
    status = acm_structure_standard(acm_tensor_n(tensor), &structure);
  }
  if (status != ACM_OK) return report_error(status);
  std::unique_ptr<acm_structure, decltype(&acm_structure_free)> structure_guard(
      structure, acm_structure_free);

  StringGuard spectrum;
  status = acm_spectrum_json(structure, tensor, /*membership_tol=*/0.0,
                             &spectrum.text);
  if (status == ACM_ERROR_NOT_IN_SPACE) {
    std::cerr << "not in constraint space: " << acm_last_error() << "\n";
    return kExitFailure;
  }
  if (status != ACM_OK) return report_error(status);

  std::cout << spectrum.text << "\n";
  if (!quiet) std::cerr << "decomposition complete" << "\n";
  return kExitOk;
}

int run_classify(const std::string& chart, const std::string& point_text,
                 double step, double tol, bool quiet) {
  std::vector<double> point;
  if (!parse_point(point_text, point)) {
    std::cerr << "error: --point expects comma-separated coordinates" << "\n";
    return kExitUsage;
  }

  StringGuard verdict;
  const acm_status status = acm_classify_chart_json(
      chart.c_str(), point.data(), static_cast<int>(point.size()), step, tol,
      &verdict.text);
  if (status != ACM_OK) return report_error(status);

  std::cout << verdict.text << "\n";
  if (!quiet) {
    const auto parsed = nlohmann::json::parse(verdict.text);
    std::cerr << "chart " << chart << " at (" << point_text
              << "): " << parsed.at("kind").get<std::string>();
    if (!parsed.at("classes").empty()) {
      std::cerr << " {";
      bool first = true;
      for (const auto& c : parsed.at("classes")) {
        if (!first) std::cerr << ", ";
        std::cerr << "W" << c.get<int>();
        first = false;
      }
      std::cerr << "}";
    }
    std::cerr << "\n";
  }
  return kExitOk;
}

int run_selftest(int n, int trials, std::uint64_t seed, bool quiet) {
  int pass = 0;
  StringGuard report;
  const acm_status status =
      acm_selftest_json(n, trials, seed, &pass, &report.text);
  if (status != ACM_OK) return report_error(status);

  std::cout << report.text << "\n";
  if (!quiet) {
    const auto parsed = nlohmann::json::parse(report.text);
    for (const auto& suite : parsed.at("suites")) {
      std::cerr << (suite.at("pass").get<bool>() ? "pass" : "FAIL") << "  "
                << suite.at("name").get<std::string>() << "  max residual "
                << suite.at("max_residual").get<double>() << "  (tolerance "
                << suite.at("tolerance").get<double>() << ")\n";
    }
    std::cerr << (pass ? "all suites passed" : "some suites FAILED") << "\n";
  }
  return pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decomposition and classification of covariant-derivative-type tensors "
      "over almost contact metric structures"};
  app.require_subcommand(1);
  bool json_only = false;
  app.add_flag("--json", json_only, "suppress the human-readable report");

  auto* validate = app.add_subcommand(
      "validate", "check the structure axioms of a structure JSON file");
  std::string validate_input;
  int validate_n = 2;
  validate->add_option("--input", validate_input, "structure JSON file");
  validate->add_option("--n", validate_n,
                       "use the standard structure of this n instead");

  auto* decompose = app.add_subcommand(
      "decompose", "component spectrum of a tensor JSON file");
  std::string decompose_input;
  std::string decompose_structure;
  decompose->add_option("--input", decompose_input, "tensor JSON file")
      ->required();
  decompose->add_option("--structure", decompose_structure,
                        "structure JSON file (default: standard structure)");

  auto* classify = app.add_subcommand(
      "classify", "classify a built-in chart at a point");
  std::string classify_chart;
  std::string classify_point = "0,0,0";
  double classify_step = 0.0;
  double classify_tol = 0.0;
  classify->add_option("--chart", classify_chart, "chart name")->required();
  classify->add_option("--point", classify_point,
                       "comma-separated chart coordinates");
  classify->add_option("--step", classify_step,
                       "finite-difference step (default 1e-5)");
  classify->add_option("--tol", classify_tol,
                       "relative classification tolerance (default 1e-3)");

  auto* selftest = app.add_subcommand(
      "selftest", "run every invariant suite and report residuals");
  int selftest_n = 2;
  int selftest_trials = 100;
  std::uint64_t selftest_seed = 42;
  selftest->add_option("--n", selftest_n, "structure size (default 2)");
  selftest->add_option("--trials", selftest_trials,
                       "random tensors per suite (default 100)");
  selftest->add_option("--seed", selftest_seed, "random seed (default 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (validate->parsed())
    return run_validate(validate_input, validate_n, json_only);
  if (decompose->parsed())
    return run_decompose(decompose_input, decompose_structure, json_only);
  if (classify->parsed())
    return run_classify(classify_chart, classify_point, classify_step,
                        classify_tol, json_only);
  return run_selftest(selftest_n, selftest_trials, selftest_seed, json_only);
}
