#include "acm/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "acm/errors.hpp"
#include "acm/forms.hpp"

namespace acm {

namespace {

double max_abs_diff(const Tensor3& a, const Tensor3& b) {
  double r = 0.0;
  const double* pa = a.data();
  const double* pb = b.data();
  for (std::size_t i = 0; i < a.size(); ++i)
    r = std::max(r, std::abs(pa[i] - pb[i]));
  return r;
}

// max |F(xi,y,z)| and max |F(x,y,xi)| in the normalized frame
double vertical_slots_residual(const AcmStructure& s, const Tensor3& f) {
  const int d = s.dim;
  const int last = d - 1;
  double r = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      r = std::max({r, std::abs(f(last, a, b)), std::abs(f(a, b, last))});
  return r;
}

}  // namespace

const char* verdict_kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::cosymplectic:
      return "cosymplectic";
    case VerdictKind::single:
      return "single";
    case VerdictKind::sum:
      return "sum";
    default:
      return "unclassified-n1-gap";
  }
}

double defining_residual(const AcmStructure& s, int i, const Tensor3& f) {
  require_normalized(s);
  if (i < 1 || i > 12)
    throw InvalidArgument("defining_residual: index must be 1..12");
  if (!component_defined(s.n, i))
    throw DomainError(
        "degenerate horizontal dimension: classes 9 and 10 need n >= 2");
  if (f.n() != s.n) throw DimensionError("defining_residual: dimension mismatch");

  const TraceTriple t = traces(s, f);
  const double f_xi = t.f.dot(s.xi);
  const double fstar_xi = t.f_star.dot(s.xi);

  switch (i) {
    case 1:
      return max_abs_diff(f, associated_form(s, 3, f));
    case 2:
      return max_abs_diff(f, associated_form(s, 7, f));
    case 3:
      return max_abs_diff(f, associated_form(s, 8, f));
    case 4:
      return std::max({max_abs_diff(f, associated_form(s, 4, f)),
                       max_abs_diff(f, associated_form(s, 5, f)),
                       std::abs(f_xi)});
    case 5:
      return std::max({max_abs_diff(f, associated_form(s, 4, f)),
                       max_abs_diff(f, -associated_form(s, 5, f)),
                       std::abs(fstar_xi)});
    case 6:
      return std::max(max_abs_diff(f, -associated_form(s, 4, f)),
                      max_abs_diff(f, associated_form(s, 5, f)));
    case 7:
      return std::max(max_abs_diff(f, -associated_form(s, 4, f)),
                      max_abs_diff(f, -associated_form(s, 5, f)));
    case 8: {
      const double d8 = h_form(s, f).max_abs();
      const int d = s.dim;
      double last_slot = 0.0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          last_slot = std::max(last_slot, std::abs(f(a, b, d - 1)));
      return std::max(d8, last_slot);
    }
    case 9: {
      // F = hF plus the trace-built shape. associated_form(9) already goes
      // through the horizontal part, so compare against it only after pinning
      // the vertical slots to zero.
      const double vert = vertical_slots_residual(s, f);
      return std::max(vert, max_abs_diff(f, associated_form(s, 9, f)));
    }
    case 10: {
      const double vert = vertical_slots_residual(s, f);
      const Tensor3 pulled =
          contract_slot(contract_slot(f, s.phi, 0), s.phi, 1);
      const double invariant = max_abs_diff(pulled, f);
      const double trace_free = t.f.cwiseAbs().maxCoeff();
      return std::max({vert, invariant, trace_free});
    }
    case 11: {
      const double vert = vertical_slots_residual(s, f);
      double sym = 0.0;
      const int d = s.dim;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c)
            sym = std::max(sym, std::abs(f(a, b, c) + f(b, a, c)));
      return std::max(vert, sym);
    }
    default: {  // 12
      const double vert = vertical_slots_residual(s, f);
      double cyc = 0.0;
      const int d = s.dim;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c)
            cyc = std::max(
                cyc, std::abs(f(a, b, c) + f(b, c, a) + f(c, a, b)));
      return std::max(vert, cyc);
    }
  }
}

std::array<std::optional<double>, 12> all_defining_residuals(
    const AcmStructure& s, const Tensor3& f) {
  std::array<std::optional<double>, 12> out;
  for (int i = 1; i <= 12; ++i)
    if (component_defined(s.n, i)) out[i - 1] = defining_residual(s, i, f);
  return out;
}

ClassLabel classify(const ComponentSpectrum& spec,
                    const std::array<std::optional<double>, 12>& residuals,
                    double tol, double membership_tol) {
  if (tol <= 0.0) throw InvalidArgument("classify: tol must be positive");
  if (spec.membership > membership_tol)
    throw NotInSpaceError("classify: spectrum membership residual exceeds the gate");
  for (int i = 1; i <= 12; ++i)
    if (spec.norms[i - 1].has_value() != residuals[i - 1].has_value())
      throw DimensionError("classify: spectrum/residual component mismatch");

  double norm2 = spec.residual * spec.residual;
  for (const auto& v : spec.norms)
    if (v) norm2 += *v * *v;
  const double scale = std::max(1.0, std::sqrt(norm2));
  const double threshold = tol * scale;

  ClassLabel label;
  label.tol = tol;
  for (int i = 1; i <= 12; ++i) {
    if (!residuals[i - 1]) continue;
    label.diagnostics["W" + std::to_string(i)] = *residuals[i - 1];
    if (*spec.norms[i - 1] > threshold) label.classes.push_back(i);
  }
  label.diagnostics["membership"] = spec.membership;
  label.diagnostics["decomposition_residual"] = spec.residual;

  if (label.classes.empty()) {
    if (spec.n == 1 && spec.residual > threshold) {
      label.kind = VerdictKind::unclassified_n1_gap;
    } else {
      label.kind = VerdictKind::cosymplectic;
    }
    return label;
  }
  if (label.classes.size() == 1) {
    const int i = label.classes.front();
    if (*residuals[i - 1] <= threshold) {
      label.kind = VerdictKind::single;
    } else {
      // projection norm and defining condition disagree: surface it
      label.kind = VerdictKind::sum;
      label.diagnostics["downgraded_from_single"] = static_cast<double>(i);
    }
    return label;
  }
  label.kind = VerdictKind::sum;
  return label;
}

}  // namespace acm
