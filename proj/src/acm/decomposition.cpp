#include "acm/decomposition.hpp"

#include <cmath>
#include <string>

#include "acm/errors.hpp"
#include "acm/forms.hpp"

namespace acm {

namespace {

double domain_scale(const Tensor3& f) { return std::max(1.0, tensor_norm(f)); }

void require_member(const AcmStructure& s, const Tensor3& f,
                    const char* who) {
  const double r = membership_residual(s, f);
  if (r > kTauAlg * domain_scale(f))
    throw DomainError(std::string(who) +
                      ": domain violation: input is not in the constraint "
                      "space (residual " +
                      std::to_string(r) + ")");
}

void require_small(double value, double scale, const char* condition,
                   const char* who) {
  if (value > kTauAlg * scale)
    throw DomainError(std::string(who) + ": domain violation: " + condition);
}

}  // namespace

bool component_defined(int n, int i) {
  if (i < 1 || i > 12) return false;
  return !(n == 1 && (i == 9 || i == 10));
}

Tensor3 involution(const AcmStructure& s, int k, const Tensor3& f) {
  require_normalized(s);
  if (k < 1 || k > 7) throw InvalidArgument("involution: index must be 1..7");
  if (f.n() != s.n) throw DimensionError("involution: dimension mismatch");
  require_member(s, f, "involution");
  const double scale = domain_scale(f);

  switch (k) {
    case 1:
      return f - 2.0 * associated_form(s, 3, f);
    case 2: {
      const double om = traces(s, f).omega.cwiseAbs().maxCoeff();
      require_small(om, scale, "omega(F) != 0 (domain is {omega = 0})",
                    "involution L2");
      return f - 2.0 * (associated_form(s, 1, f) + associated_form(s, 2, f));
    }
    case 3: {
      const double om = traces(s, f).omega.cwiseAbs().maxCoeff();
      require_small(om, scale, "omega(F) != 0 (domain is {hF = 0, omega = 0})",
                    "involution L3");
      require_small(tensor_norm(h_form(s, f)), scale,
                    "hF != 0 (domain is {hF = 0, omega = 0})", "involution L3");
      return associated_form(s, 2, f) - associated_form(s, 1, f);
    }
    case 4: {
      require_small(tensor_norm(h_form(s, f)), scale,
                    "hF != 0 (domain is {hF = 0, F(xi,y,z) = 0})",
                    "involution L4");
      double vertical_first = 0.0;
      const int d = s.dim;
      for (int j = 0; j < d; ++j)
        for (int kk = 0; kk < d; ++kk)
          vertical_first = std::max(vertical_first, std::abs(f(d - 1, j, kk)));
      require_small(vertical_first, scale,
                    "F(xi,y,z) != 0 (domain is {hF = 0, F(xi,y,z) = 0})",
                    "involution L4");
      return -associated_form(s, 4, f);
    }
    case 5: {
      const Tensor3 f4 = associated_form(s, 4, f);
      const double plus = tensor_norm(f - f4);
      const double minus = tensor_norm(f + f4);
      if (plus > kTauAlg * scale && minus > kTauAlg * scale)
        throw DomainError(
            "involution L5: domain violation: F != F4(F) and F != -F4(F)");
      return -associated_form(s, 5, f);
    }
    case 6: {
      require_small(tensor_norm(f - associated_form(s, 4, f)), scale,
                    "F != F4(F) (domain is {F = F4(F) = F5(F)})",
                    "involution L6");
      require_small(tensor_norm(f - associated_form(s, 5, f)), scale,
                    "F != F5(F) (domain is {F = F4(F) = F5(F)})",
                    "involution L6");
      return f - 2.0 * associated_form(s, 7, f);
    }
    default: {  // 7
      require_small(tensor_norm(f - associated_form(s, 4, f)), scale,
                    "F != F4(F) (domain is {F = F4(F) = -F5(F)})",
                    "involution L7");
      require_small(tensor_norm(f + associated_form(s, 5, f)), scale,
                    "F != -F5(F) (domain is {F = F4(F) = -F5(F)})",
                    "involution L7");
      return f - 2.0 * associated_form(s, 8, f);
    }
  }
}

Tensor3 project_component(const AcmStructure& s, int i, const Tensor3& f) {
  require_normalized(s);
  if (i < 1 || i > 12)
    throw InvalidArgument("project_component: index must be 1..12");
  if (!component_defined(s.n, i))
    throw DomainError(
        "degenerate horizontal dimension: components 9 and 10 need n >= 2");

  auto form = [&](int j) { return associated_form(s, j, f); };
  switch (i) {
    case 1:
      return form(3);
    case 2:
      return form(7);
    case 3:
      return form(8);
    case 4: {
      Tensor3 out = form(2) + form(4) + form(5) + form(6) - 4.0 * form(7) - form(3);
      return out *= 0.25;
    }
    case 5: {
      Tensor3 out = form(2) + form(4) - form(5) - form(6) - 4.0 * form(8) - form(3);
      return out *= 0.25;
    }
    case 6: {
      Tensor3 out = form(2) - form(4) + form(5) - form(6) - form(3);
      return out *= 0.25;
    }
    case 7: {
      Tensor3 out = form(2) - form(4) - form(5) + form(6) - form(3);
      return out *= 0.25;
    }
    case 8:
      return form(1) - form(3);
    case 9:
      return form(9);
    case 10:
      return form(10) - form(9);
    case 11:
      return form(11);
    default:  // 12
      return form(12) - form(11);
  }
}

ComponentSpectrum spectrum(const AcmStructure& s, const Tensor3& f,
                           double membership_tol) {
  require_normalized(s);
  if (f.n() != s.n) throw DimensionError("spectrum: dimension mismatch");

  ComponentSpectrum spec;
  spec.n = s.n;
  spec.membership = membership_residual(s, f);
  if (spec.membership > membership_tol)
    throw NotInSpaceError("spectrum: input is not in the constraint space "
                          "(membership residual " +
                          std::to_string(spec.membership) + ")");

  Tensor3 sum(s.n);
  for (int i = 1; i <= 12; ++i) {
    if (!component_defined(s.n, i)) continue;
    const Tensor3 p = project_component(s, i, f);
    spec.norms[i - 1] = tensor_norm(p);
    sum += p;
  }
  spec.residual = tensor_norm(f - sum);
  return spec;
}

SubspaceBasis subspace_basis_oracle(const SpaceProjector& p, int i,
                                    std::span<const std::uint64_t> seeds) {
  const AcmStructure& s = p.structure();
  if (!component_defined(s.n, i))
    throw DomainError("subspace_basis_oracle: component absent for n = 1");
  if (seeds.size() < 6)
    throw InvalidArgument("subspace_basis_oracle: need at least 6 seeds");

  const int nn = s.dim * s.dim * s.dim;
  Eigen::MatrixXd samples(nn, static_cast<Eigen::Index>(seeds.size()));
  double scale = 1.0;
  for (std::size_t c = 0; c < seeds.size(); ++c) {
    const Tensor3 sample =
        project_component(s, i, random_element(p, seeds[c]));
    samples.col(static_cast<Eigen::Index>(c)) = sample.as_vector();
    scale = std::max(scale, sample.max_abs());
  }

  // Rank at the cutoff, with an absolute floor so that a genuinely zero
  // subspace does not promote noise columns.
  auto rank_of = [scale](const Eigen::JacobiSVD<Eigen::MatrixXd>& svd) {
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = kRankCutoff * std::max(sv(0), scale);
    int r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv(k) > cutoff) ++r;
    return r;
  };

  Eigen::JacobiSVD<Eigen::MatrixXd> full(samples, Eigen::ComputeThinU);
  const int rank = rank_of(full);
  Eigen::JacobiSVD<Eigen::MatrixXd> head(
      samples.leftCols(static_cast<Eigen::Index>(seeds.size()) - 5),
      Eigen::ComputeThinU);
  if (rank_of(head) != rank)
    throw RankUnstableError(
        "subspace_basis_oracle: sampled rank not stabilized; provide more "
        "seeds");

  SubspaceBasis basis;
  basis.component = i;
  basis.vectors.reserve(static_cast<std::size_t>(rank));
  for (int c = 0; c < rank; ++c)
    basis.vectors.push_back(Tensor3::from_vector(s.n, full.matrixU().col(c)));
  return basis;
}

SubspaceBasis subspace_basis_oracle(const AcmStructure& s, int i,
                                    std::span<const std::uint64_t> seeds) {
  SpaceProjector p(s);
  return subspace_basis_oracle(p, i, seeds);
}

Tensor3 gram_project(const SubspaceBasis& basis, const Tensor3& t) {
  Tensor3 out(t.n());
  for (const Tensor3& b : basis.vectors) {
    const double c = inner_product(b, t);
    out += c * b;
  }
  return out;
}

}  // namespace acm
