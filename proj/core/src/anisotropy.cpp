// Copyright 2026 The sphermoments Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sphermoments/anisotropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sphermoments/errors.hpp"
#include "sphermoments/moments.hpp"

namespace sphermoments {
namespace {

constexpr double kNegativeEigenSlack = 1e-10;
constexpr double kPeanutSymmetryTol = 1e-12;

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

void attach_peanut_bounds(AnisotropyReport& report) {
  report.bounds.applies = true;
  if (report.fa) {
    const double limit = report.eigenvalues.size() == 2 ? kPeanutFa2Max : kPeanutFa3Max;
    report.bounds.fa_within = *report.fa <= limit + kBoundSlack;
  }
  report.bounds.ratio_within = report.ratio >= 1.0 && report.ratio <= kPeanutRatioMax + kBoundSlack;
}

}  // namespace

MotilityParams::MotilityParams(double s, double mu) : s_(s), mu_(mu) {
  std::vector<std::string> problems;
  if (!(s > 0.0) || !std::isfinite(s)) problems.push_back("s must be finite and > 0");
  if (!(mu > 0.0) || !std::isfinite(mu)) problems.push_back("mu must be finite and > 0");
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

const char* to_string(ReportPath path) noexcept {
  return path == ReportPath::kClosedForm ? "closed_form" : "generic";
}

DiffusionTensor diffusion_tensor(const SphericalDistribution& dist, const MotilityParams& params) {
  if (!has_closed_form(dist.kind())) {
    throw UnsupportedError("diffusion tensor needs a closed-form covariance; kind '" +
                           std::string(to_string(dist.kind())) + "' has none");
  }
  const MomentReport moments = closed_form_moments(dist);
  return DiffusionTensor{params.scale() * moments.covariance, params};
}

double fractional_anisotropy(const Vector& eigenvalues) {
  const Eigen::Index n = eigenvalues.size();
  if (n != 2 && n != 3) {
    throw UnsupportedError("fractional anisotropy is defined for n = 2 or 3 only, got n = " +
                           std::to_string(n));
  }
  const double largest = eigenvalues.cwiseAbs().maxCoeff();
  if (!(largest > 0.0)) throw DomainError("fractional anisotropy: degenerate (all-zero) tensor");
  if (eigenvalues.minCoeff() < -kNegativeEigenSlack * largest) {
    throw DomainError("fractional anisotropy: eigenvalues must be >= 0");
  }
  const double mean = eigenvalues.mean();
  const double spread = (eigenvalues.array() - mean).square().sum();
  const double power = eigenvalues.squaredNorm();
  if (n == 2) return clamp_unit(std::sqrt(2.0 * spread / power));
  return clamp_unit(std::sqrt(3.0 * spread / (2.0 * power)));
}

double anisotropy_ratio(const Vector& eigenvalues) {
  if (eigenvalues.size() == 0) throw DomainError("anisotropy ratio: no eigenvalues");
  const double lo = eigenvalues.minCoeff();
  const double hi = eigenvalues.maxCoeff();
  if (!(lo > 0.0)) {
    throw DomainError("anisotropy ratio is unbounded: smallest eigenvalue is " +
                      std::to_string(lo) + " (largest " + std::to_string(hi) + ")");
  }
  return hi / lo;
}

AnisotropyReport generic_report(const DiffusionTensor& tensor, bool peanut_bounds) {
  AnisotropyReport report;
  report.path = ReportPath::kGeneric;
  report.eigenvalues = symmetric_eigen(tensor.d).values;
  const int n = tensor.dim();
  if (n == 2 || n == 3) report.fa = fractional_anisotropy(report.eigenvalues);
  const double lo = report.eigenvalues.minCoeff();
  report.ratio = lo > 0.0 ? anisotropy_ratio(report.eigenvalues)
                          : std::numeric_limits<double>::infinity();
  if (peanut_bounds) attach_peanut_bounds(report);
  return report;
}

AnisotropyReport anisotropy_report(const SphericalDistribution& dist, const MotilityParams& params) {
  return generic_report(diffusion_tensor(dist, params),
                        dist.kind() == DistributionKind::kPeanut);
}

AnisotropyReport peanut_closed_form_report(const AnisotropyMatrix& a, const MotilityParams& params) {
  const Matrix& m = a.entries();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (max_asymmetry(m) > kPeanutSymmetryTol * scale) {
    throw ValidationError({"peanut closed-form report needs a symmetric A; symmetrize it first"});
  }
  const int n = a.dim();
  const double tr = m.trace();
  const Vector hat = symmetric_eigen(m).values;  // descending

  AnisotropyReport report;
  report.path = ReportPath::kClosedForm;
  const double front = params.scale() / (n + 2.0);
  report.eigenvalues = front * (1.0 + 2.0 * hat.array() / tr).matrix();

  // Both FA forms are written in the eigenvalues of A, where s, mu and the
  // overall scale of A cancel.
  if (n == 2) {
    const double p1 = tr + 2.0 * hat(0);
    const double p2 = tr + 2.0 * hat(1);
    report.fa = clamp_unit(2.0 * std::abs(hat(0) - hat(1)) / std::sqrt(p1 * p1 + p2 * p2));
  } else if (n == 3) {
    const double d1 = 2.0 * hat(0) - hat(1) - hat(2);
    const double d2 = 2.0 * hat(1) - hat(0) - hat(2);
    const double d3 = 2.0 * hat(2) - hat(0) - hat(1);
    const double p1 = tr + 2.0 * hat(0);
    const double p2 = tr + 2.0 * hat(1);
    const double p3 = tr + 2.0 * hat(2);
    report.fa = clamp_unit(std::sqrt(2.0 * (d1 * d1 + d2 * d2 + d3 * d3) /
                                     (3.0 * (p1 * p1 + p2 * p2 + p3 * p3))));
  }
  report.ratio = (tr + 2.0 * hat.maxCoeff()) / (tr + 2.0 * hat.minCoeff());
  attach_peanut_bounds(report);
  return report;
}

BimodalTensorCoefficients bimodal_vmf_tensor_coefficients(int n, double k,
                                                          const MotilityParams& params) {
  const VmfCoefficients c = vmf_coefficients(n, k);
  return {params.scale() * c.isotropic, params.scale() * c.axial};
}

AnisotropyReport vmf_closed_form_report(int n, double k, const UnitVector& u,
                                        const MotilityParams& params) {
  if (u.dim() != n) throw ShapeError("vmf_closed_form_report: u has the wrong dimension");
  const auto [alpha, beta] = bimodal_vmf_tensor_coefficients(n, k, params);

  AnisotropyReport report;
  report.path = ReportPath::kClosedForm;
  report.eigenvalues = Vector::Constant(n, alpha);
  report.eigenvalues(0) = alpha + beta;
  const double top = alpha + beta;
  if (n == 2) {
    report.fa = clamp_unit(std::abs(beta) / std::sqrt(top * top + alpha * alpha));
  } else if (n == 3) {
    report.fa = clamp_unit(std::abs(beta) / std::sqrt(top * top + 2.0 * alpha * alpha));
  }
  report.ratio = alpha > 0.0 ? 1.0 + beta / alpha : std::numeric_limits<double>::infinity();
  return report;
}

}  // namespace sphermoments
