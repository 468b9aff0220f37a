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

#include "sphermoments/moments.hpp"

#include <algorithm>
#include <cmath>

#include "sphermoments/errors.hpp"
#include "sphermoments/oracle.hpp"
#include "sphermoments/specfun.hpp"

namespace sphermoments {
namespace {

void check_dim(int n, const UnitVector& u) {
  if (u.dim() != n) {
    throw ShapeError("u has dimension " + std::to_string(u.dim()) + ", expected " +
                     std::to_string(n));
  }
}

}  // namespace

const char* to_string(MomentSource source) noexcept {
  return source == MomentSource::kClosedForm ? "closed_form" : "oracle";
}

MomentReport make_moment_report(Vector mean, Matrix second_moment, MomentSource source) {
  MomentReport report;
  report.covariance = second_moment - mean * mean.transpose();
  report.mean = std::move(mean);
  report.second_moment = std::move(second_moment);
  report.source = source;
  return report;
}

VmfCoefficients vmf_coefficients(int n, double k) {
  if (n < 2) throw DomainError("vMF: n must be >= 2");
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("vMF: k must be finite and >= 0");
  VmfCoefficients c;
  if (k < kSmallConcentration) {
    c.isotropic = 1.0 / n;
    return c;
  }
  const double half = 0.5 * n;
  c.mean = bessel_ratio(BesselOrder(half), k);
  c.isotropic = c.mean / k;
  c.axial = bessel_ratio(BesselOrder(half + 1.0), k) * c.mean;
  return c;
}

Vector vmf_mean(int n, double k, const UnitVector& u) {
  check_dim(n, u);
  return vmf_coefficients(n, k).mean * u.coords();
}

Matrix vmf_second_moment(int n, double k, const UnitVector& u) {
  check_dim(n, u);
  const VmfCoefficients c = vmf_coefficients(n, k);
  const Vector& v = u.coords();
  return c.isotropic * Matrix::Identity(n, n) + c.axial * (v * v.transpose());
}

Matrix vmf_covariance(int n, double k, const UnitVector& u) {
  check_dim(n, u);
  const VmfCoefficients c = vmf_coefficients(n, k);
  const Vector& v = u.coords();
  return c.isotropic * Matrix::Identity(n, n) + (c.axial - c.mean * c.mean) * (v * v.transpose());
}

MomentReport vmf_moments(int n, double k, const UnitVector& u) {
  check_dim(n, u);
  const VmfCoefficients c = vmf_coefficients(n, k);
  const Vector& v = u.coords();
  MomentReport report;
  report.mean = c.mean * v;
  report.second_moment = c.isotropic * Matrix::Identity(n, n) + c.axial * (v * v.transpose());
  report.covariance =
      c.isotropic * Matrix::Identity(n, n) + (c.axial - c.mean * c.mean) * (v * v.transpose());
  report.source = MomentSource::kClosedForm;
  return report;
}

MomentReport bimodal_vmf_moments(int n, double k, const UnitVector& u) {
  check_dim(n, u);
  const VmfCoefficients c = vmf_coefficients(n, k);
  const Vector& v = u.coords();
  Matrix second = c.isotropic * Matrix::Identity(n, n) + c.axial * (v * v.transpose());
  return make_moment_report(Vector::Zero(n), std::move(second), MomentSource::kClosedForm);
}

MomentReport peanut_moments(const AnisotropyMatrix& a) {
  const int n = a.dim();
  const Matrix& m = a.entries();
  const double denom = (n + 2.0) * m.trace();
  Matrix second = Matrix::Identity(n, n) / (n + 2.0) + (m + m.transpose()) / denom;
  return make_moment_report(Vector::Zero(n), std::move(second), MomentSource::kClosedForm);
}

bool has_closed_form(DistributionKind kind) noexcept {
  return kind == DistributionKind::kVmf || kind == DistributionKind::kBimodalVmf ||
         kind == DistributionKind::kPeanut;
}

MomentReport closed_form_moments(const SphericalDistribution& dist) {
  if (!has_closed_form(dist.kind())) {
    throw UnsupportedError("no closed-form moments for kind '" +
                           std::string(to_string(dist.kind())) + "'");
  }
  dist.require_valid();
  switch (dist.kind()) {
    case DistributionKind::kVmf:
      return vmf_moments(dist.dim(), dist.concentration(), UnitVector(dist.mean_direction()));
    case DistributionKind::kBimodalVmf:
      return bimodal_vmf_moments(dist.dim(), dist.concentration(),
                                 UnitVector(dist.mean_direction()));
    default:
      return peanut_moments(AnisotropyMatrix(dist.anisotropy()));
  }
}

OddMomentCheck odd_moments_zero_check(const SphericalDistribution& dist, int order,
                                      const OddMomentOptions& options) {
  if (order != 1 && order != 3) throw DomainError("odd_moments_zero_check: order must be 1 or 3");
  if (dist.kind() == DistributionKind::kVmf && dist.concentration() > 0.0) {
    throw PreconditionError("odd_moments_zero_check: a vMF with k > 0 has a nonzero mean");
  }
  dist.require_valid();

  OddMomentCheck out;
  out.order = order;
  const int n = dist.dim();
  const bool use_quad = n == 2 || n == 3;
  out.method = use_quad ? "quad" : "mc";

  std::vector<double> values;
  std::vector<double> errors;
  double mass = 0.0;
  if (order == 1) {
    MomentReport report;
    if (use_quad) {
      QuadratureSpec spec = QuadratureSpec::for_dimension(n, options.resolution);
      spec.check_convergence = false;
      report = quad_moments(dist, spec);
    } else {
      report = mc_moments(dist, McSpec(n, options.samples, options.seed));
      const Vector& se = *report.oracle->mean_standard_error;
      errors.assign(se.data(), se.data() + se.size());
    }
    values.assign(report.mean.data(), report.mean.data() + report.mean.size());
    mass = report.oracle->mass;
  } else {
    ThirdMomentEstimate est;
    if (use_quad) {
      est = quad_third_moment(dist, QuadratureSpec::for_dimension(n, options.resolution));
    } else {
      est = mc_third_moment(dist, McSpec(n, options.samples, options.seed));
      errors = est.standard_error;
    }
    values = est.tensor;
    mass = est.mass;
  }

  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = std::abs(values[i]) / mass;
    out.max_abs = std::max(out.max_abs, v);
    if (!errors.empty() && errors[i] > 0.0) {
      out.max_z = std::max(out.max_z, std::abs(values[i]) / errors[i]);
    }
  }
  if (use_quad) {
    out.tolerance = kOddMomentQuadTolerance;
    out.within_contract = out.max_abs <= out.tolerance;
  } else {
    out.within_contract = out.max_z <= 3.0;
  }
  return out;
}

}  // namespace sphermoments
