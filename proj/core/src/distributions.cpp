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

#include "sphermoments/distributions.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "sphermoments/errors.hpp"
#include "sphermoments/specfun.hpp"

namespace sphermoments {
namespace {

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

double quadratic_form(const Matrix& m, const Eigen::Ref<const Vector>& theta) {
  const Eigen::Index n = theta.size();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) row += m(i, j) * theta(j);
    acc += theta(i) * row;
  }
  return acc;
}

void check_direction(const Vector& u, std::vector<std::string>& out) {
  if (u.size() < 2) {
    out.push_back("n must be >= 2");
    return;
  }
  if (!u.allFinite()) {
    out.push_back("u must be finite");
    return;
  }
  const double norm = u.norm();
  if (std::abs(norm - 1.0) > UnitVector::kNormTolerance) {
    out.push_back("u must be a unit vector (|u| = " + format_double(norm) + ")");
  }
}

void check_concentration(double k, std::vector<std::string>& out) {
  if (std::isnan(k) || std::isinf(k)) {
    out.push_back("k must be finite");
  } else if (k < 0.0) {
    out.push_back("k must be >= 0");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// UnitVector

UnitVector::UnitVector(Vector coords) : coords_(std::move(coords)) {
  std::vector<std::string> problems;
  check_direction(coords_, problems);
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

UnitVector UnitVector::normalized(const Vector& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("UnitVector::normalized: vector has zero or non-finite norm");
  }
  return UnitVector(v / norm);
}

UnitVector UnitVector::axis(int n, int i) {
  if (n < 2 || i < 0 || i >= n) throw DomainError("UnitVector::axis: index out of range");
  return UnitVector(Vector::Unit(n, i));
}

// ---------------------------------------------------------------------------
// AnisotropyMatrix

AnisotropyMatrix::AnisotropyMatrix(Matrix entries) : entries_(std::move(entries)) {
  auto problems = violations(entries_);
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

std::vector<std::string> AnisotropyMatrix::violations(const Matrix& a) {
  std::vector<std::string> out;
  if (a.rows() != a.cols()) {
    out.push_back("A must be square");
    return out;
  }
  if (a.rows() < 2) {
    out.push_back("n must be >= 2");
    return out;
  }
  if (!all_finite(a)) {
    out.push_back("A must be finite");
    return out;
  }
  if (!(a.trace() > 0.0)) out.push_back("trace(A) must be > 0");
  const SymmetricEigen eig = symmetric_eigen(symmetric_part(a));
  if (!(eig.values.minCoeff() > 0.0)) out.push_back("A not positive definite");
  return out;
}

// ---------------------------------------------------------------------------
// Kinds

std::string_view to_string(DistributionKind kind) noexcept {
  switch (kind) {
    case DistributionKind::kVmf:
      return "vmf";
    case DistributionKind::kBimodalVmf:
      return "bimodal_vmf";
    case DistributionKind::kPeanut:
      return "peanut";
    case DistributionKind::kOdf:
      return "odf";
    case DistributionKind::kBingham:
      return "bingham";
  }
  return "unknown";
}

std::optional<DistributionKind> parse_distribution_kind(std::string_view name) noexcept {
  for (auto kind : {DistributionKind::kVmf, DistributionKind::kBimodalVmf,
                    DistributionKind::kPeanut, DistributionKind::kOdf,
                    DistributionKind::kBingham}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// SphericalDistribution

SphericalDistribution::SphericalDistribution(DistributionKind kind, int n) : kind_(kind), n_(n) {}

SphericalDistribution SphericalDistribution::vmf(Vector u, double k) {
  SphericalDistribution d(DistributionKind::kVmf, static_cast<int>(u.size()));
  d.u_ = std::move(u);
  d.k_ = k;
  d.finalize();
  return d;
}

SphericalDistribution SphericalDistribution::bimodal_vmf(Vector u, double k) {
  SphericalDistribution d(DistributionKind::kBimodalVmf, static_cast<int>(u.size()));
  d.u_ = std::move(u);
  d.k_ = k;
  d.finalize();
  return d;
}

SphericalDistribution SphericalDistribution::peanut(Matrix a) {
  SphericalDistribution d(DistributionKind::kPeanut, static_cast<int>(a.rows()));
  d.a_ = std::move(a);
  d.finalize();
  return d;
}

SphericalDistribution SphericalDistribution::odf(Matrix a) {
  SphericalDistribution d(DistributionKind::kOdf, static_cast<int>(a.rows()));
  d.a_ = std::move(a);
  d.finalize();
  return d;
}

SphericalDistribution SphericalDistribution::bingham(Matrix a, double delta) {
  SphericalDistribution d(DistributionKind::kBingham, static_cast<int>(a.rows()));
  d.a_ = std::move(a);
  d.delta_ = delta;
  d.finalize();
  return d;
}

void SphericalDistribution::finalize() {
  switch (kind_) {
    case DistributionKind::kVmf:
    case DistributionKind::kBimodalVmf:
      check_direction(u_, violations_);
      check_concentration(k_, violations_);
      if (violations_.empty()) log_norm_ = vmf_log_normalizer(n_, k_);
      return;
    case DistributionKind::kPeanut:
      violations_ = AnisotropyMatrix::violations(a_);
      if (violations_.empty()) {
        peanut_scale_ = static_cast<double>(n_) / (sphere_surface_area(n_) * a_.trace());
      }
      return;
    case DistributionKind::kOdf:
    case DistributionKind::kBingham:
      break;
  }

  violations_ = AnisotropyMatrix::violations(a_);
  if (kind_ == DistributionKind::kOdf && n_ != 3) {
    violations_.push_back("ODF requires n = 3");
  }
  if (kind_ == DistributionKind::kBingham && !(delta_ > 0.0 && std::isfinite(delta_))) {
    violations_.push_back("delta must be finite and > 0");
  }
  if (!violations_.empty()) return;

  Eigen::FullPivLU<Matrix> lu(a_);
  if (!lu.isInvertible()) {
    violations_.push_back("A must be invertible");
    return;
  }
  inverse_ = lu.inverse();
  const double log_det = std::log(lu.determinant());
  if (kind_ == DistributionKind::kOdf) {
    log_norm_ = -std::log(4.0 * std::numbers::pi) - 0.5 * log_det;
  } else if (n_ == 3) {
    log_norm_ = -0.5 * (log_det + 3.0 * std::log(4.0 * std::numbers::pi * delta_));
  } else {
    normalized_ = false;
    log_norm_ = 0.0;
  }
}

void SphericalDistribution::require_valid() const {
  if (!violations_.empty()) throw ValidationError(violations_);
}

double SphericalDistribution::log_density_unchecked(const Eigen::Ref<const Vector>& theta) const {
  switch (kind_) {
    case DistributionKind::kVmf:
      return log_norm_ + k_ * u_.dot(theta);
    case DistributionKind::kBimodalVmf: {
      // log cosh(z) = |z| + log1p(e^{-2|z|}) - log 2, symmetric in z.
      const double z = std::abs(k_ * u_.dot(theta));
      return log_norm_ + z + std::log1p(std::exp(-2.0 * z)) - std::numbers::ln2;
    }
    case DistributionKind::kPeanut:
      return std::log(density_unchecked(theta));
    case DistributionKind::kOdf:
      return log_norm_ - 1.5 * std::log(quadratic_form(inverse_, theta));
    case DistributionKind::kBingham:
      return log_norm_ - quadratic_form(inverse_, theta) / (4.0 * delta_);
  }
  return 0.0;
}

double SphericalDistribution::density_unchecked(const Eigen::Ref<const Vector>& theta) const {
  if (kind_ == DistributionKind::kPeanut) return peanut_scale_ * quadratic_form(a_, theta);
  return std::exp(log_density_unchecked(theta));
}

// ---------------------------------------------------------------------------
// Free functions

std::vector<std::string> validate(const SphericalDistribution& dist) { return dist.violations(); }

namespace {

void check_theta(const SphericalDistribution& dist, const UnitVector& theta) {
  if (theta.dim() != dist.dim()) {
    throw ShapeError("density: theta has dimension " + std::to_string(theta.dim()) +
                     ", distribution has " + std::to_string(dist.dim()));
  }
  dist.require_valid();
}

}  // namespace

double density(const SphericalDistribution& dist, const UnitVector& theta) {
  check_theta(dist, theta);
  return dist.density_unchecked(theta.coords());
}

double log_density(const SphericalDistribution& dist, const UnitVector& theta) {
  check_theta(dist, theta);
  return dist.log_density_unchecked(theta.coords());
}

double log_sphere_surface_area(int n) {
  if (n < 2) throw DomainError("sphere_surface_area: n must be >= 2");
  const double half = 0.5 * n;
  return std::numbers::ln2 + half * std::log(std::numbers::pi) - log_gamma(half);
}

double sphere_surface_area(int n) {
  if (n < 2) throw DomainError("sphere_surface_area: n must be >= 2");
  const double half = 0.5 * n;
  return 2.0 * std::pow(std::numbers::pi, half) / gamma(half);
}

double vmf_log_normalizer(int n, double k) {
  if (n < 2) throw DomainError("vmf_log_normalizer: n must be >= 2");
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("vmf_log_normalizer: k must be >= 0");
  if (k == 0.0) return -std::log(sphere_surface_area(n));
  const double p = 0.5 * n - 1.0;
  const double log_ip = log_bessel_i(BesselOrder(p), k);
  return p * std::log(k) - 0.5 * n * std::log(2.0 * std::numbers::pi) - log_ip;
}

}  // namespace sphermoments
