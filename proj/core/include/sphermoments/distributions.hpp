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

// Parameter containers and pointwise densities for the spherical
// distributions handled by the library:
//
//   vMF          q(t) = c_n(k) exp(k t.u)
//   bimodal vMF  q(t) = c_n(k) cosh(k t.u)
//   peanut       q(t) = n t'At / (|S^{n-1}| tr A)
//   ODF (n = 3)  q(t) = 1 / (4 pi |A|^{1/2} (t'A^{-1}t)^{3/2})
//   Bingham      q(t) = (|A| (4 pi delta)^3)^{-1/2} exp(-t'A^{-1}t / (4 delta))
//
// with c_n(k) = k^{n/2-1} / ((2 pi)^{n/2} I_{n/2-1}(k)). Exponential
// families are evaluated in log space so concentrations up to 1e4 work.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sphermoments/linalg.hpp"

namespace sphermoments {

/// A point of S^{n-1}, n >= 2.
class UnitVector {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws ValidationError if n < 2, any entry is non-finite, or
  /// | |coords| - 1 | > kNormTolerance.
  explicit UnitVector(Vector coords);

  /// Scales `v` onto the sphere. Throws DomainError for a zero vector.
  static UnitVector normalized(const Vector& v);

  /// i-th standard basis vector of R^n.
  static UnitVector axis(int n, int i);

  const Vector& coords() const noexcept { return coords_; }
  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_(i); }

  UnitVector operator-() const { return UnitVector(-coords_); }

 private:
  Vector coords_;
};

/// Matrix whose symmetric part is positive definite (and so has positive
/// trace). It need not be symmetric itself.
class AnisotropyMatrix {
 public:
  /// Throws ValidationError listing every violated invariant.
  explicit AnisotropyMatrix(Matrix entries);

  /// Empty iff `entries` is a valid anisotropy matrix.
  static std::vector<std::string> violations(const Matrix& entries);

  const Matrix& entries() const noexcept { return entries_; }
  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  double trace() const { return entries_.trace(); }

 private:
  Matrix entries_;
};

enum class DistributionKind {
  kVmf,
  kBimodalVmf,
  kPeanut,
  kOdf,
  kBingham,
};

/// "vmf", "bimodal_vmf", "peanut", "odf", "bingham".
std::string_view to_string(DistributionKind kind) noexcept;
std::optional<DistributionKind> parse_distribution_kind(std::string_view name) noexcept;

/// A spherical distribution with its parameters.
///
/// The factories never throw: invalid parameters are recorded and reported
/// by validate(), and density evaluation on an invalid distribution throws
/// ValidationError. Values are immutable once built; normalizing constants
/// are computed up front.
class SphericalDistribution {
 public:
  static SphericalDistribution vmf(Vector u, double k);
  static SphericalDistribution bimodal_vmf(Vector u, double k);
  static SphericalDistribution peanut(Matrix a);
  static SphericalDistribution odf(Matrix a);
  static SphericalDistribution bingham(Matrix a, double delta);

  DistributionKind kind() const noexcept { return kind_; }
  int dim() const noexcept { return n_; }

  // vMF and bimodal vMF only.
  const Vector& mean_direction() const noexcept { return u_; }
  double concentration() const noexcept { return k_; }

  // Peanut, ODF and Bingham only.
  const Matrix& anisotropy() const noexcept { return a_; }
  // Bingham only.
  double diffusion_time() const noexcept { return delta_; }

  /// False only for Bingham with n != 3, whose density is then evaluated
  /// without a normalizing constant.
  bool is_normalized() const noexcept { return normalized_; }

  bool is_valid() const noexcept { return violations_.empty(); }
  const std::vector<std::string>& violations() const noexcept { return violations_; }
  /// Throws ValidationError when invalid.
  void require_valid() const;

  /// Evaluation without dimension, norm or validity checks. `theta` must
  /// have dim() entries; the distribution must be valid.
  double density_unchecked(const Eigen::Ref<const Vector>& theta) const;
  double log_density_unchecked(const Eigen::Ref<const Vector>& theta) const;

 private:
  SphericalDistribution(DistributionKind kind, int n);
  void finalize();

  DistributionKind kind_;
  int n_;
  Vector u_;
  double k_ = 0.0;
  Matrix a_;
  double delta_ = 0.0;

  std::vector<std::string> violations_;
  bool normalized_ = true;
  double log_norm_ = 0.0;  // log of the leading constant
  double peanut_scale_ = 0.0;
  Matrix inverse_;  // A^{-1} for ODF and Bingham
};

/// Every violated invariant, or empty.
std::vector<std::string> validate(const SphericalDistribution& dist);

/// q(theta). Throws ShapeError on dimension mismatch and ValidationError for
/// an invalid distribution.
double density(const SphericalDistribution& dist, const UnitVector& theta);
double log_density(const SphericalDistribution& dist, const UnitVector& theta);

/// |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2). Throws DomainError for n < 2.
double sphere_surface_area(int n);
double log_sphere_surface_area(int n);

/// log c_n(k), the vMF normalizing constant; k = 0 gives -log|S^{n-1}|.
double vmf_log_normalizer(int n, double k);

}  // namespace sphermoments
