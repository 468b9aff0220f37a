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

// Diffusion tensors D = (s^2 / mu) Var[q] of velocity-jump processes and
// their anisotropy measures: fractional anisotropy (n = 2, 3 only) and the
// ratio R of largest to smallest eigenvalue (any n).
//
// Two routes produce an AnisotropyReport:
//   * generic: build D, eigensolve it, apply the FA and R definitions;
//   * closed form: eigenvalues straight from the parameters, for the peanut
//     density (from the eigenvalues of A) and the bimodal vMF
//     (D = alpha I + beta u u^T).
// The two are expected to agree to rounding and are tested against each other.

#pragma once

#include <cmath>
#include <optional>

#include "sphermoments/distributions.hpp"
#include "sphermoments/linalg.hpp"

namespace sphermoments {

/// Speed s (length/time) and turning rate mu (1/time), both > 0.
class MotilityParams {
 public:
  /// Throws ValidationError unless both are finite and strictly positive.
  MotilityParams(double s, double mu);

  double speed() const noexcept { return s_; }
  double turning_rate() const noexcept { return mu_; }
  /// s^2 / mu
  double scale() const noexcept { return s_ * s_ / mu_; }

 private:
  double s_;
  double mu_;
};

struct DiffusionTensor {
  Matrix d;
  MotilityParams params;

  int dim() const noexcept { return static_cast<int>(d.rows()); }
};

// Upper bounds on peanut anisotropy.
inline const double kPeanutFa2Max = 2.0 / std::sqrt(10.0);
inline const double kPeanutFa3Max = 2.0 / std::sqrt(11.0);
inline constexpr double kPeanutRatioMax = 3.0;
inline constexpr double kBoundSlack = 1e-12;

struct BoundFlags {
  bool applies = false;  // true for peanut reports
  bool fa_within = true;
  bool ratio_within = true;

  bool all_within() const noexcept { return fa_within && ratio_within; }
};

enum class ReportPath { kGeneric, kClosedForm };

const char* to_string(ReportPath path) noexcept;

struct AnisotropyReport {
  Vector eigenvalues;       // descending
  std::optional<double> fa; // present for n in {2, 3}
  double ratio = 1.0;       // +inf when the smallest eigenvalue vanishes
  BoundFlags bounds;
  ReportPath path = ReportPath::kGeneric;
};

/// D = (s^2/mu) Var[q] from the closed-form covariance. Throws
/// UnsupportedError for ODF and Bingham.
DiffusionTensor diffusion_tensor(const SphericalDistribution& dist, const MotilityParams& params);

/// FA_2 or FA_3 depending on eigenvalues.size(). Throws UnsupportedError for
/// other sizes, DomainError for negative or all-zero eigenvalues.
double fractional_anisotropy(const Vector& eigenvalues);

/// max / min. Throws DomainError if min <= 0.
double anisotropy_ratio(const Vector& eigenvalues);

/// Eigensolve D and apply the definitions. `peanut_bounds` attaches the
/// peanut bound flags.
AnisotropyReport generic_report(const DiffusionTensor& tensor, bool peanut_bounds = false);

/// diffusion_tensor followed by generic_report; bounds are attached for
/// peanut distributions.
AnisotropyReport anisotropy_report(const SphericalDistribution& dist, const MotilityParams& params);

/// Peanut eigenvalues s^2/(mu(n+2)) (1 + 2 lambda_i / tr A) from the
/// eigenvalues lambda_i of A. A must be symmetric (ValidationError
/// otherwise); symmetrize upstream if that is what is meant.
AnisotropyReport peanut_closed_form_report(const AnisotropyMatrix& a, const MotilityParams& params);

/// alpha(k) = s^2 I_{n/2} / (mu k I_{n/2-1}), beta(k) = s^2 I_{n/2+1} / (mu I_{n/2-1}).
struct BimodalTensorCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
};

BimodalTensorCoefficients bimodal_vmf_tensor_coefficients(int n, double k,
                                                          const MotilityParams& params);

/// Report for the bimodal vMF tensor alpha I + beta u u^T.
AnisotropyReport vmf_closed_form_report(int n, double k, const UnitVector& u,
                                        const MotilityParams& params);

}  // namespace sphermoments
