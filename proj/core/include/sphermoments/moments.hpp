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

// Closed-form moments.
//
// With r_1 = I_{n/2}(k) / I_{n/2-1}(k) and r_2 = I_{n/2+1}(k) / I_{n/2-1}(k):
//
//   vMF          E = r_1 u,  Var = (r_1/k) I + (r_2 - r_1^2) u u^T
//   bimodal vMF  E = 0,      Var = (r_1/k) I + r_2 u u^T
//   peanut       E = 0,      Var = I/(n+2) + (A + A^T) / ((n+2) tr A)
//
// Below kSmallConcentration the vMF forms switch to their k -> 0 limits
// (E = 0, Var = I/n).

#pragma once

#include <cstdint>
#include <string>

#include "sphermoments/distributions.hpp"
#include "sphermoments/moment_report.hpp"

namespace sphermoments {

inline constexpr double kSmallConcentration = 1e-8;

/// Bessel-ratio coefficients shared by the vMF moment and tensor formulas.
struct VmfCoefficients {
  double mean = 0.0;       // r_1
  double isotropic = 0.0;  // r_1 / k
  double axial = 0.0;      // r_2
};

/// Throws DomainError for n < 2 or k < 0.
VmfCoefficients vmf_coefficients(int n, double k);

/// Throws ShapeError if u.dim() != n.
Vector vmf_mean(int n, double k, const UnitVector& u);
Matrix vmf_second_moment(int n, double k, const UnitVector& u);
Matrix vmf_covariance(int n, double k, const UnitVector& u);
MomentReport vmf_moments(int n, double k, const UnitVector& u);

MomentReport bimodal_vmf_moments(int n, double k, const UnitVector& u);

MomentReport peanut_moments(const AnisotropyMatrix& a);

bool has_closed_form(DistributionKind kind) noexcept;

/// Dispatches on kind. Throws UnsupportedError for ODF and Bingham and
/// ValidationError for an invalid distribution.
MomentReport closed_form_moments(const SphericalDistribution& dist);

// ---------------------------------------------------------------------------
// Odd moments of antipodally symmetric densities.

struct OddMomentOptions {
  std::uint64_t seed = 0;
  std::int64_t samples = 1'000'000;  // Monte Carlo, n >= 4
  int resolution = 256;              // quadrature, n in {2, 3}
};

struct OddMomentCheck {
  int order = 1;
  std::string method;     // "quad" or "mc"
  double max_abs = 0.0;   // largest |entry| of the order-1 vector or order-3 tensor
  double max_z = 0.0;     // Monte Carlo only: largest |entry| / standard error
  double tolerance = 0.0; // quadrature only
  bool within_contract = false;  // max_abs <= tolerance (quad) or max_z <= 3 (mc)
};

inline constexpr double kOddMomentQuadTolerance = 1e-9;

/// Oracle magnitude of the first (order = 1) or third (order = 3) moment,
/// normalized by the density's total mass so unnormalized Bingham densities
/// are comparable. Quadrature for n in {2, 3}, Monte Carlo otherwise.
///
/// Throws PreconditionError for a vMF with k > 0 and DomainError for an
/// order other than 1 or 3.
OddMomentCheck odd_moments_zero_check(const SphericalDistribution& dist, int order,
                                      const OddMomentOptions& options = {});

}  // namespace sphermoments
