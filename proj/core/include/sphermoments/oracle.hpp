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

// Numerical reference for the moments of a spherical distribution,
//
//   E[q] = int theta q(theta) dtheta,  M2[q] = int theta theta^T q(theta) dtheta,
//
// computed without any knowledge of the closed forms:
//
//  * quad_moments: periodic trapezoid rule on the circle (n = 2), and
//    Gauss-Legendre in the polar cosine times a trapezoid in azimuth on S^2
//    (n = 3). Both converge spectrally for smooth densities.
//  * mc_moments: uniform points on S^{n-1} (normalized Gaussians) weighted
//    by q |S^{n-1}|, for any n, with per-entry standard errors.
//
// Monte Carlo work is split into fixed blocks of kMcBlockSize samples, each
// with its own generator seeded from (seed, block index), so the result is
// bit-identical whatever the thread count.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sphermoments/distributions.hpp"
#include "sphermoments/moment_report.hpp"

namespace sphermoments {

enum class QuadratureScheme { kCircleTrapezoid, kSphereProduct };

struct QuadratureSpec {
  int n = 3;
  QuadratureScheme scheme = QuadratureScheme::kSphereProduct;
  int resolution = 256;  // points per dimension; power of two, >= 16
  // Re-run at twice the resolution and warn if anything moves by more than
  // kQuadratureConvergenceTol.
  bool check_convergence = true;

  /// Scheme matching n (2 -> circle trapezoid, 3 -> sphere product).
  /// Throws UnsupportedError for other n.
  static QuadratureSpec for_dimension(int n, int resolution = 256);
};

inline constexpr double kQuadratureConvergenceTol = 1e-10;
inline constexpr std::int64_t kMinMcSamples = 10'000;
inline constexpr std::int64_t kMcBlockSize = 1 << 16;

struct McSpec {
  int n;
  std::int64_t samples;
  std::uint64_t seed;
  int threads = 0;  // 0: hardware concurrency

  McSpec(int n, std::int64_t samples, std::uint64_t seed) : n(n), samples(samples), seed(seed) {}
};

/// Name of the random source recorded in every Monte Carlo report.
const std::string& mc_generator_name();

/// Throws UnsupportedError for n not in {2, 3} or a scheme/n mismatch,
/// ValidationError for a bad resolution or invalid distribution, ShapeError
/// if spec.n differs from the distribution's dimension.
MomentReport quad_moments(const SphericalDistribution& dist, const QuadratureSpec& spec);

/// Throws ValidationError for samples < kMinMcSamples or an invalid
/// distribution, ShapeError on dimension mismatch.
MomentReport mc_moments(const SphericalDistribution& dist, const McSpec& spec);

/// Integral of q over the sphere (should be 1 for a normalized density).
struct MassEstimate {
  double mass = 0.0;
  double standard_error = 0.0;  // zero for quadrature
};

MassEstimate quad_mass(const SphericalDistribution& dist, const QuadratureSpec& spec);
MassEstimate mc_mass(const SphericalDistribution& dist, const McSpec& spec);

/// int theta_i theta_j theta_l q(theta) dtheta, all n^3 entries, row-major
/// in (i, j, l). standard_error is empty for quadrature.
struct ThirdMomentEstimate {
  int n = 0;
  std::vector<double> tensor;
  std::vector<double> standard_error;
  double mass = 0.0;

  double at(int i, int j, int l) const { return tensor[(static_cast<std::size_t>(i) * n + j) * n + l]; }
};

ThirdMomentEstimate quad_third_moment(const SphericalDistribution& dist,
                                      const QuadratureSpec& spec);
ThirdMomentEstimate mc_third_moment(const SphericalDistribution& dist, const McSpec& spec);

/// Draws from a sampler; points are the columns of an n x count matrix.
struct SampleSet {
  Matrix points;
  std::int64_t proposals = 0;
  std::uint64_t seed = 0;
  std::string generator;

  std::int64_t count() const { return points.cols(); }
  double acceptance_rate() const {
    return proposals == 0 ? 1.0 : static_cast<double>(count()) / static_cast<double>(proposals);
  }
};

/// Exact vMF sampler (Wood's rejection scheme for the component along u,
/// uniform tangent direction). Throws DomainError for k < 0.
SampleSet sample_vmf(int n, double k, const UnitVector& u, std::int64_t count, std::uint64_t seed);

/// Rejection sampler for the peanut density against the uniform law, with
/// envelope n lambda_max / tr(A) where lambda_max is the top eigenvalue of
/// the symmetric part of A.
SampleSet sample_peanut(const AnisotropyMatrix& a, std::int64_t count, std::uint64_t seed);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached per size; the reference stays valid for the program lifetime.
const GaussLegendreRule& gauss_legendre(int points);

}  // namespace sphermoments
