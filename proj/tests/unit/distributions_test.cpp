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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sphermoments/errors.hpp"
#include "sphermoments/oracle.hpp"
#include "test_support.hpp"

namespace sphermoments {
namespace {

using testing::Gen;

bool mentions(const std::vector<std::string>& items, const std::string& needle) {
  return std::any_of(items.begin(), items.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

Matrix diag(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v.asDiagonal();
}

TEST(SphereSurfaceArea, LowDimensions) {
  EXPECT_NEAR(sphere_surface_area(2), 2.0 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(sphere_surface_area(3), 4.0 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(sphere_surface_area(4), 2.0 * std::numbers::pi * std::numbers::pi, 1e-13);
  EXPECT_NEAR(std::exp(log_sphere_surface_area(7)), sphere_surface_area(7), 1e-12);
  EXPECT_THROW(sphere_surface_area(1), DomainError);
}

TEST(UnitVector, Invariants) {
  EXPECT_NO_THROW(UnitVector(Vector::Unit(3, 1)));
  EXPECT_THROW(UnitVector(Vector::Constant(3, 1.0)), ValidationError);
  EXPECT_THROW(UnitVector(Vector::Unit(1, 0)), ValidationError);
  EXPECT_THROW(UnitVector::normalized(Vector::Zero(3)), DomainError);
  const UnitVector u = UnitVector::normalized(Vector::Constant(4, 2.0));
  EXPECT_NEAR(u.coords().norm(), 1.0, 1e-15);
}

TEST(Density, UniformCircleAtZeroConcentration) {
  Vector u(2);
  u << 1.0, 0.0;
  const auto dist = SphericalDistribution::vmf(u, 0.0);
  EXPECT_NEAR(density(dist, UnitVector::axis(2, 1)), 1.0 / (2.0 * std::numbers::pi), 1e-15);
}

TEST(Density, IsotropicPeanutIsUniform) {
  const auto dist = SphericalDistribution::peanut(Matrix::Identity(2, 2));
  Gen gen(1);
  for (int i = 0; i < 20; ++i) {
    EXPECT_NEAR(density(dist, gen.unit_vector(2)), 1.0 / (2.0 * std::numbers::pi), 1e-15);
  }
}

TEST(Density, VmfSphereAtMeanDirection) {
  const auto dist = SphericalDistribution::vmf(Vector::Unit(3, 0), 2.0);
  // k e^k / (4 pi sinh k) at k = 2, from a 40-digit evaluation.
  EXPECT_NEAR(density(dist, UnitVector::axis(3, 0)), 0.32424870843767356, 1e-15);
  // Independent check: the quadrature oracle integrates it to one.
  EXPECT_NEAR(quad_mass(dist, QuadratureSpec::for_dimension(3)).mass, 1.0, 1e-12);
}

TEST(Density, VmfLargeConcentrationIsFinite) {
  const auto dist = SphericalDistribution::vmf(Vector::Unit(3, 2), 1e4);
  const double at_mode = density(dist, UnitVector::axis(3, 2));
  EXPECT_TRUE(std::isfinite(at_mode));
  EXPECT_NEAR(at_mode, 1e4 / (2.0 * std::numbers::pi), 1e4 / (2.0 * std::numbers::pi) * 1e-10);
  EXPECT_EQ(density(dist, -UnitVector::axis(3, 2)), 0.0);
  EXPECT_NEAR(log_density(dist, -UnitVector::axis(3, 2)),
              std::log(1e4 / (2.0 * std::numbers::pi)) - 2e4, 1e-8);
}

TEST(Validate, Examples) {
  Vector u(2);
  u << 1.0, 0.0;
  EXPECT_TRUE(mentions(validate(SphericalDistribution::vmf(u, -1.0)), "k must be >= 0"));
  EXPECT_TRUE(
      mentions(validate(SphericalDistribution::peanut(diag({1.0, -1.0}))), "A not positive definite"));
  EXPECT_TRUE(validate(SphericalDistribution::bimodal_vmf(u, 3.0)).empty());
}

TEST(Validate, EveryInvariantHasAMessage) {
  EXPECT_TRUE(mentions(validate(SphericalDistribution::vmf(Vector::Constant(3, 1.0), 1.0)),
                       "unit vector"));
  EXPECT_TRUE(mentions(validate(SphericalDistribution::vmf(
                           Vector::Unit(3, 0), std::numeric_limits<double>::infinity())),
                       "finite"));
  EXPECT_TRUE(mentions(validate(SphericalDistribution::odf(Matrix::Identity(2, 2))),
                       "ODF requires n = 3"));
  EXPECT_TRUE(mentions(validate(SphericalDistribution::bingham(Matrix::Identity(3, 3), 0.0)),
                       "delta"));
  EXPECT_TRUE(mentions(validate(SphericalDistribution::peanut(Matrix(2, 3))), "square"));
  EXPECT_TRUE(mentions(validate(SphericalDistribution::peanut(diag({-1.0, -2.0}))), "trace"));
  EXPECT_TRUE(validate(SphericalDistribution::bingham(Matrix::Identity(4, 4), 0.5)).empty());
}

TEST(Density, Errors) {
  const auto dist = SphericalDistribution::vmf(Vector::Unit(3, 0), 1.0);
  EXPECT_THROW(density(dist, UnitVector::axis(2, 0)), ShapeError);
  const auto bad = SphericalDistribution::vmf(Vector::Unit(3, 0), -1.0);
  EXPECT_THROW(density(bad, UnitVector::axis(3, 0)), ValidationError);
}

TEST(Density, BinghamNormalizationFlag) {
  EXPECT_TRUE(SphericalDistribution::bingham(Matrix::Identity(3, 3), 0.3).is_normalized());
  EXPECT_FALSE(SphericalDistribution::bingham(Matrix::Identity(4, 4), 0.3).is_normalized());
}

// A random valid distribution of each kind available in dimension n.
std::vector<SphericalDistribution> random_distributions(Gen& gen, int n) {
  std::vector<SphericalDistribution> out;
  out.push_back(SphericalDistribution::vmf(gen.unit_vector(n).coords(), gen.log_uniform(0.05, 30.0)));
  out.push_back(
      SphericalDistribution::bimodal_vmf(gen.unit_vector(n).coords(), gen.log_uniform(0.05, 30.0)));
  out.push_back(SphericalDistribution::peanut(gen.spd(n)));
  out.push_back(SphericalDistribution::peanut(gen.asymmetric_pd(n)));
  if (n == 3) out.push_back(SphericalDistribution::odf(gen.spd(n, 0.3, 3.0)));
  out.push_back(SphericalDistribution::bingham(gen.spd(n, 0.3, 3.0), gen.uniform(0.1, 1.0)));
  return out;
}

TEST(DensityProperties, NonnegativeAndAntipodal) {
  Gen gen(2024);
  for (int n = 2; n <= 6; ++n) {
    for (const auto& dist : random_distributions(gen, n)) {
      ASSERT_TRUE(dist.is_valid());
      for (int i = 0; i < 10'000; ++i) {
        const UnitVector theta = gen.unit_vector(n);
        const double q = density(dist, theta);
        ASSERT_GE(q, 0.0);
        if (dist.kind() == DistributionKind::kVmf) continue;
        const double q_minus = density(dist, -theta);
        if (dist.kind() == DistributionKind::kPeanut) {
          ASSERT_EQ(q, q_minus);
        } else {
          ASSERT_LE(std::abs(q - q_minus), 1e-14 * q) << to_string(dist.kind());
        }
      }
    }
  }
}

TEST(DensityProperties, VmfLogDensityDifferences) {
  Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const double k = gen.log_uniform(1e-3, 50.0);
    const UnitVector u = gen.unit_vector(n);
    const auto dist = SphericalDistribution::vmf(u.coords(), k);
    const UnitVector t1 = gen.unit_vector(n);
    const UnitVector t2 = gen.unit_vector(n);
    const double diff = log_density(dist, t1) - log_density(dist, t2);
    EXPECT_NEAR(diff, k * (t1.coords() - t2.coords()).dot(u.coords()), 1e-12);
  }
}

TEST(DensityProperties, QuadratureNormalizationLowDimensions) {
  Gen gen(99);
  for (int trial = 0; trial < 10; ++trial) {
    for (int n : {2, 3}) {
      for (const auto& dist : random_distributions(gen, n)) {
        if (dist.kind() == DistributionKind::kBingham) continue;  // reported only
        const double mass = quad_mass(dist, QuadratureSpec::for_dimension(n)).mass;
        EXPECT_NEAR(mass, 1.0, 1e-8) << to_string(dist.kind()) << " n=" << n;
      }
    }
  }
}

TEST(DensityProperties, MonteCarloNormalizationHighDimensions) {
  Gen gen(4);
  for (int n = 4; n <= 8; ++n) {
    for (const auto& dist : random_distributions(gen, n)) {
      if (dist.kind() == DistributionKind::kBingham) continue;
      const MassEstimate est = mc_mass(dist, McSpec(n, 200'000, 17 + n));
      EXPECT_LE(std::abs(est.mass - 1.0), 3.0 * est.standard_error)
          << to_string(dist.kind()) << " n=" << n << " mass=" << est.mass;
    }
  }
}

}  // namespace
}  // namespace sphermoments
