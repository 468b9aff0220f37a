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

#include "sphermoments/oracle.hpp"

#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numbers>

#include "sphermoments/errors.hpp"
#include "sphermoments/moments.hpp"
#include "test_support.hpp"

namespace sphermoments {
namespace {

using testing::Gen;

Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

SphericalDistribution uniform(int n) { return SphericalDistribution::vmf(Vector::Unit(n, 0), 0.0); }

// Empirical mean and covariance of sample columns, with standard errors of
// the second-moment entries.
struct Empirical {
  Vector mean;
  Vector mean_se;
  Matrix second;
  Matrix second_se;
};

Empirical empirical(const Matrix& pts) {
  const int n = static_cast<int>(pts.rows());
  const double m = static_cast<double>(pts.cols());
  Empirical e{Vector::Zero(n), Vector::Zero(n), Matrix::Zero(n, n), Matrix::Zero(n, n)};
  Matrix sq = Matrix::Zero(n, n);
  Vector msq = Vector::Zero(n);
  for (Eigen::Index c = 0; c < pts.cols(); ++c) {
    const Vector t = pts.col(c);
    e.mean += t;
    msq += t.cwiseProduct(t);
    const Matrix outer = t * t.transpose();
    e.second += outer;
    sq += outer.cwiseProduct(outer);
  }
  e.mean /= m;
  e.second /= m;
  e.mean_se = ((msq / m - e.mean.cwiseProduct(e.mean)) / m).cwiseSqrt();
  e.second_se = ((sq / m - e.second.cwiseProduct(e.second)) / m).cwiseSqrt();
  return e;
}

TEST(Quadrature, UniformCircle) {
  const MomentReport r = quad_moments(uniform(2), QuadratureSpec::for_dimension(2));
  EXPECT_LE(r.mean.cwiseAbs().maxCoeff(), 1e-16);
  EXPECT_LE((r.second_moment - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(r.source, MomentSource::kOracle);
  EXPECT_EQ(r.oracle->method, "quad");
  EXPECT_EQ(r.oracle->resolution, 256);
  EXPECT_TRUE(r.oracle->warnings.empty());
}

TEST(Quadrature, VmfCircleMean) {
  const Vector u = vec({0.6, -0.8});
  const MomentReport r =
      quad_moments(SphericalDistribution::vmf(u, 2.0), QuadratureSpec::for_dimension(2));
  EXPECT_LE((r.mean - 0.69777465796400798 * u).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Quadrature, PeanutSphereIsExact) {
  const Matrix a = vec({1.0, 2.0, 3.0}).asDiagonal();
  const MomentReport r =
      quad_moments(SphericalDistribution::peanut(a), QuadratureSpec::for_dimension(3));
  const Matrix expected = Matrix::Identity(3, 3) / 5.0 + 2.0 * a / 30.0;
  EXPECT_LE((r.covariance - expected).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NEAR(r.oracle->mass, 1.0, 1e-13);
}

TEST(Quadrature, ResolutionDoublingIsStable) {
  Gen gen(40);
  for (int n : {2, 3}) {
    const std::vector<SphericalDistribution> dists = {
        SphericalDistribution::vmf(gen.unit_vector(n).coords(), 20.0),
        SphericalDistribution::bimodal_vmf(gen.unit_vector(n).coords(), 50.0),
        SphericalDistribution::peanut(gen.spd(n))};
    for (const auto& d : dists) {
      const MomentReport r = quad_moments(d, QuadratureSpec::for_dimension(n, 256));
      EXPECT_TRUE(r.oracle->warnings.empty()) << to_string(d.kind());
      const MomentReport r2 = quad_moments(d, QuadratureSpec::for_dimension(n, 512));
      EXPECT_LE((r.second_moment - r2.second_moment).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(Quadrature, UnderResolvedWarns) {
  const auto sharp = SphericalDistribution::vmf(Vector::Unit(3, 2), 2000.0);
  const MomentReport r = quad_moments(sharp, QuadratureSpec::for_dimension(3, 16));
  EXPECT_FALSE(r.oracle->warnings.empty());
}

TEST(Quadrature, Errors) {
  EXPECT_THROW(QuadratureSpec::for_dimension(4), UnsupportedError);
  EXPECT_THROW(quad_moments(uniform(3), QuadratureSpec::for_dimension(2)), ShapeError);
  QuadratureSpec bad = QuadratureSpec::for_dimension(2, 100);
  EXPECT_THROW(quad_moments(uniform(2), bad), ValidationError);
  bad.resolution = 8;
  EXPECT_THROW(quad_moments(uniform(2), bad), ValidationError);
  QuadratureSpec mismatch = QuadratureSpec::for_dimension(3);
  mismatch.scheme = QuadratureScheme::kCircleTrapezoid;
  EXPECT_THROW(quad_moments(uniform(3), mismatch), UnsupportedError);
}

TEST(GaussLegendre, IntegratesPolynomials) {
  const GaussLegendreRule& rule = gauss_legendre(20);
  double sum_w = 0.0;
  double x38 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum_w += rule.weights[i];
    x38 += rule.weights[i] * std::pow(rule.nodes[i], 38);
  }
  EXPECT_NEAR(sum_w, 2.0, 1e-14);
  EXPECT_NEAR(x38, 2.0 / 39.0, 1e-14);
  EXPECT_EQ(&gauss_legendre(20), &rule);
}

TEST(MonteCarlo, UniformSecondMoment) {
  const MomentReport r = mc_moments(uniform(6), McSpec(6, 1'000'000, 3));
  const Matrix& se = *r.oracle->second_moment_standard_error;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const double want = i == j ? 1.0 / 6.0 : 0.0;
      EXPECT_LE(std::abs(r.second_moment(i, j) - want), 3.0 * se(i, j)) << i << "," << j;
    }
  }
  EXPECT_EQ(r.oracle->method, "mc");
  EXPECT_EQ(r.oracle->samples, 1'000'000);
  EXPECT_EQ(r.oracle->seed, 3u);
  EXPECT_EQ(r.oracle->generator, mc_generator_name());
}

TEST(MonteCarlo, VmfMatchesClosedForm) {
  Gen gen(41);
  const UnitVector u = gen.unit_vector(5);
  const MomentReport closed = vmf_moments(5, 3.0, u);
  const MomentReport r = mc_moments(SphericalDistribution::vmf(u.coords(), 3.0), McSpec(5, 1'000'000, 9));
  const Matrix& se = *r.oracle->second_moment_standard_error;
  for (int i = 0; i < 5; ++i) {
    EXPECT_LE(std::abs(r.mean(i) - closed.mean(i)), 3.0 * (*r.oracle->mean_standard_error)(i));
    for (int j = 0; j < 5; ++j) {
      EXPECT_LE(std::abs(r.second_moment(i, j) - closed.second_moment(i, j)), 3.0 * se(i, j));
    }
  }
}

TEST(MonteCarlo, BimodalMeanIsZero) {
  Gen gen(42);
  const MomentReport r = mc_moments(
      SphericalDistribution::bimodal_vmf(gen.unit_vector(4).coords(), 4.0), McSpec(4, 500'000, 11));
  for (int i = 0; i < 4; ++i) {
    EXPECT_LE(std::abs(r.mean(i)), 3.0 * (*r.oracle->mean_standard_error)(i));
  }
}

TEST(MonteCarlo, SeedDeterminismAndThreadIndependence) {
  const auto d = SphericalDistribution::peanut(Gen(43).spd(5));
  McSpec spec(5, 300'000, 1234);
  const MomentReport a = mc_moments(d, spec);
  const MomentReport b = mc_moments(d, spec);
  EXPECT_TRUE(a.mean == b.mean);
  EXPECT_TRUE(a.second_moment == b.second_moment);
  EXPECT_TRUE(*a.oracle->second_moment_standard_error == *b.oracle->second_moment_standard_error);
  spec.threads = 3;
  const MomentReport c = mc_moments(d, spec);
  EXPECT_TRUE(a.second_moment == c.second_moment);
  spec.seed = 1235;
  EXPECT_FALSE(mc_moments(d, spec).second_moment == a.second_moment);
}

TEST(MonteCarlo, UnbiasedOverSeeds) {
  for (int n : {3, 5}) {
    Matrix avg = Matrix::Zero(n, n);
    Matrix avg_se = Matrix::Zero(n, n);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const MomentReport r = mc_moments(uniform(n), McSpec(n, 20'000, 500 + seed));
      avg += r.second_moment / 30.0;
      avg_se += *r.oracle->second_moment_standard_error / 30.0;
    }
    const Matrix dev = (avg - Matrix::Identity(n, n) / n).cwiseAbs();
    EXPECT_LT(dev.maxCoeff(), avg_se.maxCoeff()) << n;
  }
}

TEST(MonteCarlo, Errors) {
  EXPECT_THROW(mc_moments(uniform(3), McSpec(3, 9'999, 1)), ValidationError);
  EXPECT_THROW(mc_moments(uniform(3), McSpec(4, 10'000, 1)), ShapeError);
  EXPECT_THROW(mc_moments(SphericalDistribution::vmf(Vector::Unit(3, 0), -2.0), McSpec(3, 10'000, 1)),
               ValidationError);
}

TEST(ThirdMoment, QuadratureAndMonteCarlo) {
  const auto peanut = SphericalDistribution::peanut(vec({1.0, 2.0, 3.0}).asDiagonal());
  const ThirdMomentEstimate q = quad_third_moment(peanut, QuadratureSpec::for_dimension(3));
  EXPECT_EQ(q.tensor.size(), 27u);
  for (double x : q.tensor) EXPECT_LE(std::abs(x), 1e-15);
  // A vMF has a nonzero third moment along u: E[t_0^3] = ... > 0.
  const auto vmf = SphericalDistribution::vmf(Vector::Unit(3, 0), 4.0);
  EXPECT_GT(quad_third_moment(vmf, QuadratureSpec::for_dimension(3)).at(0, 0, 0), 0.3);
  const ThirdMomentEstimate mc = mc_third_moment(vmf, McSpec(3, 200'000, 5));
  const ThirdMomentEstimate exact = quad_third_moment(vmf, QuadratureSpec::for_dimension(3));
  for (std::size_t i = 0; i < mc.tensor.size(); ++i) {
    EXPECT_LE(std::abs(mc.tensor[i] - exact.tensor[i]), 4.0 * mc.standard_error[i] + 1e-15) << i;
  }
}

TEST(SampleVmf, UniformSecondMoment) {
  for (int n : {2, 3, 6}) {
    const SampleSet s = sample_vmf(n, 0.0, UnitVector::axis(n, 0), 200'000, 77);
    EXPECT_EQ(s.count(), 200'000);
    const Empirical e = empirical(s.points);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double want = i == j ? 1.0 / n : 0.0;
        EXPECT_LE(std::abs(e.second(i, j) - want), 3.0 * e.second_se(i, j)) << n;
      }
    }
  }
}

TEST(SampleVmf, ConcentratedMeanDirection) {
  const UnitVector u = UnitVector::normalized(vec({1.0, 2.0, -2.0}));
  const SampleSet s = sample_vmf(3, 100.0, u, 100'000, 78);
  const Vector m = empirical(s.points).mean;
  const double angle = std::acos(std::min(1.0, m.normalized().dot(u.coords())));
  EXPECT_LT(angle, 0.01);
}

TEST(SampleVmf, AcceptanceRateAndUnitNorm) {
  for (double k : {0.0, 0.1, 1.0, 10.0, 100.0}) {
    for (int n : {2, 3, 5, 8}) {
      const SampleSet s = sample_vmf(n, k, UnitVector::axis(n, n - 1), 20'000, 79);
      EXPECT_GT(s.acceptance_rate(), 0.3) << n << " " << k;
      for (Eigen::Index c = 0; c < 100; ++c) EXPECT_NEAR(s.points.col(c).norm(), 1.0, 1e-14);
    }
  }
  EXPECT_THROW(sample_vmf(3, -1.0, UnitVector::axis(3, 0), 10, 1), DomainError);
}

TEST(SampleVmf, Deterministic) {
  const SampleSet a = sample_vmf(4, 3.0, UnitVector::axis(4, 0), 5'000, 80);
  const SampleSet b = sample_vmf(4, 3.0, UnitVector::axis(4, 0), 5'000, 80);
  EXPECT_TRUE(a.points == b.points);
  EXPECT_EQ(a.seed, 80u);
}

// Pearson chi-square of a 64-bin angle histogram against the density.
double circle_chi_square(const SphericalDistribution& dist, const Matrix& pts) {
  constexpr int kBins = 64;
  std::vector<double> observed(kBins, 0.0);
  for (Eigen::Index c = 0; c < pts.cols(); ++c) {
    double phi = std::atan2(pts(1, c), pts(0, c));
    if (phi < 0) phi += 2.0 * std::numbers::pi;
    observed[std::min(kBins - 1, static_cast<int>(phi / (2.0 * std::numbers::pi) * kBins))] += 1.0;
  }
  double chi2 = 0.0;
  const double width = 2.0 * std::numbers::pi / kBins;
  for (int b = 0; b < kBins; ++b) {
    // Simpson's rule on each bin.
    constexpr int kSub = 64;
    const double h = width / kSub;
    double prob = 0.0;
    for (int i = 0; i <= kSub; ++i) {
      const double phi = b * width + i * h;
      const double w = (i == 0 || i == kSub) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      prob += w * density(dist, UnitVector::normalized(vec({std::cos(phi), std::sin(phi)})));
    }
    prob *= h / 3.0;
    const double expected = prob * static_cast<double>(pts.cols());
    chi2 += (observed[b] - expected) * (observed[b] - expected) / expected;
  }
  return chi2;
}

TEST(Samplers, CircleHistogramChiSquare) {
  const double critical = boost::math::quantile(boost::math::chi_squared(63.0), 0.999);
  const Vector u = vec({0.28, 0.96});
  for (double k : {0.5, 3.0, 10.0}) {
    const auto dist = SphericalDistribution::vmf(u, k);
    const SampleSet s = sample_vmf(2, k, UnitVector(u), 200'000, 81);
    EXPECT_LT(circle_chi_square(dist, s.points), critical) << k;
  }
  const Matrix a = vec({3.0, 1.0}).asDiagonal();
  const SampleSet p = sample_peanut(AnisotropyMatrix(a), 200'000, 82);
  EXPECT_LT(circle_chi_square(SphericalDistribution::peanut(a), p.points), critical);
}

TEST(SamplePeanut, IsotropicAcceptsAll) {
  const SampleSet s = sample_peanut(AnisotropyMatrix(Matrix::Identity(4, 4)), 10'000, 83);
  EXPECT_EQ(s.proposals, 10'000);
  EXPECT_EQ(s.acceptance_rate(), 1.0);
}

TEST(SamplePeanut, CovarianceAndMean) {
  const SampleSet s = sample_peanut(AnisotropyMatrix(vec({3.0, 1.0}).asDiagonal()), 1'000'000, 84);
  const Empirical e = empirical(s.points);
  EXPECT_LE(std::abs(e.second(0, 0) - 0.625), 3.0 * e.second_se(0, 0));
  EXPECT_LE(std::abs(e.second(1, 1) - 0.375), 3.0 * e.second_se(1, 1));
  EXPECT_LE(std::abs(e.second(0, 1)), 3.0 * e.second_se(0, 1));
  for (int i = 0; i < 2; ++i) EXPECT_LE(std::abs(e.mean(i)), 3.0 * e.mean_se(i));
}

}  // namespace
}  // namespace sphermoments
