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

#include "sphermoments_cli/suites.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "sphermoments/anisotropy.hpp"
#include "sphermoments/moments.hpp"
#include "sphermoments/oracle.hpp"
#include "sphermoments/specfun.hpp"
#include "sphermoments_cli/bench.hpp"

namespace sphermoments::cli {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(base) ^ a) ^ (b * 0xD1B54A32D192ED03ULL));
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  UnitVector unit_vector(int n) {
    Vector v(n);
    do {
      for (int i = 0; i < n; ++i) v(i) = normal_(rng_);
    } while (v.norm() < 1e-8);
    return UnitVector::normalized(v);
  }

  Matrix rotation(int n) {
    Matrix g(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) g(i, j) = normal_(rng_);
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    return qr.householderQ();
  }

  Matrix spd(int n, double lo = 0.1, double hi = 10.0) {
    const Matrix q = rotation(n);
    Vector ev(n);
    for (int i = 0; i < n; ++i) ev(i) = log_uniform(lo, hi);
    const Matrix a = q * ev.asDiagonal() * q.transpose();
    return 0.5 * (a + a.transpose());
  }

  // Positive-definite symmetric part plus a skew part.
  Matrix asymmetric_pd(int n) {
    Matrix skew(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) skew(i, j) = normal_(rng_);
    }
    return spd(n) + 0.5 * (skew - skew.transpose());
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

using Clock = std::chrono::steady_clock;

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

double max_abs_dev(const MomentReport& a, const MomentReport& b) {
  return std::max((a.mean - b.mean).cwiseAbs().maxCoeff(),
                  (a.covariance - b.covariance).cwiseAbs().maxCoeff());
}

double z_score(double diff, double se) {
  if (diff == 0.0) return 0.0;
  return se > 0.0 ? std::abs(diff) / se : std::numeric_limits<double>::infinity();
}

// Largest |closed - estimate| / SE over the mean and the upper triangle of
// the second moment.
double moment_max_z(const MomentReport& closed, const MomentReport& mc) {
  const OracleDetails& o = *mc.oracle;
  const int n = static_cast<int>(closed.mean.size());
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    z = std::max(z, z_score(closed.mean(i) - mc.mean(i), (*o.mean_standard_error)(i)));
    for (int j = i; j < n; ++j) {
      z = std::max(z, z_score(closed.second_moment(i, j) - mc.second_moment(i, j),
                              (*o.second_moment_standard_error)(i, j)));
    }
  }
  return z;
}

// Tracks the 3-SE comparisons and the single 4-SE retry per grid point.
struct SeTracker {
  SuiteResult& result;

  // z_at(seed) runs one estimate. Returns the z that decided the point.
  template <class F>
  void check(const std::string& label, std::uint64_t seed, F&& z_at) {
    ++result.checks;
    double z = z_at(seed);
    if (z > kSeLimit) {
      ++result.retries;
      const double first = z;
      z = z_at(derive_seed(seed, 0x5E7A7));
      const bool ok = z <= kRetrySeLimit;
      result.notes.push_back(label + ": " + fmt(first) + " SE, retry " + fmt(z) + " SE" +
                             (ok ? "" : " (failed)"));
      if (!ok) result.passed = false;
    }
    result.value = std::max(result.value, z);
  }
};

SuiteResult start(int criterion, std::string name, std::string metric, double threshold) {
  SuiteResult r;
  r.criterion = criterion;
  r.name = std::move(name);
  r.metric = std::move(metric);
  r.threshold = threshold;
  r.passed = true;
  return r;
}

template <class F>
SuiteResult timed(F&& body) {
  const auto t0 = Clock::now();
  SuiteResult r = body();
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

void record_max(SuiteResult& r, double value) {
  ++r.checks;
  r.value = std::max(r.value, value);
  if (!(value <= r.threshold)) r.passed = false;
}

void collect_warnings(SuiteResult& r, const MomentReport& report, const std::string& label) {
  for (const auto& w : report.oracle->warnings) r.notes.push_back(label + ": " + w);
}

// Empirical first and second moments of sample columns, with standard errors.
MomentReport empirical_moments(const Matrix& pts) {
  const int n = static_cast<int>(pts.rows());
  const double m = static_cast<double>(pts.cols());
  Vector mean = Vector::Zero(n);
  Vector mean_sq = Vector::Zero(n);
  Matrix second = Matrix::Zero(n, n);
  Matrix second_sq = Matrix::Zero(n, n);
  for (Eigen::Index c = 0; c < pts.cols(); ++c) {
    const Vector t = pts.col(c);
    mean += t;
    mean_sq += t.cwiseProduct(t);
    const Matrix outer = t * t.transpose();
    second += outer;
    second_sq += outer.cwiseProduct(outer);
  }
  mean /= m;
  second /= m;
  MomentReport r = make_moment_report(mean, second, MomentSource::kOracle);
  OracleDetails d;
  d.method = "sampler";
  d.mean_standard_error = Vector(((mean_sq / m - mean.cwiseProduct(mean)) / m).cwiseSqrt());
  d.second_moment_standard_error =
      Matrix(((second_sq / m - second.cwiseProduct(second)) / m).cwiseSqrt());
  r.oracle = std::move(d);
  return r;
}

}  // namespace

Json to_json(const SuiteResult& r) {
  Json out;
  out["criterion"] = r.criterion;
  out["name"] = r.name;
  out["passed"] = r.passed;
  out["metric"] = r.metric;
  if (std::isfinite(r.value)) {
    out["value"] = r.value;
  } else {
    out["value"] = "inf";
  }
  out["threshold"] = r.threshold;
  out["checks"] = r.checks;
  out["retries"] = r.retries;
  out["notes"] = r.notes;
  return out;
}

SuiteResult suite_vmf_quadrature(const SuiteConfig& config) {
  return timed([&] {
    SuiteResult r = start(1, "vmf closed form vs quadrature (n = 2, 3)", "max_abs_dev", 1e-8);
    const std::vector<double> ks =
        config.full() ? std::vector<double>{0.1, 1, 5, 20, 100} : std::vector<double>{1, 20};
    const int draws = config.full() ? 10 : 2;
    Random rng(derive_seed(config.seed, 1));
    for (int n : {2, 3}) {
      for (double k : ks) {
        for (int d = 0; d < draws; ++d) {
          const UnitVector u = rng.unit_vector(n);
          const auto dist = SphericalDistribution::vmf(u.coords(), k);
          const MomentReport quad = quad_moments(dist, QuadratureSpec::for_dimension(n, 256));
          collect_warnings(r, quad, "n=" + std::to_string(n) + " k=" + fmt(k));
          record_max(r, max_abs_dev(vmf_moments(n, k, u), quad));
        }
      }
    }
    return r;
  });
}

SuiteResult suite_vmf_monte_carlo(const SuiteConfig& config) {
  return timed([&] {
    SuiteResult r = start(2, "vmf closed form vs Monte Carlo (n = 4..8)", "max_z [3 SE, 4 SE on retry]", kSeLimit);
    const std::vector<int> ns = config.full() ? std::vector<int>{4, 5, 6, 7, 8} : std::vector<int>{4, 6};
    const std::vector<double> ks = config.full() ? std::vector<double>{1, 5} : std::vector<double>{1};
    Random rng(derive_seed(config.seed, 2));
    SeTracker tracker{r};
    for (int n : ns) {
      for (double k : ks) {
        const UnitVector u = rng.unit_vector(n);
        const auto dist = SphericalDistribution::vmf(u.coords(), k);
        const MomentReport closed = vmf_moments(n, k, u);
        tracker.check("n=" + std::to_string(n) + " k=" + fmt(k),
                      derive_seed(config.seed, 2, static_cast<std::uint64_t>(n * 100 + k)),
                      [&](std::uint64_t seed) {
                        return moment_max_z(closed, mc_moments(dist, McSpec(n, config.mc_samples(), seed)));
                      });
      }
    }
    return r;
  });
}

SuiteResult suite_peanut_moments(const SuiteConfig& config) {
  return timed([&] {
    SuiteResult r = start(3, "peanut closed form vs oracle (n = 2..8)",
                          "max_z [3 SE, 4 SE on retry] (quad points need max_abs_dev <= 1e-9, trace within 1e-10)", kSeLimit);
    const std::vector<int> ns =
        config.full() ? std::vector<int>{2, 3, 4, 5, 6, 7, 8} : std::vector<int>{2, 3, 5};
    const int spd_draws = config.full() ? 20 : 2;
    const int asym_draws = config.full() ? 10 : 1;
    Random rng(derive_seed(config.seed, 3));
    SeTracker tracker{r};
    double worst_quad = 0.0;
    double worst_trace = 0.0;
    std::uint64_t point = 0;
    for (int n : ns) {
      for (int d = 0; d < spd_draws + asym_draws; ++d) {
        const Matrix a = d < spd_draws ? rng.spd(n) : rng.asymmetric_pd(n);
        const auto dist = SphericalDistribution::peanut(a);
        const MomentReport closed = peanut_moments(AnisotropyMatrix(a));
        worst_trace = std::max(worst_trace, std::abs(closed.second_moment.trace() - 1.0));
        ++point;
        const std::string label = "n=" + std::to_string(n) + " draw " + std::to_string(d);
        if (n <= 3) {
          ++r.checks;
          const MomentReport quad = quad_moments(dist, QuadratureSpec::for_dimension(n, 256));
          collect_warnings(r, quad, label);
          worst_quad = std::max(worst_quad, max_abs_dev(closed, quad));
        } else {
          tracker.check(label, derive_seed(config.seed, 3, point), [&](std::uint64_t seed) {
            return moment_max_z(closed, mc_moments(dist, McSpec(n, config.mc_samples(), seed)));
          });
        }
      }
    }
    r.notes.push_back("quadrature max_abs_dev " + fmt(worst_quad));
    r.notes.push_back("max |trace - 1| " + fmt(worst_trace));
    if (!(worst_quad <= 1e-9)) r.passed = false;
    if (!(worst_trace <= 1e-10)) r.passed = false;
    return r;
  });
}

SuiteResult suite_bessel_identities(const SuiteConfig& config) {
  return timed([&] {
    (void)config;
    SuiteResult r = start(4, "Bessel ratio identities for n = 3", "max_abs_err", 1e-9);
    constexpr int kPoints = 200;
    const double lo = std::log(0.05);
    const double hi = std::log(50.0);
    for (int i = 0; i < kPoints; ++i) {
      const double k = std::exp(lo + (hi - lo) * i / (kPoints - 1));
      const double coth = 1.0 / std::tanh(k);
      const double r32 = bessel_ratio(BesselOrder(1.5), k);
      const double r52 = bessel_ratio(BesselOrder(2.5), k) * r32;
      record_max(r, std::abs(r32 - (coth - 1.0 / k)));
      record_max(r, std::abs((r52 - r32 * r32) - (1.0 - coth / k + 2.0 / (k * k) - coth * coth)));
    }
    return r;
  });
}

SuiteResult suite_peanut_bounds(const SuiteConfig& config) {
  return timed([&] {
    SuiteResult r = start(5, "peanut anisotropy bounds", "max_excess_over_bound", kBoundSlack);
    r.value = -std::numeric_limits<double>::infinity();
    const int draws = config.full() ? 1000 : 100;
    const MotilityParams params(1.0, 1.0);
    Random rng(derive_seed(config.seed, 5));
    double closest = 0.0;
    for (int n : {2, 3}) {
      const double fa_max = n == 2 ? kPeanutFa2Max : kPeanutFa3Max;
      for (int d = 0; d < draws; ++d) {
        const AnisotropyReport rep =
            peanut_closed_form_report(AnisotropyMatrix(rng.spd(n, 1e-3, 1e3)), params);
        record_max(r, *rep.fa - fa_max);
        record_max(r, rep.ratio - kPeanutRatioMax);
        record_max(r, 1.0 - rep.ratio);
        closest = std::max(closest, *rep.fa / fa_max);
      }
    }
    Matrix big = Matrix::Identity(2, 2);
    big(0, 0) = 1e6;
    const double fa = *peanut_closed_form_report(AnisotropyMatrix(big), params).fa;
    const double gap = std::abs(fa - kPeanutFa2Max);
    r.notes.push_back("A = diag(1e6, 1): |FA2 - 2/sqrt(10)| = " + fmt(gap));
    r.notes.push_back("largest FA / bound over random draws " + fmt(closest));
    if (!(gap <= 1e-4)) r.passed = false;
    return r;
  });
}

SuiteResult suite_bimodal_range(const SuiteConfig& config) {
  return timed([&] {
    (void)config;
    SuiteResult r = start(6, "bimodal vmf anisotropy range", "violations", 0.0);
    const MotilityParams params(1.0, 1.0);
    for (int n : {2, 3}) {
      const UnitVector u = UnitVector::axis(n, 0);
      const AnisotropyReport low = vmf_closed_form_report(n, 1e-3, u, params);
      const AnisotropyReport high = vmf_closed_form_report(n, 500.0, u, params);
      const std::string tag = "n=" + std::to_string(n);
      r.notes.push_back(tag + ": FA(1e-3) = " + fmt(*low.fa) + ", FA(500) = " + fmt(*high.fa) +
                        ", R(1e-3) = " + fmt(low.ratio));
      double violations = 0.0;
      violations += *low.fa < 1e-2 ? 0 : 1;
      violations += *high.fa > 0.99 ? 0 : 1;
      violations += low.ratio < 1.01 ? 0 : 1;
      constexpr int kPoints = 50;
      double prev_ratio = 0.0;
      double prev_fa = -1.0;
      for (int i = 0; i < kPoints; ++i) {
        const double k = std::exp(std::log(1e-3) + (std::log(500.0) - std::log(1e-3)) * i / (kPoints - 1));
        const AnisotropyReport rep = vmf_closed_form_report(n, k, u, params);
        violations += rep.ratio >= prev_ratio ? 0 : 1;
        violations += *rep.fa >= prev_fa ? 0 : 1;
        prev_ratio = rep.ratio;
        prev_fa = *rep.fa;
      }
      record_max(r, violations);
    }
    return r;
  });
}

SuiteResult suite_odd_moments(const SuiteConfig& config) {
  return timed([&] {
    SuiteResult r = start(7, "odd moments vanish", "max_z [3 SE, 4 SE on retry] (quad points need max_abs <= 1e-9)", kSeLimit);
    Random rng(derive_seed(config.seed, 7));
    SeTracker tracker{r};
    double worst_quad = 0.0;
    std::uint64_t point = 0;
    const std::vector<int> ns = config.full() ? std::vector<int>{3, 4, 6} : std::vector<int>{3, 4};
    for (int n : ns) {
      std::vector<SphericalDistribution> dists = {
          SphericalDistribution::peanut(rng.spd(n)),
          SphericalDistribution::bingham(rng.spd(n, 0.3, 3.0), rng.uniform(0.1, 1.0)),
          SphericalDistribution::bimodal_vmf(rng.unit_vector(n).coords(), rng.log_uniform(0.5, 20.0))};
      if (n == 3) dists.push_back(SphericalDistribution::odf(rng.spd(3, 0.3, 3.0)));
      for (const auto& dist : dists) {
        for (int order : {1, 3}) {
          const std::string label = std::string(to_string(dist.kind())) + " n=" + std::to_string(n) +
                                    " order " + std::to_string(order);
          ++point;
          if (n == 3) {
            ++r.checks;
            const OddMomentCheck c = odd_moments_zero_check(dist, order, {.seed = 0, .samples = 0, .resolution = 256});
            worst_quad = std::max(worst_quad, c.max_abs);
          } else {
            tracker.check(label, derive_seed(config.seed, 7, point), [&](std::uint64_t seed) {
              return odd_moments_zero_check(dist, order, {.seed = seed, .samples = config.mc_samples()}).max_z;
            });
          }
        }
      }
    }
    r.notes.push_back("quadrature max |odd moment| " + fmt(worst_quad));
    if (!(worst_quad <= kOddMomentQuadTolerance)) r.passed = false;
    return r;
  });
}

SuiteResult suite_normalization(const SuiteConfig& config) {
  return timed([&] {
    SuiteResult r = start(8, "densities integrate to one", "max_z [3 SE, 4 SE on retry] (quad points need |mass - 1| <= 1e-8)",
                          kSeLimit);
    Random rng(derive_seed(config.seed, 8));
    SeTracker tracker{r};
    double worst_quad = 0.0;
    std::uint64_t point = 0;
    const std::vector<int> ns =
        config.full() ? std::vector<int>{2, 3, 4, 5, 6, 7, 8} : std::vector<int>{2, 3, 4};
    const int draws = config.full() ? 3 : 1;
    for (int n : ns) {
      for (int d = 0; d < draws; ++d) {
        std::vector<SphericalDistribution> dists = {
            SphericalDistribution::vmf(rng.unit_vector(n).coords(), rng.log_uniform(0.05, 50.0)),
            SphericalDistribution::bimodal_vmf(rng.unit_vector(n).coords(), rng.log_uniform(0.05, 50.0)),
            SphericalDistribution::peanut(rng.spd(n)), SphericalDistribution::peanut(rng.asymmetric_pd(n))};
        if (n == 3) dists.push_back(SphericalDistribution::odf(rng.spd(3, 0.3, 3.0)));
        for (const auto& dist : dists) {
          ++point;
          const std::string label = std::string(to_string(dist.kind())) + " n=" + std::to_string(n);
          if (n <= 3) {
            ++r.checks;
            worst_quad = std::max(worst_quad,
                                  std::abs(quad_mass(dist, QuadratureSpec::for_dimension(n, 256)).mass - 1.0));
          } else {
            tracker.check(label, derive_seed(config.seed, 8, point), [&](std::uint64_t seed) {
              const MassEstimate m = mc_mass(dist, McSpec(n, config.mc_samples(), seed));
              return z_score(m.mass - 1.0, m.standard_error);
            });
          }
        }
      }
    }
    // Reported only.
    const auto bingham = SphericalDistribution::bingham(rng.spd(3, 0.3, 3.0), 0.5);
    r.notes.push_back("bingham n=3 delta=0.5 mass " +
                      fmt(quad_mass(bingham, QuadratureSpec::for_dimension(3, 256)).mass) + " (not asserted)");
    r.notes.push_back("quadrature max |mass - 1| " + fmt(worst_quad));
    if (!(worst_quad <= 1e-8)) r.passed = false;
    return r;
  });
}

SuiteResult suite_report_consistency(const SuiteConfig& config) {
  return timed([&] {
    SuiteResult r = start(9, "closed-form vs generic anisotropy reports", "max_rel_dev", 1e-10);
    Random rng(derive_seed(config.seed, 9));
    const int draws = config.full() ? 200 : 20;
    auto compare = [&](const AnisotropyReport& a, const AnisotropyReport& b) {
      const double scale = std::max(a.eigenvalues.cwiseAbs().maxCoeff(), 1e-300);
      double dev = (a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff() / scale;
      if (a.fa.has_value() != b.fa.has_value()) dev = std::numeric_limits<double>::infinity();
      if (a.fa && b.fa) dev = std::max(dev, std::abs(*a.fa - *b.fa));
      if (std::isinf(a.ratio) || std::isinf(b.ratio)) {
        if (a.ratio != b.ratio) dev = std::numeric_limits<double>::infinity();
      } else {
        dev = std::max(dev, std::abs(a.ratio - b.ratio) / a.ratio);
      }
      record_max(r, dev);
    };
    for (int d = 0; d < draws; ++d) {
      const int n = 2 + d % 7;
      const MotilityParams params(rng.log_uniform(0.1, 10.0), rng.log_uniform(0.1, 10.0));
      const Matrix a = rng.spd(n, 1e-3, 1e3);
      compare(peanut_closed_form_report(AnisotropyMatrix(a), params),
              anisotropy_report(SphericalDistribution::peanut(a), params));
      const double k = rng.log_uniform(1e-4, 1e3);
      const UnitVector u = rng.unit_vector(n);
      compare(vmf_closed_form_report(n, k, u, params),
              anisotropy_report(SphericalDistribution::bimodal_vmf(u.coords(), k), params));
    }
    const MotilityParams unit(1.0, 1.0);
    for (const Vector& diag : {Vector(Vector::LinSpaced(2, 3.0, 1.0)), Vector(Vector::LinSpaced(2, 1e6, 1.0))}) {
      compare(peanut_closed_form_report(AnisotropyMatrix(diag.asDiagonal()), unit),
              anisotropy_report(SphericalDistribution::peanut(diag.asDiagonal()), unit));
    }
    Vector d3(3);
    d3 << 5.0, 2.0, 1.0;
    compare(peanut_closed_form_report(AnisotropyMatrix(d3.asDiagonal()), unit),
            anisotropy_report(SphericalDistribution::peanut(d3.asDiagonal()), unit));
    return r;
  });
}

SuiteResult suite_performance(const SuiteConfig& config) {
  return timed([&] {
    SuiteResult r = start(10, "closed form vs quadrature speed (n = 3, resolution 256)", "speedup",
                          kRequiredSpeedup);
    BenchOptions options;
    options.n = 3;
    options.k = 5.0;
    options.repeats = config.full() ? 7 : 3;
    options.resolution = 256;
    options.seed = config.seed;
    const BenchRow row = bench_vmf_covariance(options);
    r.checks = 1;
    r.value = row.speedup;
    r.passed = row.speedup >= kRequiredSpeedup;
    r.notes.push_back("closed form " + fmt(row.closed_form_seconds) + " s, quadrature " +
                      fmt(row.oracle_seconds) + " s (medians of " + std::to_string(row.repeats) + ")");
    return r;
  });
}

SuiteResult suite_samplers(const SuiteConfig& config) {
  return timed([&] {
    SuiteResult r = start(11, "sampler empirical moments vs closed forms", "max_z [3 SE, 4 SE on retry]", kSeLimit);
    SeTracker tracker{r};
    const std::int64_t count = config.mc_samples();
    const UnitVector u = UnitVector::axis(3, 2);
    const MomentReport vmf_closed = vmf_moments(3, 5.0, u);
    tracker.check("vmf n=3 k=5", derive_seed(config.seed, 11, 1), [&](std::uint64_t seed) {
      return moment_max_z(vmf_closed, empirical_moments(sample_vmf(3, 5.0, u, count, seed).points));
    });
    Matrix a = Matrix::Identity(2, 2);
    a(0, 0) = 3.0;
    const AnisotropyMatrix am(a);
    const MomentReport peanut_closed = peanut_moments(am);
    tracker.check("peanut n=2 A=diag(3,1)", derive_seed(config.seed, 11, 2), [&](std::uint64_t seed) {
      return moment_max_z(peanut_closed, empirical_moments(sample_peanut(am, count, seed).points));
    });
    return r;
  });
}

std::vector<SuiteResult> run_validation_suites(const SuiteConfig& config) {
  return {suite_vmf_quadrature(config),   suite_vmf_monte_carlo(config), suite_peanut_moments(config),
          suite_bessel_identities(config), suite_peanut_bounds(config),   suite_bimodal_range(config),
          suite_odd_moments(config),       suite_normalization(config),   suite_report_consistency(config),
          suite_samplers(config)};
}

}  // namespace sphermoments::cli
