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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "sphermoments/errors.hpp"

namespace sphermoments {
namespace {

// ---------------------------------------------------------------------------
// Feature maps. A feature map writes m values g(theta) into `out`; the
// integrators return int g(theta) q(theta) dtheta for each of them.

struct MomentFeatures {
  int n;
  int size() const { return 1 + n + n * (n + 1) / 2; }
  void operator()(const double* theta, double* out) const {
    out[0] = 1.0;
    for (int i = 0; i < n; ++i) out[1 + i] = theta[i];
    int idx = 1 + n;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) out[idx++] = theta[i] * theta[j];
    }
  }
};

struct ThirdFeatures {
  int n;
  int size() const { return 1 + n * (n + 1) * (n + 2) / 6; }
  void operator()(const double* theta, double* out) const {
    out[0] = 1.0;
    int idx = 1;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        for (int l = j; l < n; ++l) out[idx++] = theta[i] * theta[j] * theta[l];
      }
    }
  }
};

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

void check_dimensions(const SphericalDistribution& dist, int spec_n) {
  if (spec_n != dist.dim()) {
    throw ShapeError("oracle: spec dimension " + std::to_string(spec_n) +
                     " does not match distribution dimension " + std::to_string(dist.dim()));
  }
  dist.require_valid();
}

void check_quadrature_spec(const QuadratureSpec& spec) {
  if (spec.n != 2 && spec.n != 3) {
    throw UnsupportedError("quadrature oracle supports n = 2 or 3 only, got n = " +
                           std::to_string(spec.n));
  }
  const QuadratureScheme expected =
      spec.n == 2 ? QuadratureScheme::kCircleTrapezoid : QuadratureScheme::kSphereProduct;
  if (spec.scheme != expected) {
    throw UnsupportedError("quadrature scheme does not match dimension");
  }
  const int r = spec.resolution;
  if (r < 16 || (r & (r - 1)) != 0) {
    throw ValidationError({"quadrature resolution must be a power of two >= 16, got " +
                           std::to_string(r)});
  }
}

template <class Features>
std::vector<double> quad_integrate(const SphericalDistribution& dist, int resolution,
                                   const Features& features) {
  const int n = dist.dim();
  const int m = features.size();
  std::vector<double> acc(static_cast<std::size_t>(m), 0.0);
  std::vector<double> g(static_cast<std::size_t>(m));
  Vector theta(n);

  auto add_point = [&](double weight) {
    const double w = weight * dist.density_unchecked(theta);
    features(theta.data(), g.data());
    for (int f = 0; f < m; ++f) acc[static_cast<std::size_t>(f)] += w * g[static_cast<std::size_t>(f)];
  };

  const double dphi = 2.0 * std::numbers::pi / resolution;
  if (n == 2) {
    for (int j = 0; j < resolution; ++j) {
      const double phi = dphi * j;
      theta(0) = std::cos(phi);
      theta(1) = std::sin(phi);
      add_point(dphi);
    }
    return acc;
  }

  const GaussLegendreRule& rule = gauss_legendre(resolution);
  std::vector<double> cos_phi(static_cast<std::size_t>(resolution));
  std::vector<double> sin_phi(static_cast<std::size_t>(resolution));
  for (int j = 0; j < resolution; ++j) {
    cos_phi[static_cast<std::size_t>(j)] = std::cos(dphi * j);
    sin_phi[static_cast<std::size_t>(j)] = std::sin(dphi * j);
  }
  for (int i = 0; i < resolution; ++i) {
    const double t = rule.nodes[static_cast<std::size_t>(i)];
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    const double w = rule.weights[static_cast<std::size_t>(i)] * dphi;
    for (int j = 0; j < resolution; ++j) {
      theta(0) = s * cos_phi[static_cast<std::size_t>(j)];
      theta(1) = s * sin_phi[static_cast<std::size_t>(j)];
      theta(2) = t;
      add_point(w);
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Monte Carlo

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t block_seed(std::uint64_t seed, std::int64_t block) {
  return splitmix64(seed + static_cast<std::uint64_t>(block + 1) * 0x9E3779B97F4A7C15ULL);
}

// Running mean and sum of squared deviations, merged with Chan's formula.
struct Moments {
  std::int64_t count = 0;
  std::vector<double> mean;
  std::vector<double> m2;

  explicit Moments(int m) : mean(static_cast<std::size_t>(m), 0.0), m2(static_cast<std::size_t>(m), 0.0) {}

  void add(const double* x) {
    ++count;
    const double inv = 1.0 / static_cast<double>(count);
    for (std::size_t f = 0; f < mean.size(); ++f) {
      const double delta = x[f] - mean[f];
      mean[f] += delta * inv;
      m2[f] += delta * (x[f] - mean[f]);
    }
  }

  void merge(const Moments& other) {
    if (other.count == 0) return;
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(other.count);
    const double total = na + nb;
    for (std::size_t f = 0; f < mean.size(); ++f) {
      const double delta = other.mean[f] - mean[f];
      mean[f] += delta * nb / total;
      m2[f] += other.m2[f] + delta * delta * na * nb / total;
    }
    count += other.count;
  }

  double standard_error(std::size_t f) const {
    if (count < 2) return 0.0;
    const double n = static_cast<double>(count);
    return std::sqrt(std::max(0.0, m2[f]) / (n - 1.0) / n);
  }
};

template <class Fn>
void run_blocks(std::int64_t blocks, int threads, Fn&& fn) {
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = static_cast<int>(std::clamp<std::int64_t>(workers, 1, blocks));
  if (workers == 1) {
    for (std::int64_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::int64_t b = next++; b < blocks; b = next++) fn(b);
    });
  }
}

void check_mc_spec(const McSpec& spec) {
  if (spec.samples < kMinMcSamples) {
    throw ValidationError({"Monte Carlo needs at least " + std::to_string(kMinMcSamples) +
                           " samples, got " + std::to_string(spec.samples)});
  }
}

template <class Features>
Moments mc_integrate(const SphericalDistribution& dist, const McSpec& spec,
                     const Features& features) {
  const int n = dist.dim();
  const int m = features.size();
  const double area = sphere_surface_area(n);
  const std::int64_t blocks = (spec.samples + kMcBlockSize - 1) / kMcBlockSize;
  std::vector<Moments> partial(static_cast<std::size_t>(blocks), Moments(m));

  run_blocks(blocks, spec.threads, [&](std::int64_t b) {
    const std::int64_t begin = b * kMcBlockSize;
    const std::int64_t end = std::min(spec.samples, begin + kMcBlockSize);
    std::mt19937_64 rng(block_seed(spec.seed, b));
    std::normal_distribution<double> normal;
    Vector theta(n);
    std::vector<double> g(static_cast<std::size_t>(m));
    Moments& local = partial[static_cast<std::size_t>(b)];
    for (std::int64_t s = begin; s < end; ++s) {
      double norm2 = 0.0;
      do {
        norm2 = 0.0;
        for (int i = 0; i < n; ++i) {
          theta(i) = normal(rng);
          norm2 += theta(i) * theta(i);
        }
      } while (norm2 == 0.0);
      theta /= std::sqrt(norm2);
      const double w = area * dist.density_unchecked(theta);
      features(theta.data(), g.data());
      for (int f = 0; f < m; ++f) g[static_cast<std::size_t>(f)] *= w;
      local.add(g.data());
    }
  });

  Moments total(m);
  for (const auto& part : partial) total.merge(part);
  return total;
}

MomentReport report_from_features(int n, const std::vector<double>& integrals) {
  Vector mean(n);
  Matrix second(n, n);
  for (int i = 0; i < n; ++i) mean(i) = integrals[static_cast<std::size_t>(1 + i)];
  int idx = 1 + n;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      second(i, j) = second(j, i) = integrals[static_cast<std::size_t>(idx++)];
    }
  }
  return make_moment_report(std::move(mean), std::move(second), MomentSource::kOracle);
}

ThirdMomentEstimate third_from_features(int n, const std::vector<double>& integrals,
                                        const std::vector<double>* errors) {
  ThirdMomentEstimate out;
  out.n = n;
  const std::size_t total = static_cast<std::size_t>(n) * n * n;
  out.tensor.assign(total, 0.0);
  if (errors != nullptr) out.standard_error.assign(total, 0.0);
  out.mass = integrals[0];
  std::size_t idx = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int l = j; l < n; ++l, ++idx) {
        const int perms[6][3] = {{i, j, l}, {i, l, j}, {j, i, l}, {j, l, i}, {l, i, j}, {l, j, i}};
        for (const auto& p : perms) {
          const std::size_t flat = (static_cast<std::size_t>(p[0]) * n + p[1]) * n + p[2];
          out.tensor[flat] = integrals[idx];
          if (errors != nullptr) out.standard_error[flat] = (*errors)[idx];
        }
      }
    }
  }
  return out;
}

double max_abs_difference(const MomentReport& a, const MomentReport& b) {
  return std::max((a.mean - b.mean).cwiseAbs().maxCoeff(),
                  (a.second_moment - b.second_moment).cwiseAbs().maxCoeff());
}

}  // namespace

// ---------------------------------------------------------------------------

QuadratureSpec QuadratureSpec::for_dimension(int n, int resolution) {
  QuadratureSpec spec;
  spec.n = n;
  spec.resolution = resolution;
  if (n == 2) {
    spec.scheme = QuadratureScheme::kCircleTrapezoid;
  } else if (n == 3) {
    spec.scheme = QuadratureScheme::kSphereProduct;
  } else {
    throw UnsupportedError("quadrature oracle supports n = 2 or 3 only, got n = " +
                           std::to_string(n));
  }
  return spec;
}

const std::string& mc_generator_name() {
  static const std::string name =
      "mt19937_64; block seed = splitmix64(seed + (block+1)*0x9E3779B97F4A7C15); block = 65536; "
      "std::normal_distribution";
  return name;
}

const GaussLegendreRule& gauss_legendre(int points) {
  if (points < 1) throw DomainError("gauss_legendre: need at least one point");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[points];
  if (slot) return *slot;

  auto rule = std::make_unique<GaussLegendreRule>();
  rule->nodes.resize(static_cast<std::size_t>(points));
  rule->weights.resize(static_cast<std::size_t>(points));
  const int half = (points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= points; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_N(x), p0 = P_{N-1}(x)
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int j = 2; j <= points; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = points * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule->nodes[static_cast<std::size_t>(i)] = -x;
    rule->nodes[static_cast<std::size_t>(points - 1 - i)] = x;
    rule->weights[static_cast<std::size_t>(i)] = w;
    rule->weights[static_cast<std::size_t>(points - 1 - i)] = w;
  }
  if (points % 2 == 1) rule->nodes[static_cast<std::size_t>(points / 2)] = 0.0;
  slot = std::move(rule);
  return *slot;
}

MomentReport quad_moments(const SphericalDistribution& dist, const QuadratureSpec& spec) {
  check_quadrature_spec(spec);
  check_dimensions(dist, spec.n);
  const MomentFeatures features{dist.dim()};
  const auto integrals = quad_integrate(dist, spec.resolution, features);
  MomentReport report = report_from_features(dist.dim(), integrals);

  OracleDetails details;
  details.method = "quad";
  details.resolution = spec.resolution;
  details.mass = integrals[0];
  if (spec.check_convergence) {
    const auto fine = quad_integrate(dist, 2 * spec.resolution, features);
    const MomentReport fine_report = report_from_features(dist.dim(), fine);
    const double change =
        std::max(max_abs_difference(report, fine_report), std::abs(fine[0] - integrals[0]));
    if (!(change < kQuadratureConvergenceTol)) {
      details.warnings.push_back("quadrature not converged: doubling the resolution changed "
                                 "results by " + format_double(change));
    }
  }
  report.oracle = std::move(details);
  return report;
}

MomentReport mc_moments(const SphericalDistribution& dist, const McSpec& spec) {
  check_mc_spec(spec);
  check_dimensions(dist, spec.n);
  const int n = dist.dim();
  const MomentFeatures features{n};
  const Moments est = mc_integrate(dist, spec, features);
  MomentReport report = report_from_features(n, est.mean);

  OracleDetails details;
  details.method = "mc";
  details.samples = spec.samples;
  details.seed = spec.seed;
  details.generator = mc_generator_name();
  details.mass = est.mean[0];
  details.mass_standard_error = est.standard_error(0);
  Vector mean_se(n);
  Matrix second_se(n, n);
  for (int i = 0; i < n; ++i) mean_se(i) = est.standard_error(static_cast<std::size_t>(1 + i));
  std::size_t idx = static_cast<std::size_t>(1 + n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) second_se(i, j) = second_se(j, i) = est.standard_error(idx++);
  }
  details.mean_standard_error = std::move(mean_se);
  details.second_moment_standard_error = std::move(second_se);
  report.oracle = std::move(details);
  return report;
}

MassEstimate quad_mass(const SphericalDistribution& dist, const QuadratureSpec& spec) {
  check_quadrature_spec(spec);
  check_dimensions(dist, spec.n);
  struct Unit {
    int size() const { return 1; }
    void operator()(const double*, double* out) const { out[0] = 1.0; }
  };
  return {quad_integrate(dist, spec.resolution, Unit{})[0], 0.0};
}

MassEstimate mc_mass(const SphericalDistribution& dist, const McSpec& spec) {
  check_mc_spec(spec);
  check_dimensions(dist, spec.n);
  struct Unit {
    int size() const { return 1; }
    void operator()(const double*, double* out) const { out[0] = 1.0; }
  };
  const Moments est = mc_integrate(dist, spec, Unit{});
  return {est.mean[0], est.standard_error(0)};
}

ThirdMomentEstimate quad_third_moment(const SphericalDistribution& dist,
                                      const QuadratureSpec& spec) {
  check_quadrature_spec(spec);
  check_dimensions(dist, spec.n);
  const ThirdFeatures features{dist.dim()};
  return third_from_features(dist.dim(), quad_integrate(dist, spec.resolution, features), nullptr);
}

ThirdMomentEstimate mc_third_moment(const SphericalDistribution& dist, const McSpec& spec) {
  check_mc_spec(spec);
  check_dimensions(dist, spec.n);
  const ThirdFeatures features{dist.dim()};
  const Moments est = mc_integrate(dist, spec, features);
  std::vector<double> errors(est.mean.size());
  for (std::size_t f = 0; f < errors.size(); ++f) errors[f] = est.standard_error(f);
  return third_from_features(dist.dim(), est.mean, &errors);
}

// ---------------------------------------------------------------------------
// Samplers

namespace {

void uniform_direction(std::mt19937_64& rng, std::normal_distribution<double>& normal,
                       Eigen::Ref<Vector> out) {
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      out(i) = normal(rng);
      norm2 += out(i) * out(i);
    }
  } while (norm2 == 0.0);
  out /= std::sqrt(norm2);
}

void check_count(std::int64_t count) {
  if (count < 0) throw DomainError("sampler: count must be >= 0");
}

}  // namespace

SampleSet sample_vmf(int n, double k, const UnitVector& u, std::int64_t count, std::uint64_t seed) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("sample_vmf: k must be finite and >= 0");
  if (u.dim() != n) throw ShapeError("sample_vmf: u has the wrong dimension");
  check_count(count);

  SampleSet out;
  out.points.resize(n, count);
  out.seed = seed;
  out.generator = "mt19937_64 seeded with splitmix64(seed); Wood rejection";

  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  const double d = n - 1.0;
  std::gamma_distribution<double> beta_half(0.5 * d, 1.0);

  // Wood's envelope for the component w = theta . u.
  const double b = d / (std::sqrt(4.0 * k * k + d * d) + 2.0 * k);
  const double x0 = (1.0 - b) / (1.0 + b);
  const double log_one_minus_x0_sq = std::log(4.0 * b) - 2.0 * std::log1p(b);
  const double c = k * x0 + d * log_one_minus_x0_sq;

  const Vector& axis = u.coords();
  Vector tangent(n);
  for (std::int64_t s = 0; s < count; ++s) {
    double w = 0.0;
    for (;;) {
      const double g1 = beta_half(rng);
      const double g2 = beta_half(rng);
      const double z = g1 / (g1 + g2);
      w = (1.0 - (1.0 + b) * z) / (1.0 - (1.0 - b) * z);
      const double log_u = std::log(1.0 - uniform(rng));
      ++out.proposals;
      if (k * w + d * std::log(1.0 - x0 * w) - c >= log_u) break;
    }
    double tnorm = 0.0;
    do {
      for (int i = 0; i < n; ++i) tangent(i) = normal(rng);
      tangent -= tangent.dot(axis) * axis;
      tnorm = tangent.norm();
    } while (tnorm < 1e-12);
    tangent /= tnorm;
    out.points.col(s) = w * axis + std::sqrt(std::max(0.0, 1.0 - w * w)) * tangent;
  }
  return out;
}

SampleSet sample_peanut(const AnisotropyMatrix& a, std::int64_t count, std::uint64_t seed) {
  check_count(count);
  const int n = a.dim();
  const Matrix sym = symmetric_part(a.entries());
  const double lambda_max = symmetric_eigen(sym).values(0);

  SampleSet out;
  out.points.resize(n, count);
  out.seed = seed;
  out.generator = "mt19937_64 seeded with splitmix64(seed); uniform-envelope rejection";

  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  Vector theta(n);
  for (std::int64_t s = 0; s < count; ++s) {
    for (;;) {
      uniform_direction(rng, normal, theta);
      ++out.proposals;
      if (uniform(rng) * lambda_max < theta.dot(sym * theta)) break;
    }
    out.points.col(s) = theta;
  }
  return out;
}

}  // namespace sphermoments
