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

#include "sphermoments_cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include "sphermoments/errors.hpp"
#include "sphermoments/moments.hpp"
#include "sphermoments/oracle.hpp"

namespace sphermoments::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

BenchRow bench_vmf_covariance(const BenchOptions& options) {
  if (options.repeats < 1) throw DomainError("repeats must be >= 1");
  const int n = options.n;
  const UnitVector u = UnitVector::axis(n, 0);
  const auto dist = SphericalDistribution::vmf(u.coords(), options.k);
  dist.require_valid();

  BenchRow row;
  row.n = n;
  row.k = options.k;
  row.repeats = options.repeats;
  row.oracle = (n == 2 || n == 3) ? "quad" : "mc";
  row.oracle_size = row.oracle == "quad" ? options.resolution : options.samples;

  constexpr int kBatch = 2000;
  volatile double sink = 0.0;
  std::vector<double> closed;
  std::vector<double> oracle;
  for (int r = 0; r < options.repeats; ++r) {
    auto start = Clock::now();
    for (int i = 0; i < kBatch; ++i) sink = sink + vmf_covariance(n, options.k, u)(0, 0);
    closed.push_back(seconds_since(start) / kBatch);

    start = Clock::now();
    if (row.oracle == "quad") {
      QuadratureSpec spec = QuadratureSpec::for_dimension(n, options.resolution);
      spec.check_convergence = false;
      sink = sink + quad_moments(dist, spec).covariance(0, 0);
    } else {
      sink = sink + mc_moments(dist, McSpec(n, options.samples, options.seed)).covariance(0, 0);
    }
    oracle.push_back(seconds_since(start));
  }
  row.closed_form_seconds = median(closed);
  row.oracle_seconds = median(oracle);
  row.speedup = row.oracle_seconds / row.closed_form_seconds;
  return row;
}

bool speedup_asserted(const BenchRow& row) noexcept {
  return row.n == 3 && row.oracle == "quad" && row.oracle_size == 256;
}

}  // namespace sphermoments::cli
