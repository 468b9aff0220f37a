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

#pragma once

#include <cstdint>
#include <string>

namespace sphermoments::cli {

struct BenchOptions {
  int n = 3;
  double k = 5.0;
  int repeats = 5;
  int resolution = 256;           // quadrature, n in {2, 3}
  std::int64_t samples = 1'000'000;  // Monte Carlo, n >= 4
  std::uint64_t seed = 0;
};

struct BenchRow {
  int n = 0;
  double k = 0.0;
  std::string oracle;  // "quad" or "mc"
  std::int64_t oracle_size = 0;  // resolution or samples
  int repeats = 0;
  double closed_form_seconds = 0.0;  // median per call
  double oracle_seconds = 0.0;       // median per call
  double speedup = 0.0;
};

inline constexpr double kRequiredSpeedup = 100.0;

/// Times vMF covariance by closed form and by the oracle. Each repeat is
/// one oracle call and a batch of closed-form calls; medians are reported.
BenchRow bench_vmf_covariance(const BenchOptions& options);

/// True where the speedup is asserted (n = 3 quadrature at resolution 256).
bool speedup_asserted(const BenchRow& row) noexcept;

}  // namespace sphermoments::cli
