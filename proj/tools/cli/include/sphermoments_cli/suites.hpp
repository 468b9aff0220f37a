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
#include <vector>

#include "sphermoments_cli/json_writer.hpp"

namespace sphermoments::cli {

enum class Level { kSmoke, kFull };

struct SuiteConfig {
  Level level = Level::kSmoke;
  std::uint64_t seed = 0;

  bool full() const noexcept { return level == Level::kFull; }
  /// 10^6 for full runs, 10^4 for smoke runs.
  std::int64_t mc_samples() const noexcept { return full() ? 1'000'000 : 10'000; }
};

inline constexpr double kSeLimit = 3.0;
inline constexpr double kRetrySeLimit = 4.0;

struct SuiteResult {
  int criterion = 0;
  std::string name;
  std::string metric;
  double value = 0.0;  // worst observed value of the metric
  double threshold = 0.0;
  bool passed = false;
  std::int64_t checks = 0;
  std::int64_t retries = 0;  // Monte Carlo points rerun under the 4-SE rule
  std::vector<std::string> notes;
  double seconds = 0.0;  // wall time; left out of the JSON summary
};

Json to_json(const SuiteResult& result);

// Closed form vs quadrature for vMF, n in {2, 3}.
SuiteResult suite_vmf_quadrature(const SuiteConfig& config);
// Closed form vs Monte Carlo for vMF, n in 4..8.
SuiteResult suite_vmf_monte_carlo(const SuiteConfig& config);
// Peanut covariance against the oracles, plus the trace identity.
SuiteResult suite_peanut_moments(const SuiteConfig& config);
// Bessel ratio identities for n = 3.
SuiteResult suite_bessel_identities(const SuiteConfig& config);
// Peanut FA and R bounds.
SuiteResult suite_peanut_bounds(const SuiteConfig& config);
// Bimodal vMF FA and R range and monotonicity.
SuiteResult suite_bimodal_range(const SuiteConfig& config);
// First and third moments of the symmetric distributions vanish.
SuiteResult suite_odd_moments(const SuiteConfig& config);
// Densities integrate to one.
SuiteResult suite_normalization(const SuiteConfig& config);
// Closed-form and generic anisotropy reports agree.
SuiteResult suite_report_consistency(const SuiteConfig& config);
// Closed form vs quadrature timing at n = 3.
SuiteResult suite_performance(const SuiteConfig& config);
// Sampler empirical covariance vs closed forms.
SuiteResult suite_samplers(const SuiteConfig& config);

/// Every suite except the timing one, in criterion order. Results depend
/// only on the config.
std::vector<SuiteResult> run_validation_suites(const SuiteConfig& config);

}  // namespace sphermoments::cli
