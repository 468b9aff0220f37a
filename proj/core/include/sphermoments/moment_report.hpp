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

// Moment reports: mean, raw second moment and covariance of a spherical
// distribution, either from closed forms or from a numerical oracle.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sphermoments/linalg.hpp"

namespace sphermoments {

enum class MomentSource { kClosedForm, kOracle };

const char* to_string(MomentSource source) noexcept;

/// How an oracle report was produced, plus its uncertainty estimates.
struct OracleDetails {
  std::string method;  // "quad" or "mc"
  std::optional<int> resolution;
  std::optional<std::int64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> generator;

  double mass = 1.0;  // integral of q over the sphere
  std::optional<double> mass_standard_error;
  std::optional<Vector> mean_standard_error;
  std::optional<Matrix> second_moment_standard_error;

  std::vector<std::string> warnings;
};

struct MomentReport {
  Vector mean;
  Matrix second_moment;
  Matrix covariance;  // second_moment - mean mean^T
  MomentSource source = MomentSource::kClosedForm;
  std::optional<OracleDetails> oracle;
};

/// Fills `covariance` from `second_moment` and `mean`.
MomentReport make_moment_report(Vector mean, Matrix second_moment, MomentSource source);

}  // namespace sphermoments
