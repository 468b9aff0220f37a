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

#include <iosfwd>

#include "sphermoments/anisotropy.hpp"
#include "sphermoments/moment_report.hpp"
#include "sphermoments_cli/json_writer.hpp"

namespace sphermoments::cli {

/// Entry point of the sphermoments tool. Exit codes: 0 success, 1 failed
/// validation suite, failed speed check or violated bound, 2 input error,
/// 3 I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Closed-form report when one exists (symmetric peanut, bimodal vMF),
/// otherwise the generic eigen-decomposition path.
AnisotropyReport preferred_report(const SphericalDistribution& dist, const MotilityParams& params);

Json moment_report_to_json(const MomentReport& report);
Json anisotropy_report_to_json(const AnisotropyReport& report);

}  // namespace sphermoments::cli
