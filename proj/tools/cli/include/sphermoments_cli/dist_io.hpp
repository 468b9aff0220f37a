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

#include <string>

#include "sphermoments/distributions.hpp"
#include "sphermoments_cli/json_writer.hpp"

namespace sphermoments::cli {

inline constexpr const char* kSchemaVersion = "1";

/// Parses a distribution document such as
///   {"schema": "1", "kind": "vmf", "n": 3, "k": 2, "u": [1, 0, 0]}
///   {"schema": "1", "kind": "peanut", "A": [[3, 0], [0, 1]]}
///   {"schema": "1", "kind": "bingham", "A": [[...]], "delta": 0.5}
/// "schema" and "n" are optional. Unknown fields, malformed values and
/// parameter violations all throw InputError.
SphericalDistribution parse_distribution(const std::string& text);

/// "--dist" argument: inline JSON, or "@path" to read a file (IoError if
/// unreadable).
SphericalDistribution load_distribution(const std::string& arg);

/// Inverse of parse_distribution.
Json distribution_to_json(const SphericalDistribution& dist);

}  // namespace sphermoments::cli
