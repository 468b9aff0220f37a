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

#include <nlohmann/json.hpp>
#include <string>

#include "sphermoments/linalg.hpp"

namespace sphermoments::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kNumberDigits = 17;
inline constexpr int kBoundDigits = 12;

/// Serializes with every float at 17 significant digits, except members of
/// a "bounds" object, which get 12.
std::string write_json(const Json& value, int indent = 2);

std::string format_number(double x, int digits = kNumberDigits);

Json to_json(const Vector& v);
Json to_json(const Matrix& m);

}  // namespace sphermoments::cli
