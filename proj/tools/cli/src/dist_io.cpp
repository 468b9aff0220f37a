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

#include "sphermoments_cli/dist_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "sphermoments_cli/errors.hpp"

namespace sphermoments::cli {
namespace {

double number_field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  const Json& v = doc.at(key);
  if (!v.is_number()) throw InputError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

Vector vector_field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  const Json& v = doc.at(key);
  if (!v.is_array() || v.empty()) {
    throw InputError(std::string("field '") + key + "' must be a nonempty array of numbers");
  }
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) throw InputError(std::string("field '") + key + "' must hold numbers");
    out(static_cast<Eigen::Index>(i)) = v[i].get<double>();
  }
  return out;
}

Matrix matrix_field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  const Json& v = doc.at(key);
  if (!v.is_array() || v.empty()) {
    throw InputError(std::string("field '") + key + "' must be a nonempty array of rows");
  }
  const std::size_t rows = v.size();
  std::size_t cols = 0;
  for (const auto& row : v) {
    if (!row.is_array()) throw InputError(std::string("field '") + key + "' rows must be arrays");
    if (cols == 0) cols = row.size();
    if (row.size() != cols || cols == 0) {
      throw InputError(std::string("field '") + key + "' rows must have equal nonzero length");
    }
  }
  Matrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!v[i][j].is_number()) throw InputError(std::string("field '") + key + "' must hold numbers");
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v[i][j].get<double>();
    }
  }
  return out;
}

}  // namespace

SphericalDistribution parse_distribution(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("distribution is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("distribution must be a JSON object");
  if (doc.contains("schema") && doc.at("schema") != kSchemaVersion) {
    throw InputError("unsupported schema version (expected \"1\")");
  }
  if (!doc.contains("kind") || !doc.at("kind").is_string()) {
    throw InputError("missing string field 'kind'");
  }
  const std::string kind_name = doc.at("kind").get<std::string>();
  const auto kind = parse_distribution_kind(kind_name);
  if (!kind) {
    throw InputError("unknown kind '" + kind_name + "' (expected vmf, bimodal_vmf, peanut, odf or bingham)");
  }

  std::set<std::string> allowed = {"schema", "kind", "n"};
  switch (*kind) {
    case DistributionKind::kVmf:
    case DistributionKind::kBimodalVmf:
      allowed.insert({"k", "u"});
      break;
    case DistributionKind::kBingham:
      allowed.insert("delta");
      [[fallthrough]];
    case DistributionKind::kPeanut:
    case DistributionKind::kOdf:
      allowed.insert("A");
      break;
  }
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) throw InputError("unknown field '" + key + "' for kind " + kind_name);
  }

  auto dist = [&]() {
    switch (*kind) {
      case DistributionKind::kVmf:
        return SphericalDistribution::vmf(vector_field(doc, "u"), number_field(doc, "k"));
      case DistributionKind::kBimodalVmf:
        return SphericalDistribution::bimodal_vmf(vector_field(doc, "u"), number_field(doc, "k"));
      case DistributionKind::kPeanut:
        return SphericalDistribution::peanut(matrix_field(doc, "A"));
      case DistributionKind::kOdf:
        return SphericalDistribution::odf(matrix_field(doc, "A"));
      case DistributionKind::kBingham:
        return SphericalDistribution::bingham(matrix_field(doc, "A"), number_field(doc, "delta"));
    }
    throw InputError("unreachable distribution kind");
  }();

  if (doc.contains("n")) {
    const Json& n = doc.at("n");
    if (!n.is_number_integer() || n.get<long long>() != dist.dim()) {
      throw InputError("field 'n' does not match the dimension of the parameters");
    }
  }
  if (!dist.is_valid()) {
    std::string msg = "invalid distribution:";
    for (const auto& v : dist.violations()) msg += "\n  - " + v;
    throw InputError(msg);
  }
  return dist;
}

SphericalDistribution load_distribution(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    const std::string path = arg.substr(1);
    std::ifstream in(path);
    if (!in) throw IoError("cannot read distribution file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_distribution(buf.str());
  }
  return parse_distribution(arg);
}

Json distribution_to_json(const SphericalDistribution& dist) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["kind"] = std::string(to_string(dist.kind()));
  out["n"] = dist.dim();
  switch (dist.kind()) {
    case DistributionKind::kVmf:
    case DistributionKind::kBimodalVmf:
      out["k"] = dist.concentration();
      out["u"] = to_json(dist.mean_direction());
      break;
    case DistributionKind::kBingham:
      out["A"] = to_json(dist.anisotropy());
      out["delta"] = dist.diffusion_time();
      break;
    case DistributionKind::kPeanut:
    case DistributionKind::kOdf:
      out["A"] = to_json(dist.anisotropy());
      break;
  }
  return out;
}

}  // namespace sphermoments::cli
