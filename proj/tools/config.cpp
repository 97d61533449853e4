// Copyright 2026 The catdress Authors
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

#include "config.hpp"

#include <fstream>
#include <sstream>

#include "catdress/errors.hpp"

namespace catdress::cli {

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"global", c.global},   {"evolve", c.evolve},   {"catscan", c.catscan},    {"loss", c.loss},
                     {"profile", c.profile}, {"perturb", c.perturb}, {"adiabatic", c.adiabatic}};
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  const RunConfig defaults;
  c.global = j.value("global", defaults.global);
  c.evolve = j.value("evolve", defaults.evolve);
  c.catscan = j.value("catscan", defaults.catscan);
  c.loss = j.value("loss", defaults.loss);
  c.profile = j.value("profile", defaults.profile);
  c.perturb = j.value("perturb", defaults.perturb);
  c.adiabatic = j.value("adiabatic", defaults.adiabatic);
}

namespace {

// Every key in `doc` must also exist in `reference`, recursively for objects.
void check_keys(const nlohmann::json& doc, const nlohmann::json& reference, const std::string& where) {
  if (!doc.is_object()) return;
  for (const auto& [key, value] : doc.items()) {
    if (!reference.contains(key)) throw ValidationError("config: unknown key '" + where + key + "'");
    if (value.is_object() && reference.at(key).is_object()) check_keys(value, reference.at(key), where + key + ".");
  }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  require(doc.is_object(), "config: top level must be an object");
  check_keys(doc, nlohmann::json(RunConfig{}), "");
  try {
    return doc.get<RunConfig>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
}

std::string serialize_config(const RunConfig& config) { return nlohmann::json(config).dump(2) + "\n"; }

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace catdress::cli
