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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace catdress::acceptance {

struct Criterion {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string summary;
  std::vector<std::string> info;
};

/// "PASS|FAIL <id> <title>: <summary>".
std::string format_line(const Criterion& c);

/// Runs every criterion in order, invoking `report` as each one finishes.
/// `seed` drives the randomized overlap checks.
std::vector<Criterion> run_all(const std::function<void(const Criterion&)>& report = {},
                               std::uint64_t seed = 20260101);

}  // namespace catdress::acceptance
