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

#include <stdexcept>
#include <string>
#include <vector>

namespace catdress {

/// Raised when a caller passes parameters outside an operation's domain.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot deliver a trustworthy result
/// (degenerate kernel, ambiguous eigenvector tracking, step-size drift).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A perturbative denominator hit a pole. `atoms` lists the pair or triple
/// responsible so callers hunting resonances can see where it happened.
class ResonanceError : public NumericalError {
 public:
  ResonanceError(const std::string& what, std::vector<int> atoms)
      : NumericalError(what), atoms_(std::move(atoms)) {}
  const std::vector<int>& atoms() const noexcept { return atoms_; }

 private:
  std::vector<int> atoms_;
};

inline void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

}  // namespace catdress
