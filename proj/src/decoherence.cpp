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

#include "catdress/decoherence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catdress/errors.hpp"

namespace catdress::loss {

void LossParams::validate() const {
  require(std::isfinite(gamma_r) && gamma_r >= 0.0, "loss: gamma_r must be finite and >= 0");
  require(std::isfinite(gamma_bbr) && gamma_bbr >= 0.0, "loss: gamma_bbr must be finite and >= 0");
  require(n_atoms >= 1, "loss: n_atoms must be >= 1");
  require(std::isfinite(p_resonant) && p_resonant >= 0.0 && p_resonant <= 1.0,
          "loss: p_resonant must lie in [0, 1]");
  drive.validate();
}

double rydberg_population(Regime regime, const LossParams& params, double n_e) {
  params.validate();
  require(std::isfinite(n_e) && n_e >= 0.0, "rydberg_population: n_e must be finite and >= 0");
  if (regime == Regime::resonant) return params.p_resonant;
  require(params.drive.detuning != 0.0, "rydberg_population: weak regime needs nonzero detuning");
  const double x = params.drive.rabi / (2.0 * params.drive.detuning);
  return std::min(1.0, n_e * x * x);
}

double depletion_loss(double p_r, double gamma_r, double t) {
  require(p_r >= 0.0 && gamma_r >= 0.0 && t >= 0.0, "depletion_loss: inputs must be non-negative");
  return p_r * gamma_r * t;
}

BbrSurvival p_bbr_survival(double p_r, double gamma_bbr, double t) {
  require(p_r >= 0.0 && gamma_bbr >= 0.0 && t >= 0.0, "p_bbr_survival: inputs must be non-negative");
  const double p0 = std::exp(-p_r * gamma_bbr * t);
  return {p0, p0 >= kAvalancheThreshold};
}

ScalingQuantity parse_scaling_quantity(std::string_view name) {
  if (name == "decay") return ScalingQuantity::decay;
  if (name == "c6") return ScalingQuantity::c6;
  if (name == "cat_loss") return ScalingQuantity::cat_loss;
  throw ValidationError("unknown scaling quantity '" + std::string(name) + "' (decay|c6|cat_loss)");
}

int scaling_exponent(ScalingQuantity q) {
  switch (q) {
    case ScalingQuantity::decay:
      return -3;
    case ScalingQuantity::c6:
      return 11;
    case ScalingQuantity::cat_loss:
      return -14;
  }
  throw ValidationError("unknown scaling quantity");
}

double principal_scaling(int n_ref, int n, ScalingQuantity q) {
  require(n_ref >= 1 && n >= 1, "principal_scaling: principal numbers must be >= 1");
  return std::pow(static_cast<double>(n) / n_ref, scaling_exponent(q));
}

}  // namespace catdress::loss
