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

#include <string_view>

#include "catdress/hamiltonians.hpp"

namespace catdress::loss {

enum class Regime { weak, resonant };

struct LossParams {
  double gamma_r = 0.0;    // total Rydberg decoherence rate, 1/s
  double gamma_bbr = 0.0;  // black-body depopulation rate, 1/s
  int n_atoms = 1;
  ham::DriveParams drive;
  /// Rydberg population assumed on resonance.
  double p_resonant = 1.0;

  void validate() const;
};

/// weak: N_e (W / 2D)^2 capped at 1; resonant: p_resonant.
double rydberg_population(Regime regime, const LossParams& params, double n_e);

/// Expected number of decay events P_r Gamma t.
double depletion_loss(double p_r, double gamma_r, double t);

struct BbrSurvival {
  double p0 = 1.0;
  bool avalanche_safe = true;
};

inline constexpr double kAvalancheThreshold = 0.82;

/// p0 = exp(-P_r Gamma_BBR t); safe when p0 >= 0.82.
BbrSurvival p_bbr_survival(double p_r, double gamma_bbr, double t);

enum class ScalingQuantity { decay, c6, cat_loss };

ScalingQuantity parse_scaling_quantity(std::string_view name);
int scaling_exponent(ScalingQuantity q);
/// (n / n_ref)^p with p = -3, 11, -14.
double principal_scaling(int n_ref, int n, ScalingQuantity q);

}  // namespace catdress::loss
