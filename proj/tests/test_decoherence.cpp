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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "catdress/decoherence.hpp"
#include "catdress/dynamics.hpp"
#include "catdress/errors.hpp"
#include "catdress/hamiltonians.hpp"

using namespace catdress;
using loss::LossParams;
using loss::Regime;

TEST_CASE("rydberg population") {
  LossParams p{1.0, 1.0, 48, {0.1, 1.0}, 1.0};
  CHECK(loss::rydberg_population(Regime::weak, p, 24.0) == doctest::Approx(0.06));
  p.drive.rabi = 100.0;
  CHECK(loss::rydberg_population(Regime::weak, p, 24.0) == 1.0);
  CHECK(loss::rydberg_population(Regime::resonant, p, 24.0) == 1.0);
  p.p_resonant = 0.5;
  CHECK(loss::rydberg_population(Regime::resonant, p, 24.0) == 0.5);
  p.drive.detuning = 0.0;
  CHECK_THROWS_AS(loss::rydberg_population(Regime::weak, p, 24.0), ValidationError);
  p = LossParams{-1.0, 1.0, 48, {0.1, 1.0}, 1.0};
  CHECK_THROWS_AS(loss::rydberg_population(Regime::weak, p, 24.0), ValidationError);
}

TEST_CASE("depletion loss") {
  CHECK(loss::depletion_loss(0.0, 2400.0, 1.0) == 0.0);
  CHECK(loss::depletion_loss(1.0, 0.0, 1.0) == 0.0);
  CHECK(loss::depletion_loss(1.0, 2400.0, 0.0) == 0.0);
  CHECK(loss::depletion_loss(1.0, 2400.0, 1.92e-5) == doctest::Approx(0.046).epsilon(0.01));
  // bilinear in (P_r Gamma) and t
  const double base = loss::depletion_loss(0.3, 1000.0, 2e-3);
  CHECK(loss::depletion_loss(0.6, 1000.0, 2e-3) == doctest::Approx(2.0 * base).epsilon(1e-15));
  CHECK(loss::depletion_loss(0.3, 3000.0, 2e-3) == doctest::Approx(3.0 * base).epsilon(1e-15));
  CHECK(loss::depletion_loss(0.3, 1000.0, 5e-3) == doctest::Approx(2.5 * base).epsilon(1e-15));
  CHECK_THROWS_AS(loss::depletion_loss(-0.1, 1.0, 1.0), ValidationError);
}

TEST_CASE("bbr survival") {
  const auto zero = loss::p_bbr_survival(1.0, 2400.0, 0.0);
  CHECK(zero.p0 == 1.0);
  CHECK(zero.avalanche_safe);
  // boundary is inclusive
  const double t = -std::log(0.82);
  const auto edge = loss::p_bbr_survival(1.0, 1.0, t);
  CHECK(edge.p0 == doctest::Approx(0.82).epsilon(1e-15));
  const auto just_below = loss::p_bbr_survival(1.0, 1.0, t * (1.0 + 1e-9));
  CHECK_FALSE(just_below.avalanche_safe);
  CHECK(loss::p_bbr_survival(1.0, 1.0, t * (1.0 - 1e-9)).avalanche_safe);
  // strictly decreasing in each argument
  const double ref = loss::p_bbr_survival(0.4, 100.0, 1e-3).p0;
  CHECK(loss::p_bbr_survival(0.5, 100.0, 1e-3).p0 < ref);
  CHECK(loss::p_bbr_survival(0.4, 120.0, 1e-3).p0 < ref);
  CHECK(loss::p_bbr_survival(0.4, 100.0, 2e-3).p0 < ref);
}

TEST_CASE("resonant loss figures for N = 1000") {
  const int n = 1000;
  const double rabi = 2.0 * std::numbers::pi * 70e6;
  const double chi2 = ham::chi2_resonant(rabi, n);
  const double t33 = 0.236 / chi2, t2 = 4.061 / chi2;
  CHECK(t33 == doctest::Approx(1.92e-5).epsilon(0.01));
  CHECK(loss::depletion_loss(1.0, 2400.0, t33) == doctest::Approx(0.046).epsilon(0.01));
  // the quoted 98% / 66% survival needs an effective P_r of one half
  CHECK(loss::p_bbr_survival(0.5, 2400.0, t33).p0 == doctest::Approx(0.98).epsilon(0.005));
  CHECK(loss::p_bbr_survival(0.5, 2400.0, t2).p0 == doctest::Approx(0.66).epsilon(0.03));
  CHECK(loss::p_bbr_survival(1.0, 2400.0, t33).avalanche_safe);
  CHECK_FALSE(loss::p_bbr_survival(1.0, 2400.0, t2).avalanche_safe);
}

TEST_CASE("principal number scaling") {
  using loss::ScalingQuantity;
  for (auto q : {ScalingQuantity::decay, ScalingQuantity::c6, ScalingQuantity::cat_loss})
    CHECK(loss::principal_scaling(50, 50, q) == 1.0);
  CHECK(loss::principal_scaling(40, 80, ScalingQuantity::decay) == doctest::Approx(1.0 / 8.0));
  CHECK(loss::principal_scaling(40, 80, ScalingQuantity::c6) == doctest::Approx(2048.0));
  CHECK(loss::scaling_exponent(ScalingQuantity::cat_loss) ==
        loss::scaling_exponent(ScalingQuantity::decay) - loss::scaling_exponent(ScalingQuantity::c6));
  CHECK(loss::parse_scaling_quantity("c6") == ScalingQuantity::c6);
  CHECK(loss::parse_scaling_quantity("cat_loss") == ScalingQuantity::cat_loss);
  CHECK_THROWS_AS(loss::parse_scaling_quantity("gamma"), ValidationError);
  CHECK_THROWS_AS(loss::principal_scaling(0, 5, ScalingQuantity::decay), ValidationError);
}

TEST_CASE("weak-regime loss falls with the drive") {
  const int n = 48;
  const double det = 2.0 * std::numbers::pi * 20e6, gamma = 4800.0;
  const auto psi0 = spin::css_state({std::numbers::pi / 2.0, 0.0}, n);
  const std::vector<double> ratios{0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0};
  std::vector<double> losses;
  for (double r : ratios) {
    const LossParams p{gamma, gamma, n, {r * det, det}, 1.0};
    const auto h = ham::h_exact(p.drive, n);
    const double t = dyn::cat_time_scan(psi0, h, 2, dyn::default_scan(h, 2)).t_best;
    losses.push_back(loss::depletion_loss(loss::rydberg_population(Regime::weak, p, n / 2.0), gamma, t));
  }
  for (std::size_t i = 1; i < losses.size(); ++i) CHECK(losses[i] < losses[i - 1]);
  auto slope = [&](std::size_t i, std::size_t j) {
    return std::log(losses[j] / losses[i]) / std::log(ratios[j] / ratios[i]);
  };
  const double weak = slope(0, 1), strong = slope(7, 8);
  MESSAGE("log-log slopes: weak " << weak << ", strong " << strong);
  CHECK(weak == doctest::Approx(-2.0).epsilon(0.1));
  CHECK(strong == doctest::Approx(-1.0).epsilon(0.15));
  CHECK(slope(4, 5) > weak);  // slower reduction in between
}
