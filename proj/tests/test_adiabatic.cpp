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

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "catdress/adiabatic.hpp"
#include "catdress/errors.hpp"

using namespace catdress;
using namespace catdress::adiabatic;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Bare-basis oracle: RK4 on i d/dt (c_e, c_r) = [[0, g], [g, D]] (c_e, c_r)
// with g = sqrt(n_e) W / 2, started in the lower eigenvector and projected
// onto the upper one at the end.
double bare_scattering(const RampProfile& ramp, int steps) {
  auto eig = [&](double t, bool upper) {
    const double g = std::sqrt(ramp.n_e) * ramp.omega.value(t) / 2.0, d = ramp.delta.value(t);
    const double e = upper ? (d + std::sqrt(d * d + 4 * g * g)) / 2.0 : (d - std::sqrt(d * d + 4 * g * g)) / 2.0;
    // (g, e) solves the first row: -e c_e + g c_r = 0
    std::array<double, 2> v = g == 0.0 ? (upper == (d > 0) ? std::array<double, 2>{0.0, 1.0} : std::array<double, 2>{1.0, 0.0})
                                       : std::array<double, 2>{g, e};
    const double nrm = std::hypot(v[0], v[1]);
    return std::array<double, 2>{v[0] / nrm, v[1] / nrm};
  };
  auto rhs = [&](double t, const std::array<cplx, 2>& c) {
    const double g = std::sqrt(ramp.n_e) * ramp.omega.value(t) / 2.0, d = ramp.delta.value(t);
    const cplx mi(0.0, -1.0);
    return std::array<cplx, 2>{mi * (g * c[1]), mi * (g * c[0] + d * c[1])};
  };
  const auto v0 = eig(0.0, false);
  std::array<cplx, 2> c{v0[0], v0[1]};
  const double h = ramp.duration / steps;
  for (int s = 0; s < steps; ++s) {
    const double t = s * h;
    auto add = [](const std::array<cplx, 2>& a, const std::array<cplx, 2>& b, double f) {
      return std::array<cplx, 2>{a[0] + f * b[0], a[1] + f * b[1]};
    };
    const auto k1 = rhs(t, c);
    const auto k2 = rhs(t + h / 2, add(c, k1, h / 2));
    const auto k3 = rhs(t + h / 2, add(c, k2, h / 2));
    const auto k4 = rhs(t + h, add(c, k3, h));
    for (int i = 0; i < 2; ++i) c[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  const auto v1 = eig(ramp.duration, true);
  return std::norm(v1[0] * c[0] + v1[1] * c[1]);
}

}  // namespace

TEST_CASE("dressed energies") {
  const auto [lo, hi] = dressed_energies(0.0, 2.0, 3.0);
  CHECK(lo == 0.0);
  CHECK(hi == 2.0);
  const auto [rl, ru] = dressed_energies(1.5, 0.0, 4.0);
  CHECK(rl == doctest::Approx(-1.5));
  CHECK(ru == doctest::Approx(1.5));
  for (double d : {-2.0, -0.1, 0.3, 5.0}) {
    const auto [a, b] = dressed_energies(0.7, d, 9.0);
    CHECK(b - a == doctest::Approx(std::sqrt(d * d + 9.0 * 0.49)));
    CHECK(a + b == doctest::Approx(d));
  }
  // the branches are continuous through D = 0
  const auto [l1, u1] = dressed_energies(1.0, 1e-9, 1.0);
  const auto [l2, u2] = dressed_energies(1.0, -1e-9, 1.0);
  CHECK(l1 == doctest::Approx(l2));
  CHECK(u1 == doctest::Approx(u2));
  CHECK_THROWS_AS(dressed_energies(0.0, 0.0, 1.0), ValidationError);
}

TEST_CASE("theta dot") {
  CHECK(theta_dot(1.0, 2.0, 0.0, 0.0, 5.0) == 0.0);
  CHECK(theta_dot(1.0, 0.0, 3.0, 0.0, 5.0) == 0.0);
  CHECK(theta_dot(2.0, 1.0, 0.5, -0.3, 4.0) ==
        doctest::Approx((2.0 * 2.0 * -0.3 - 2.0 * 1.0 * 0.5) / (4.0 * 4.0 + 1.0)));
  // Lorentzian in D for a linear detuning sweep
  const double w = 0.5, rate = 1.0, ne = 2.0;
  double prev = 0.0;
  for (double d = -3.0; d <= 0.0; d += 0.25) {
    const double v = theta_dot(w, d, 0.0, rate, ne);
    CHECK(v == doctest::Approx(std::sqrt(ne) * w * rate / (ne * w * w + d * d)));
    CHECK(v > prev);
    prev = v;
  }
  CHECK(theta_dot(w, 0.5, 0.0, rate, ne) == doctest::Approx(theta_dot(w, -0.5, 0.0, rate, ne)));
  CHECK_THROWS_AS(theta_dot(0.0, 0.0, 1.0, 1.0, 1.0), ValidationError);
}

TEST_CASE("ramp channels") {
  const RampChannel lin({0.0, 1.0, 3.0}, {0.0, 2.0, 1.0}, Interpolation::linear);
  CHECK(lin.value(0.5) == doctest::Approx(1.0));
  CHECK(lin.rate(0.5) == doctest::Approx(2.0));
  CHECK(lin.value(2.0) == doctest::Approx(1.5));
  CHECK(lin.rate(2.0) == doctest::Approx(-0.5));

  // monotone data stays monotone under the cubic interpolant
  const RampChannel cub({0.0, 1.0, 2.0, 3.0}, {0.0, 0.1, 5.0, 5.1}, Interpolation::monotone_cubic);
  double prev = -1.0;
  for (double t = 0.0; t <= 3.0; t += 0.01) {
    CHECK(cub.value(t) >= prev - 1e-15);
    CHECK(cub.rate(t) >= -1e-12);
    prev = cub.value(t);
  }
  // rate is the derivative of value
  for (double t : {0.3, 1.2, 2.7}) {
    const double h = 1e-6;
    CHECK(cub.rate(t) == doctest::Approx((cub.value(t + h) - cub.value(t - h)) / (2 * h)).epsilon(1e-6));
  }
  CHECK_THROWS_AS(RampChannel({0.0, 0.0}, {1.0, 2.0}, Interpolation::linear), ValidationError);
  CHECK_THROWS_AS(RampChannel({0.0}, {1.0}, Interpolation::linear), ValidationError);

  const auto cos = cosine_ramp(0.0, 2.0, 1.0, 1.0, 3.0, 1.0);
  for (double t : {0.4, 1.5, 2.2}) {
    CHECK(cos.omega.value(t) == doctest::Approx(1.0 - std::cos(kPi * t / 3.0)).epsilon(1e-6));
    CHECK(cos.omega.rate(t) == doctest::Approx(kPi / 3.0 * std::sin(kPi * t / 3.0)).epsilon(1e-3));
  }
}

TEST_CASE("static and resonant ramps do not scatter") {
  const auto still = integrate_dressed(linear_ramp(0.8, 0.8, 1.0, 1.0, 5.0, 3.0), Branch::lower);
  CHECK(still.population_scattered < 1e-12);
  CHECK(still.max_adiabaticity == 0.0);

  const auto off = integrate_dressed(linear_ramp(2.0, 0.0, 0.0, 0.0, 0.1, 4.0), Branch::lower);
  CHECK(off.population_scattered < 1e-10);
  const auto off_cos = integrate_dressed(cosine_ramp(2.0, 0.0, 0.0, 0.0, 0.1, 4.0), Branch::upper);
  CHECK(off_cos.population_scattered < 1e-10);
}

TEST_CASE("dressed-frame integration matches the bare-basis oracle") {
  for (double duration : {0.5, 2.0, 8.0})
    for (double ne : {1.0, 4.0}) {
      const auto ramp = linear_ramp(0.0, 1.0, 1.0, 0.6, duration, ne);
      IntegrateOptions opts;
      opts.steps = 4000;
      const auto r = integrate_dressed(ramp, Branch::lower, opts);
      CHECK(r.population_scattered == doctest::Approx(bare_scattering(ramp, 20000)).epsilon(1e-6).scale(1e-6));
      CHECK(r.norm_drift < 1e-9);
    }
}

TEST_CASE("slower ramps scatter less") {
  std::vector<double> pops;
  for (double duration : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    IntegrateOptions opts;
    opts.steps = 4000;
    const auto r = integrate_dressed(linear_ramp(0.0, 1.0, 1.0, 1.0, duration, 1.0), Branch::lower, opts);
    CHECK(r.population_scattered <= r.max_adiabaticity);
    pops.push_back(r.population_scattered);
  }
  for (std::size_t i = 1; i < pops.size(); ++i) CHECK(pops[i] < pops[i - 1]);
}

TEST_CASE("step control") {
  // a fast, strong ramp cannot be resolved with few steps
  IntegrateOptions coarse;
  coarse.steps = 10;
  CHECK_THROWS_AS(integrate_dressed(linear_ramp(0.0, 50.0, 30.0, -30.0, 1.0, 1.0), Branch::lower, coarse), NumericalError);
  coarse.steps = 5;
  CHECK_THROWS_AS(integrate_dressed(linear_ramp(0.0, 1.0, 1.0, 1.0, 1.0, 1.0), Branch::lower, coarse), ValidationError);
  IntegrateOptions fine;
  fine.steps = 4000;
  const auto a = integrate_dressed(linear_ramp(0.0, 1.0, 1.0, 1.0, 1.0, 1.0), Branch::lower, fine);
  fine.steps = 8000;
  const auto b = integrate_dressed(linear_ramp(0.0, 1.0, 1.0, 1.0, 1.0, 1.0), Branch::lower, fine);
  CHECK(std::abs(a.population_scattered - b.population_scattered) < 1e-6);
  CHECK(a.trace.size() == 4001);
  CHECK(a.trace_csv().rfind("t,p_lower,p_upper", 0) == 0);
}
