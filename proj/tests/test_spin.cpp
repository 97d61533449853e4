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
#include <complex>
#include <numbers>
#include <random>

#include "catdress/cat_fidelity.hpp"
#include "catdress/errors.hpp"
#include "catdress/spin.hpp"

using namespace catdress;
using spin::CSSParams;

namespace {

constexpr double kPi = std::numbers::pi;

// Product-state oracle: amplitude on one ordered configuration with k
// excitations is cos(t/2)^(N-k) (sin(t/2) e^{-i phi})^k; the Dicke amplitude
// collects C(N,k) of them with weight 1/sqrt(C(N,k)).
std::vector<cplx> product_oracle(double theta, double phi, int n) {
  std::vector<cplx> out(n + 1);
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  for (int k = 0; k <= n; ++k) {
    double binom = 1.0;
    for (int j = 0; j < k; ++j) binom = binom * (n - j) / (j + 1);
    out[k] = std::sqrt(binom) * std::pow(c, n - k) * std::pow(s, k) * std::exp(cplx(0.0, -phi * k));
  }
  return out;
}

}  // namespace

TEST_CASE("css amplitudes match the product-state oracle") {
  for (int n : {1, 2, 5, 17, 40}) {
    for (double theta : {0.0, 0.3, kPi / 2.0, 2.5, kPi}) {
      const auto psi = spin::css_state({theta, 1.1}, n);
      const auto ref = product_oracle(theta, 1.1, n);
      for (int k = 0; k <= n; ++k) CHECK(std::abs(psi[k] - ref[k]) < 1e-13);
    }
  }
}

TEST_CASE("css examples") {
  const auto north = spin::css_state({0.0, 0.0}, 5);
  CHECK(std::abs(north[0] - 1.0) < 1e-15);
  for (int k = 1; k <= 5; ++k) CHECK(std::abs(north[k]) == 0.0);

  const auto eq = spin::css_state({kPi / 2.0, 0.0}, 2);
  CHECK(std::abs(eq[0] - 0.5) < 1e-15);
  CHECK(std::abs(eq[1] - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(eq[2] - 0.5) < 1e-15);

  const auto south = spin::css_state({kPi, 0.3}, 7);
  CHECK(std::abs(std::abs(south[7]) - 1.0) < 1e-15);

  CHECK(std::abs(spin::css_state({kPi / 2.0, 0.0}, 1000).norm() - 1.0) < 1e-12);
}

TEST_CASE("css norm is one across angles and sizes up to 2000") {
  for (int n : {1, 3, 48, 500, 1000, 2000})
    for (double theta : {0.0, 0.01, 1.0, kPi / 2.0, 3.0, kPi})
      for (double phi : {0.0, 2.0, 6.2}) CHECK(std::abs(spin::css_state({theta, phi}, n).norm() - 1.0) < 1e-12);
}

TEST_CASE("invalid css parameters are rejected") {
  CHECK_THROWS_AS(spin::css_state({-0.1, 0.0}, 4), ValidationError);
  CHECK_THROWS_AS(spin::css_state({kPi + 0.1, 0.0}, 4), ValidationError);
  CHECK_THROWS_AS(spin::css_state({1.0, std::nan("")}, 4), ValidationError);
  CHECK_THROWS_AS(spin::css_state({1.0, 0.0}, 0), ValidationError);
  CHECK_THROWS_AS(spin::SpinState(2, {1.0, 1.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(spin::SpinState(2, {1.0, 0.0}), ValidationError);
}

TEST_CASE("closed-form overlap equals the explicit inner product") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2.0 * kPi);
  CHECK(std::abs(spin::css_overlap({1.0, 2.0}, {1.0, 2.0}, 9) - 1.0) < 1e-14);
  CHECK(std::abs(spin::css_overlap({kPi / 2.0, 0.0}, {kPi / 2.0, kPi}, 2)) < 1e-15);
  for (int n = 1; n <= 64; n += 3) {
    for (int trial = 0; trial < 10; ++trial) {
      const CSSParams a{th(rng), ph(rng)}, b{th(rng), ph(rng)};
      const cplx brute = spin::css_state(a, n).inner(spin::css_state(b, n));
      const cplx closed = spin::css_overlap(a, b, n);
      CHECK(std::abs(brute - closed) < 1e-12);
      CHECK(std::abs(closed) <= 1.0 + 1e-15);
    }
  }
  // poles
  CHECK(std::abs(spin::css_overlap({kPi, 0.0}, {kPi, 1.0}, 6)) == doctest::Approx(1.0));
  CHECK(std::abs(spin::css_overlap({0.0, 0.0}, {kPi, 0.0}, 6)) < 1e-15);
}

TEST_CASE("equatorial overlaps shrink with N") {
  double prev = 1.0;
  for (int n = 1; n <= 200; ++n) {
    const double o = std::abs(spin::css_overlap({kPi / 2.0, 0.2}, {kPi / 2.0, 1.3}, n));
    CHECK(o < prev);
    prev = o;
  }
}

TEST_CASE("N_e moments") {
  const auto eq = spin::css_state({kPi / 2.0, 0.0}, 1000);
  const double mean = spin::expectation_ne(eq, 1);
  CHECK(mean == doctest::Approx(500.0).epsilon(1e-12));
  CHECK(spin::expectation_ne(eq, 2) - mean * mean == doctest::Approx(250.0).epsilon(1e-9));
  const auto ground = spin::css_state({0.0, 0.0}, 10);
  for (int p : {1, 2, 3}) CHECK(spin::expectation_ne(ground, p) == 0.0);
  CHECK_THROWS_AS(spin::expectation_ne(eq, 0), ValidationError);
}

TEST_CASE("husimi of a css peaks on itself and integrates to one") {
  const double theta0 = 1.1, phi0 = 2.0;
  const auto q = spin::husimi_q(spin::css_state({theta0, phi0}, 48), 200, 400);
  CHECK(std::abs(q.integral() - 1.0) < 1e-3);
  const auto [i, j] = q.argmax();
  CHECK(std::abs(q.theta(i) - theta0) <= kPi / 200);
  CHECK(std::abs(q.phi(j) - phi0) <= 2.0 * kPi / 400);
  CHECK_THROWS_AS(spin::husimi_q(spin::css_state({1.0, 0.0}, 4), 1, 10), ValidationError);
}

TEST_CASE("husimi pointwise value equals the css overlap") {
  const auto psi = spin::css_state({0.7, 0.4}, 13);
  const auto q = spin::husimi_q(psi, 9, 12);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 12; ++j) {
      const double ov = std::norm(spin::css_overlap({q.theta(i), q.phi(j)}, {0.7, 0.4}, 13));
      CHECK(q.at(i, j) == doctest::Approx(14.0 / (4.0 * kPi) * ov).epsilon(1e-10));
    }
}

TEST_CASE("two-component cat shows two equal equatorial maxima") {
  cat::CatTarget t{2, 0.4, {-kPi / 4.0, kPi / 4.0}, cat::AzimuthOrder::ascending};
  const auto psi = cat::build_mcss(t, 48);
  const int n_phi = 400;
  const auto q = spin::husimi_q(psi, 101, n_phi);  // odd row count puts a row on the equator
  const int row = 50;
  CHECK(q.theta(row) == doctest::Approx(kPi / 2.0));
  std::vector<std::pair<double, int>> peaks;
  for (int j = 0; j < n_phi; ++j) {
    const double v = q.at(row, j);
    if (v > q.at(row, (j + n_phi - 1) % n_phi) && v >= q.at(row, (j + 1) % n_phi)) peaks.push_back({v, j});
  }
  REQUIRE(peaks.size() == 2);
  CHECK(peaks[0].first == doctest::Approx(peaks[1].first).epsilon(1e-6));
  const double a = q.phi(peaks[0].second), b = q.phi(peaks[1].second);
  CHECK(std::abs(a - 0.4) < 2.0 * kPi / n_phi);
  CHECK(std::abs(b - (0.4 + kPi)) < 2.0 * kPi / n_phi);
}

TEST_CASE("equatorial weights reproduce the equator css") {
  const auto w = spin::equatorial_weights(30);
  const auto psi = spin::css_state({kPi / 2.0, 0.0}, 30);
  for (int k = 0; k <= 30; ++k) CHECK(w[k] == doctest::Approx(psi[k].real()).epsilon(1e-13));
}
