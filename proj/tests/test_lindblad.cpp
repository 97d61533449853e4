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

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <random>

#include "catdress/errors.hpp"
#include "catdress/lindblad.hpp"

using namespace catdress;
using lind::OpenSystemSpec;
using Mat = Eigen::MatrixXcd;

namespace {

OpenSystemSpec spec_at(int atoms, double w_over_d, double r_over_rb, double gamma_over_w = 1e-2) {
  OpenSystemSpec s;
  s.n_atoms = atoms;
  s.drive = {w_over_d, 1.0};
  s.c6 = 1.0;
  s.gamma_r = gamma_over_w * s.drive.rabi;
  s.r = r_over_rb * lind::blockade_radius(s.drive, s.c6, lind::regime_of(s.drive));
  return s;
}

// Direct Lindblad action on a density matrix, built from scratch.
Mat lindblad_action(const OpenSystemSpec& s, const Mat& rho) {
  const int n = s.n_atoms, d = 1 << n;
  Mat h = Mat::Zero(d, d);
  std::vector<Mat> jumps;
  for (int i = 0; i < n; ++i) {
    Mat c = Mat::Zero(d, d);
    for (int b = 0; b < d; ++b) {
      if (b >> i & 1) {
        h(b, b) += s.drive.detuning;
        c(b & ~(1 << i), b) = std::sqrt(s.gamma_r);
      }
      h(b ^ (1 << i), b) += s.drive.rabi / 2.0;
    }
    jumps.push_back(c);
  }
  const double v = s.pair_potential();
  for (int b = 0; b < d; ++b) {
    const int k = std::popcount(static_cast<unsigned>(b));
    h(b, b) += v * k * (k - 1) / 2.0;  // all pairs at the same distance
  }
  const std::complex<double> mi(0.0, -1.0);
  Mat out = mi * (h * rho - rho * h);
  for (const auto& c : jumps) {
    const Mat cc = c.adjoint() * c;
    out += c * rho * c.adjoint() - 0.5 * (cc * rho + rho * cc);
  }
  return out;
}

}  // namespace

TEST_CASE("generator equals the direct Lindblad action") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int atoms : {2, 3}) {
    const auto s = spec_at(atoms, 0.7, 0.8, 0.3);
    const auto gen = lind::build_generator(s);
    const int d = gen.dimension();
    CHECK(gen.generator.rows() == d * d);
    CHECK(d == (1 << atoms));
    Mat rho(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) rho(i, j) = {g(rng), g(rng)};
    // basis order of the generator
    Mat perm = Mat::Zero(d, d);
    for (int k = 0; k < d; ++k) perm(k, gen.basis[k]) = 1.0;
    const Mat direct = perm * lindblad_action(s, perm.adjoint() * rho * perm) * perm.adjoint();
    const Eigen::VectorXcd vec = Eigen::Map<const Eigen::VectorXcd>(rho.data(), d * d);
    const Eigen::VectorXcd lv = gen.scale * (gen.generator * vec);
    const Mat got = Eigen::Map<const Mat>(lv.data(), d, d);
    CHECK((got - direct).norm() / direct.norm() < 1e-12);
  }
}

TEST_CASE("trace is preserved") {
  const auto gen = lind::build_generator(spec_at(3, 2.0, 1.0));
  const int d = gen.dimension();
  Eigen::VectorXcd id = Eigen::VectorXcd::Zero(d * d);
  for (int i = 0; i < d; ++i) id(i * d + i) = 1.0;
  // adjoint action on the identity vanishes
  CHECK((gen.generator.adjoint() * id).norm() < 1e-12);
}

TEST_CASE("pure decay relaxes to the unexcited state") {
  auto s = spec_at(2, 1.0, 1.0);
  s.drive.rabi = 0.0;
  s.gamma_r = 0.5;
  const auto gen = lind::build_generator(s);
  const auto ss = lind::steady_state(gen);
  const auto ground = lind::ground_state(gen);
  CHECK(lind::trace_distance(ss.state, ground) < 1e-12);
  const int d = gen.dimension();
  lind::DensityMatrix top{Mat::Zero(d, d)};
  for (int k = 0; k < d; ++k)
    if (gen.basis[k] == 3u) top.rho(k, k) = 1.0;
  CHECK(lind::trace_distance(lind::propagate(gen, top, 60.0 / s.gamma_r), ground) < 1e-12);
}

TEST_CASE("steady state agrees with long-time propagation") {
  for (int atoms : {2, 3})
    for (double w : {0.1, 3.0}) {
      const auto s = spec_at(atoms, w, 0.7, 0.1);
      const auto gen = lind::build_generator(s);
      const auto ss = lind::steady_state(gen);
      CHECK(ss.residual < 1e-10);
      CHECK_NOTHROW(ss.state.validate());
      CHECK(std::abs(ss.state.trace() - 1.0) < 1e-10);
      CHECK(ss.state.hermiticity_error() < 1e-10);
      CHECK(ss.state.min_eigenvalue() > -1e-8);
      const auto late = lind::propagate(gen, lind::ground_state(gen), 50.0 / s.gamma_r);
      CHECK(lind::trace_distance(ss.state, late) < 1e-6);
    }
}

TEST_CASE("spec validation") {
  auto s = spec_at(2, 0.1, 1.0);
  s.n_atoms = 4;
  CHECK_THROWS_AS(lind::build_generator(s), ValidationError);
  s = spec_at(2, 0.1, 1.0);
  s.gamma_r = 0.0;
  CHECK_THROWS_AS(lind::build_generator(s), ValidationError);
  s = spec_at(2, 0.1, 1.0);
  s.r = 0.0;
  CHECK_THROWS_AS(lind::build_generator(s), ValidationError);
  lind::DensityMatrix bad{Mat::Identity(4, 4)};
  CHECK_THROWS_AS(bad.validate(), NumericalError);
}

TEST_CASE("weak dressing plateau and tail") {
  for (int atoms : {2, 3}) {
    for (double x : {0.05, 0.2, 0.4}) CHECK(lind::interaction_energy(spec_at(atoms, 0.1, x)).ratio == doctest::Approx(1.0).epsilon(0.05));
    const double u1 = lind::interaction_energy(spec_at(atoms, 0.1, 3.0)).u;
    const double u2 = lind::interaction_energy(spec_at(atoms, 0.1, 30.0)).u;
    CHECK(std::log(std::abs(u2 / u1)) / std::log(10.0) == doctest::Approx(-6.0).epsilon(0.2 / 6.0));
  }
}

TEST_CASE("weak profile decreases beyond R_b; strong one has an extremum") {
  double prev = 1e300;
  for (double x = 1.0; x <= 4.0; x += 0.25) {
    const double u = std::abs(lind::interaction_energy(spec_at(2, 0.1, x)).u);
    CHECK(u < prev);
    prev = u;
  }
  // the weak profile has no interior extremum
  double best = 0.0, at = 0.0;
  for (double x = 0.1; x <= 2.0; x += 0.05) {
    const double u = std::abs(lind::interaction_energy(spec_at(2, 0.1, x)).ratio);
    if (u > best) best = u, at = x;
  }
  CHECK(at < 0.5);
  CHECK(best == doctest::Approx(1.0).epsilon(0.05));

  for (int atoms : {2, 3}) {
    double plateau = std::abs(lind::interaction_energy(spec_at(atoms, 10.0, 0.2)).ratio);
    best = 0.0;
    for (double x = 0.6; x <= 1.4; x += 0.05) {
      const double u = std::abs(lind::interaction_energy(spec_at(atoms, 10.0, x)).ratio);
      if (u > best) best = u, at = x;
    }
    CHECK(best > plateau);
    CHECK(at == doctest::Approx(1.0).epsilon(0.3));
  }
}

TEST_CASE("triangle soft core lies above the pair") {
  for (double x : {0.1, 0.3}) {
    const auto two = lind::interaction_energy(spec_at(2, 0.1, x));
    const auto three = lind::interaction_energy(spec_at(3, 0.1, x));
    CHECK(std::abs(three.u) > std::abs(two.u));
  }
}

TEST_CASE("small decay limit") {
  // against the collective-shift normalization the soft core tends to twice U0
  std::vector<double> dev_coll, dev_block;
  for (double g : {1e-1, 1e-2, 1e-3}) {
    auto s = spec_at(2, 0.1, 0.2, g);
    lind::InteractionOptions coll;
    coll.u0 = lind::U0Convention::collective_shift;
    dev_coll.push_back(std::abs(lind::interaction_energy(s, coll).ratio - 2.0));
    dev_block.push_back(std::abs(lind::interaction_energy(s).ratio - 1.0));
  }
  for (std::size_t i = 1; i < dev_coll.size(); ++i) {
    CHECK(dev_coll[i] < dev_coll[i - 1]);
    CHECK(dev_block[i] < dev_block[i - 1]);
  }
  CHECK(dev_coll.back() < 1e-2);
}

TEST_CASE("finite reference distance") {
  const auto s = spec_at(2, 0.1, 0.3);
  lind::InteractionOptions at_inf, at_20;
  at_20.r_ref = 20.0 * lind::blockade_radius(s.drive, s.c6, lind::Regime::weak);
  const auto a = lind::interaction_energy(s, at_inf), b = lind::interaction_energy(s, at_20);
  CHECK(b.u == doctest::Approx(a.u).epsilon(1e-6));
}

TEST_CASE("blockade radius") {
  CHECK(lind::blockade_radius({0.5, 2.0}, 2.0, lind::Regime::weak) == doctest::Approx(1.0));
  CHECK(lind::blockade_radius({0.5, 2.0}, 64.0 * 0.5, lind::Regime::strong) == doctest::Approx(2.0));
  CHECK(lind::blockade_radius({1.0, 1.0}, 5.0, lind::Regime::weak) ==
        lind::blockade_radius({1.0, 1.0}, 5.0, lind::Regime::strong));
  CHECK(lind::regime_of({2.0, 1.0}) == lind::Regime::strong);
  CHECK(lind::regime_of({0.5, -1.0}) == lind::Regime::weak);
  CHECK_THROWS_AS(lind::blockade_radius({0.0, 1.0}, 1.0, lind::Regime::strong), ValidationError);

  // 48 atoms on a 532 nm lattice inside R_b / 2 with R_b = 8 sites
  const double a = 532e-9, det = 2.0 * 3.141592653589793 * 20e6;
  const double c6 = det * std::pow(8.0 * a, 6);
  const double rb = lind::blockade_radius({0.1 * det, det}, c6, lind::Regime::weak);
  CHECK(rb / 2.0 >= 4.0 * a - 1e-15);
  int inside = 0;
  for (int i = -5; i <= 5; ++i)
    for (int j = -5; j <= 5; ++j)
      if (std::hypot(i * a, j * a) <= rb / 2.0 * (1.0 + 1e-12)) ++inside;
  CHECK(inside >= 48);
}
