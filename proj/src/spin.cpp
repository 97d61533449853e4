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

#include "catdress/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "catdress/errors.hpp"

namespace catdress::spin {

namespace {

constexpr double kPi = std::numbers::pi;

// |amplitude_k| of the CSS at polar angle theta, k = 0..N, in log space.
std::vector<double> css_magnitudes(double theta, int n) {
  std::vector<double> mags(static_cast<std::size_t>(n) + 1, 0.0);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  if (s == 0.0) {
    mags[0] = 1.0;
    return mags;
  }
  if (c <= 0.0) {
    mags[n] = 1.0;
    return mags;
  }
  const double log_c = std::log(c);
  const double log_s = std::log(s);
  for (int k = 0; k <= n; ++k) {
    mags[k] = std::exp(0.5 * log_binomial(n, k) + (n - k) * log_c + k * log_s);
  }
  return mags;
}

// sum_k coeffs[k] z^k by Horner's rule.
cplx horner(std::span<const cplx> coeffs, cplx z) {
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

SpinState::SpinState(int n_atoms, std::vector<cplx> amplitudes, double norm_tol)
    : n_atoms_(n_atoms), amplitudes_(std::move(amplitudes)) {
  require(n_atoms_ >= 1, "SpinState: n_atoms must be >= 1");
  require(amplitudes_.size() == static_cast<std::size_t>(n_atoms_) + 1,
          "SpinState: expected N+1 amplitudes");
  const double nrm = norm();
  require(std::abs(nrm * nrm - 1.0) <= norm_tol,
          "SpinState: amplitudes are not normalized (|psi|^2 = " + std::to_string(nrm * nrm) + ")");
}

SpinState SpinState::normalized(int n_atoms, std::vector<cplx> amplitudes) {
  double sq = 0.0;
  for (const auto& a : amplitudes) sq += std::norm(a);
  require(sq > 0.0 && std::isfinite(sq), "SpinState: cannot normalize a zero or non-finite vector");
  const double inv = 1.0 / std::sqrt(sq);
  for (auto& a : amplitudes) a *= inv;
  return SpinState(n_atoms, std::move(amplitudes));
}

double SpinState::norm() const {
  double sq = 0.0;
  for (const auto& a : amplitudes_) sq += std::norm(a);
  return std::sqrt(sq);
}

cplx SpinState::inner(const SpinState& other) const {
  require(other.n_atoms_ == n_atoms_, "SpinState::inner: atom numbers differ");
  cplx acc = 0.0;
  for (std::size_t k = 0; k < amplitudes_.size(); ++k) acc += std::conj(amplitudes_[k]) * other.amplitudes_[k];
  return acc;
}

void CSSParams::validate() const {
  require(std::isfinite(theta) && theta >= 0.0 && theta <= kPi, "CSSParams: theta must lie in [0, pi]");
  require(std::isfinite(phi), "CSSParams: phi must be finite");
}

cplx CSSParams::eta() const {
  return std::polar(std::tan(theta / 2.0), -phi);
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

SpinState css_state(const CSSParams& params, int n_atoms) {
  params.validate();
  require(n_atoms >= 1, "css_state: n_atoms must be >= 1");
  const auto mags = css_magnitudes(params.theta, n_atoms);
  std::vector<cplx> amps(mags.size());
  for (int k = 0; k <= n_atoms; ++k) amps[k] = std::polar(mags[k], -k * params.phi);
  return SpinState::normalized(n_atoms, std::move(amps));
}

cplx css_overlap(const CSSParams& a, const CSSParams& b, int n_atoms) {
  a.validate();
  b.validate();
  require(n_atoms >= 1, "css_overlap: n_atoms must be >= 1");
  const double ca = std::cos(a.theta / 2.0), sa = std::sin(a.theta / 2.0);
  const double cb = std::cos(b.theta / 2.0), sb = std::sin(b.theta / 2.0);
  const cplx z = ca * cb + sa * sb * std::polar(1.0, a.phi - b.phi);
  const double r = std::abs(z);
  if (r == 0.0) return 0.0;
  return std::polar(std::pow(r, n_atoms), n_atoms * std::arg(z));
}

double expectation_ne(const SpinState& state, int power) {
  require(power >= 1, "expectation_ne: power must be >= 1");
  double acc = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t k = 0; k < amps.size(); ++k) acc += std::pow(static_cast<double>(k), power) * std::norm(amps[k]);
  return acc;
}

double HusimiGrid::theta(int i) const { return (i + 0.5) * kPi / n_theta; }
double HusimiGrid::phi(int j) const { return 2.0 * kPi * j / n_phi; }

double HusimiGrid::integral() const {
  const double dtheta = kPi / n_theta;
  const double dphi = 2.0 * kPi / n_phi;
  double acc = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_phi; ++j) row += at(i, j);
    acc += row * std::sin(theta(i));
  }
  return acc * dtheta * dphi;
}

std::pair<int, int> HusimiGrid::argmax() const {
  const auto it = std::max_element(values.begin(), values.end());
  const auto idx = static_cast<int>(std::distance(values.begin(), it));
  return {idx / n_phi, idx % n_phi};
}

HusimiGrid husimi_q(const SpinState& state, int n_theta, int n_phi) {
  require(n_theta >= 2 && n_phi >= 2, "husimi_q: grid needs at least 2x2 points");
  const int n = state.n_atoms();
  HusimiGrid grid{n, n_theta, n_phi, std::vector<double>(static_cast<std::size_t>(n_theta) * n_phi)};
  const double prefactor = (n + 1) / (4.0 * kPi);
  const auto psi = state.amplitudes();

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n_theta; ++i) {
    const auto mags = css_magnitudes(grid.theta(i), n);
    std::vector<cplx> coeffs(mags.size());
    for (std::size_t k = 0; k < mags.size(); ++k) coeffs[k] = mags[k] * psi[k];
    for (int j = 0; j < n_phi; ++j) {
      const cplx proj = horner(coeffs, std::polar(1.0, grid.phi(j)));
      grid.values[static_cast<std::size_t>(i) * n_phi + j] = prefactor * std::norm(proj);
    }
  }
  return grid;
}

std::vector<double> equatorial_weights(int n_atoms) {
  return css_magnitudes(kPi / 2.0, n_atoms);
}

}  // namespace catdress::spin
