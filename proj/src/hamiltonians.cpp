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

#include "catdress/hamiltonians.hpp"

#include <cmath>
#include <sstream>

#include "catdress/errors.hpp"

namespace catdress::ham {

void DriveParams::validate(bool allow_zero_detuning) const {
  require(std::isfinite(rabi) && rabi >= 0.0, "drive: rabi frequency must be finite and >= 0");
  require(std::isfinite(detuning), "drive: detuning must be finite");
  require(allow_zero_detuning || detuning != 0.0, "drive: detuning must be nonzero here");
}

DiagonalHamiltonian::DiagonalHamiltonian(int n_atoms, std::vector<double> energies)
    : n_atoms_(n_atoms), energies_(std::move(energies)) {
  require(n_atoms_ >= 1, "DiagonalHamiltonian: n_atoms must be >= 1");
  require(energies_.size() == static_cast<std::size_t>(n_atoms_) + 1,
          "DiagonalHamiltonian: expected N+1 energies");
  for (double e : energies_) require(std::isfinite(e), "DiagonalHamiltonian: non-finite energy");
}

DiagonalHamiltonian DiagonalHamiltonian::shifted(double offset) const {
  auto e = energies_;
  for (auto& x : e) x += offset;
  return {n_atoms_, std::move(e)};
}

DiagonalHamiltonian DiagonalHamiltonian::scaled(double factor) const {
  auto e = energies_;
  for (auto& x : e) x *= factor;
  return {n_atoms_, std::move(e)};
}

double DiagonalHamiltonian::local_kerr(double n_center) const {
  require(n_atoms_ >= 2, "local_kerr: needs at least two atoms");
  long k = std::lround(n_center);
  if (k < 1) k = 1;
  if (k > n_atoms_ - 1) k = n_atoms_ - 1;
  return 0.5 * (energies_[k + 1] - 2.0 * energies_[k] + energies_[k - 1]);
}

std::string DiagonalHamiltonian::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "N_e,energy\n";
  for (std::size_t k = 0; k < energies_.size(); ++k) out << k << ',' << energies_[k] << '\n';
  return out.str();
}

DiagonalHamiltonian h_exact(const DriveParams& drive, int n_atoms) {
  drive.validate(false);
  require(n_atoms >= 1, "h_exact: n_atoms must be >= 1");
  const double d = drive.detuning;
  const double ratio2 = (drive.rabi / d) * (drive.rabi / d);
  std::vector<double> e(static_cast<std::size_t>(n_atoms) + 1);
  for (int k = 0; k <= n_atoms; ++k) {
    // 1 - sqrt(1+x) = -x / (1 + sqrt(1+x)) avoids cancellation at small x
    const double x = k * ratio2;
    e[k] = 0.5 * d * (-x / (1.0 + std::sqrt(1.0 + x)));
  }
  return {n_atoms, std::move(e)};
}

std::vector<double> weak_series_coefficients(const DriveParams& drive, int max_order) {
  drive.validate(false);
  require(max_order >= 1 && max_order <= 4, "h_weak_series: max_order must lie in 1..4");
  const double w2 = drive.rabi * drive.rabi;
  const double d = drive.detuning;
  const double prefactors[4] = {-1.0 / 4.0, 1.0 / 16.0, -1.0 / 32.0, 5.0 / 256.0};
  std::vector<double> c(5, 0.0);
  double wp = w2;
  double dp = d;
  for (int p = 1; p <= max_order; ++p) {
    c[p] = prefactors[p - 1] * wp / dp;
    wp *= w2;
    dp *= d * d;
  }
  return c;
}

DiagonalHamiltonian h_weak_series(const DriveParams& drive, int n_atoms, int max_order) {
  const auto c = weak_series_coefficients(drive, max_order);
  return h_polynomial(c, n_atoms);
}

DiagonalHamiltonian h_resonant(double rabi, int n_atoms) {
  require(std::isfinite(rabi), "h_resonant: rabi must be finite");
  require(n_atoms >= 1, "h_resonant: n_atoms must be >= 1");
  std::vector<double> e(static_cast<std::size_t>(n_atoms) + 1);
  for (int k = 0; k <= n_atoms; ++k) e[k] = std::sqrt(static_cast<double>(k)) * rabi;
  return {n_atoms, std::move(e)};
}

std::vector<double> resonant_expansion_coefficients(double rabi, int n_atoms) {
  require(std::isfinite(rabi), "h_resonant_expansion: rabi must be finite");
  require(n_atoms >= 4, "h_resonant_expansion: needs n_atoms >= 4");
  const double n = n_atoms;
  const double r = 2.0 / n;
  return {rabi * (5.0 / 16.0) * std::sqrt(n / 2.0), rabi * (15.0 / 16.0) * std::sqrt(r),
          -rabi * (5.0 / 16.0) * std::pow(r, 1.5), rabi * (1.0 / 16.0) * std::pow(r, 2.5)};
}

DiagonalHamiltonian h_resonant_expansion(double rabi, int n_atoms) {
  const auto c = resonant_expansion_coefficients(rabi, n_atoms);
  return h_polynomial(c, n_atoms);
}

double chi2_resonant(double rabi, int n_atoms) {
  require(n_atoms >= 1, "chi2_resonant: n_atoms must be >= 1");
  return (5.0 / 16.0) * std::pow(2.0 / n_atoms, 1.5) * rabi;
}

DiagonalHamiltonian h_polynomial(std::span<const double> coeffs, int n_atoms) {
  require(!coeffs.empty(), "h_polynomial: at least one coefficient required");
  require(n_atoms >= 1, "h_polynomial: n_atoms must be >= 1");
  std::vector<double> e(static_cast<std::size_t>(n_atoms) + 1);
  for (int k = 0; k <= n_atoms; ++k) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * k + *it;
    e[k] = acc;
  }
  return {n_atoms, std::move(e)};
}

}  // namespace catdress::ham
