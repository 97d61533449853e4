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

#include <span>
#include <string>
#include <vector>

namespace catdress::ham {

/// Laser drive of a single atom. Angular frequencies in rad/s.
struct DriveParams {
  double rabi = 0.0;
  double detuning = 0.0;

  /// rabi must be finite and >= 0; detuning finite, and nonzero unless
  /// `allow_zero_detuning`.
  void validate(bool allow_zero_detuning = true) const;
};

/// H = sum_k energy[k] |k><k| on the Dicke ladder.
class DiagonalHamiltonian {
 public:
  DiagonalHamiltonian() = default;
  DiagonalHamiltonian(int n_atoms, std::vector<double> energies);

  int n_atoms() const noexcept { return n_atoms_; }
  std::span<const double> energies() const noexcept { return energies_; }
  double operator[](std::size_t k) const { return energies_[k]; }

  DiagonalHamiltonian shifted(double offset) const;
  DiagonalHamiltonian scaled(double factor) const;

  /// Signed Kerr coefficient seen by a wavepacket centred at `n_center`:
  /// half the second difference of the energies there.
  double local_kerr(double n_center) const;

  /// "N_e,energy" rows with a header line.
  std::string to_csv() const;

 private:
  int n_atoms_ = 0;
  std::vector<double> energies_;
};

/// Collective light shift (D/2)(1 - sqrt(1 + N_e W^2/D^2)).
DiagonalHamiltonian h_exact(const DriveParams& drive, int n_atoms);

/// Power-series coefficients c[p] (p = 0..4) of the weak-dressing expansion
/// truncated after `max_order` nonzero terms.
std::vector<double> weak_series_coefficients(const DriveParams& drive, int max_order);
DiagonalHamiltonian h_weak_series(const DriveParams& drive, int n_atoms, int max_order);

/// sqrt(N_e) W on resonance.
DiagonalHamiltonian h_resonant(double rabi, int n_atoms);

/// Cubic expansion of the resonant shift about N_e = N/2; coefficients in
/// ascending powers of N_e.
std::vector<double> resonant_expansion_coefficients(double rabi, int n_atoms);
DiagonalHamiltonian h_resonant_expansion(double rabi, int n_atoms);
/// (5/16) (2/N)^{3/2} W, the magnitude of the quadratic expansion term.
double chi2_resonant(double rabi, int n_atoms);

/// energy[k] = sum_p coeffs[p] k^p.
DiagonalHamiltonian h_polynomial(std::span<const double> coeffs, int n_atoms);

}  // namespace catdress::ham
