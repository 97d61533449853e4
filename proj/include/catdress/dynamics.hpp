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

#include <string>
#include <vector>

#include "catdress/hamiltonians.hpp"
#include "catdress/spin.hpp"

namespace catdress::dyn {

struct EvolutionSpec {
  ham::DiagonalHamiltonian hamiltonian;
  double time = 0.0;  // s
};

/// amplitude[k] -> exp(-i energy[k] t) amplitude[k].
spin::SpinState evolve(const spin::SpinState& state, const ham::DiagonalHamiltonian& h, double t);
spin::SpinState evolve(const spin::SpinState& state, const EvolutionSpec& spec);

struct CharacteristicTimes {
  double t_m = 0.0;    // 2 pi / (m |chi|)
  double t_min = 0.0;  // 4 pi / (2 sqrt(N) |chi|)
  int m_max = 0;       // floor(sqrt(N))
  bool forms = false;  // t_m >= t_min
};

CharacteristicTimes characteristic_times(double chi, int n_atoms, int m);

struct ScanOptions {
  double t_lo = 0.0;
  double t_hi = 0.0;
  int samples = 512;
  int phi0_samples = 16;
  double rel_tol = 1e-4;
  /// Number of local grid maxima that get refined; the best refined one wins.
  int refine_peaks = 4;
};

struct ScanResult {
  double t_best = 0.0;
  double fidelity = 0.0;
  double phi0 = 0.0;
  std::vector<double> alphas;
  std::vector<double> times;
  std::vector<double> fidelity_trace;

  /// "t,F" rows of the grid trace.
  std::string trace_csv() const;
};

/// Time at which the m-CSS fidelity of `state` evolved under `h` peaks in
/// [t_lo, t_hi]. The grid maximum is taken first, then golden-section
/// refinement brackets each of the strongest local maxima.
ScanResult cat_time_scan(const spin::SpinState& state, const ham::DiagonalHamiltonian& h, int m,
                         const ScanOptions& options);

/// Time for the m-component superposition under exp(-i chi N_e^2 t):
/// pi / (m |chi|), with chi the local Kerr coefficient at N/2.
double kerr_cat_time(const ham::DiagonalHamiltonian& h, int m);

/// Window [0.2, 2.5] x kerr_cat_time with enough samples to resolve the
/// fidelity peak: max(512, 11 N / m).
ScanOptions default_scan(const ham::DiagonalHamiltonian& h, int m);

}  // namespace catdress::dyn
