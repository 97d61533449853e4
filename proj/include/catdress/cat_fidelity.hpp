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

namespace catdress::cat {

/// Direction in which component k of an m-CSS steps around the equator.
/// Ascending puts component k at phi0 + 2 pi k/m; descending at
/// phi0 - 2 pi k/m, which is how the eta-rotated catalog kets are written.
enum class AzimuthOrder { ascending, descending };

/// Equal-weight superposition of m equatorial coherent states.
struct CatTarget {
  int m = 1;
  double phi0 = 0.0;
  std::vector<double> alphas;  // one phase per component
  AzimuthOrder order = AzimuthOrder::ascending;

  void validate(int n_atoms) const;
  double azimuth(int k) const;
  /// True when m > sqrt(N): components can no longer be resolved.
  bool exceeds_formation_bound(int n_atoms) const;
};

/// Renormalized m-CSS. If `raw_norm` is given it receives the norm of the
/// state with the bare 1/sqrt(m) prefactor.
spin::SpinState build_mcss(const CatTarget& target, int n_atoms, double* raw_norm = nullptr);

/// |<target|psi>|^2 for the renormalized target with fixed phases.
double target_fidelity(const spin::SpinState& state, const CatTarget& target);

struct PhaseFit {
  double fidelity = 0.0;
  std::vector<double> alphas;  // ascending azimuth order
};

/// analytic: alpha_k = arg <CSS_k|psi> and F = (sum_k |<CSS_k|psi>|)^2 / <T|T>
/// with T the unnormalized target. This is the fidelity used everywhere.
/// refined: continues from there to the true maximum over phases, which
/// differs once the components overlap (m^2 approaching N). With free
/// phases, strongly overlapping components fit almost anything, so the
/// refined value is a diagnostic, not a cat-formation measure.
enum class PhaseSolver { analytic, refined };

PhaseFit optimal_phase_fidelity(const spin::SpinState& state, int m, double phi0,
                                PhaseSolver solver = PhaseSolver::analytic);

struct FidelityResult {
  double fidelity = 0.0;
  double phi0 = 0.0;
  std::vector<double> alphas;
};

/// Maximizes over phi0 in [0, 2 pi/m): a uniform grid with at least
/// `phi0_samples` points (more when the lobes are narrower than the grid),
/// then golden-section refinement around the best point. Ties go to the
/// smallest phi0.
FidelityResult fidelity_optimize(const spin::SpinState& state, int m, int phi0_samples = 64,
                                 PhaseSolver solver = PhaseSolver::analytic);

/// Number of catalogued phase variants for m (0 if none).
int catalog_variants(int m);
/// Catalogued target (1-based variant). Phases are stored as printed,
/// with descending azimuth order and phi0 = 0.
CatTarget phase_catalog(int m, int variant);

struct WeightedState {
  double weight = 1.0;
  spin::SpinState state;
};

struct RevivalResult {
  double t_revival = 0.0;
  double fidelity = 0.0;
  double phi = 0.0;
  bool passed = false;
};

struct RevivalOptions {
  double t_lo = 0.0;
  double t_hi = 0.0;
  int samples = 512;
  double threshold = 0.99;
};

/// Largest single-CSS fidelity reached by the evolved state inside the
/// window, optimized over the CSS azimuth.
RevivalResult revival_test(const spin::SpinState& state0, const ham::DiagonalHamiltonian& h,
                           const RevivalOptions& options);
/// Same test for an incoherent ensemble sum_i w_i |psi_i><psi_i|.
RevivalResult revival_test(std::span<const WeightedState> ensemble, const ham::DiagonalHamiltonian& h,
                           const RevivalOptions& options);

namespace detail {

/// Evaluates <pi/2, phi|psi> for many phi once the state is fixed.
class EquatorProjector {
 public:
  explicit EquatorProjector(const spin::SpinState& state);
  cplx at(double phi) const;
  int n_atoms() const noexcept { return n_atoms_; }

 private:
  int n_atoms_;
  std::vector<cplx> coeffs_;
};

/// <CSS(phi0 + 2 pi k/m) | CSS(phi0 + 2 pi l/m)> depends only on l - k.
std::vector<cplx> equator_gram(int n_atoms, int m);

/// |sum_k conj(t_k) c_k|^2 / t^H G t for unit-modulus phase factors t.
double phase_ratio(std::span<const cplx> c, std::span<const cplx> gram, std::span<const cplx> t);
/// phase_ratio with t_k = c_k / |c_k|; the optimum when components are orthogonal.
double analytic_fidelity(std::span<const cplx> c, std::span<const cplx> gram);
/// Improves `t` in place from its current value until the ratio stops
/// growing and returns the final ratio. Components overlap through the
/// Gram matrix, so arg c_k alone is not optimal.
double refine_phases(std::span<const cplx> c, std::span<const cplx> gram, std::span<cplx> t);

}  // namespace detail

}  // namespace catdress::cat
