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

#include <complex>
#include <span>
#include <vector>

namespace catdress {

using cplx = std::complex<double>;

namespace spin {

/// Pure state on the symmetric (Dicke) ladder of `n_atoms` two-level atoms.
/// amplitudes[k] is the weight of the Dicke state with k atoms in |e>.
/// In |J M> language, N = 2J and N_e = J + M.
class SpinState {
 public:
  SpinState() = default;
  /// Takes ownership of `amplitudes`; throws unless its length is N + 1 and
  /// its norm is 1 within `norm_tol`.
  SpinState(int n_atoms, std::vector<cplx> amplitudes, double norm_tol = 1e-12);

  /// Builds a state from arbitrary amplitudes, renormalizing them.
  static SpinState normalized(int n_atoms, std::vector<cplx> amplitudes);

  int n_atoms() const noexcept { return n_atoms_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  const cplx& operator[](std::size_t k) const { return amplitudes_[k]; }

  double norm() const;
  /// <this|other>
  cplx inner(const SpinState& other) const;

 private:
  int n_atoms_ = 0;
  std::vector<cplx> amplitudes_;
};

/// Polar angles of a coherent spin state. eta = tan(theta/2) exp(-i phi).
struct CSSParams {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  /// Throws ValidationError for theta outside [0, pi] or non-finite phi.
  /// phi is accepted on the whole real line and wrapped into [0, 2 pi).
  void validate() const;
  /// tan(theta/2) exp(-i phi); infinite at the south pole.
  cplx eta() const;
};

double log_binomial(int n, int k);

SpinState css_state(const CSSParams& params, int n_atoms);

/// Closed-form overlap <a|b>, written in half-angle form so the south pole
/// needs no special casing.
cplx css_overlap(const CSSParams& a, const CSSParams& b, int n_atoms);

/// Sum over k of k^power |a_k|^2.
double expectation_ne(const SpinState& state, int power);

/// Husimi Q on a (theta, phi) grid. theta uses cell midpoints over [0, pi],
/// phi uses n_phi uniform points over [0, 2 pi) starting at 0.
/// Q = (N+1)/(4 pi) |<theta,phi|psi>|^2, normalized so that the midpoint
/// quadrature with weights sin(theta) dtheta dphi integrates to one.
struct HusimiGrid {
  int n_atoms = 0;
  int n_theta = 0;
  int n_phi = 0;
  std::vector<double> values;  // row-major, theta index outer

  double theta(int i) const;
  double phi(int j) const;
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * n_phi + j]; }
  double integral() const;
  /// (i, j) of the largest value; ties resolved to the first in row-major order.
  std::pair<int, int> argmax() const;
};

HusimiGrid husimi_q(const SpinState& state, int n_theta, int n_phi);

/// Magnitudes sqrt(C(N,k)) 2^{-N/2} of the equatorial CSS, i.e. the weights
/// w_k such that <pi/2, phi|psi> = sum_k w_k e^{i k phi} psi_k.
std::vector<double> equatorial_weights(int n_atoms);

}  // namespace spin
}  // namespace catdress
