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

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "catdress/hamiltonians.hpp"

namespace catdress::lind {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Two atoms at distance r, or three on an equilateral triangle of side r.
/// Each atom has levels {e, r}; drive (W/2)(|r><e| + h.c.) + D |r><r|,
/// decay sqrt(gamma_r) |e><r|, and C6 / r^6 between Rydberg atoms.
struct OpenSystemSpec {
  int n_atoms = 2;
  double r = 0.0;  // m
  ham::DriveParams drive;
  double c6 = 0.0;       // rad m^6 / s
  double gamma_r = 0.0;  // 1/s

  /// `check_distance` false skips r, for quantities that do not depend on it.
  void validate(bool check_distance = true) const;
  double pair_potential() const;
};

struct DensityMatrix {
  Matrix rho;

  double trace() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;
  /// Throws NumericalError unless Hermitian and unit-trace within 1e-10
  /// and positive semidefinite within -1e-8.
  void validate() const;
};

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Column-stacked superoperator, vec(A X B) = (B^T (x) A) vec(X).
/// Frequencies are stored divided by `scale` so entries stay O(1)
/// for moderate interactions.
struct Liouvillian {
  int n_atoms = 0;
  std::vector<unsigned> basis;  // bit i set: atom i in |r>
  double scale = 1.0;           // rad/s per internal unit
  Matrix hamiltonian;           // H_d / scale
  Matrix generator;             // L / scale

  int dimension() const { return static_cast<int>(basis.size()); }
};

enum class Subspace { full, single_excitation };

Liouvillian build_generator(const OpenSystemSpec& spec, Subspace subspace = Subspace::full);

struct SteadyState {
  DensityMatrix state;
  double residual = 0.0;           // ||L rho|| / scale
  double relative_residual = 0.0;  // ||L rho|| / ||L||
};

/// Kernel of the generator normalized to unit trace, from the linear system
/// with one row replaced by the trace condition. Throws if the kernel is
/// not one-dimensional.
SteadyState steady_state(const Liouvillian& generator);

/// exp(L t) rho0, t in seconds.
DensityMatrix propagate(const Liouvillian& generator, const DensityMatrix& rho0, double t);

/// |e...e><e...e| in the generator's basis.
DensityMatrix ground_state(const Liouvillian& generator);

/// Tr[rho H_d] in rad/s.
double energy(const Liouvillian& generator, const DensityMatrix& rho);

enum class U0Convention {
  /// Steady-state energy with at most one Rydberg excitation, minus the
  /// non-interacting value.
  blockaded_steady_state,
  /// Collective light shift of n atoms minus n single-atom shifts.
  collective_shift,
};

struct InteractionOptions {
  double r_ref = std::numeric_limits<double>::infinity();
  U0Convention u0 = U0Convention::blockaded_steady_state;
};

struct InteractionResult {
  double u = 0.0;   // U(r) - U(r_ref), rad/s
  double u0 = 0.0;  // rad/s
  double ratio = 0.0;
  double residual = 0.0;
};

/// The reference subtraction is done as a linear-response solve for the
/// change of the steady state, which keeps the far tail free of
/// cancellation.
InteractionResult interaction_energy(const OpenSystemSpec& spec, const InteractionOptions& options = {});

double u0_collective(const OpenSystemSpec& spec);
double u0_blockaded(const OpenSystemSpec& spec);

enum class Regime { weak, strong };

/// (C6 / D)^{1/6} or (C6 / W)^{1/6}.
double blockade_radius(const ham::DriveParams& drive, double c6, Regime regime);
/// strong when W > |D|.
Regime regime_of(const ham::DriveParams& drive);

}  // namespace catdress::lind
