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

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "catdress/hamiltonians.hpp"

namespace catdress::mb {

using Vec3 = std::array<double, 3>;

enum class LatticeKind { square, triangular, chain, explicit_positions };

LatticeKind parse_lattice_kind(std::string_view name);

/// Atom positions (m) with an isotropic van der Waals pair potential
/// V_ij = c6 / r_ij^6 (rad/s).
class LatticeGeometry {
 public:
  LatticeGeometry(std::vector<Vec3> positions, double c6);

  int size() const noexcept { return static_cast<int>(positions_.size()); }
  std::span<const Vec3> positions() const noexcept { return positions_; }
  double c6() const noexcept { return c6_; }
  double distance(int i, int j) const;
  double pair_potential(int i, int j) const { return v_[static_cast<std::size_t>(i) * size() + j]; }
  double min_distance() const;

 private:
  std::vector<Vec3> positions_;
  double c6_;
  std::vector<double> v_;
};

/// square: extent x extent grid; triangular: triangular patch with extent+1
/// atoms per side (extent 1 is an equilateral triangle); chain: extent atoms.
/// explicit_positions takes `positions` verbatim.
LatticeGeometry build_lattice(LatticeKind kind, double constant, int extent, double c6,
                              std::span<const Vec3> positions = {});

/// Geometry whose pair potentials equal the given V values: a chain of two
/// atoms or an equilateral triangle, with c6 = 1 and r = V^{-1/6}.
LatticeGeometry pair_with_potential(double v);
LatticeGeometry triangle_with_potential(double v);

// Perturbative light shifts for H = sum_i [(W/2) sigma_x^i + D n_i] + sum_{i<j} V_ij n_i n_j,
// n_i the Rydberg projector of atom i.

/// -(W^2 / 4D) N.
double u2(const ham::DriveParams& drive, int n_atoms);

/// (W^4/16 D^3) sum_{i<j} [1/(1 + V_ij/2D) - 1]. Throws ResonanceError at the pole.
double u4(const ham::DriveParams& drive, const LatticeGeometry& geometry);

/// Sixth-order correction written with the pair factors a_ij = 1/(2 - V_ij/D)
/// and the triple denominator 3 - (V_ij + V_ik + V_jk)/D:
///   W^6/(2^6 D^5) [ -2N^3
///     + N sum_{i!=j} 4 a_ij
///     + 2 sum_{i!=j} 2 a_ij (sum_{k!=i} 2 a_ik + sum_{k!=j} 2 a_jk)
///     - sum_{i!=j} 2 a_ij (sum_{l} a_lj + sum_{l} a_il)
///     - sum_{(ijk) distinct} (2 a_ij + 2 a_ik + 2 a_jk)^2 / (3 - ...) ].
/// Inner sums run over every atom; the self term uses V_ll = 0, a_ll = 1/2.
/// Ordered index tuples throughout, which keeps each term symmetric.
double u6(const ham::DriveParams& drive, const LatticeGeometry& geometry);

/// Fourth-order ground-branch shift from linked-cluster Rayleigh-Schrodinger
/// theory, with x_ij = 1/(2 + V_ij/D):
///   (W^4/D^3) [ N/16 + sum_{i<j} (1/8 - x_ij/4) ].
double series_u4(const ham::DriveParams& drive, const LatticeGeometry& geometry);

/// Sixth-order counterpart:
///   (W^6/D^5) [ -N/32 + sum_{i<j} (3 x_ij/8 - 3/16) + sum_{i<j<k} T_ijk ],
///   T = (x^2+y^2+z^2 - 2(xy+xz+yz) + 3(x+y+z) - 3)/16
///       - (x+y+z)^2 / (16 (3 + (V_ij+V_ik+V_jk)/D)),
/// x, y, z the pair factors of ij, ik, jk.
double series_u6(const ham::DriveParams& drive, const LatticeGeometry& geometry);

/// Eigenvalue of the dressing Hamiltonian above whose eigenvector has the
/// largest weight on the all-|e> state. Dense diagonalization, <= 12 atoms.
/// Throws NumericalError if that weight is below 0.5.
double exact_diag_oracle(const ham::DriveParams& drive, const LatticeGeometry& geometry);

}  // namespace catdress::mb
