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

#include "catdress/manybody.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "catdress/errors.hpp"

namespace catdress::mb {

namespace {

constexpr double kPoleTol = 1e-9;

void check_drive(const ham::DriveParams& drive) { drive.validate(false); }

std::string atoms_label(std::initializer_list<int> atoms) {
  std::string s;
  for (int a : atoms) s += (s.empty() ? "" : ",") + std::to_string(a);
  return s;
}

}  // namespace

LatticeKind parse_lattice_kind(std::string_view name) {
  if (name == "square") return LatticeKind::square;
  if (name == "triangular") return LatticeKind::triangular;
  if (name == "chain") return LatticeKind::chain;
  if (name == "explicit") return LatticeKind::explicit_positions;
  throw ValidationError("unknown lattice kind '" + std::string(name) + "' (square|triangular|chain|explicit)");
}

LatticeGeometry::LatticeGeometry(std::vector<Vec3> positions, double c6) : positions_(std::move(positions)), c6_(c6) {
  require(!positions_.empty(), "LatticeGeometry: no atoms");
  require(std::isfinite(c6_) && c6_ >= 0.0, "LatticeGeometry: c6 must be finite and >= 0");
  for (const auto& p : positions_)
    for (double x : p) require(std::isfinite(x), "LatticeGeometry: non-finite coordinate");
  const int n = size();
  v_.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double r = distance(i, j);
      require(r > 0.0, "LatticeGeometry: atoms " + atoms_label({i, j}) + " coincide");
      const double v = c6_ / std::pow(r, 6);
      v_[static_cast<std::size_t>(i) * n + j] = v;
      v_[static_cast<std::size_t>(j) * n + i] = v;
    }
  }
}

double LatticeGeometry::distance(int i, int j) const {
  const auto& a = positions_.at(i);
  const auto& b = positions_.at(j);
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

double LatticeGeometry::min_distance() const {
  double d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) d = std::min(d, distance(i, j));
  return d;
}

LatticeGeometry build_lattice(LatticeKind kind, double constant, int extent, double c6,
                              std::span<const Vec3> positions) {
  if (kind == LatticeKind::explicit_positions) return {std::vector<Vec3>(positions.begin(), positions.end()), c6};
  require(extent >= 1, "build_lattice: extent must be >= 1");
  require(std::isfinite(constant) && constant > 0.0, "build_lattice: lattice constant must be > 0");
  std::vector<Vec3> pts;
  switch (kind) {
    case LatticeKind::square:
      for (int iy = 0; iy < extent; ++iy)
        for (int ix = 0; ix < extent; ++ix) pts.push_back({ix * constant, iy * constant, 0.0});
      break;
    case LatticeKind::triangular:
      for (int row = 0; row <= extent; ++row)
        for (int i = 0; i <= extent - row; ++i)
          pts.push_back({(i + 0.5 * row) * constant, row * std::sqrt(3.0) / 2.0 * constant, 0.0});
      break;
    case LatticeKind::chain:
      for (int i = 0; i < extent; ++i) pts.push_back({i * constant, 0.0, 0.0});
      break;
    case LatticeKind::explicit_positions:
      break;
  }
  return {std::move(pts), c6};
}

LatticeGeometry pair_with_potential(double v) {
  require(std::isfinite(v) && v > 0.0, "pair_with_potential: V must be > 0");
  return build_lattice(LatticeKind::chain, std::pow(v, -1.0 / 6.0), 2, 1.0);
}

LatticeGeometry triangle_with_potential(double v) {
  require(std::isfinite(v) && v > 0.0, "triangle_with_potential: V must be > 0");
  return build_lattice(LatticeKind::triangular, std::pow(v, -1.0 / 6.0), 1, 1.0);
}

double u2(const ham::DriveParams& drive, int n_atoms) {
  check_drive(drive);
  require(n_atoms >= 1, "u2: n_atoms must be >= 1");
  return -drive.rabi * drive.rabi / (4.0 * drive.detuning) * n_atoms;
}

double u4(const ham::DriveParams& drive, const LatticeGeometry& g) {
  check_drive(drive);
  const double d = drive.detuning;
  double sum = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      const double den = 1.0 + g.pair_potential(i, j) / (2.0 * d);
      if (std::abs(den) < kPoleTol) throw ResonanceError("u4: pole 1 + V/2D = 0 at atoms " + atoms_label({i, j}), {i, j});
      sum += 1.0 / den - 1.0;
    }
  }
  return std::pow(drive.rabi, 4) / (16.0 * d * d * d) * sum;
}

double u6(const ham::DriveParams& drive, const LatticeGeometry& g) {
  check_drive(drive);
  const double d = drive.detuning;
  const int n = g.size();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.5);
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double den = 2.0 - g.pair_potential(i, j) / d;
      if (std::abs(den) < kPoleTol) throw ResonanceError("u6: pole 2 - V/D = 0 at atoms " + atoms_label({i, j}), {i, j});
      at(i, j) = 1.0 / den;
    }
  }
  // Row sums over all atoms (self term 1/2) and over k != i.
  std::vector<double> row_all(n, 0.0), row_excl(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      row_all[i] += at(i, k);
      if (k != i) row_excl[i] += at(i, k);
    }
  }
  const double nn = n;
  double bracket = -2.0 * nn * nn * nn;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double aij = at(i, j);
      bracket += nn * 4.0 * aij;
      bracket += 2.0 * (2.0 * aij) * (2.0 * row_excl[i] + 2.0 * row_excl[j]);
      bracket -= 2.0 * aij * (row_all[j] + row_all[i]);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double den = 3.0 - (g.pair_potential(i, j) + g.pair_potential(i, k) + g.pair_potential(j, k)) / d;
        if (std::abs(den) < kPoleTol)
          throw ResonanceError("u6: pole 3 - sum V/D = 0 at atoms " + atoms_label({i, j, k}), {i, j, k});
        const double s = 2.0 * at(i, j) + 2.0 * at(i, k) + 2.0 * at(j, k);
        bracket -= s * s / den;
      }
    }
  }
  return std::pow(drive.rabi, 6) / (64.0 * std::pow(d, 5)) * bracket;
}

double series_u4(const ham::DriveParams& drive, const LatticeGeometry& g) {
  check_drive(drive);
  const double d = drive.detuning;
  double sum = g.size() / 16.0;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      const double den = 2.0 + g.pair_potential(i, j) / d;
      if (std::abs(den) < kPoleTol)
        throw ResonanceError("series_u4: pole 2 + V/D = 0 at atoms " + atoms_label({i, j}), {i, j});
      sum += 0.125 - 0.25 / den;
    }
  }
  return std::pow(drive.rabi, 4) / (d * d * d) * sum;
}

double series_u6(const ham::DriveParams& drive, const LatticeGeometry& g) {
  check_drive(drive);
  const double d = drive.detuning;
  const int n = g.size();
  std::vector<double> x(static_cast<std::size_t>(n) * n, 0.0);
  auto xa = [&](int i, int j) { return x[static_cast<std::size_t>(i) * n + j]; };
  double sum = -n / 32.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double den = 2.0 + g.pair_potential(i, j) / d;
      if (std::abs(den) < kPoleTol)
        throw ResonanceError("series_u6: pole 2 + V/D = 0 at atoms " + atoms_label({i, j}), {i, j});
      x[static_cast<std::size_t>(i) * n + j] = x[static_cast<std::size_t>(j) * n + i] = 1.0 / den;
      sum += 3.0 * xa(i, j) / 8.0 - 3.0 / 16.0;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const double p = xa(i, j), q = xa(i, k), r = xa(j, k);
        const double den = 3.0 + (g.pair_potential(i, j) + g.pair_potential(i, k) + g.pair_potential(j, k)) / d;
        if (std::abs(den) < kPoleTol)
          throw ResonanceError("series_u6: pole 3 + sum V/D = 0 at atoms " + atoms_label({i, j, k}), {i, j, k});
        const double lin = p + q + r;
        sum += (p * p + q * q + r * r - 2.0 * (p * q + p * r + q * r) + 3.0 * lin - 3.0) / 16.0 -
               lin * lin / (16.0 * den);
      }
    }
  }
  return std::pow(drive.rabi, 6) / std::pow(d, 5) * sum;
}

double exact_diag_oracle(const ham::DriveParams& drive, const LatticeGeometry& g) {
  drive.validate();
  const int n = g.size();
  require(n <= 12, "exact_diag_oracle: at most 12 atoms");
  const int dim = 1 << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    double e = drive.detuning * std::popcount(static_cast<unsigned>(s));
    for (int i = 0; i < n; ++i) {
      if (!(s >> i & 1)) continue;
      for (int j = i + 1; j < n; ++j)
        if (s >> j & 1) e += g.pair_potential(i, j);
    }
    h(s, s) = e;
    for (int i = 0; i < n; ++i) h(s ^ (1 << i), s) = 0.5 * drive.rabi;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) throw NumericalError("exact_diag_oracle: eigensolver failed");
  Eigen::Index best = 0;
  solver.eigenvectors().row(0).cwiseAbs2().maxCoeff(&best);
  const double weight = solver.eigenvectors()(0, best) * solver.eigenvectors()(0, best);
  if (weight < 0.5)
    throw NumericalError("exact_diag_oracle: no eigenvector has weight >= 0.5 on |e...e> (max " +
                         std::to_string(weight) + "); level crossing ambiguity");
  return solver.eigenvalues()(best);
}

}  // namespace catdress::mb
