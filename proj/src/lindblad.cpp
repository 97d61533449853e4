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

#include "catdress/lindblad.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "catdress/errors.hpp"

namespace catdress::lind {

namespace {

const std::complex<double> kI(0.0, 1.0);

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix unvec(const Vector& v, int d) { return Eigen::Map<const Matrix>(v.data(), d, d); }

// Generator with one row swapped for the trace functional.
Matrix bordered(const Matrix& l, int d) {
  Matrix a = l;
  a.row(0).setZero();
  for (int k = 0; k < d; ++k) a(0, k + k * d) = 1.0;
  return a;
}

double scale_of(const OpenSystemSpec& spec) {
  return std::max({spec.drive.rabi, std::abs(spec.drive.detuning), spec.gamma_r});
}

Liouvillian assemble(const OpenSystemSpec& spec, Subspace subspace, double v) {
  Liouvillian out;
  out.n_atoms = spec.n_atoms;
  out.scale = scale_of(spec);
  const unsigned full = 1u << spec.n_atoms;
  for (unsigned s = 0; s < full; ++s)
    if (subspace == Subspace::full || std::popcount(s) <= 1) out.basis.push_back(s);
  const int d = out.dimension();
  auto index = [&](unsigned s) {
    return static_cast<int>(std::find(out.basis.begin(), out.basis.end(), s) - out.basis.begin());
  };

  const double w = spec.drive.rabi / out.scale;
  const double det = spec.drive.detuning / out.scale;
  const double vs = v / out.scale;
  Matrix h = Matrix::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    const unsigned s = out.basis[a];
    const int exc = std::popcount(s);
    h(a, a) = det * exc + vs * (exc * (exc - 1) / 2);
    for (int i = 0; i < spec.n_atoms; ++i) {
      const int b = index(s ^ (1u << i));
      if (b < d) h(b, a) = 0.5 * w;
    }
  }
  out.hamiltonian = h;

  const Matrix id = Matrix::Identity(d, d);
  Matrix l = -kI * (kron(id, h) - kron(h.transpose(), id));
  const double amp = std::sqrt(spec.gamma_r / out.scale);
  for (int i = 0; i < spec.n_atoms; ++i) {
    Matrix c = Matrix::Zero(d, d);
    for (int a = 0; a < d; ++a) {
      const unsigned s = out.basis[a];
      if (s >> i & 1u) c(index(s ^ (1u << i)), a) = amp;
    }
    const Matrix cdc = c.adjoint() * c;
    l += kron(c.conjugate(), c) - 0.5 * kron(id, cdc) - 0.5 * kron(cdc.transpose(), id);
  }
  out.generator = l;
  return out;
}

double e1(const ham::DriveParams& drive, int k) {
  const double d = drive.detuning;
  const double x = k * (drive.rabi / d) * (drive.rabi / d);
  return 0.5 * d * (-x / (1.0 + std::sqrt(1.0 + x)));
}

}  // namespace

void OpenSystemSpec::validate(bool check_distance) const {
  require(n_atoms == 2 || n_atoms == 3, "open system: n_atoms must be 2 or 3");
  if (check_distance) require(std::isfinite(r) && r > 0.0, "open system: r must be finite and > 0");
  require(std::isfinite(c6) && c6 >= 0.0, "open system: c6 must be finite and >= 0");
  require(std::isfinite(gamma_r) && gamma_r > 0.0, "open system: gamma_r must be > 0");
  drive.validate();
  require(drive.rabi > 0.0 || drive.detuning != 0.0, "open system: drive is identically zero");
}

double OpenSystemSpec::pair_potential() const { return c6 / std::pow(r, 6); }

double DensityMatrix::trace() const { return rho.trace().real(); }

double DensityMatrix::hermiticity_error() const { return (rho - rho.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void DensityMatrix::validate() const {
  if (hermiticity_error() > 1e-10) throw NumericalError("density matrix is not Hermitian");
  if (std::abs(trace() - 1.0) > 1e-10) throw NumericalError("density matrix trace differs from one");
  if (min_eigenvalue() < -1e-8) throw NumericalError("density matrix has a negative eigenvalue");
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  const Matrix diff = a.rho - b.rho;
  const Matrix herm = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

Liouvillian build_generator(const OpenSystemSpec& spec, Subspace subspace) {
  spec.validate();
  return assemble(spec, subspace, spec.pair_potential());
}

SteadyState steady_state(const Liouvillian& gen) {
  const int d = gen.dimension();
  const Matrix a = bordered(gen.generator, d);
  Eigen::FullPivLU<Matrix> lu(a);
  if (lu.rank() < a.rows())
    throw NumericalError("steady_state: generator kernel is degenerate (bordered rank " + std::to_string(lu.rank()) +
                         " of " + std::to_string(a.rows()) + ")");
  Vector b = Vector::Zero(a.rows());
  b(0) = 1.0;
  const Vector x = lu.solve(b);
  SteadyState out;
  Matrix rho = unvec(x, d);
  out.state.rho = 0.5 * (rho + rho.adjoint());
  const Vector res = gen.generator * vec(out.state.rho);
  out.residual = res.norm();
  out.relative_residual = res.norm() / gen.generator.norm();
  return out;
}

DensityMatrix propagate(const Liouvillian& gen, const DensityMatrix& rho0, double t) {
  require(std::isfinite(t) && t >= 0.0, "propagate: time must be finite and >= 0");
  const int d = gen.dimension();
  require(rho0.rho.rows() == d && rho0.rho.cols() == d, "propagate: state dimension mismatch");
  const Matrix u = (gen.generator * (t * gen.scale)).exp();
  return {unvec(u * vec(rho0.rho), d)};
}

DensityMatrix ground_state(const Liouvillian& gen) {
  const int d = gen.dimension();
  DensityMatrix g{Matrix::Zero(d, d)};
  g.rho(0, 0) = 1.0;  // basis[0] is the all-|e> configuration
  return g;
}

double energy(const Liouvillian& gen, const DensityMatrix& rho) {
  return (rho.rho * gen.hamiltonian).trace().real() * gen.scale;
}

double u0_collective(const OpenSystemSpec& spec) {
  spec.validate(false);
  require(spec.drive.detuning != 0.0, "u0_collective: needs nonzero detuning");
  return e1(spec.drive, spec.n_atoms) - spec.n_atoms * e1(spec.drive, 1);
}

double u0_blockaded(const OpenSystemSpec& spec) {
  spec.validate(false);
  const auto blocked = assemble(spec, Subspace::single_excitation, 0.0);
  const auto free = assemble(spec, Subspace::full, 0.0);
  return energy(blocked, steady_state(blocked).state) - energy(free, steady_state(free).state);
}

InteractionResult interaction_energy(const OpenSystemSpec& spec, const InteractionOptions& options) {
  spec.validate();
  require(options.r_ref > 0.0, "interaction_energy: r_ref must be > 0");
  const double v_ref = std::isinf(options.r_ref) ? 0.0 : spec.c6 / std::pow(options.r_ref, 6);
  const auto l_r = assemble(spec, Subspace::full, spec.pair_potential());
  const auto l_ref = assemble(spec, Subspace::full, v_ref);
  const auto ref = steady_state(l_ref);
  const int d = l_r.dimension();

  // L_r (rho_ref + delta) = 0 with Tr delta = 0.
  const Vector rho_ref = vec(ref.state.rho);
  Vector b = -(l_r.generator - l_ref.generator) * rho_ref;
  b(0) = 0.0;
  Eigen::FullPivLU<Matrix> lu(bordered(l_r.generator, d));
  if (lu.rank() < d * d) throw NumericalError("interaction_energy: generator kernel is degenerate");
  const Matrix delta = unvec(lu.solve(b), d);

  InteractionResult out;
  const Matrix dh = l_r.hamiltonian - l_ref.hamiltonian;
  out.u = ((delta * l_r.hamiltonian).trace().real() + (ref.state.rho * dh).trace().real()) * l_r.scale;
  const Matrix rho_r = ref.state.rho + delta;
  out.residual = (l_r.generator * vec(rho_r)).norm();
  out.u0 = options.u0 == U0Convention::blockaded_steady_state ? u0_blockaded(spec) : u0_collective(spec);
  out.ratio = out.u / out.u0;
  return out;
}

double blockade_radius(const ham::DriveParams& drive, double c6, Regime regime) {
  require(std::isfinite(c6) && c6 > 0.0, "blockade_radius: c6 must be > 0");
  const double f = regime == Regime::weak ? std::abs(drive.detuning) : drive.rabi;
  require(std::isfinite(f) && f > 0.0, "blockade_radius: selected frequency must be > 0");
  return std::pow(c6 / f, 1.0 / 6.0);
}

Regime regime_of(const ham::DriveParams& drive) {
  return drive.rabi > std::abs(drive.detuning) ? Regime::strong : Regime::weak;
}

}  // namespace catdress::lind
