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

#include "catdress/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "catdress/cat_fidelity.hpp"
#include "catdress/errors.hpp"
#include "catdress/optimize.hpp"

namespace catdress::dyn {

namespace {
constexpr double kPi = std::numbers::pi;
}

spin::SpinState evolve(const spin::SpinState& state, const ham::DiagonalHamiltonian& h, double t) {
  require(state.n_atoms() == h.n_atoms(), "evolve: state and Hamiltonian sizes differ");
  require(std::isfinite(t) && t >= 0.0, "evolve: time must be finite and >= 0");
  const auto amps = state.amplitudes();
  const auto e = h.energies();
  std::vector<cplx> out(amps.size());
  for (std::size_t k = 0; k < amps.size(); ++k) out[k] = amps[k] * std::polar(1.0, -e[k] * t);
  return spin::SpinState(state.n_atoms(), std::move(out), 1e-10);
}

spin::SpinState evolve(const spin::SpinState& state, const EvolutionSpec& spec) {
  return evolve(state, spec.hamiltonian, spec.time);
}

CharacteristicTimes characteristic_times(double chi, int n_atoms, int m) {
  require(std::isfinite(chi) && chi != 0.0, "characteristic_times: chi must be finite and nonzero");
  require(n_atoms >= 1, "characteristic_times: n_atoms must be >= 1");
  require(m >= 1, "characteristic_times: m must be >= 1");
  CharacteristicTimes out;
  out.t_m = 2.0 * kPi / (m * std::abs(chi));
  out.t_min = 4.0 * kPi / (2.0 * std::sqrt(static_cast<double>(n_atoms)) * std::abs(chi));
  out.m_max = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n_atoms))));
  out.forms = static_cast<double>(m) * m <= n_atoms;
  return out;
}

std::string ScanResult::trace_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "t,F\n";
  for (std::size_t i = 0; i < times.size(); ++i) out << times[i] << ',' << fidelity_trace[i] << '\n';
  return out.str();
}

ScanResult cat_time_scan(const spin::SpinState& state, const ham::DiagonalHamiltonian& h, int m,
                         const ScanOptions& options) {
  require(std::isfinite(options.t_lo) && std::isfinite(options.t_hi) && options.t_lo >= 0.0 &&
              options.t_hi > options.t_lo,
          "cat_time_scan: window must satisfy 0 <= t_lo < t_hi");
  require(options.samples >= 2, "cat_time_scan: samples must be >= 2");
  require(options.rel_tol > 0.0, "cat_time_scan: rel_tol must be > 0");
  require(state.n_atoms() == h.n_atoms(), "cat_time_scan: state and Hamiltonian sizes differ");
  require(m >= 1 && m <= state.n_atoms(), "cat_time_scan: m must lie in 1..N");

  auto fid_at = [&](double t) { return cat::fidelity_optimize(evolve(state, h, t), m, options.phi0_samples); };

  ScanResult r;
  const int n = options.samples;
  const double dt = (options.t_hi - options.t_lo) / (n - 1);
  r.times.resize(n);
  r.fidelity_trace.resize(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    r.times[i] = options.t_lo + i * dt;
    r.fidelity_trace[i] = fid_at(r.times[i]).fidelity;
  }

  // Grid maxima, strongest first; equal values keep the earlier time.
  std::vector<int> peaks;
  for (int i = 0; i < n; ++i) {
    const double f = r.fidelity_trace[i];
    const bool left = i == 0 || f >= r.fidelity_trace[i - 1];
    const bool right = i == n - 1 || f >= r.fidelity_trace[i + 1];
    if (left && right) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](int a, int b) { return r.fidelity_trace[a] > r.fidelity_trace[b]; });
  const double grid_best = r.fidelity_trace[peaks.front()];
  if (static_cast<int>(peaks.size()) > options.refine_peaks) peaks.resize(std::max(1, options.refine_peaks));

  double best_t = r.times[peaks.front()];
  double best_f = grid_best;
  for (int p : peaks) {
    if (r.fidelity_trace[p] < 0.5 * grid_best) continue;
    const double lo = std::max(options.t_lo, r.times[p] - dt);
    const double hi = std::min(options.t_hi, r.times[p] + dt);
    const auto refined =
        opt::golden_max([&](double t) { return fid_at(t).fidelity; }, lo, hi, options.rel_tol * r.times[p]);
    const double f = std::max(refined.value, r.fidelity_trace[p]);
    const double t = refined.value >= r.fidelity_trace[p] ? refined.x : r.times[p];
    if (f > best_f + 1e-9 || (std::abs(f - best_f) <= 1e-9 && t < best_t)) {
      best_f = f;
      best_t = t;
    }
  }
  const auto fit = fid_at(best_t);
  r.t_best = best_t;
  r.fidelity = fit.fidelity;
  r.phi0 = fit.phi0;
  r.alphas = fit.alphas;
  return r;
}

double kerr_cat_time(const ham::DiagonalHamiltonian& h, int m) {
  require(m >= 1, "kerr_cat_time: m must be >= 1");
  const double chi = h.local_kerr(h.n_atoms() / 2.0);
  require(chi != 0.0 && std::isfinite(chi), "kerr_cat_time: Hamiltonian has no curvature at N/2");
  return kPi / (m * std::abs(chi));
}

ScanOptions default_scan(const ham::DiagonalHamiltonian& h, int m) {
  const double tc = kerr_cat_time(h, m);
  ScanOptions o;
  o.t_lo = 0.2 * tc;
  o.t_hi = 2.5 * tc;
  o.samples = std::max(512, static_cast<int>(std::ceil(11.0 * h.n_atoms() / m)));
  return o;
}

}  // namespace catdress::dyn
