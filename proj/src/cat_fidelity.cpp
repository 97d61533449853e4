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

#include "catdress/cat_fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "catdress/dynamics.hpp"
#include "catdress/errors.hpp"
#include "catdress/optimize.hpp"

namespace catdress::cat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

int phi_grid_size(int n_atoms, int m, int requested) {
  const int lobe = static_cast<int>(std::ceil(kTwoPi * std::sqrt(static_cast<double>(n_atoms)) / m));
  return std::max({requested, lobe, 1});
}

// Maximum over phi in [lo, lo + span) of a smooth periodic score, by grid
// then golden refinement around the best grid point.
template <class Score>
opt::ScalarMax scan_angle(Score&& score, double lo, double span, int grid) {
  const double step = span / grid;
  opt::ScalarMax best{lo, score(lo)};
  for (int g = 1; g < grid; ++g) {
    const double x = lo + g * step;
    const double v = score(x);
    if (v > best.value) best = {x, v};
  }
  const auto refined = opt::golden_max(score, best.x - step, best.x + step, 1e-9);
  if (refined.value > best.value) best = refined;
  return best;
}

// Phases printed in units of pi.
struct CatalogEntry {
  int m;
  std::vector<double> phases_over_pi;
};

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {2, {-1.0 / 4, 1.0 / 4}},
      {3, {-1.0 / 3, -5.0 / 3, -5.0 / 3}},
      {3, {-2.0 / 3, -1.0 / 3, -1.0 / 3}},
      {3, {2.0 / 3, -2.0 / 3, -2.0 / 3}},
      {3, {1.0 / 3, -1.0, -1.0}},
      {4, {-1.0 / 4, 0.0, -1.0 / 4, -1.0}},
      {5, {-4.0 / 5, -8.0 / 5, -4.0 / 5, -2.0 / 5, -2.0 / 5}},
      {5, {-8.0 / 5, -2.0 / 5, -8.0 / 5, -6.0 / 5, -6.0 / 5}},
      {6, {0.0, -11.0 / 6, 0.0, -3.0 / 6, -8.0 / 6, -3.0 / 6}},
  };
  return entries;
}

}  // namespace

void CatTarget::validate(int n_atoms) const {
  require(m >= 1, "CatTarget: m must be >= 1");
  require(m <= n_atoms, "CatTarget: m must not exceed the atom number");
  require(alphas.size() == static_cast<std::size_t>(m), "CatTarget: need exactly m phases");
  require(std::isfinite(phi0), "CatTarget: phi0 must be finite");
  for (double a : alphas) require(std::isfinite(a), "CatTarget: phases must be finite");
}

double CatTarget::azimuth(int k) const {
  const double step = kTwoPi * k / m;
  return wrap(order == AzimuthOrder::ascending ? phi0 + step : phi0 - step, kTwoPi);
}

bool CatTarget::exceeds_formation_bound(int n_atoms) const {
  return static_cast<double>(m) * m > n_atoms;
}

spin::SpinState build_mcss(const CatTarget& target, int n_atoms, double* raw_norm) {
  target.validate(n_atoms);
  const auto w = spin::equatorial_weights(n_atoms);
  std::vector<cplx> amps(w.size(), 0.0);
  const double pref = 1.0 / std::sqrt(static_cast<double>(target.m));
  for (int k = 0; k < target.m; ++k) {
    const double phi = target.azimuth(k);
    const cplx weight = pref * std::polar(1.0, target.alphas[k]);
    for (std::size_t n = 0; n < w.size(); ++n) amps[n] += weight * std::polar(w[n], -static_cast<double>(n) * phi);
  }
  if (raw_norm != nullptr) {
    double sq = 0.0;
    for (const auto& a : amps) sq += std::norm(a);
    *raw_norm = std::sqrt(sq);
  }
  return spin::SpinState::normalized(n_atoms, std::move(amps));
}

double target_fidelity(const spin::SpinState& state, const CatTarget& target) {
  return std::norm(build_mcss(target, state.n_atoms()).inner(state));
}

namespace detail {

EquatorProjector::EquatorProjector(const spin::SpinState& state) : n_atoms_(state.n_atoms()) {
  const auto w = spin::equatorial_weights(n_atoms_);
  coeffs_.resize(w.size());
  for (std::size_t n = 0; n < w.size(); ++n) coeffs_[n] = w[n] * state[n];
}

cplx EquatorProjector::at(double phi) const {
  const cplx z = std::polar(1.0, phi);
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<cplx> equator_gram(int n_atoms, int m) {
  require(m >= 1, "equator_gram: m must be >= 1");
  std::vector<cplx> g(static_cast<std::size_t>(m));
  for (int d = 0; d < m; ++d) {
    const cplx z = 0.5 * (1.0 + std::polar(1.0, -kTwoPi * d / m));
    const double r = std::abs(z);
    g[d] = r == 0.0 ? cplx(0.0) : std::polar(std::pow(r, n_atoms), n_atoms * std::arg(z));
  }
  return g;
}

double analytic_fidelity(std::span<const cplx> c, std::span<const cplx> gram) {
  std::vector<cplx> t(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) t[k] = std::abs(c[k]) > 0.0 ? c[k] / std::abs(c[k]) : cplx(1.0);
  return phase_ratio(c, gram, t);
}

double phase_ratio(std::span<const cplx> c, std::span<const cplx> gram, std::span<const cplx> t) {
  const std::size_t m = c.size();
  cplx s = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    s += std::conj(t[k]) * c[k];
    for (std::size_t l = 0; l < m; ++l) den += std::real(std::conj(t[k]) * t[l] * gram[(l + m - k) % m]);
  }
  return den > 0.0 ? std::norm(s) / den : 0.0;
}

// Coordinate ascent on |sum conj(t_k) c_k|^2 / t^H G t over unit-modulus t_k,
// each coordinate solved by Dinkelbach steps (the parametric problem in one
// phase is a single sinusoid). Monotone, so it never lands below the start.
double refine_phases(std::span<const cplx> c, std::span<const cplx> gram, std::span<cplx> t) {
  const std::size_t m = c.size();
  double overlap = 0.0;
  for (std::size_t d = 1; d < m; ++d) overlap = std::max(overlap, std::abs(gram[d]));
  double f = phase_ratio(c, gram, t);
  if (overlap < 1e-17 || f <= 0.0) return f;

  auto g = [&](std::size_t k, std::size_t l) { return gram[(l + m - k) % m]; };
  cplx s = 0.0;
  std::vector<cplx> gt(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    s += std::conj(t[k]) * c[k];
    for (std::size_t l = 0; l < m; ++l) gt[k] += g(k, l) * t[l];
  }
  double den = std::norm(s) / f;
  for (int sweep = 0; sweep < 200; ++sweep) {
    const double f_start = f;
    for (std::size_t k = 0; k < m; ++k) {
      const cplx a = s - std::conj(t[k]) * c[k];
      const cplx b = gt[k] - g(k, k) * t[k];
      const double den_rest = den - std::real(g(k, k)) - 2.0 * std::real(std::conj(t[k]) * b);
      const double num_rest = std::norm(a) + std::norm(c[k]);
      cplx best = t[k];
      for (int it = 0; it < 4; ++it) {
        const cplx w = std::conj(a) * c[k] - f * b;
        if (std::abs(w) == 0.0) break;
        const cplx cand = w / std::abs(w);
        const double num = num_rest + 2.0 * std::real(std::conj(a) * c[k] * std::conj(cand));
        const double dd = den_rest + std::real(g(k, k)) + 2.0 * std::real(std::conj(cand) * b);
        if (dd <= 0.0 || num / dd <= f) break;
        f = num / dd;
        best = cand;
      }
      const cplx delta = best - t[k];
      if (delta == cplx(0.0)) continue;
      s += std::conj(delta) * c[k];
      for (std::size_t j = 0; j < m; ++j) gt[j] += g(j, k) * delta;
      t[k] = best;
      den = 0.0;
      for (std::size_t j = 0; j < m; ++j) den += std::real(std::conj(t[j]) * gt[j]);
    }
    if (f - f_start <= 1e-15 * f) break;
  }
  return phase_ratio(c, gram, t);
}

}  // namespace detail

namespace {

struct PhaseScorer {
  const detail::EquatorProjector& proj;
  int m;
  std::vector<cplx> gram;
  PhaseSolver solver;
  mutable std::vector<cplx> c;
  mutable std::vector<cplx> t;

  double operator()(double phi0) const {
    for (int k = 0; k < m; ++k) {
      c[k] = proj.at(phi0 + kTwoPi * k / m);
      t[k] = std::abs(c[k]) > 0.0 ? c[k] / std::abs(c[k]) : cplx(1.0);
    }
    return solver == PhaseSolver::refined ? detail::refine_phases(c, gram, t) : detail::phase_ratio(c, gram, t);
  }

  std::vector<double> phases(double phi0) const {
    (*this)(phi0);
    std::vector<double> out(m);
    for (int k = 0; k < m; ++k) out[k] = std::arg(t[k]);
    return out;
  }
};

}  // namespace

PhaseFit optimal_phase_fidelity(const spin::SpinState& state, int m, double phi0, PhaseSolver solver) {
  require(m >= 1 && m <= state.n_atoms(), "optimal_phase_fidelity: m must lie in 1..N");
  require(std::isfinite(phi0), "optimal_phase_fidelity: phi0 must be finite");
  const detail::EquatorProjector proj(state);
  const PhaseScorer scorer{proj, m, detail::equator_gram(state.n_atoms(), m), solver, std::vector<cplx>(m), std::vector<cplx>(m)};
  return {scorer(phi0), scorer.phases(phi0)};
}

FidelityResult fidelity_optimize(const spin::SpinState& state, int m, int phi0_samples, PhaseSolver solver) {
  require(m >= 1 && m <= state.n_atoms(), "fidelity_optimize: m must lie in 1..N");
  require(phi0_samples >= 1, "fidelity_optimize: phi0_samples must be >= 1");
  const detail::EquatorProjector proj(state);
  const PhaseScorer scorer{proj, m, detail::equator_gram(state.n_atoms(), m), solver, std::vector<cplx>(m), std::vector<cplx>(m)};
  const double period = kTwoPi / m;
  const auto best = scan_angle(scorer, 0.0, period, phi_grid_size(state.n_atoms(), m, phi0_samples));
  const double phi0 = wrap(best.x, period);
  return {best.value, phi0, scorer.phases(phi0)};
}

int catalog_variants(int m) {
  return static_cast<int>(std::count_if(catalog().begin(), catalog().end(), [m](const auto& e) { return e.m == m; }));
}

CatTarget phase_catalog(int m, int variant) {
  int seen = 0;
  for (const auto& e : catalog()) {
    if (e.m != m) continue;
    if (++seen == variant) {
      CatTarget t;
      t.m = m;
      t.order = AzimuthOrder::descending;
      for (double p : e.phases_over_pi) t.alphas.push_back(p * kPi);
      return t;
    }
  }
  throw ValidationError("phase_catalog: no entry for m = " + std::to_string(m) + ", variant " +
                        std::to_string(variant));
}

RevivalResult revival_test(const spin::SpinState& state0, const ham::DiagonalHamiltonian& h,
                           const RevivalOptions& options) {
  const WeightedState single{1.0, state0};
  return revival_test(std::span<const WeightedState>(&single, 1), h, options);
}

RevivalResult revival_test(std::span<const WeightedState> ensemble, const ham::DiagonalHamiltonian& h,
                           const RevivalOptions& options) {
  require(!ensemble.empty(), "revival_test: empty ensemble");
  require(std::isfinite(options.t_lo) && std::isfinite(options.t_hi) && options.t_hi > options.t_lo &&
              options.t_lo >= 0.0,
          "revival_test: window must satisfy 0 <= t_lo < t_hi");
  require(options.samples >= 2, "revival_test: samples must be >= 2");
  double total = 0.0;
  for (const auto& w : ensemble) {
    require(w.weight >= 0.0, "revival_test: weights must be non-negative");
    require(w.state.n_atoms() == h.n_atoms(), "revival_test: state and Hamiltonian sizes differ");
    total += w.weight;
  }
  require(std::abs(total - 1.0) < 1e-12, "revival_test: weights must sum to one");
  const int n = h.n_atoms();
  const int grid = phi_grid_size(n, 1, 64);

  auto best_at = [&](double t) {
    std::vector<detail::EquatorProjector> projs;
    projs.reserve(ensemble.size());
    for (const auto& w : ensemble) projs.emplace_back(dyn::evolve(w.state, h, t));
    auto score = [&](double phi) {
      double f = 0.0;
      for (std::size_t i = 0; i < projs.size(); ++i) f += ensemble[i].weight * std::norm(projs[i].at(phi));
      return f;
    };
    return scan_angle(score, 0.0, kTwoPi, grid);
  };

  const double dt = (options.t_hi - options.t_lo) / (options.samples - 1);
  double t_best = options.t_lo;
  auto best = best_at(t_best);
  for (int i = 1; i < options.samples; ++i) {
    const double t = options.t_lo + i * dt;
    const auto r = best_at(t);
    if (r.value > best.value) {
      best = r;
      t_best = t;
    }
  }
  const double lo = std::max(options.t_lo, t_best - dt);
  const double hi = std::min(options.t_hi, t_best + dt);
  const auto refined = opt::golden_max([&](double t) { return best_at(t).value; }, lo, hi, 1e-4 * std::max(t_best, dt));
  if (refined.value > best.value) {
    t_best = refined.x;
    best = best_at(t_best);
  }
  return {t_best, best.value, wrap(best.x, kTwoPi), best.value > options.threshold};
}

}  // namespace catdress::cat
