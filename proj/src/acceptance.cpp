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

#include "catdress/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "catdress/adiabatic.hpp"
#include "catdress/cat_fidelity.hpp"
#include "catdress/decoherence.hpp"
#include "catdress/dynamics.hpp"
#include "catdress/errors.hpp"
#include "catdress/hamiltonians.hpp"
#include "catdress/lindblad.hpp"
#include "catdress/manybody.hpp"
#include "catdress/spin.hpp"

namespace catdress::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Criterion make(int id, std::string title) {
  Criterion c;
  c.id = id;
  c.title = std::move(title);
  return c;
}

spin::SpinState equator_css(int n) { return spin::css_state({kPi / 2.0, 0.0}, n); }

// ---- resonant table (criteria 1, 2, 9) ----

struct ResonantRun {
  std::vector<int> ms{33, 27, 21, 14, 7, 4, 3, 2};
  std::vector<double> expected{0.236, 0.289, 0.373, 0.563, 1.132, 2.0, 2.655, 4.061};
  std::vector<double> located;  // chi2 * t_best
  std::vector<double> fidelity;
  double chi2 = 0.0;
};

ResonantRun resonant_run() {
  ResonantRun run;
  const int n = 1000;
  const double rabi = 2.0 * kPi * 70e6;
  const auto h = ham::h_resonant(rabi, n);
  run.chi2 = ham::chi2_resonant(rabi, n);
  const auto psi = equator_css(n);
  for (int m : run.ms) {
    const auto r = dyn::cat_time_scan(psi, h, m, dyn::default_scan(h, m));
    run.located.push_back(run.chi2 * r.t_best);
    run.fidelity.push_back(r.fidelity);
  }
  return run;
}

Criterion c1(const ResonantRun& run) {
  auto c = make(1, "resonant cat-time table (N=1000, chi2*t within 2%)");
  c.passed = true;
  std::string failed;
  double worst = 0.0;
  for (std::size_t i = 0; i < run.ms.size(); ++i) {
    const double dev = run.located[i] / run.expected[i] - 1.0;
    worst = std::max(worst, std::abs(dev));
    const bool ok = std::abs(dev) <= 0.02;
    if (!ok) {
      c.passed = false;
      failed += fmt(" m=%d", run.ms[i]);
    }
    c.info.push_back(fmt("m=%-2d chi2*t=%.4f expected %.3f deviation %+.2f%% F=%.4f %s", run.ms[i], run.located[i],
                         run.expected[i], 100.0 * dev, run.fidelity[i], ok ? "ok" : "OUT"));
  }
  c.summary = fmt("worst deviation %.2f%%", 100.0 * worst) + (failed.empty() ? "" : "; outside 2%:" + failed);
  return c;
}

Criterion c2(const ResonantRun& run) {
  auto c = make(2, "speedup t(m=2)/t(m=33) = 17 +- 1");
  const double ratio = run.located.back() / run.located.front();
  c.passed = std::abs(ratio - 17.0) <= 1.0;
  c.summary = fmt("ratio %.3f", ratio);
  return c;
}

// ---- isolated Kerr (criteria 3, 4) ----

Criterion c3() {
  auto c = make(3, "isolated Kerr N=48: m=2..6 F>0.99, revival F>0.999");
  const int n = 48;
  const double chi = 1.0;
  const std::vector<double> coeffs{0.0, 0.0, chi};
  const auto h = ham::h_polynomial(coeffs, n);
  const auto psi = equator_css(n);
  c.passed = true;
  double worst = 1.0;
  for (int m = 2; m <= 6; ++m) {
    const auto r = dyn::cat_time_scan(psi, h, m, dyn::default_scan(h, m));
    const double t_m = dyn::characteristic_times(chi, n, m).t_m;
    worst = std::min(worst, r.fidelity);
    if (r.fidelity <= 0.99) c.passed = false;
    c.info.push_back(fmt("m=%d located chi*t=%.5f, 2pi/(m chi)=%.5f, ratio %.4f, F=%.6f", m, chi * r.t_best,
                         chi * t_m, r.t_best / t_m, r.fidelity));
  }
  const double t_rev = 2.0 * kPi / chi;
  const auto rev = cat::revival_test(psi, h, {0.75 * t_rev, 1.25 * t_rev, 256, 0.999});
  if (!rev.passed) c.passed = false;
  c.info.push_back(fmt("revival at chi*t=%.5f (2 pi = %.5f), F=%.12f", chi * rev.t_revival, 2.0 * kPi, rev.fidelity));
  c.summary = fmt("min cat F=%.6f, revival F=%.9f", worst, rev.fidelity);
  return c;
}

Criterion c4() {
  auto c = make(4, "m <= sqrt(N) bound: F(m=6) > 0.9 and F(m=12) < F(m=6)");
  const int n = 48;
  const std::vector<double> coeffs{0.0, 0.0, 1.0};
  const auto h = ham::h_polynomial(coeffs, n);
  const auto psi = equator_css(n);
  const auto r6 = dyn::cat_time_scan(psi, h, 6, dyn::default_scan(h, 6));
  const auto r12 = dyn::cat_time_scan(psi, h, 12, dyn::default_scan(h, 12));
  c.passed = r6.fidelity > 0.9 && r12.fidelity < r6.fidelity;
  c.summary = fmt("F(6)=%.6f F(12)=%.6f", r6.fidelity, r12.fidelity);
  return c;
}

// ---- brute-force product space (criterion 5) ----

// Evolves a product-space state under sum_i a n_i + sum_{i<j} b n_i n_j +
// sum_{i<j<k} c n_i n_j n_k and returns the symmetric-sector amplitudes.
std::vector<cplx> brute_force(int n, double theta, double phi, double a, double b, double c3c, double t) {
  const std::size_t dim = std::size_t{1} << n;
  const cplx up = std::polar(std::sin(theta / 2.0), -phi);
  const double down = std::cos(theta / 2.0);
  std::vector<cplx> psi(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    cplx amp = 1.0;
    for (int i = 0; i < n; ++i) amp *= (s >> i & 1u) ? up : cplx(down);
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!(s >> i & 1u)) continue;
      e += a;
      for (int j = i + 1; j < n; ++j) {
        if (!(s >> j & 1u)) continue;
        e += b;
        for (int k = j + 1; k < n; ++k)
          if (s >> k & 1u) e += c3c;
      }
    }
    psi[s] = amp * std::polar(1.0, -e * t);
  }
  std::vector<cplx> dicke(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t s = 0; s < dim; ++s) dicke[std::popcount(s)] += psi[s];
  for (int k = 0; k <= n; ++k) dicke[k] /= std::sqrt(std::exp(spin::log_binomial(n, k)));
  return dicke;
}

Criterion c5() {
  auto c = make(5, "Dicke evolution equals full 2^N evolution (N=4,8,10)");
  double worst = 0.0;
  const double a = 0.37, b = 1.3, cc = -0.21, t = 2.7, theta = 1.1, phi = 0.4;
  for (int n : {4, 8, 10}) {
    // sum_{i<j} n_i n_j = C(N_e, 2), sum_{i<j<k} = C(N_e, 3)
    const std::vector<double> coeffs{0.0, a - b / 2.0 + cc / 3.0, b / 2.0 - cc / 2.0, cc / 6.0};
    const auto h = ham::h_polynomial(coeffs, n);
    const auto dicke = dyn::evolve(spin::css_state({theta, phi}, n), h, t);
    const auto full = brute_force(n, theta, phi, a, b, cc, t);
    double dev = 0.0;
    for (int k = 0; k <= n; ++k) dev = std::max(dev, std::abs(dicke[k] - full[k]));
    worst = std::max(worst, dev);
    c.info.push_back(fmt("N=%d max amplitude deviation %.3e", n, dev));
  }
  c.passed = worst < 1e-10;
  c.summary = fmt("max deviation %.3e", worst);
  return c;
}

// ---- strong-dressing ordering (criterion 6) ----

Criterion c6() {
  auto c = make(6, "strong dressing N=48: infidelity(m=6) <= infidelity(m=2)");
  const int n = 48;
  const auto psi = equator_css(n);
  const std::vector<double> ratios{0.02, 0.1, 0.3, 1.0, 3.0, 10.0};
  c.passed = true;
  std::string fails;
  for (double x : ratios) {
    const auto h = ham::h_exact({x, 1.0}, n);
    const double i2 = 1.0 - dyn::cat_time_scan(psi, h, 2, dyn::default_scan(h, 2)).fidelity;
    const double i6 = 1.0 - dyn::cat_time_scan(psi, h, 6, dyn::default_scan(h, 6)).fidelity;
    const bool strong = x >= 1.0;
    if (strong && i6 > i2) {
      c.passed = false;
      fails += fmt(" W/D=%g", x);
    }
    c.info.push_back(fmt("W/D=%-5g 1-F(2)=%.4e 1-F(6)=%.4e %s", x, i2, i6, strong ? "(strong half)" : ""));
  }
  c.summary = fails.empty() ? "ordering holds at every strong point" : "ordering violated at" + fails;
  return c;
}

// ---- perturbation series (criterion 7) ----

Criterion c7() {
  auto c = make(7, "perturbation vs exact diagonalization (2, 3 atoms, W/D=0.05)");
  const ham::DriveParams drive{0.05, 1.0};
  c.passed = true;
  double worst_rel = 0.0, worst_gain = 1e300;
  for (int atoms : {2, 3}) {
    for (double v : {0.1, 1.0, 10.0}) {
      const auto g = atoms == 2 ? mb::pair_with_potential(v) : mb::triangle_with_potential(v);
      const double exact = mb::exact_diag_oracle(drive, g);
      const double s4 = mb::u2(drive, atoms) + mb::series_u4(drive, g);
      const double s6 = s4 + mb::series_u6(drive, g);
      const double rel = std::abs(s4 - exact) / std::abs(exact);
      const double gain = std::abs(s4 - exact) / std::abs(s6 - exact);
      worst_rel = std::max(worst_rel, rel);
      worst_gain = std::min(worst_gain, gain);
      if (!(rel < 0.01 && gain >= 3.0)) c.passed = false;
      std::string printed;
      const double p4 = mb::u2(drive, atoms) + mb::u4(drive, g);
      printed = fmt("u2+u4: rel %.2e", std::abs(p4 - exact) / std::abs(exact));
      try {
        const double p6 = p4 + mb::u6(drive, g);
        printed += fmt(", adding u6 gain %.3g", std::abs(p4 - exact) / std::abs(p6 - exact));
      } catch (const ResonanceError&) {
        printed += ", u6 sits on a pole";
      }
      c.info.push_back(fmt("atoms=%d V/D=%-4g series rel=%.3e gain=%.1f | ", atoms, v, rel, gain) + printed);
    }
  }
  c.summary = fmt("worst rel %.3e, smallest sixth-order gain %.1f", worst_rel, worst_gain);
  return c;
}

// ---- Lindblad profile (criterion 8) ----

lind::OpenSystemSpec open_spec(int atoms, double w_over_d, double r_over_rb) {
  lind::OpenSystemSpec s;
  s.n_atoms = atoms;
  s.drive = {w_over_d, 1.0};
  s.c6 = 1.0;
  s.gamma_r = 1e-2 * s.drive.rabi;
  s.r = r_over_rb * lind::blockade_radius(s.drive, s.c6, lind::regime_of(s.drive));
  return s;
}

Criterion c8() {
  auto c = make(8, "steady-state profile: plateau, r^-6 tail, strong-dressing extremum");
  bool ok = true;
  double max_res = 0.0, worst_plateau = 0.0, worst_slope_err = 0.0, worst_td = 0.0;
  for (int atoms : {2, 3}) {
    for (double x : {0.1, 0.2, 0.3, 0.4, 0.45}) {
      const auto r = lind::interaction_energy(open_spec(atoms, 0.1, x));
      max_res = std::max(max_res, r.residual);
      worst_plateau = std::max(worst_plateau, std::abs(r.ratio - 1.0));
    }
    const auto near = lind::interaction_energy(open_spec(atoms, 0.1, 4.0));
    const auto far = lind::interaction_energy(open_spec(atoms, 0.1, 40.0));
    const double slope = std::log(std::abs(far.u / near.u)) / std::log(10.0);
    worst_slope_err = std::max(worst_slope_err, std::abs(slope + 6.0));
    c.info.push_back(fmt("weak, %d atoms: tail slope %.4f", atoms, slope));
  }
  ok = ok && worst_plateau <= 0.05 && worst_slope_err <= 0.2;
  c.info.push_back(fmt("weak plateau r<Rb/2: max |U/U0 - 1| = %.4f", worst_plateau));

  for (int atoms : {2, 3}) {
    double plateau = 0.0, extremum = 0.0, at = 0.0, signed_u = 0.0;
    for (double x : {0.1, 0.2, 0.3}) plateau = std::max(plateau, std::abs(lind::interaction_energy(open_spec(atoms, 10.0, x)).ratio));
    for (double x = 0.7; x <= 1.3001; x += 0.05) {
      const auto r = lind::interaction_energy(open_spec(atoms, 10.0, x));
      max_res = std::max(max_res, r.residual);
      if (std::abs(r.ratio) > extremum) {
        extremum = std::abs(r.ratio);
        at = x;
        signed_u = r.ratio;
      }
    }
    if (!(extremum > plateau)) ok = false;
    c.info.push_back(fmt("strong, %d atoms: plateau |U/U0| %.4f, extremum U/U0 = %.4f at r/Rb = %.2f", atoms, plateau,
                         signed_u, at));
  }

  for (double w : {0.1, 10.0}) {
    const auto spec = open_spec(2, w, 1.0);
    const auto gen = lind::build_generator(spec);
    const auto ss = lind::steady_state(gen);
    const auto late = lind::propagate(gen, lind::ground_state(gen), 50.0 / spec.gamma_r);
    const double td = lind::trace_distance(ss.state, late);
    worst_td = std::max(worst_td, td);
    max_res = std::max(max_res, ss.residual);
    c.info.push_back(fmt("W/D=%g r=Rb: residual %.2e, trace distance to t=50/gamma propagation %.2e", w, ss.residual, td));
  }
  ok = ok && max_res < 1e-10 && worst_td < 1e-6;
  c.passed = ok;
  c.summary = fmt("plateau dev %.3f, slope err %.3f, residual %.1e, trace distance %.1e", worst_plateau,
                  worst_slope_err, max_res, worst_td);
  return c;
}

// ---- decoherence figures (criterion 9) ----

Criterion c9(const ResonantRun& run) {
  auto c = make(9, "BBR survival at t33 and t2 (98% and 66% with P_r = 1/2)");
  const double gamma = 2400.0;
  const double t33 = 0.236 / run.chi2, t2 = 4.061 / run.chi2;
  const double a = loss::p_bbr_survival(0.5, gamma, t33).p0;
  const double b = loss::p_bbr_survival(0.5, gamma, t2).p0;
  c.passed = std::abs(a - 0.98) <= 0.02 && std::abs(b - 0.66) <= 0.02;
  c.summary = fmt("P_r=1/2: %.2f%% and %.2f%%", 100 * a, 100 * b);
  c.info.push_back(fmt("P_r=1: %.2f%% and %.2f%% (quoted 98%% / 66%%)", 100 * loss::p_bbr_survival(1.0, gamma, t33).p0,
                       100 * loss::p_bbr_survival(1.0, gamma, t2).p0));
  const double la = run.located.front() / run.chi2, lb = run.located.back() / run.chi2;
  c.info.push_back(fmt("with located times: P_r=1/2 %.2f%% / %.2f%%, P_r=1 %.2f%% / %.2f%%",
                       100 * loss::p_bbr_survival(0.5, gamma, la).p0, 100 * loss::p_bbr_survival(0.5, gamma, lb).p0,
                       100 * loss::p_bbr_survival(1.0, gamma, la).p0, 100 * loss::p_bbr_survival(1.0, gamma, lb).p0));
  c.info.push_back(fmt("loss P_r Gamma t33 with P_r=1: %.4f", loss::depletion_loss(1.0, gamma, t33)));
  return c;
}

// ---- adiabaticity (criterion 10) ----

Criterion c10() {
  auto c = make(10, "dressed-state ramps: static, resonant switch-off, duration sweep");
  using namespace adiabatic;
  const auto stat = integrate_dressed(linear_ramp(0.7, 0.7, 1.0, 1.0, 10.0, 4.0), Branch::lower);
  const auto off = integrate_dressed(linear_ramp(1.0, 0.0, 0.0, 0.0, 3.0, 4.0), Branch::lower);
  std::vector<double> sweep;
  std::string trace;
  for (double t : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    IntegrateOptions o;
    o.steps = 4000;
    sweep.push_back(integrate_dressed(linear_ramp(0.0, 1.0, 1.0, 1.0, t, 1.0), Branch::lower, o).population_scattered);
    trace += fmt(" %.3e", sweep.back());
  }
  bool mono = true;
  for (std::size_t i = 1; i < sweep.size(); ++i) mono = mono && sweep[i] < sweep[i - 1];
  c.passed = stat.population_scattered < 1e-12 && off.population_scattered < 1e-10 && mono;
  c.summary = fmt("static %.1e, switch-off %.1e, sweep", stat.population_scattered, off.population_scattered) + trace;
  return c;
}

// ---- Husimi and overlaps (criterion 11) ----

Criterion c11(std::uint64_t seed) {
  auto c = make(11, "Husimi normalization and closed-form CSS overlaps");
  const auto q1 = spin::husimi_q(spin::css_state({1.0, 2.0}, 48), 200, 400);
  const auto cat = cat::build_mcss({3, 0.3, {0.0, 1.0, 2.0}, cat::AzimuthOrder::ascending}, 48);
  const auto q2 = spin::husimi_q(cat, 200, 400);
  const double qerr = std::max(std::abs(q1.integral() - 1.0), std::abs(q2.integral() - 1.0));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2.0 * kPi);
  double oerr = 0.0;
  for (int n = 1; n <= 64; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const spin::CSSParams a{th(rng), ph(rng)}, b{th(rng), ph(rng)};
      const cplx closed = spin::css_overlap(a, b, n);
      const cplx explicit_ip = spin::css_state(a, n).inner(spin::css_state(b, n));
      oerr = std::max(oerr, std::abs(closed - explicit_ip));
    }
  }
  c.passed = qerr < 1e-3 && oerr < 1e-12;
  c.summary = fmt("|integral Q - 1| = %.2e, overlap error %.2e", qerr, oerr);
  return c;
}

}  // namespace

std::string format_line(const Criterion& c) {
  return std::string(c.passed ? "PASS" : "FAIL") + " " + std::to_string(c.id) + " " + c.title + ": " + c.summary;
}

std::vector<Criterion> run_all(const std::function<void(const Criterion&)>& report, std::uint64_t seed) {
  std::vector<Criterion> out;
  auto push = [&](Criterion c) {
    if (report) report(c);
    out.push_back(std::move(c));
  };
  const auto run = resonant_run();
  push(c1(run));
  push(c2(run));
  push(c3());
  push(c4());
  push(c5());
  push(c6());
  push(c7());
  push(c8());
  push(c9(run));
  push(c10());
  push(c11(seed));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace catdress::acceptance
