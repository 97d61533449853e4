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

#include "catdress/adiabatic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "catdress/errors.hpp"

namespace catdress::adiabatic {

namespace {

using cplx = std::complex<double>;

// Fritsch-Carlson limited slopes.
std::vector<double> monotone_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> secant(n - 1), d(n);
  for (std::size_t i = 0; i + 1 < n; ++i) secant[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  d[0] = secant[0];
  d[n - 1] = secant[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = secant[i - 1] * secant[i] <= 0.0 ? 0.0 : 0.5 * (secant[i - 1] + secant[i]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (secant[i] == 0.0) {
      d[i] = d[i + 1] = 0.0;
      continue;
    }
    const double a = d[i] / secant[i];
    const double b = d[i + 1] / secant[i];
    const double s = a * a + b * b;
    if (s > 9.0) {
      const double tau = 3.0 / std::sqrt(s);
      d[i] = tau * a * secant[i];
      d[i + 1] = tau * b * secant[i];
    }
  }
  return d;
}

struct Propagator {
  cplx u00, u01, u10, u11;
};

// exp(-i M dt) for M = [[a + bz, -i by], [i by, a - bz]].
Propagator step_propagator(double e_lo, double e_hi, double thdot, double dt) {
  const double a = 0.5 * (e_lo + e_hi);
  const double bz = 0.5 * (e_lo - e_hi);
  const double by = 0.5 * thdot;
  const double b = std::hypot(bz, by);
  const cplx phase = std::polar(1.0, -a * dt);
  const double c = std::cos(b * dt);
  const double s = b > 0.0 ? std::sin(b * dt) / b : dt;
  const cplx i(0.0, 1.0);
  // exp(-i dt b.sigma) = cos - i sin (b.sigma)/|b|, sigma_y = [[0,-i],[i,0]]
  return {phase * (c - i * s * bz), phase * (-i * s * (-i * by)), phase * (-i * s * (i * by)),
          phase * (c + i * s * bz)};
}

double adiabaticity(double thdot, double e_hi) {
  if (thdot == 0.0) return 0.0;
  if (e_hi == 0.0) return std::numeric_limits<double>::infinity();
  return thdot * thdot / (e_hi * e_hi);
}

// theta_dot that treats the 0/0 point of a vanishing drive as static.
double safe_theta_dot(double w, double d, double wr, double dr, double n_e) {
  const double den = n_e * w * w + d * d;
  const double num = std::sqrt(n_e) * (w * dr - d * wr);
  if (den == 0.0) {
    if (num == 0.0) return 0.0;
    throw NumericalError("integrate_dressed: ramp passes through W = D = 0 with nonzero rate");
  }
  return num / den;
}

DressedResult run(const RampProfile& ramp, Branch initial, int steps, double norm_tol) {
  DressedResult out;
  out.trace.reserve(static_cast<std::size_t>(steps) + 1);
  cplx lo = initial == Branch::lower ? 1.0 : 0.0;
  cplx hi = initial == Branch::upper ? 1.0 : 0.0;
  const double dt = ramp.duration / steps;
  out.trace.push_back({0.0, std::norm(lo), std::norm(hi), 0.0});
  for (int s = 0; s < steps; ++s) {
    const double tm = (s + 0.5) * dt;
    const double w = ramp.omega.value(tm), d = ramp.delta.value(tm);
    const double th = safe_theta_dot(w, d, ramp.omega.rate(tm), ramp.delta.rate(tm), ramp.n_e);
    const auto [e_lo, e_hi] = dressed_energies(w, d, ramp.n_e);
    const auto u = step_propagator(e_lo, e_hi, th, dt);
    const cplx nlo = u.u00 * lo + u.u01 * hi;
    const cplx nhi = u.u10 * lo + u.u11 * hi;
    lo = nlo;
    hi = nhi;
    const double q = adiabaticity(th, e_hi);
    out.max_adiabaticity = std::max(out.max_adiabaticity, q);
    out.trace.push_back({(s + 1) * dt, std::norm(lo), std::norm(hi), q});
  }
  out.norm_drift = std::abs(std::norm(lo) + std::norm(hi) - 1.0);
  if (out.norm_drift > norm_tol)
    throw NumericalError("integrate_dressed: norm drift " + std::to_string(out.norm_drift) + " exceeds tolerance");
  out.population_scattered = initial == Branch::lower ? std::norm(hi) : std::norm(lo);
  return out;
}

}  // namespace

RampChannel::RampChannel(std::vector<double> times, std::vector<double> values, Interpolation kind)
    : times_(std::move(times)), values_(std::move(values)), kind_(kind) {
  require(times_.size() >= 2, "RampChannel: need at least two samples");
  require(times_.size() == values_.size(), "RampChannel: times and values differ in length");
  for (std::size_t i = 0; i < times_.size(); ++i) {
    require(std::isfinite(times_[i]) && std::isfinite(values_[i]), "RampChannel: non-finite sample");
    if (i > 0) require(times_[i] > times_[i - 1], "RampChannel: times must increase strictly");
  }
  if (kind_ == Interpolation::monotone_cubic) slopes_ = monotone_slopes(times_, values_);
}

std::size_t RampChannel::segment(double t) const {
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  std::size_t i = it == times_.begin() ? 0 : static_cast<std::size_t>(it - times_.begin()) - 1;
  return std::min(i, times_.size() - 2);
}

double RampChannel::value(double t) const {
  t = std::clamp(t, start(), end());
  const std::size_t i = segment(t);
  const double h = times_[i + 1] - times_[i];
  const double u = (t - times_[i]) / h;
  if (kind_ == Interpolation::linear) return values_[i] + u * (values_[i + 1] - values_[i]);
  const double u2 = u * u, u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * values_[i] + (u3 - 2 * u2 + u) * h * slopes_[i] +
         (-2 * u3 + 3 * u2) * values_[i + 1] + (u3 - u2) * h * slopes_[i + 1];
}

double RampChannel::rate(double t) const {
  t = std::clamp(t, start(), end());
  const std::size_t i = segment(t);
  const double h = times_[i + 1] - times_[i];
  const double u = (t - times_[i]) / h;
  if (kind_ == Interpolation::linear) return (values_[i + 1] - values_[i]) / h;
  const double u2 = u * u;
  return ((6 * u2 - 6 * u) * values_[i] + (-6 * u2 + 6 * u) * values_[i + 1]) / h +
         (3 * u2 - 4 * u + 1) * slopes_[i] + (3 * u2 - 2 * u) * slopes_[i + 1];
}

void RampProfile::validate() const {
  require(std::isfinite(duration) && duration > 0.0, "RampProfile: duration must be > 0");
  require(std::isfinite(n_e) && n_e > 0.0, "RampProfile: n_e must be > 0");
  for (const auto* ch : {&omega, &delta}) {
    require(ch->start() <= 0.0 && ch->end() >= duration, "RampProfile: channels must cover [0, duration]");
  }
}

RampProfile linear_ramp(double omega0, double omega1, double delta0, double delta1, double duration,
                        double n_e) {
  require(std::isfinite(duration) && duration > 0.0, "linear_ramp: duration must be > 0");
  RampProfile r{RampChannel({0.0, duration}, {omega0, omega1}, Interpolation::linear),
                RampChannel({0.0, duration}, {delta0, delta1}, Interpolation::linear), duration, n_e};
  r.validate();
  return r;
}

RampProfile cosine_ramp(double omega0, double omega1, double delta0, double delta1, double duration,
                        double n_e, int samples) {
  require(std::isfinite(duration) && duration > 0.0, "cosine_ramp: duration must be > 0");
  require(samples >= 3, "cosine_ramp: samples must be >= 3");
  std::vector<double> t(samples), w(samples), d(samples);
  for (int i = 0; i < samples; ++i) {
    t[i] = duration * i / (samples - 1);
    const double f = 0.5 * (1.0 - std::cos(std::numbers::pi * i / (samples - 1)));
    w[i] = omega0 + (omega1 - omega0) * f;
    d[i] = delta0 + (delta1 - delta0) * f;
  }
  RampProfile r{RampChannel(t, std::move(w), Interpolation::monotone_cubic),
                RampChannel(std::move(t), std::move(d), Interpolation::monotone_cubic), duration, n_e};
  r.validate();
  return r;
}

std::pair<double, double> dressed_energies(double omega, double delta, double n_e) {
  require(std::isfinite(omega) && std::isfinite(delta) && std::isfinite(n_e) && n_e >= 0.0,
          "dressed_energies: inputs must be finite, n_e >= 0");
  require(!(omega == 0.0 && delta == 0.0), "dressed_energies: degenerate point W = D = 0");
  const double root = std::sqrt(delta * delta + n_e * omega * omega);
  return {0.5 * (delta - root), 0.5 * (delta + root)};
}

double theta_dot(double omega, double delta, double omega_rate, double delta_rate, double n_e) {
  require(std::isfinite(n_e) && n_e >= 0.0, "theta_dot: n_e must be finite and >= 0");
  const double den = n_e * omega * omega + delta * delta;
  if (den <= 0.0) throw ValidationError("theta_dot: denominator n_e W^2 + D^2 vanishes");
  return std::sqrt(n_e) * (omega * delta_rate - delta * omega_rate) / den;
}

std::string DressedResult::trace_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "t,p_lower,p_upper,thetadot2_over_Eplus2\n";
  for (const auto& p : trace) out << p.t << ',' << p.p_lower << ',' << p.p_upper << ',' << p.adiabaticity << '\n';
  return out.str();
}

DressedResult integrate_dressed(const RampProfile& ramp, Branch initial, const IntegrateOptions& options) {
  ramp.validate();
  require(options.steps >= 10, "integrate_dressed: steps must be >= 10");
  auto result = run(ramp, initial, options.steps, options.norm_tol);
  if (options.check_halving) {
    const auto fine = run(ramp, initial, 2 * options.steps, options.norm_tol);
    const double diff = std::abs(fine.population_scattered - result.population_scattered);
    if (diff > options.halving_tol)
      throw NumericalError("integrate_dressed: step halving changes the scattered population by " +
                           std::to_string(diff) + "; increase steps");
  }
  return result;
}

}  // namespace catdress::adiabatic
