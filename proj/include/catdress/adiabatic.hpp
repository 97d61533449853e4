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
#include <utility>
#include <vector>

namespace catdress::adiabatic {

enum class Interpolation { linear, monotone_cubic };

/// Sampled function of time with an analytic derivative of its interpolant.
class RampChannel {
 public:
  RampChannel() = default;
  RampChannel(std::vector<double> times, std::vector<double> values, Interpolation kind);

  double value(double t) const;
  double rate(double t) const;
  double start() const { return times_.front(); }
  double end() const { return times_.back(); }

 private:
  std::size_t segment(double t) const;

  std::vector<double> times_;
  std::vector<double> values_;
  std::vector<double> slopes_;  // node derivatives for the cubic Hermite form
  Interpolation kind_ = Interpolation::linear;
};

struct RampProfile {
  RampChannel omega;  // rad/s
  RampChannel delta;  // rad/s
  double duration = 0.0;
  double n_e = 1.0;

  void validate() const;
};

/// Straight-line ramp of both channels between the given end points.
RampProfile linear_ramp(double omega0, double omega1, double delta0, double delta1, double duration,
                        double n_e);
/// Raised-cosine ramp x0 + (x1 - x0)(1 - cos(pi t/T))/2, sampled at
/// `samples` points and interpolated with monotone cubics.
RampProfile cosine_ramp(double omega0, double omega1, double delta0, double delta1, double duration,
                        double n_e, int samples = 257);

/// (lower, upper) dressed energies (D -/+ sqrt(D^2 + n_e W^2)) / 2.
std::pair<double, double> dressed_energies(double omega, double delta, double n_e);

/// (sqrt(n_e) W dD/dt - sqrt(n_e) D dW/dt) / (n_e W^2 + D^2).
double theta_dot(double omega, double delta, double omega_rate, double delta_rate, double n_e);

enum class Branch { lower, upper };

struct TracePoint {
  double t = 0.0;
  double p_lower = 0.0;
  double p_upper = 0.0;
  double adiabaticity = 0.0;  // theta_dot^2 / E_upper^2 at the step midpoint
};

struct DressedResult {
  double population_scattered = 0.0;
  double max_adiabaticity = 0.0;
  double norm_drift = 0.0;
  std::vector<TracePoint> trace;

  std::string trace_csv() const;
};

struct IntegrateOptions {
  int steps = 2000;
  bool check_halving = true;
  double halving_tol = 1e-6;
  double norm_tol = 1e-9;
};

/// Two-level dressed-basis dynamics with the exact 2x2 propagator of the
/// midpoint generator on each step. Throws NumericalError if the norm
/// drifts or halving the step changes the result beyond tolerance.
DressedResult integrate_dressed(const RampProfile& ramp, Branch initial, const IntegrateOptions& options = {});

}  // namespace catdress::adiabatic
