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

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace catdress::cli {

// Frequencies in the config are ordinary frequencies in Hz (nu = omega/2pi);
// rates (gamma) are in 1/s. Times are in seconds unless a section has a
// `time_unit`.

struct GlobalConfig {
  std::string out_dir = "catdress-out";
  std::string format = "csv";  // csv | json
  int threads = 0;             // 0: library default
  std::uint64_t seed = 20260101;
  bool timestamp = true;
  bool svg = false;
};

struct HamiltonianConfig {
  std::string kind = "kerr";  // kerr | exact | weak | resonant | resonant_expansion | polynomial
  int n_atoms = 48;
  double chi = 1.0;           // rad/s, kerr only
  double rabi_hz = 2e6;
  double detuning_hz = 20e6;
  int weak_order = 4;
  std::vector<double> coeffs;  // polynomial, rad/s per power of N_e
};

struct EvolveConfig {
  HamiltonianConfig hamiltonian;
  double theta = 1.5707963267948966;
  double phi = 0.0;
  std::string time_unit = "kerr";  // s | kerr (|chi_local| t) | chi2 (resonant chi2 t)
  std::vector<double> times{0.0, 0.25, 0.5, 0.785398163397448, 1.5707963267948966};
  int n_theta = 100;
  int n_phi = 200;
  bool binary = false;
};

struct CatscanConfig {
  HamiltonianConfig hamiltonian;
  std::vector<int> ms{2, 3, 4, 5, 6};
  /// When nonempty, each W/D ratio replaces rabi_hz = ratio * detuning_hz.
  std::vector<double> ratios;
  int samples = 0;  // 0: automatic
  int phi0_samples = 16;
  bool traces = false;
};

struct LossConfig {
  int n_atoms = 48;
  double detuning_hz = 20e6;
  std::vector<double> ratios{0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0};
  int m = 2;
  double gamma_r = 4800.0;
  double gamma_bbr = 4800.0;
  int resonant_n_atoms = 1000;
  double resonant_rabi_hz = 70e6;
  double resonant_gamma = 2400.0;
  std::vector<int> resonant_ms{33, 2};
  double p_resonant = 1.0;
};

struct ProfileConfig {
  std::vector<int> atoms{2, 3};
  std::vector<double> ratios{0.1, 10.0};  // W/D
  double detuning_hz = 20e6;
  double gamma_over_rabi = 1e-2;
  double r_min = 0.1;  // units of R_b
  double r_max = 10.0;
  int points = 60;
  std::string u0 = "blockaded";  // blockaded | collective
  double r_ref = 0.0;            // units of R_b; 0 means infinity
};

struct PerturbConfig {
  std::string lattice = "triangular";  // square | triangular | chain | explicit
  double constant = 532e-9;            // m
  int extent = 1;
  std::vector<std::vector<double>> positions;  // explicit lattice, m
  double rabi_over_detuning = 0.05;
  double detuning_hz = 20e6;
  /// C6 from R_b = rb_sites * constant when c6 is zero.
  double c6 = 0.0;
  double rb_sites = 8.0;
  std::vector<double> v_over_detuning;  // if set, sweep V/D on the same shape instead
};

struct AdiabaticConfig {
  std::string shape = "linear";  // linear | cosine
  double omega0_hz = 0.0;
  double omega1_hz = 20e6;
  double delta0_hz = 20e6;
  double delta1_hz = 20e6;
  double duration = 100e-9;
  double n_e = 1.0;
  int steps = 4000;
  std::string initial = "lower";  // lower | upper
  std::vector<double> duration_factors{1, 2, 4, 8, 16};
  int ne_sweep_atoms = 0;  // > 0: sweep n_e across the occupied range of an equatorial CSS
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(GlobalConfig, out_dir, format, threads, seed, timestamp, svg)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(HamiltonianConfig, kind, n_atoms, chi, rabi_hz, detuning_hz,
                                                weak_order, coeffs)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(EvolveConfig, hamiltonian, theta, phi, time_unit, times, n_theta, n_phi,
                                                binary)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(CatscanConfig, hamiltonian, ms, ratios, samples, phi0_samples, traces)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(LossConfig, n_atoms, detuning_hz, ratios, m, gamma_r, gamma_bbr,
                                                resonant_n_atoms, resonant_rabi_hz, resonant_gamma, resonant_ms,
                                                p_resonant)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(ProfileConfig, atoms, ratios, detuning_hz, gamma_over_rabi, r_min,
                                                r_max, points, u0, r_ref)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(PerturbConfig, lattice, constant, extent, positions,
                                                rabi_over_detuning, detuning_hz, c6, rb_sites, v_over_detuning)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(AdiabaticConfig, shape, omega0_hz, omega1_hz, delta0_hz, delta1_hz,
                                                duration, n_e, steps, initial, duration_factors, ne_sweep_atoms)

struct RunConfig {
  GlobalConfig global;
  EvolveConfig evolve;
  CatscanConfig catscan;
  LossConfig loss;
  ProfileConfig profile;
  PerturbConfig perturb;
  AdiabaticConfig adiabatic;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

/// Parses a config document; unknown keys raise ValidationError so typos
/// surface early.
RunConfig parse_config(const std::string& text);
std::string serialize_config(const RunConfig& config);
RunConfig load_config(const std::string& path);

}  // namespace catdress::cli
