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

// catdress command-line front end.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "catdress/acceptance.hpp"
#include "catdress/adiabatic.hpp"
#include "catdress/cat_fidelity.hpp"
#include "catdress/decoherence.hpp"
#include "catdress/dynamics.hpp"
#include "catdress/errors.hpp"
#include "catdress/hamiltonians.hpp"
#include "catdress/io.hpp"
#include "catdress/lindblad.hpp"
#include "catdress/manybody.hpp"
#include "catdress/spin.hpp"
#include "config.hpp"

namespace {

using namespace catdress;
using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double rad(double hz) { return kTwoPi * hz; }

std::string num(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

class Output {
 public:
  explicit Output(const cli::GlobalConfig& g) : dir_(g.out_dir), stamp_(g.timestamp), svg_(g.svg), json_(g.format == "json") {
    require(g.format == "csv" || g.format == "json", "global.format must be csv or json");
  }

  bool svg() const { return svg_; }
  bool json_only() const { return json_; }
  fs::path path(const std::string& name) const { return dir_ / name; }

  void csv(const std::string& name, const std::string& body) const {
    io::write_text(path(name), io::stamp_line(stamp_) + body);
    std::cout << "wrote " << path(name).string() << '\n';
  }
  void text(const std::string& name, const std::string& body) const {
    io::write_text(path(name), body);
    std::cout << "wrote " << path(name).string() << '\n';
  }
  void write_json(const std::string& name, const json& j) const { text(name, j.dump(2) + "\n"); }

 private:
  fs::path dir_;
  bool stamp_;
  bool svg_;
  bool json_;
};

ham::DiagonalHamiltonian build_hamiltonian(const cli::HamiltonianConfig& c) {
  const ham::DriveParams drive{rad(c.rabi_hz), rad(c.detuning_hz)};
  if (c.kind == "kerr") {
    const std::vector<double> coeffs{0.0, 0.0, c.chi};
    return ham::h_polynomial(coeffs, c.n_atoms);
  }
  if (c.kind == "exact") return ham::h_exact(drive, c.n_atoms);
  if (c.kind == "weak") return ham::h_weak_series(drive, c.n_atoms, c.weak_order);
  if (c.kind == "resonant") return ham::h_resonant(drive.rabi, c.n_atoms);
  if (c.kind == "resonant_expansion") return ham::h_resonant_expansion(drive.rabi, c.n_atoms);
  if (c.kind == "polynomial") return ham::h_polynomial(c.coeffs, c.n_atoms);
  throw ValidationError("unknown hamiltonian kind '" + c.kind +
                        "' (kerr|exact|weak|resonant|resonant_expansion|polynomial)");
}

// Multiply seconds by this to get the configured dimensionless time.
double time_factor(const cli::HamiltonianConfig& c, const ham::DiagonalHamiltonian& h, const std::string& unit) {
  if (unit == "s") return 1.0;
  if (unit == "kerr") return std::abs(h.local_kerr(h.n_atoms() / 2.0));
  if (unit == "chi2") {
    require(c.kind == "resonant" || c.kind == "resonant_expansion", "time_unit chi2 needs a resonant hamiltonian");
    return ham::chi2_resonant(rad(c.rabi_hz), c.n_atoms);
  }
  throw ValidationError("unknown time_unit '" + unit + "' (s|kerr|chi2)");
}

json hamiltonian_json(const cli::HamiltonianConfig& c) { return json(c); }

// ---------------------------------------------------------------- evolve

int cmd_evolve(const cli::RunConfig& cfg) {
  const Output out(cfg.global);
  const auto& c = cfg.evolve;
  const auto h = build_hamiltonian(c.hamiltonian);
  const double f = time_factor(c.hamiltonian, h, c.time_unit);
  const auto psi0 = spin::css_state({c.theta, c.phi}, c.hamiltonian.n_atoms);
  json summary = json::array();
  std::string table = "index,time_s,time_scaled,mean_ne,husimi_max\n";
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    require(c.times[i] >= 0.0, "evolve: times must be >= 0");
    const double t = c.times[i] / f;
    const auto psi = dyn::evolve(psi0, h, t);
    const auto q = spin::husimi_q(psi, c.n_theta, c.n_phi);
    const std::string stem = "evolve/snapshot_" + std::to_string(i);
    if (c.binary) {
      io::write_husimi_binary(q, out.path(stem + ".bin"));
      std::cout << "wrote " << out.path(stem + ".bin").string() << '\n';
    } else {
      out.csv(stem + "_husimi.csv", io::husimi_csv(q));
    }
    std::string amps = "N_e,re,im\n";
    for (std::size_t k = 0; k < psi.dimension(); ++k) amps += std::to_string(k) + "," + num(psi[k].real()) + "," + num(psi[k].imag()) + "\n";
    out.csv(stem + "_state.csv", amps);
    if (out.svg()) out.text(stem + ".svg", io::husimi_svg(q));
    const double qmax = *std::max_element(q.values.begin(), q.values.end());
    table += std::to_string(i) + "," + num(t) + "," + num(c.times[i]) + "," + num(spin::expectation_ne(psi, 1)) + "," + num(qmax) + "\n";
    summary.push_back({{"index", i}, {"time_s", t}, {"time_scaled", c.times[i]}, {"mean_ne", spin::expectation_ne(psi, 1)}});
  }
  if (!out.json_only()) out.csv("evolve/snapshots.csv", table);
  out.write_json("evolve/snapshots.json", {{"hamiltonian", hamiltonian_json(c.hamiltonian)}, {"time_unit", c.time_unit}, {"snapshots", summary}});
  return 0;
}

// ---------------------------------------------------------------- catscan

int cmd_catscan(const cli::RunConfig& cfg) {
  const Output out(cfg.global);
  const auto& c = cfg.catscan;
  require(!c.ms.empty(), "catscan: ms must not be empty");
  std::vector<double> ratios = c.ratios;
  if (ratios.empty()) ratios.push_back(std::nan(""));
  json records = json::array();
  std::string table = "ratio,m,t_best_s,kerr_t,chi2_t,fidelity,infidelity,phi0\n";
  for (double ratio : ratios) {
    auto hc = c.hamiltonian;
    if (!std::isnan(ratio)) hc.rabi_hz = ratio * hc.detuning_hz;
    const auto h = build_hamiltonian(hc);
    const auto psi = spin::css_state({std::numbers::pi / 2.0, 0.0}, hc.n_atoms);
    const double kerr = std::abs(h.local_kerr(hc.n_atoms / 2.0));
    const bool resonant = hc.kind == "resonant" || hc.kind == "resonant_expansion";
    const double chi2 = resonant ? ham::chi2_resonant(rad(hc.rabi_hz), hc.n_atoms) : 0.0;
    for (int m : c.ms) {
      auto opts = dyn::default_scan(h, m);
      if (c.samples > 0) opts.samples = c.samples;
      opts.phi0_samples = c.phi0_samples;
      const auto r = dyn::cat_time_scan(psi, h, m, opts);
      json rec{{"m", m},
               {"t", r.t_best},
               {"kerr_t", kerr * r.t_best},
               {"fidelity", r.fidelity},
               {"phi0", r.phi0},
               {"alphas", r.alphas}};
      if (!std::isnan(ratio)) rec["ratio"] = ratio;
      if (resonant) rec["chi2_t"] = chi2 * r.t_best;
      records.push_back(rec);
      table += (std::isnan(ratio) ? std::string() : num(ratio)) + "," + std::to_string(m) + "," + num(r.t_best) + "," +
               num(kerr * r.t_best) + "," + (resonant ? num(chi2 * r.t_best) : std::string()) + "," + num(r.fidelity) +
               "," + num(1.0 - r.fidelity) + "," + num(r.phi0) + "\n";
      std::cout << "m=" << m << (std::isnan(ratio) ? "" : " W/D=" + num(ratio)) << " t=" << num(r.t_best)
                << " F=" << num(r.fidelity) << '\n';
      if (c.traces) {
        const std::string name = "catscan/trace_m" + std::to_string(m) + (std::isnan(ratio) ? "" : "_r" + num(ratio)) + ".csv";
        out.csv(name, r.trace_csv());
      }
    }
  }
  out.write_json("catscan/catscan.json", {{"hamiltonian", hamiltonian_json(c.hamiltonian)}, {"results", records}});
  if (!out.json_only()) out.csv("catscan/catscan.csv", table);
  return 0;
}

// ---------------------------------------------------------------- loss

int cmd_loss(const cli::RunConfig& cfg) {
  const Output out(cfg.global);
  const auto& c = cfg.loss;
  std::string weak = "ratio,t_m,P_r,loss,P_BBR,avalanche_safe\n";
  std::vector<double> xs, losses;
  const auto psi = spin::css_state({std::numbers::pi / 2.0, 0.0}, c.n_atoms);
  for (double ratio : c.ratios) {
    loss::LossParams p{c.gamma_r, c.gamma_bbr, c.n_atoms, {ratio * rad(c.detuning_hz), rad(c.detuning_hz)}, c.p_resonant};
    const auto h = ham::h_exact(p.drive, c.n_atoms);
    const double t = dyn::cat_time_scan(psi, h, c.m, dyn::default_scan(h, c.m)).t_best;
    const double pr = loss::rydberg_population(loss::Regime::weak, p, c.n_atoms / 2.0);
    const double l = loss::depletion_loss(pr, c.gamma_r, t);
    const auto bbr = loss::p_bbr_survival(pr, c.gamma_bbr, t);
    weak += num(ratio) + "," + num(t) + "," + num(pr) + "," + num(l) + "," + num(bbr.p0) + "," + (bbr.avalanche_safe ? "1" : "0") + "\n";
    xs.push_back(ratio);
    losses.push_back(l);
  }
  out.csv("loss/loss_weak.csv", weak);
  if (out.svg()) out.text("loss/loss_weak.svg", io::line_svg({{"loss", xs, losses}}, "W/D", "loss", true, true));

  const double rabi = rad(c.resonant_rabi_hz);
  const auto h = ham::h_resonant(rabi, c.resonant_n_atoms);
  const double chi2 = ham::chi2_resonant(rabi, c.resonant_n_atoms);
  const auto psi_r = spin::css_state({std::numbers::pi / 2.0, 0.0}, c.resonant_n_atoms);
  loss::LossParams p{c.resonant_gamma, c.resonant_gamma, c.resonant_n_atoms, {rabi, 0.0}, c.p_resonant};
  const double pr = loss::rydberg_population(loss::Regime::resonant, p, 0.0);
  std::string res = "m,chi2_t,t,P_r,loss,P_BBR,avalanche_safe\n";
  for (int m : c.resonant_ms) {
    const double t = dyn::cat_time_scan(psi_r, h, m, dyn::default_scan(h, m)).t_best;
    const auto bbr = loss::p_bbr_survival(pr, c.resonant_gamma, t);
    res += std::to_string(m) + "," + num(chi2 * t) + "," + num(t) + "," + num(pr) + "," +
           num(loss::depletion_loss(pr, c.resonant_gamma, t)) + "," + num(bbr.p0) + "," + (bbr.avalanche_safe ? "1" : "0") + "\n";
  }
  out.csv("loss/loss_resonant.csv", res);
  return 0;
}

// ---------------------------------------------------------------- profile

int cmd_profile(const cli::RunConfig& cfg) {
  const Output out(cfg.global);
  const auto& c = cfg.profile;
  require(c.points >= 2 && c.r_min > 0.0 && c.r_max > c.r_min, "profile: need points >= 2 and 0 < r_min < r_max");
  require(c.u0 == "blockaded" || c.u0 == "collective", "profile: u0 must be blockaded or collective");
  std::string table = "ratio,n_atoms,r_over_rb,U_over_U0,U\n";
  std::vector<io::Series> series;
  for (double ratio : c.ratios) {
    for (int atoms : c.atoms) {
      lind::OpenSystemSpec spec;
      spec.n_atoms = atoms;
      spec.drive = {ratio * rad(c.detuning_hz), rad(c.detuning_hz)};
      spec.c6 = spec.drive.detuning;  // R_b in weak units is 1 m; only ratios matter
      spec.gamma_r = c.gamma_over_rabi * spec.drive.rabi;
      const double rb = lind::blockade_radius(spec.drive, spec.c6, lind::regime_of(spec.drive));
      lind::InteractionOptions opts;
      opts.u0 = c.u0 == "blockaded" ? lind::U0Convention::blockaded_steady_state : lind::U0Convention::collective_shift;
      if (c.r_ref > 0.0) opts.r_ref = c.r_ref * rb;
      std::vector<double> xs(c.points), ys(c.points), us(c.points);
      std::vector<std::string> errors(c.points);
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < c.points; ++i) {
        xs[i] = c.r_min * std::pow(c.r_max / c.r_min, static_cast<double>(i) / (c.points - 1));
        auto s = spec;
        s.r = xs[i] * rb;
        try {
          const auto r = lind::interaction_energy(s, opts);
          ys[i] = r.ratio;
          us[i] = r.u;
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
      for (const auto& e : errors)
        if (!e.empty()) throw NumericalError("profile: " + e);
      for (int i = 0; i < c.points; ++i)
        table += num(ratio) + "," + std::to_string(atoms) + "," + num(xs[i]) + "," + num(ys[i]) + "," + num(us[i]) + "\n";
      series.push_back({"W/D=" + num(ratio) + " n=" + std::to_string(atoms), xs, ys});
    }
  }
  out.csv("profile/profile.csv", table);
  if (out.svg()) out.text("profile/profile.svg", io::line_svg(series, "r / R_b", "U / U0", true, false));
  return 0;
}

// ---------------------------------------------------------------- perturb

json perturb_record(const ham::DriveParams& drive, const mb::LatticeGeometry& g) {
  json rec;
  const int n = g.size();
  const double u2 = mb::u2(drive, n);
  rec["n_atoms"] = n;
  rec["u2"] = u2;
  auto guarded = [&](const char* key, auto&& fn) {
    try {
      rec[key] = fn();
    } catch (const ResonanceError& e) {
      rec[key] = nullptr;
      rec[std::string(key) + "_pole"] = e.atoms();
    }
  };
  guarded("u4", [&] { return mb::u4(drive, g); });
  guarded("u6", [&] { return mb::u6(drive, g); });
  guarded("series_u4", [&] { return mb::series_u4(drive, g); });
  guarded("series_u6", [&] { return mb::series_u6(drive, g); });
  if (n <= 12) {
    try {
      rec["oracle"] = mb::exact_diag_oracle(drive, g);
    } catch (const NumericalError& e) {
      rec["oracle"] = nullptr;
      rec["oracle_error"] = e.what();
    }
  }
  double vmax = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) vmax = std::max(vmax, g.pair_potential(i, j));
  rec["max_v_over_detuning"] = vmax / drive.detuning;
  return rec;
}

int cmd_perturb(const cli::RunConfig& cfg) {
  const Output out(cfg.global);
  const auto& c = cfg.perturb;
  const double det = rad(c.detuning_hz);
  const ham::DriveParams drive{c.rabi_over_detuning * det, det};
  const double c6 = c.c6 > 0.0 ? c.c6 : det * std::pow(c.rb_sites * c.constant, 6);
  std::vector<mb::Vec3> pts;
  for (const auto& p : c.positions) {
    require(p.size() == 2 || p.size() == 3, "perturb: positions need 2 or 3 coordinates");
    pts.push_back({p[0], p[1], p.size() == 3 ? p[2] : 0.0});
  }
  const auto kind = mb::parse_lattice_kind(c.lattice);
  json results = json::array();
  if (c.v_over_detuning.empty()) {
    const auto g = mb::build_lattice(kind, c.constant, c.extent, c6, pts);
    results.push_back(perturb_record(drive, g));
  } else {
    for (double v : c.v_over_detuning) {
      require(v > 0.0, "perturb: v_over_detuning entries must be > 0");
      const auto shape = mb::build_lattice(kind, c.constant, c.extent, c6, pts);
      // rescale so the closest pair has V = v D
      const double r0 = std::pow(c6 / (v * det), 1.0 / 6.0);
      const double s = r0 / shape.min_distance();
      std::vector<mb::Vec3> scaled;
      for (const auto& p : shape.positions()) scaled.push_back({p[0] * s, p[1] * s, p[2] * s});
      auto rec = perturb_record(drive, mb::LatticeGeometry(scaled, c6));
      rec["v_over_detuning"] = v;
      results.push_back(rec);
    }
  }
  json doc{{"params", json(c)}, {"c6", c6}, {"rabi", drive.rabi}, {"detuning", drive.detuning}, {"results", results}};
  out.write_json("perturb/perturb.json", doc);
  std::cout << results.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------- adiabatic

adiabatic::RampProfile make_ramp(const cli::AdiabaticConfig& c, double duration, double n_e) {
  if (c.shape == "linear")
    return adiabatic::linear_ramp(rad(c.omega0_hz), rad(c.omega1_hz), rad(c.delta0_hz), rad(c.delta1_hz), duration, n_e);
  if (c.shape == "cosine")
    return adiabatic::cosine_ramp(rad(c.omega0_hz), rad(c.omega1_hz), rad(c.delta0_hz), rad(c.delta1_hz), duration, n_e);
  throw ValidationError("adiabatic: shape must be linear or cosine");
}

int cmd_adiabatic(const cli::RunConfig& cfg) {
  const Output out(cfg.global);
  const auto& c = cfg.adiabatic;
  require(c.initial == "lower" || c.initial == "upper", "adiabatic: initial must be lower or upper");
  const auto branch = c.initial == "lower" ? adiabatic::Branch::lower : adiabatic::Branch::upper;
  adiabatic::IntegrateOptions opts;
  opts.steps = c.steps;
  const auto base = adiabatic::integrate_dressed(make_ramp(c, c.duration, c.n_e), branch, opts);
  out.csv("adiabatic/trace.csv", base.trace_csv());

  std::string sweep = "duration,scattered,max_adiabaticity\n";
  json sweep_json = json::array();
  for (double f : c.duration_factors) {
    require(f > 0.0, "adiabatic: duration factors must be > 0");
    const auto r = adiabatic::integrate_dressed(make_ramp(c, c.duration * f, c.n_e), branch, opts);
    sweep += num(c.duration * f) + "," + num(r.population_scattered) + "," + num(r.max_adiabaticity) + "\n";
    sweep_json.push_back({{"duration", c.duration * f}, {"scattered", r.population_scattered}, {"max_adiabaticity", r.max_adiabaticity}});
  }
  out.csv("adiabatic/duration_sweep.csv", sweep);

  json doc{{"params", json(c)},
           {"scattered", base.population_scattered},
           {"max_adiabaticity", base.max_adiabaticity},
           {"norm_drift", base.norm_drift},
           {"duration_sweep", sweep_json}};
  if (c.ne_sweep_atoms > 0) {
    const double n = c.ne_sweep_atoms;
    const double lo = std::max(1.0, std::floor(n / 2.0 - 1.5 * std::sqrt(n)));
    const double hi = std::min(n, std::ceil(n / 2.0 + 1.5 * std::sqrt(n)));
    std::string ne = "n_e,scattered,max_adiabaticity\n";
    for (double k = lo; k <= hi; k += std::max(1.0, std::floor((hi - lo) / 12.0))) {
      const auto r = adiabatic::integrate_dressed(make_ramp(c, c.duration, k), branch, opts);
      ne += num(k) + "," + num(r.population_scattered) + "," + num(r.max_adiabaticity) + "\n";
    }
    out.csv("adiabatic/ne_sweep.csv", ne);
  }
  out.write_json("adiabatic/summary.json", doc);
  std::cout << "scattered population " << num(base.population_scattered) << '\n';
  return 0;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(const cli::RunConfig& cfg) {
  int failed = 0;
  acceptance::run_all(
      [&](const acceptance::Criterion& c) {
        std::cout << acceptance::format_line(c) << '\n';
        for (const auto& line : c.info) std::cout << "    " << line << '\n';
        std::cout.flush();
        if (!c.passed) ++failed;
      },
      cfg.global.seed);
  std::cout << (failed == 0 ? "all criteria passed\n" : std::to_string(failed) + " criteria failed\n");
  return failed == 0 ? 0 : 1;
}

template <class T>
void list_option(CLI::App* app, const std::string& name, std::vector<T>& target, const std::string& help) {
  app->add_option(name, target, help)->delimiter(',')->capture_default_str();
}

void add_hamiltonian_options(CLI::App* app, cli::HamiltonianConfig& h) {
  app->add_option("--hamiltonian", h.kind, "kerr|exact|weak|resonant|resonant_expansion|polynomial")->capture_default_str();
  app->add_option("-N,--atoms", h.n_atoms, "atom number")->capture_default_str();
  app->add_option("--chi", h.chi, "Kerr coefficient, rad/s (kerr)")->capture_default_str();
  app->add_option("--rabi-hz", h.rabi_hz, "Rabi frequency W/2pi, Hz")->capture_default_str();
  app->add_option("--detuning-hz", h.detuning_hz, "detuning D/2pi, Hz")->capture_default_str();
  app->add_option("--weak-order", h.weak_order, "terms of the weak-dressing series (1-4)")->capture_default_str();
  list_option(app, "--coeffs", h.coeffs, "polynomial coefficients, ascending powers of N_e");
}

// Finds --config before CLI11 runs so that flags can override file values.
std::string find_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  cli::RunConfig cfg;
  try {
    if (const auto path = find_config_path(argc, argv); !path.empty()) cfg = cli::load_config(path);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"catdress: collective-spin cat states under Rydberg dressing"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string config_path, dump_path;
  app.add_option("--config", config_path, "JSON run configuration (flags override it)");
  app.add_option("--dump-config", dump_path, "write the effective configuration to this file and continue");
  auto& g = cfg.global;
  app.add_option("-o,--out", g.out_dir, "output directory")->capture_default_str();
  app.add_option("--format", g.format, "csv|json")->capture_default_str();
  app.add_option("-j,--threads", g.threads, "worker threads (0: default)")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
  app.add_flag("!--no-timestamp", g.timestamp, "omit the generated-at line from CSV files");
  app.add_flag("--svg", g.svg, "also write SVG plots");

  auto* evolve = app.add_subcommand("evolve", "Husimi snapshots of an evolving CSS");
  add_hamiltonian_options(evolve, cfg.evolve.hamiltonian);
  evolve->add_option("--theta", cfg.evolve.theta, "initial polar angle")->capture_default_str();
  evolve->add_option("--phi", cfg.evolve.phi, "initial azimuth")->capture_default_str();
  evolve->add_option("--time-unit", cfg.evolve.time_unit, "s|kerr|chi2")->capture_default_str();
  list_option(evolve, "--times", cfg.evolve.times, "snapshot times in time-unit");
  evolve->add_option("--n-theta", cfg.evolve.n_theta, "Husimi grid rows")->capture_default_str();
  evolve->add_option("--n-phi", cfg.evolve.n_phi, "Husimi grid columns")->capture_default_str();
  evolve->add_flag("--binary", cfg.evolve.binary, "write Husimi grids in the binary format");

  auto* catscan = app.add_subcommand("catscan", "locate fidelity-optimal m-CSS times");
  add_hamiltonian_options(catscan, cfg.catscan.hamiltonian);
  list_option(catscan, "--ms", cfg.catscan.ms, "component numbers");
  list_option(catscan, "--ratios", cfg.catscan.ratios, "W/D values (sets rabi = ratio * detuning)");
  catscan->add_option("--samples", cfg.catscan.samples, "time grid points (0: automatic)")->capture_default_str();
  catscan->add_option("--phi0-samples", cfg.catscan.phi0_samples, "minimum azimuth grid points")->capture_default_str();
  catscan->add_flag("--traces", cfg.catscan.traces, "write fidelity traces");

  auto* lossc = app.add_subcommand("loss", "decay loss and BBR survival sweeps");
  auto& l = cfg.loss;
  lossc->add_option("-N,--atoms", l.n_atoms, "atom number (weak sweep)")->capture_default_str();
  lossc->add_option("--detuning-hz", l.detuning_hz, "detuning D/2pi, Hz")->capture_default_str();
  list_option(lossc, "--ratios", l.ratios, "W/D sweep");
  lossc->add_option("-m", l.m, "cat component number for the weak sweep")->capture_default_str();
  lossc->add_option("--gamma-r", l.gamma_r, "Rydberg decay rate, 1/s")->capture_default_str();
  lossc->add_option("--gamma-bbr", l.gamma_bbr, "BBR depopulation rate, 1/s")->capture_default_str();
  lossc->add_option("--resonant-atoms", l.resonant_n_atoms, "atom number (resonant block)")->capture_default_str();
  lossc->add_option("--resonant-rabi-hz", l.resonant_rabi_hz, "resonant W/2pi, Hz")->capture_default_str();
  lossc->add_option("--resonant-gamma", l.resonant_gamma, "resonant decay rate, 1/s")->capture_default_str();
  list_option(lossc, "--resonant-ms", l.resonant_ms, "component numbers for the resonant block");
  lossc->add_option("--p-resonant", l.p_resonant, "Rydberg population on resonance")->capture_default_str();

  auto* profile = app.add_subcommand("profile", "steady-state interaction profiles of 2 or 3 atoms");
  auto& p = cfg.profile;
  list_option(profile, "--atoms", p.atoms, "atom numbers (2, 3)");
  list_option(profile, "--ratios", p.ratios, "W/D values");
  profile->add_option("--detuning-hz", p.detuning_hz, "detuning D/2pi, Hz")->capture_default_str();
  profile->add_option("--gamma-over-rabi", p.gamma_over_rabi, "gamma_r / W")->capture_default_str();
  profile->add_option("--r-min", p.r_min, "smallest r / R_b")->capture_default_str();
  profile->add_option("--r-max", p.r_max, "largest r / R_b")->capture_default_str();
  profile->add_option("--points", p.points, "log-spaced radii")->capture_default_str();
  profile->add_option("--u0", p.u0, "blockaded|collective")->capture_default_str();
  profile->add_option("--r-ref", p.r_ref, "reference distance / R_b (0: infinity)")->capture_default_str();

  auto* perturb = app.add_subcommand("perturb", "perturbative light shifts vs exact diagonalization");
  auto& q = cfg.perturb;
  perturb->add_option("--lattice", q.lattice, "square|triangular|chain|explicit")->capture_default_str();
  perturb->add_option("--constant", q.constant, "lattice constant, m")->capture_default_str();
  perturb->add_option("--extent", q.extent, "lattice extent")->capture_default_str();
  perturb->add_option("--ratio", q.rabi_over_detuning, "W/D")->capture_default_str();
  perturb->add_option("--detuning-hz", q.detuning_hz, "detuning D/2pi, Hz")->capture_default_str();
  perturb->add_option("--c6", q.c6, "C6, rad m^6/s (0: from --rb-sites)")->capture_default_str();
  perturb->add_option("--rb-sites", q.rb_sites, "weak blockade radius in lattice constants")->capture_default_str();
  list_option(perturb, "--v-over-detuning", q.v_over_detuning, "rescale so nearest V/D takes these values");

  auto* adia = app.add_subcommand("adiabatic", "dressed two-level ramps");
  auto& a = cfg.adiabatic;
  adia->add_option("--shape", a.shape, "linear|cosine")->capture_default_str();
  adia->add_option("--omega0-hz", a.omega0_hz, "initial W/2pi, Hz")->capture_default_str();
  adia->add_option("--omega1-hz", a.omega1_hz, "final W/2pi, Hz")->capture_default_str();
  adia->add_option("--delta0-hz", a.delta0_hz, "initial D/2pi, Hz")->capture_default_str();
  adia->add_option("--delta1-hz", a.delta1_hz, "final D/2pi, Hz")->capture_default_str();
  adia->add_option("--duration", a.duration, "ramp duration, s")->capture_default_str();
  adia->add_option("--ne", a.n_e, "collective excitation number")->capture_default_str();
  adia->add_option("--steps", a.steps, "integration steps")->capture_default_str();
  adia->add_option("--initial", a.initial, "lower|upper")->capture_default_str();
  list_option(adia, "--duration-factors", a.duration_factors, "duration multipliers for the sweep");
  adia->add_option("--ne-sweep-atoms", a.ne_sweep_atoms, "sweep n_e over an equatorial CSS of this size")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
#ifdef _OPENMP
    if (cfg.global.threads > 0) omp_set_num_threads(cfg.global.threads);
#endif
    require(cfg.global.threads >= 0, "threads must be >= 0");
    if (!dump_path.empty()) io::write_text(dump_path, cli::serialize_config(cfg));
    if (evolve->parsed()) return cmd_evolve(cfg);
    if (catscan->parsed()) return cmd_catscan(cfg);
    if (lossc->parsed()) return cmd_loss(cfg);
    if (profile->parsed()) return cmd_profile(cfg);
    if (perturb->parsed()) return cmd_perturb(cfg);
    if (adia->parsed()) return cmd_adiabatic(cfg);
    if (selftest->parsed()) return cmd_selftest(cfg);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
