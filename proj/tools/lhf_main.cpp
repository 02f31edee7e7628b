// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// lhf: command-line driver.
//
//   lhf basis        --config c.cfg [--out-dir out]
//   lhf groundstate  --config c.cfg
//   lhf evolve-exact --config c.cfg
//   lhf evolve-hf    --config c.cfg [--dt h] [--t-final T] [--scheme rk4|rk4+reorth]
//                    [--initial nigs-ground|state.json] [--snapshots]
//   lhf compare      --config c.cfg
//   lhf validate     --config c.cfg
//
// Exit status: 0 success, 1 invalid config, failed computation or failed
// built-in validation (outputs are still written), 2 usage error.

#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lhf/analysis/compare.hpp"
#include "lhf/core/config.hpp"
#include "lhf/core/error.hpp"
#include "lhf/hartree_fock/hartree_fock.hpp"
#include "lhf/io/manifest.hpp"
#include "lhf/io/writers.hpp"
#include "lhf/landau/operators.hpp"
#include "lhf/landau/orbital_set.hpp"
#include "lhf/many_body/propagate.hpp"
#include "lhf/many_body/slater.hpp"

namespace fs = std::filesystem;
using namespace lhf;

namespace {

struct Common {
  std::string config;
  std::string out_dir = "./out";
  int threads = 0;
};

struct HfFlags {
  double dt = 0.0;
  double t_final = -1.0;
  std::string scheme;
  std::string initial = "nigs-ground";
  bool snapshots = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoFailure, path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string out_path(const Common& c, const std::string& name) { return (fs::path(c.out_dir) / name).string(); }

// Writes the manifest; any failed built-in validation turns into exit 1.
int finish(const Common& c, const RunManifest& manifest) {
  manifest.write(out_path(c, "manifest.json"));
  if (manifest.all_passed()) return 0;
  std::cerr << "validation failed:";
  const Json record = manifest.to_json();
  for (const auto& [name, ok] : record.at("validations").items())
    if (!ok.get<bool>()) std::cerr << " " << name;
  std::cerr << "\n";
  return 1;
}

void prepare(const Common& c) {
  if (c.threads > 0) omp_set_num_threads(c.threads);
  std::error_code ec;
  fs::create_directories(c.out_dir, ec);
  if (ec) raise(ErrorCode::IoFailure, c.out_dir);
}

Json complex_pair(cplx z) { return Json::array({z.real(), z.imag()}); }

int run_basis(const Common& c) {
  prepare(c);
  const SimulationConfig cfg = load_config(c.config);
  RunManifest manifest("basis", read_file(c.config));
  const OrbitalSet set = manifest.timed("orbitals", [&] { return build_orbital_set(cfg); });
  fs::create_directories(fs::path(c.out_dir) / "orbitals");

  Json report;
  report["gram_max_dev"] = set.gram_deviation();
  Json bc = Json::array(), eig = Json::array(), labels = Json::array();
  double worst_bc = 0.0;
  manifest.timed("validation", [&] {
    for (int k = 0; k < set.size(); ++k) {
      const OrbitalField& f = set[k];
      const BcResidual r = check_magnetic_bc(f, cfg.domain.M);
      worst_bc = std::max(worst_bc, r.max());
      bc.push_back(r.max());
      const OrbitalField h = apply_landau_hamiltonian(f, cfg.constants);
      eig.push_back(std::sqrt((h.values - set.energies()(k) * f.values).squaredNorm() * set.grid().weight()));
      labels.push_back({{"n", set.label(k).n}, {"m", set.label(k).m}, {"energy", set.energies()(k)}});
    }
  });
  report["bc_residuals"] = bc;
  report["eigenresiduals"] = eig;
  report["orbitals"] = labels;

  manifest.timed("write", [&] {
    const Grid& g = set.grid();
    for (int k = 0; k < set.size(); ++k) {
      std::vector<std::vector<double>> rows;
      rows.reserve(std::size_t(g.size()));
      for (int i = 0; i < g.G1(); ++i)
        for (int j = 0; j < g.G2(); ++j) {
          const cplx v = set[k].values(i, j);
          rows.push_back({g.x1(i), g.x2(j), v.real(), v.imag()});
        }
      const std::string name = "orbitals/orbital_n" + std::to_string(set.label(k).n) + "_m" +
                               std::to_string(set.label(k).m) + ".csv";
      write_csv(out_path(c, name), {"x1", "x2", "re", "im"}, rows);
      manifest.add_output(out_path(c, name));
    }
    write_json(out_path(c, "basis_report.json"), report);
    manifest.add_output(out_path(c, "basis_report.json"));
  });
  manifest.add_validation("gram", set.gram_deviation() <= cfg.gram_tolerance);
  manifest.add_validation("magnetic_bc", worst_bc <= 1e-10);
  return finish(c, manifest);
}

int run_groundstate(const Common& c) {
  prepare(c);
  const SimulationConfig cfg = load_config(c.config);
  RunManifest manifest("groundstate", read_file(c.config));
  VectorXd energies(cfg.K());
  for (int k = 0; k < cfg.K(); ++k) energies(k) = landau_level(k / cfg.domain.M, cfg.constants);
  const GroundState gs = noninteracting_ground_state(FillingSpec(cfg.N, cfg.domain.M), energies);
  Json occ = Json::array();
  for (Occupation o : gs.occupations) occ.push_back(occupied_indices(o));
  const Json out{{"energy", gs.energy}, {"nu", gs.nu}, {"r", gs.r}, {"degeneracy", gs.degeneracy},
                 {"occupations", occ}, {"N", cfg.N}, {"M", cfg.domain.M}};
  std::cout << out.dump(2) << "\n";
  write_json(out_path(c, "groundstate.json"), out);
  manifest.add_output(out_path(c, "groundstate.json"));
  return finish(c, manifest);
}

std::vector<double> sample_times(const SimulationConfig& cfg) {
  const long steps = cfg.t_final == 0.0 ? 0 : long(std::ceil(cfg.t_final / cfg.dt - 1e-9));
  std::vector<double> t{0.0};
  for (long k = 1; k <= steps; ++k)
    if (k % cfg.sample_every == 0 || k == steps) t.push_back(k == steps ? cfg.t_final : k * cfg.dt);
  return t;
}

int run_evolve_exact(const Common& c) {
  prepare(c);
  const SimulationConfig cfg = load_config(c.config);
  RunManifest manifest("evolve-exact", read_file(c.config));
  const Problem p = manifest.timed("setup", [&] { return build_problem(cfg); });
  const HFState start = initial_hf_state(p);
  const VectorXcd psi0 = embed_slater(start.a, start.orbitals, *p.basis);
  const Propagator prop(p.H, cfg.constants.hbar());
  const std::vector<double> times = sample_times(cfg);
  std::vector<std::vector<double>> rows(times.size());
  manifest.timed("propagate", [&] {
#pragma omp parallel for schedule(static)
    for (std::size_t s = 0; s < times.size(); ++s) {
      const VectorXcd psi = prop.apply(psi0, times[s]);
      rows[s] = {times[s], expectation(p.H, psi), psi.norm()};
    }
  });
  write_csv(out_path(c, "exact_timeseries.csv"), {"t", "energy", "norm"}, rows);
  manifest.add_output(out_path(c, "exact_timeseries.csv"));
  double drift = 0.0;
  for (const auto& r : rows) drift = std::max(drift, std::abs(r[1] - rows.front()[1]));
  manifest.add_validation("energy_conservation", drift <= 1e-9 * std::max(1.0, std::abs(rows.front()[1])));
  return finish(c, manifest);
}

HFState read_initial_state(const std::string& path, const Problem& p) {
  Json doc;
  try {
    doc = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    raise(ErrorCode::MalformedConfig, path + ": " + e.what());
  }
  try {
    const auto& a = doc.at("a");
    const auto& orbitals = doc.at("orbitals");
    const int K = p.config.K(), N = p.config.N;
    if (int(orbitals.size()) != N) raise(ErrorCode::DimensionMismatch, "expected " + std::to_string(N) + " orbitals");
    MatrixXcd C(K, N);
    for (int l = 0; l < N; ++l) {
      if (int(orbitals[l].size()) != K) raise(ErrorCode::DimensionMismatch, "orbital " + std::to_string(l) + " length");
      for (int k = 0; k < K; ++k) C(k, l) = cplx(orbitals[l][k].at(0).get<double>(), orbitals[l][k].at(1).get<double>());
    }
    if (orthonormality_defect(C) > 1e-6) raise(ErrorCode::NotOrthonormal, path);
    return make_hf_state(cplx(a.at(0).get<double>(), a.at(1).get<double>()), std::move(C), p.model);
  } catch (const Json::exception& e) {
    raise(ErrorCode::MalformedConfig, path + ": " + e.what());
  }
}

int run_evolve_hf(const Common& c, const HfFlags& f) {
  prepare(c);
  SimulationConfig cfg = load_config(c.config);
  if (f.dt != 0.0) {
    if (!(f.dt > 0.0)) raise(ErrorCode::InvalidValue, "dt");
    cfg.dt = f.dt;
  }
  if (f.t_final >= 0.0) cfg.t_final = f.t_final;
  if (!f.scheme.empty()) {
    if (f.scheme == "rk4") cfg.integrator = Scheme::Rk4;
    else if (f.scheme == "rk4+reorth") cfg.integrator = Scheme::Rk4Reorth;
    else raise(ErrorCode::InvalidValue, "scheme");
  }
  RunManifest manifest("evolve-hf", read_file(c.config));
  const Problem p = manifest.timed("setup", [&] { return build_problem(cfg, false); });
  const HFState start = f.initial == "nigs-ground" ? initial_hf_state(p) : read_initial_state(f.initial, p);
  const HFTrajectory traj = manifest.timed("integrate", [&] {
    return integrate_hf(start, cfg.dt, cfg.t_final, cfg.integrator, p.model, cfg.sample_every);
  });

  std::vector<std::vector<double>> rows;
  std::vector<std::vector<double>> snaps;
  double e_drift = 0.0, a_dev = 0.0, orth = 0.0;
  for (const HFSample& s : traj.samples) {
    rows.push_back({s.state.t, s.state.a.real(), s.state.a.imag(), s.energy, s.norm, s.orth_drift});
    e_drift = std::max(e_drift, std::abs(s.energy - traj.samples.front().energy));
    a_dev = std::max(a_dev, std::abs(std::abs(s.state.a) - 1.0));
    orth = std::max(orth, s.orth_drift);
    if (f.snapshots)
      for (int l = 0; l < s.state.N(); ++l)
        for (int k = 0; k < s.state.K(); ++k)
          snaps.push_back({s.state.t, double(l), double(k), s.state.orbitals(k, l).real(), s.state.orbitals(k, l).imag()});
  }
  write_csv(out_path(c, "hf_timeseries.csv"), {"t", "re_a", "im_a", "energy", "norm", "orth_drift"}, rows);
  manifest.add_output(out_path(c, "hf_timeseries.csv"));
  if (f.snapshots) {
    write_csv(out_path(c, "hf_snapshots.csv"), {"t", "orbital", "index", "re", "im"}, snaps);
    manifest.add_output(out_path(c, "hf_snapshots.csv"));
  }
  manifest.add_validation("phase_modulus", a_dev <= 1e-8);
  manifest.add_validation("energy_drift", e_drift <= 1e-6);
  manifest.add_validation("orthonormality", orth <= 1e-6);
  return finish(c, manifest);
}

int run_compare(const Common& c) {
  prepare(c);
  const SimulationConfig cfg = load_config(c.config);
  RunManifest manifest("compare", read_file(c.config));
  const Problem p = manifest.timed("setup", [&] { return build_problem(cfg); });
  const ComparisonResult res = manifest.timed("compare", [&] { return run_comparison(p); });
  write_timeseries(res.records, out_path(c, "comparison.csv"));
  write_json(out_path(c, "comparison_summary.json"), to_json(res.summary));
  manifest.add_output(out_path(c, "comparison.csv"));
  manifest.add_output(out_path(c, "comparison_summary.json"));
  manifest.add_validation("apriori_bound", res.summary.apriori_violations == 0);
  manifest.add_validation("aposteriori_bound", res.summary.defect_violations == 0);
  manifest.add_validation("bound_hierarchy", res.summary.hierarchy_violations == 0);
  return finish(c, manifest);
}

int run_validate(const Common& c) {
  const SimulationConfig cfg = load_config(c.config);
  VectorXd energies(cfg.K());
  for (int k = 0; k < cfg.K(); ++k) energies(k) = landau_level(k / cfg.domain.M, cfg.constants);
  const GroundState gs = noninteracting_ground_state(FillingSpec(cfg.N, cfg.domain.M), energies);
  const Grid grid = cfg.grid();
  const double asym = cfg.potential.symmetry_defect(grid);
  if (asym > 1e-12 * std::max(1.0, cfg.potential.sup_norm(grid))) raise(ErrorCode::SymmetryViolation, "potential");
  const Json out{{"valid", true}, {"K", cfg.K()}, {"N", cfg.N}, {"b", cfg.constants.b()}, {"B", cfg.constants.field()},
                 {"potential", std::string(cfg.potential.kind_name())}, {"ground_energy", gs.energy}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-level Hartree-Fock simulator"};
  app.require_subcommand(1);
  Common common;
  HfFlags hf;

  auto add_common = [&](CLI::App* sub, bool outputs) {
    sub->add_option("--config", common.config, "Configuration file")->required()->check(CLI::ExistingFile);
    if (outputs) sub->add_option("--out-dir", common.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--threads", common.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  };
  auto* basis = app.add_subcommand("basis", "Build and validate the Landau basis");
  auto* ground = app.add_subcommand("groundstate", "Non-interacting ground state");
  auto* exact = app.add_subcommand("evolve-exact", "Exact N-body dynamics");
  auto* evolve = app.add_subcommand("evolve-hf", "Hartree-Fock dynamics");
  auto* compare = app.add_subcommand("compare", "Exact vs Hartree-Fock comparison");
  auto* validate = app.add_subcommand("validate", "Check a configuration");
  for (auto* s : {basis, ground, exact, evolve, compare}) add_common(s, true);
  add_common(validate, false);
  evolve->add_option("--dt", hf.dt, "Time step");
  evolve->add_option("--t-final", hf.t_final, "Horizon");
  evolve->add_option("--scheme", hf.scheme, "rk4 or rk4+reorth");
  evolve->add_option("--initial", hf.initial, "nigs-ground or a JSON state file")->capture_default_str();
  evolve->add_flag("--snapshots", hf.snapshots, "Write orbital coefficients at every sample");

  if (argc < 2) {
    std::cerr << app.help();
    return 2;
  }
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
    if (*basis) return run_basis(common);
    if (*ground) return run_groundstate(common);
    if (*exact) return run_evolve_exact(common);
    if (*evolve) return run_evolve_hf(common, hf);
    if (*compare) return run_compare(common);
    if (*validate) return run_validate(common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
