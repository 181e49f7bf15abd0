// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the C API.
#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "qforce/qforce.h"

namespace {

struct Failure {
  std::string message;
};

void check(qf_status s, const std::string& context) {
  if (s != QF_OK) throw Failure{context + ": " + qf_last_error()};
}

using GeometryPtr = std::unique_ptr<qf_geometry, decltype(&qf_geometry_destroy)>;
using EnginePtr = std::unique_ptr<qf_engine, decltype(&qf_engine_destroy)>;
using TrajectoryPtr = std::unique_ptr<qf_trajectory, decltype(&qf_trajectory_destroy)>;

GeometryPtr load_geometry(const std::string& path) {
  qf_geometry* g = nullptr;
  check(qf_geometry_from_xyz_file(path.c_str(), &g), "geometry");
  return {g, &qf_geometry_destroy};
}

EnginePtr make_engine(const std::string& config_path) {
  qf_engine* e = nullptr;
  if (config_path.empty()) {
    check(qf_engine_create(nullptr, &e), "config");
  } else {
    check(qf_engine_create_from_file(config_path.c_str(), &e), "config");
  }
  return {e, &qf_engine_destroy};
}

void print_metadata(const qf_metadata& m) {
  std::printf("basis %s\n", m.basis);
  std::printf("mapping %s%s\n", m.mapping, m.two_qubit_reduction ? " +two_qubit_reduction" : "");
  std::printf("qubit_order little_endian\n");
  std::printf("ansatz %s\n", m.ansatz);
  std::printf("optimizer %s\n", m.optimizer);
  std::printf("n_qubits %zu\n", m.n_qubits);
  std::printf("n_params %zu\n", m.n_params);
  std::printf("n_pauli_terms %zu\n", m.n_pauli_terms);
  std::printf("hf_energy_hartree %.12f\n", m.hf_energy);
  std::printf("vqe_evals %d\n", m.vqe_evals);
  std::printf("vqe_converged %s\n", m.vqe_converged ? "true" : "false");
  std::printf("wall_seconds %.3f\n", m.wall_seconds);
}

void write_file(const std::filesystem::path& path, const char* text) {
  std::ofstream out(path);
  if (!out) throw Failure{"cannot write '" + path.string() + "'"};
  out << text;
  if (!out) throw Failure{"failed writing '" + path.string() + "'"};
}

int run_energy(const std::string& geometry, const std::string& config) {
  auto g = load_geometry(geometry);
  auto e = make_engine(config);
  double energy = 0.0;
  qf_metadata m;
  check(qf_engine_energy(e.get(), g.get(), &energy, &m), "energy");
  std::printf("energy_hartree %.12f\n", energy);
  print_metadata(m);
  return 0;
}

int run_forces(const std::string& geometry, const std::string& config) {
  auto g = load_geometry(geometry);
  auto e = make_engine(config);
  const std::size_t n = qf_geometry_size(g.get());
  std::vector<double> f(3 * n);
  double energy = 0.0;
  qf_metadata m;
  check(qf_engine_forces(e.get(), g.get(), &energy, f.data(), &m), "forces");
  std::printf("energy_hartree %.12f\n", energy);
  std::printf("forces_hartree_per_angstrom\n");
  for (std::size_t a = 0; a < n; ++a) {
    const char* sym = nullptr;
    check(qf_geometry_symbol(g.get(), a, &sym), "forces");
    std::printf("%-2s %18.12f %18.12f %18.12f\n", sym, f[3 * a], f[3 * a + 1], f[3 * a + 2]);
  }
  print_metadata(m);
  return 0;
}

int run_optimize(const std::string& geometry, const std::string& config, const std::string& output) {
  auto g = load_geometry(geometry);
  auto e = make_engine(config);
  std::error_code ec;
  std::filesystem::create_directories(output, ec);
  if (ec) throw Failure{"cannot create output directory '" + output + "': " + ec.message()};
  qf_trajectory* raw = nullptr;
  check(qf_engine_optimize(e.get(), g.get(), &raw), "optimize");
  TrajectoryPtr t(raw, &qf_trajectory_destroy);
  char* xyz = nullptr;
  char* table = nullptr;
  check(qf_trajectory_xyz(t.get(), &xyz), "optimize");
  std::unique_ptr<char, decltype(&qf_string_free)> xyz_owner(xyz, &qf_string_free);
  check(qf_trajectory_table(t.get(), &table), "optimize");
  std::unique_ptr<char, decltype(&qf_string_free)> table_owner(table, &qf_string_free);
  const std::filesystem::path dir(output);
  write_file(dir / "trajectory.xyz", xyz);
  write_file(dir / "trajectory.tsv", table);
  const std::size_t steps = qf_trajectory_size(t.get());
  double energy = 0.0, fmax = 0.0, fnorm = 0.0;
  check(qf_trajectory_step(t.get(), steps - 1, &energy, &fmax, &fnorm, nullptr), "optimize");
  std::printf("converged %s\n", qf_trajectory_converged(t.get()) ? "true" : "false");
  std::printf("iterations %zu\n", steps - 1);
  std::printf("energy_hartree %.12f\n", energy);
  std::printf("fmax_hartree_per_angstrom %.6e\n", fmax);
  std::printf("trajectory %s\n", (dir / "trajectory.xyz").string().c_str());
  std::printf("table %s\n", (dir / "trajectory.tsv").string().c_str());
  return qf_trajectory_converged(t.get()) ? 0 : 3;
}

int run_spectrum(const std::string& geometry, const std::string& config, std::size_t count) {
  auto g = load_geometry(geometry);
  auto e = make_engine(config);
  std::vector<double> evals(count);
  std::size_t written = 0;
  qf_spectrum_info info;
  check(qf_engine_spectrum(e.get(), g.get(), count, evals.data(), &written, &info), "spectrum");
  std::printf("n_qubits %zu\n", info.n_qubits);
  std::printf("n_pauli_terms %zu\n", info.n_pauli_terms);
  std::printf("sector_dim %zu\n", info.sector_dim);
  std::printf("hf_energy_hartree %.12f\n", info.hf_energy);
  for (std::size_t i = 0; i < written; ++i) std::printf("eigenvalue_%zu %.12f\n", i, evals[i]);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Molecular energies, forces and geometries from VQE on a statevector simulator"};
  app.require_subcommand(1);
  std::string geometry, config, output = ".";
  std::size_t count = 4;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--geometry", geometry, "XYZ file (Angstrom)")->required();
    sub->add_option("--config", config, "JSON configuration file");
  };
  auto* energy = app.add_subcommand("energy", "ground-state energy");
  add_common(energy);
  auto* forces = app.add_subcommand("forces", "energy and central-difference forces");
  add_common(forces);
  auto* optimize = app.add_subcommand("optimize", "BFGS geometry optimization");
  add_common(optimize);
  optimize->add_option("--output", output, "directory for trajectory.xyz and trajectory.tsv");
  auto* spectrum = app.add_subcommand("spectrum", "lowest eigenvalues of the qubit Hamiltonian in the electron sector");
  add_common(spectrum);
  spectrum->add_option("--count", count, "number of eigenvalues")->check(CLI::PositiveNumber);
  auto* serve = app.add_subcommand("serve", "line-delimited JSON protocol on stdin/stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*energy) return run_energy(geometry, config);
    if (*forces) return run_forces(geometry, config);
    if (*optimize) return run_optimize(geometry, config, output);
    if (*spectrum) return run_spectrum(geometry, config, count);
    if (*serve) return qf_serve_stdio();
  } catch (const Failure& f) {
    std::fprintf(stderr, "qforce: %s\n", f.message.c_str());
    return 1;
  }
  return 1;
}
