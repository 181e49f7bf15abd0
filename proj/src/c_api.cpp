// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/qforce.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "qforce/config.hpp"
#include "qforce/engine.hpp"
#include "qforce/error.hpp"
#include "qforce/geomopt.hpp"
#include "qforce/serve.hpp"

struct qf_geometry {
  qforce::Geometry g;
};

struct qf_engine {
  qforce::Engine engine;
};

struct qf_trajectory {
  qforce::OptTrajectory t;
};

namespace {

thread_local std::string g_last_error;

qf_status fail(qf_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
qf_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return QF_OK;
  } catch (const qforce::Error& e) {
    return fail(static_cast<qf_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QF_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_name(char (&dst)[32], const std::string& src) {
  std::strncpy(dst, src.c_str(), sizeof dst - 1);
  dst[sizeof dst - 1] = '\0';
}

void fill_metadata(qf_metadata* out, const qforce::CalcMetadata& m) {
  if (out == nullptr) return;
  std::memset(out, 0, sizeof *out);
  copy_name(out->basis, m.basis);
  copy_name(out->mapping, m.mapping);
  copy_name(out->ansatz, m.ansatz);
  copy_name(out->optimizer, m.optimizer);
  out->two_qubit_reduction = m.two_qubit_reduction ? 1 : 0;
  out->n_qubits = m.n_qubits;
  out->n_params = m.n_params;
  out->n_pauli_terms = m.n_pauli_terms;
  out->hf_energy = m.hf_energy;
  out->vqe_evals = m.vqe_evals;
  out->vqe_converged = m.vqe_converged ? 1 : 0;
  out->wall_seconds = m.wall_seconds;
}

#define QF_REQUIRE(cond, what) \
  if (!(cond)) return fail(QF_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* qf_version(void) { return "0.1.0"; }

const char* qf_last_error(void) { return g_last_error.c_str(); }

const char* qf_status_name(qf_status status) {
  switch (status) {
    case QF_OK: return "ok";
    case QF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QF_ERR_PARSE: return "parse error";
    case QF_ERR_IO: return "I/O error";
    case QF_ERR_CONFIG: return "configuration error";
    case QF_ERR_UNSUPPORTED: return "unsupported";
    case QF_ERR_CONVERGENCE: return "convergence failure";
    case QF_ERR_NOT_INITIALIZED: return "not initialized";
    case QF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void qf_string_free(char* s) { std::free(s); }

qf_status qf_geometry_from_xyz_file(const char* path, qf_geometry** out) {
  QF_REQUIRE(path != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new qf_geometry{qforce::read_xyz_file(path)}; });
}

qf_status qf_geometry_from_xyz_text(const char* text, qf_geometry** out) {
  QF_REQUIRE(text != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new qf_geometry{qforce::parse_xyz(text)}; });
}

qf_status qf_geometry_create(size_t n_atoms, const char* const* symbols, const double* positions, qf_geometry** out) {
  QF_REQUIRE(out != nullptr, "null argument");
  *out = nullptr;
  QF_REQUIRE(n_atoms > 0 && symbols != nullptr && positions != nullptr, "empty or null geometry arrays");
  return guarded([&] {
    std::vector<std::string> sym;
    std::vector<qforce::Vec3> pos;
    for (size_t i = 0; i < n_atoms; ++i) {
      if (symbols[i] == nullptr) throw qforce::Error(qforce::ErrorCode::kInvalidArgument, "null element symbol");
      sym.emplace_back(symbols[i]);
      pos.emplace_back(positions[3 * i], positions[3 * i + 1], positions[3 * i + 2]);
    }
    *out = new qf_geometry{qforce::Geometry::from_symbols(sym, pos)};
  });
}

void qf_geometry_destroy(qf_geometry* g) { delete g; }

size_t qf_geometry_size(const qf_geometry* g) { return g == nullptr ? 0 : g->g.size(); }

qf_status qf_geometry_positions(const qf_geometry* g, double* positions) {
  QF_REQUIRE(g != nullptr && positions != nullptr, "null argument");
  const Eigen::VectorXd c = g->g.coordinates();
  for (Eigen::Index i = 0; i < c.size(); ++i) positions[i] = c[i];
  return QF_OK;
}

qf_status qf_geometry_symbol(const qf_geometry* g, size_t index, const char** symbol) {
  QF_REQUIRE(g != nullptr && symbol != nullptr, "null argument");
  QF_REQUIRE(index < g->g.size(), "atom index out of range");
  *symbol = g->g[index].symbol.c_str();
  return QF_OK;
}

qf_status qf_engine_create(const char* config_json, qf_engine** out) {
  QF_REQUIRE(out != nullptr, "null argument");
  *out = nullptr;
  return guarded([&] {
    const std::string text = (config_json == nullptr || *config_json == '\0') ? "{}" : config_json;
    *out = new qf_engine{qforce::Engine(qforce::parse_config(text))};
  });
}

qf_status qf_engine_create_from_file(const char* config_path, qf_engine** out) {
  QF_REQUIRE(config_path != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new qf_engine{qforce::Engine(qforce::read_config_file(config_path))}; });
}

void qf_engine_destroy(qf_engine* e) { delete e; }

qf_status qf_engine_config_json(const qf_engine* e, char** out_json) {
  QF_REQUIRE(e != nullptr && out_json != nullptr, "null argument");
  *out_json = nullptr;
  return guarded([&] { *out_json = dup_string(qforce::config_to_json(e->engine.config())); });
}

qf_status qf_engine_energy(qf_engine* e, const qf_geometry* g, double* energy, qf_metadata* metadata) {
  QF_REQUIRE(e != nullptr && g != nullptr && energy != nullptr, "null argument");
  return guarded([&] {
    const qforce::CalcResult r = e->engine.compute_energy(g->g);
    *energy = r.energy;
    fill_metadata(metadata, r.metadata);
  });
}

qf_status qf_engine_forces(qf_engine* e, const qf_geometry* g, double* energy, double* forces, qf_metadata* metadata) {
  QF_REQUIRE(e != nullptr && g != nullptr && energy != nullptr && forces != nullptr, "null argument");
  return guarded([&] {
    const qforce::CalcResult r = e->engine.compute_forces(g->g);
    *energy = r.energy;
    for (Eigen::Index a = 0; a < r.forces->rows(); ++a)
      for (Eigen::Index k = 0; k < 3; ++k) forces[3 * a + k] = (*r.forces)(a, k);
    fill_metadata(metadata, r.metadata);
  });
}

qf_status qf_engine_spectrum(qf_engine* e, const qf_geometry* g, size_t count, double* eigenvalues, size_t* n_written,
                             qf_spectrum_info* info) {
  QF_REQUIRE(e != nullptr && g != nullptr && n_written != nullptr, "null argument");
  QF_REQUIRE(count == 0 || eigenvalues != nullptr, "null eigenvalue buffer");
  *n_written = 0;
  return guarded([&] {
    const qforce::SpectrumReport r = e->engine.spectrum(g->g, count);
    for (size_t i = 0; i < r.eigenvalues.size(); ++i) eigenvalues[i] = r.eigenvalues[i];
    *n_written = r.eigenvalues.size();
    if (info != nullptr) {
      info->n_qubits = r.n_qubits;
      info->n_pauli_terms = r.n_pauli_terms;
      info->sector_dim = r.sector_dim;
      info->hf_energy = r.hf_energy;
    }
  });
}

qf_status qf_engine_optimize(qf_engine* e, const qf_geometry* g0, qf_trajectory** out) {
  QF_REQUIRE(e != nullptr && g0 != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new qf_trajectory{qforce::optimize_geometry(e->engine, g0->g)}; });
}

void qf_trajectory_destroy(qf_trajectory* t) { delete t; }

size_t qf_trajectory_size(const qf_trajectory* t) { return t == nullptr ? 0 : t->t.steps.size(); }

int qf_trajectory_converged(const qf_trajectory* t) { return t != nullptr && t->t.converged ? 1 : 0; }

qf_status qf_trajectory_step(const qf_trajectory* t, size_t index, double* energy, double* fmax, double* fnorm,
                             double* positions) {
  QF_REQUIRE(t != nullptr, "null argument");
  QF_REQUIRE(index < t->t.steps.size(), "trajectory index out of range");
  const auto& s = t->t.steps[index];
  if (energy != nullptr) *energy = s.energy;
  if (fmax != nullptr) *fmax = s.fmax;
  if (fnorm != nullptr) *fnorm = s.fnorm;
  if (positions != nullptr) {
    const Eigen::VectorXd c = s.geometry.coordinates();
    for (Eigen::Index i = 0; i < c.size(); ++i) positions[i] = c[i];
  }
  return QF_OK;
}

qf_status qf_trajectory_final_geometry(const qf_trajectory* t, qf_geometry** out) {
  QF_REQUIRE(t != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  QF_REQUIRE(!t->t.steps.empty(), "empty trajectory");
  return guarded([&] { *out = new qf_geometry{t->t.final_step().geometry}; });
}

qf_status qf_trajectory_xyz(const qf_trajectory* t, char** out_text) {
  QF_REQUIRE(t != nullptr && out_text != nullptr, "null argument");
  *out_text = nullptr;
  return guarded([&] { *out_text = dup_string(qforce::format_trajectory_xyz(t->t)); });
}

qf_status qf_trajectory_table(const qf_trajectory* t, char** out_text) {
  QF_REQUIRE(t != nullptr && out_text != nullptr, "null argument");
  *out_text = nullptr;
  return guarded([&] { *out_text = dup_string(qforce::format_trajectory_table(t->t)); });
}

int qf_serve_stdio(void) {
  std::ios::sync_with_stdio(false);
  return qforce::serve(std::cin, std::cout);
}

}  // extern "C"
