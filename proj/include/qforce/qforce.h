/* Copyright 2026 The qforce Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the qforce engine. All handles are opaque. Every function
 * that can fail returns a qf_status; on failure qf_last_error() gives a
 * one-line message for the calling thread. Lengths are Angstrom, energies
 * Hartree, forces Hartree/Angstrom.
 */
#ifndef QFORCE_QFORCE_H_
#define QFORCE_QFORCE_H_

#include <stddef.h>

#if defined(QFORCE_BUILDING_LIBRARY)
#define QF_API __attribute__((visibility("default")))
#else
#define QF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qf_status {
  QF_OK = 0,
  QF_ERR_INVALID_ARGUMENT = 1,
  QF_ERR_PARSE = 2,
  QF_ERR_IO = 3,
  QF_ERR_CONFIG = 4,
  QF_ERR_UNSUPPORTED = 5,
  QF_ERR_CONVERGENCE = 6,
  QF_ERR_NOT_INITIALIZED = 7,
  QF_ERR_INTERNAL = 99
} qf_status;

typedef struct qf_geometry qf_geometry;
typedef struct qf_engine qf_engine;
typedef struct qf_trajectory qf_trajectory;

typedef struct qf_metadata {
  char basis[32];
  char mapping[32];
  char ansatz[32];
  char optimizer[32];
  int two_qubit_reduction;
  size_t n_qubits;
  size_t n_params;
  size_t n_pauli_terms;
  double hf_energy;
  int vqe_evals;
  int vqe_converged;
  double wall_seconds;
} qf_metadata;

typedef struct qf_spectrum_info {
  size_t n_qubits;
  size_t n_pauli_terms;
  size_t sector_dim;
  double hf_energy;
} qf_spectrum_info;

QF_API const char* qf_version(void);
QF_API const char* qf_last_error(void);
QF_API const char* qf_status_name(qf_status status);

/* Frees strings returned through char** out-parameters. */
QF_API void qf_string_free(char* s);

/* Geometry */
QF_API qf_status qf_geometry_from_xyz_file(const char* path, qf_geometry** out);
QF_API qf_status qf_geometry_from_xyz_text(const char* text, qf_geometry** out);
/* symbols: n strings; positions: 3n values x0 y0 z0 x1 ... */
QF_API qf_status qf_geometry_create(size_t n_atoms, const char* const* symbols, const double* positions,
                                    qf_geometry** out);
QF_API void qf_geometry_destroy(qf_geometry* g);
QF_API size_t qf_geometry_size(const qf_geometry* g);
QF_API qf_status qf_geometry_positions(const qf_geometry* g, double* positions);
QF_API qf_status qf_geometry_symbol(const qf_geometry* g, size_t index, const char** symbol);

/* Engine. config_json may be NULL or empty for defaults. */
QF_API qf_status qf_engine_create(const char* config_json, qf_engine** out);
QF_API qf_status qf_engine_create_from_file(const char* config_path, qf_engine** out);
QF_API void qf_engine_destroy(qf_engine* e);
/* Normalized configuration as JSON; free with qf_string_free. */
QF_API qf_status qf_engine_config_json(const qf_engine* e, char** out_json);

/* metadata may be NULL. */
QF_API qf_status qf_engine_energy(qf_engine* e, const qf_geometry* g, double* energy, qf_metadata* metadata);
/* forces: 3 * n_atoms values, row-major by atom. */
QF_API qf_status qf_engine_forces(qf_engine* e, const qf_geometry* g, double* energy, double* forces,
                                  qf_metadata* metadata);
/* Writes up to `count` lowest sector eigenvalues; *n_written gets the number stored. info may be NULL. */
QF_API qf_status qf_engine_spectrum(qf_engine* e, const qf_geometry* g, size_t count, double* eigenvalues,
                                    size_t* n_written, qf_spectrum_info* info);

/* Geometry optimization */
QF_API qf_status qf_engine_optimize(qf_engine* e, const qf_geometry* g0, qf_trajectory** out);
QF_API void qf_trajectory_destroy(qf_trajectory* t);
QF_API size_t qf_trajectory_size(const qf_trajectory* t);
QF_API int qf_trajectory_converged(const qf_trajectory* t);
/* positions may be NULL; otherwise 3 * n_atoms values. */
QF_API qf_status qf_trajectory_step(const qf_trajectory* t, size_t index, double* energy, double* fmax,
                                    double* fnorm, double* positions);
QF_API qf_status qf_trajectory_final_geometry(const qf_trajectory* t, qf_geometry** out);
/* Multi-frame XYZ and tab-separated table; free with qf_string_free. */
QF_API qf_status qf_trajectory_xyz(const qf_trajectory* t, char** out_text);
QF_API qf_status qf_trajectory_table(const qf_trajectory* t, char** out_text);

/* Serve protocol on standard input and output until shutdown or EOF. */
QF_API int qf_serve_stdio(void);

#ifdef __cplusplus
}
#endif

#endif /* QFORCE_QFORCE_H_ */
