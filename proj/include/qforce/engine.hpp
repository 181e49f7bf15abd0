// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qforce/chemcore.hpp"
#include "qforce/config.hpp"
#include "qforce/hamiltonian.hpp"
#include "qforce/qubitmap.hpp"
#include "qforce/vqe.hpp"

namespace qforce {

struct CalcMetadata {
  std::string basis;
  std::string mapping;
  bool two_qubit_reduction = false;
  std::string ansatz;
  std::string optimizer;
  std::size_t n_qubits = 0;
  std::size_t n_params = 0;
  std::size_t n_pauli_terms = 0;
  double hf_energy = 0.0;  // RHF total energy, Hartree
  int vqe_evals = 0;  // summed over every VQE run of the call
  bool vqe_converged = true;  // false if any VQE run hit its budget
  double wall_seconds = 0.0;
};

struct CalcResult {
  double energy = 0.0;  // Hartree
  std::optional<Eigen::MatrixXd> forces;  // N x 3, Hartree/Angstrom
  CalcMetadata metadata;
};

/// Everything between a geometry and the VQE: RHF, the (active-space)
/// spatial Hamiltonian, the mapper for its closed-shell sector and the qubit
/// Hamiltonian (e_core on the identity term).
struct QubitProblem {
  ScfResult scf;
  MolecularHamiltonian hamiltonian;
  FermionQubitMapper mapper;
  QubitOperator qubit_hamiltonian;
};

QubitProblem build_problem(const Geometry& g, const EngineConfig& cfg);

/// Computational basis states of the (n_alpha, n_beta) sector under the
/// mapper's encoding.
std::vector<std::uint64_t> sector_basis(const FermionQubitMapper& mapper);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // lowest first, Hartree
  std::size_t n_qubits = 0;
  std::size_t n_pauli_terms = 0;
  std::size_t sector_dim = 0;
  double hf_energy = 0.0;
};

/// Stateful calculator. Keeps the last converged VQE parameters for warm
/// starts and caches energies by geometry, so repeated geometries are not
/// recomputed. Not safe for concurrent use.
class Engine {
 public:
  explicit Engine(EngineConfig cfg);

  const EngineConfig& config() const { return cfg_; }

  CalcResult compute_energy(const Geometry& g);

  /// F = -dE/dx by central differences with step cfg.fd_step. With warm
  /// starts on, every displaced VQE begins at the center's parameters.
  CalcResult compute_forces(const Geometry& g);

  /// Lowest `count` eigenvalues of the qubit Hamiltonian in the electron
  /// sector of the molecule.
  SpectrumReport spectrum(const Geometry& g, std::size_t count = 4);

  /// Drops warm-start parameters and the energy cache.
  void reset();

 private:
  struct Evaluation {
    Geometry geometry;
    double energy;
    std::vector<double> params;
    CalcMetadata metadata;
  };

  const Evaluation& evaluate(const Geometry& g, const std::vector<double>* start);

  EngineConfig cfg_;
  std::vector<double> last_params_;
  std::unordered_multimap<std::size_t, Evaluation> cache_;
};

CalcResult compute_energy(const Geometry& g, const EngineConfig& cfg);
CalcResult compute_forces(const Geometry& g, const EngineConfig& cfg);

/// max over atoms of |F_a| and the Euclidean norm of the whole force matrix.
double max_atom_force(const Eigen::MatrixXd& forces);
double force_norm(const Eigen::MatrixXd& forces);

}  // namespace qforce
