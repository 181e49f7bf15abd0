// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <string>

#include "qforce/integrals.hpp"
#include "qforce/meanfield.hpp"

namespace qforce {

/// Spatial-orbital electronic Hamiltonian
///   H = e_core + sum_pq h1_pq E_pq + 1/2 sum_pqrs (pq|rs) (E_pq E_rs - delta_qr E_ps)
/// for a closed-shell sector with n_elec electrons in n_orb orbitals.
struct MolecularHamiltonian {
  double e_core = 0.0;
  Eigen::MatrixXd h1;
  EriTensor g2;
  int n_elec = 0;

  std::size_t n_orb() const { return static_cast<std::size_t>(h1.rows()); }

  /// Throws kInvalidArgument when h1/g2 shapes disagree or n_elec is out of range.
  void validate() const;
};

struct ActiveSpaceSpec {
  int n_active_electrons = 0;
  int n_active_orbitals = 0;
};

MolecularHamiltonian build_full(const MOIntegrals& mo, double e_nuc, int n_electrons);

/// Freeze the lowest (N - n_active_electrons)/2 orbitals into e_core and the
/// one-electron operator, keep the next n_active_orbitals and drop the rest.
/// Orbitals are taken in the energy order of `scf`.
MolecularHamiltonian select_active_space(const MolecularHamiltonian& full, const ScfResult& scf,
                                         const ActiveSpaceSpec& spec);

/// FCIDUMP with NORB, NELEC, MS2=0 and ORBSYM all 1. Two-electron entries
/// are written once per permutation class, then h_pq (p >= q), then e_core.
std::string format_fcidump(const MolecularHamiltonian& h);
MolecularHamiltonian parse_fcidump(const std::string& text);
void write_fcidump(const MolecularHamiltonian& h, const std::string& path);
MolecularHamiltonian read_fcidump(const std::string& path);

}  // namespace qforce
