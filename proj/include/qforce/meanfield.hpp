// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstddef>

#include "qforce/integrals.hpp"

namespace qforce {

struct ScfOptions {
  int max_iter = 200;
  double density_tol = 1e-8;  // RMS change of the density matrix
  double energy_tol = 1e-10;  // |delta E| between iterations, Hartree
  int diis_depth = 8;
  double damping = 0.5;  // used when the DIIS system is singular
};

struct ScfResult {
  double e_total = 0.0;  // electronic + nuclear, Hartree
  Eigen::MatrixXd coefficients;  // AO x MO, columns ordered by orbital energy
  Eigen::VectorXd orbital_energies;
  Eigen::MatrixXd density;  // closed-shell density P = 2 C_occ C_occ^T
  Eigen::MatrixXd fock;
  int n_iter = 0;
  bool converged = false;
};

/// Closed-shell restricted Hartree-Fock from the core-Hamiltonian guess.
/// MO phases are fixed so that the largest-magnitude AO coefficient of each
/// orbital is positive, which keeps orbitals continuous between nearby
/// geometries. Throws kConvergence (message carries the last energy and
/// residual) when max_iter is exhausted.
ScfResult run_rhf(const IntegralSet& ints, int n_electrons, const ScfOptions& options = {});

struct MOIntegrals {
  Eigen::MatrixXd h1;
  EriTensor g2;

  std::size_t n_mo() const { return static_cast<std::size_t>(h1.rows()); }
};

/// h1 = C^T (T + V) C and (pq|rs) by four quarter transformations.
MOIntegrals transform_to_mo(const IntegralSet& ints, const Eigen::MatrixXd& c);

}  // namespace qforce
