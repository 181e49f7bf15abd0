// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <string>

#include "qforce/basis.hpp"
#include "qforce/chemcore.hpp"
#include "qforce/hamiltonian.hpp"
#include "qforce/integrals.hpp"
#include "qforce/meanfield.hpp"

namespace qforce::testing {

inline ScfOptions tight_scf() {
  ScfOptions o;
  o.density_tol = 1e-10;
  o.energy_tol = 1e-12;
  return o;
}

struct Prepared {
  IntegralSet ints;
  ScfResult scf;
  MolecularHamiltonian full;
};

inline Prepared prepare(const Geometry& g, const std::string& basis) {
  const BasisSet b = build_basis(basis, g);
  IntegralSet ints = compute_integrals(b, g);
  const int n_elec = g.total_nuclear_charge();
  ScfResult scf = run_rhf(ints, n_elec, tight_scf());
  MolecularHamiltonian full = build_full(transform_to_mo(ints, scf.coefficients), ints.nuclear_repulsion, n_elec);
  return {std::move(ints), std::move(scf), std::move(full)};
}

// Real symmetric h1 and 8-fold symmetric (pq|rs) with entries in [-1, 1].
inline MolecularHamiltonian random_hamiltonian(std::size_t n_orb, int n_elec, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MolecularHamiltonian h;
  h.n_elec = n_elec;
  h.e_core = u(rng);
  h.h1 = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_orb), static_cast<Eigen::Index>(n_orb));
  for (Eigen::Index p = 0; p < h.h1.rows(); ++p)
    for (Eigen::Index q = 0; q <= p; ++q) h.h1(p, q) = h.h1(q, p) = u(rng);
  h.g2 = EriTensor(n_orb);
  for (auto& v : h.g2.data()) v = 0.5 * u(rng);
  return h;
}

inline std::string data_path(const std::string& name) { return std::string(QFORCE_TEST_DATA) + "/" + name; }

}  // namespace qforce::testing
