// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/hamiltonian.hpp"

#include <string>

#include "qforce/error.hpp"

namespace qforce {

void MolecularHamiltonian::validate() const {
  if (h1.rows() != h1.cols()) throw Error(ErrorCode::kInvalidArgument, "h1 is not square");
  if (g2.dim() != n_orb()) throw Error(ErrorCode::kInvalidArgument, "g2 dimension does not match h1");
  if (n_elec < 0 || static_cast<std::size_t>(n_elec) > 2 * n_orb()) {
    throw Error(ErrorCode::kInvalidArgument, "electron count " + std::to_string(n_elec) + " does not fit in " +
                                                 std::to_string(n_orb()) + " orbitals");
  }
}

MolecularHamiltonian build_full(const MOIntegrals& mo, double e_nuc, int n_electrons) {
  MolecularHamiltonian h{e_nuc, mo.h1, mo.g2, n_electrons};
  h.validate();
  return h;
}

MolecularHamiltonian select_active_space(const MolecularHamiltonian& full, const ScfResult& scf,
                                         const ActiveSpaceSpec& spec) {
  full.validate();
  const int n_total = full.n_elec;
  const int n_act_e = spec.n_active_electrons;
  const int n_act_o = spec.n_active_orbitals;
  const auto n_mo = static_cast<int>(full.n_orb());
  if (n_act_e < 0 || n_act_e > n_total || (n_total - n_act_e) % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "active space (" + std::to_string(n_act_e) + "e, " +
                                                 std::to_string(n_act_o) + "o) is infeasible: " +
                                                 std::to_string(n_total) + " electrons cannot be split");
  }
  const int n_frozen = (n_total - n_act_e) / 2;
  if (n_act_o < (n_act_e + 1) / 2 || n_act_o < 1 || n_frozen + n_act_o > n_mo) {
    throw Error(ErrorCode::kInvalidArgument, "active space (" + std::to_string(n_act_e) + "e, " +
                                                 std::to_string(n_act_o) + "o) does not fit " +
                                                 std::to_string(n_mo) + " orbitals with " +
                                                 std::to_string(n_frozen) + " frozen");
  }
  if (scf.orbital_energies.size() != n_mo) {
    throw Error(ErrorCode::kInvalidArgument, "SCF result does not match the Hamiltonian's orbital count");
  }
  for (int i = 1; i < n_mo; ++i) {
    if (scf.orbital_energies(i) < scf.orbital_energies(i - 1)) {
      throw Error(ErrorCode::kInvalidArgument, "SCF orbital energies are not ascending");
    }
  }

  const auto& h = full.h1;
  const auto& g = full.g2;
  MolecularHamiltonian out;
  out.n_elec = n_act_e;
  out.e_core = full.e_core;
  for (int i = 0; i < n_frozen; ++i) {
    out.e_core += 2.0 * h(i, i);
    for (int j = 0; j < n_frozen; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      out.e_core += 2.0 * g(ui, ui, uj, uj) - g(ui, uj, uj, ui);
    }
  }
  out.h1.resize(n_act_o, n_act_o);
  for (int p = 0; p < n_act_o; ++p) {
    for (int q = 0; q < n_act_o; ++q) {
      const auto up = static_cast<std::size_t>(p + n_frozen);
      const auto uq = static_cast<std::size_t>(q + n_frozen);
      double v = h(p + n_frozen, q + n_frozen);
      for (int i = 0; i < n_frozen; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        v += 2.0 * g(up, uq, ui, ui) - g(up, ui, ui, uq);
      }
      out.h1(p, q) = v;
    }
  }
  out.g2 = EriTensor(static_cast<std::size_t>(n_act_o));
  for (std::size_t p = 0; p < static_cast<std::size_t>(n_act_o); ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r <= p; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          const auto f = static_cast<std::size_t>(n_frozen);
          out.g2.set(p, q, r, s, g(p + f, q + f, r + f, s + f));
        }
  return out;
}

}  // namespace qforce
