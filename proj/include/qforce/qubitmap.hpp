// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qforce/hamiltonian.hpp"
#include "qforce/pauli.hpp"

namespace qforce {

enum class MappingKind { kJordanWigner, kParity, kBravyiKitaev };

std::string_view to_string(MappingKind kind);
/// Accepts jordan_wigner/jw, parity, bravyi_kitaev/bk (case-insensitive).
MappingKind parse_mapping(std::string_view name);

struct LadderOp {
  std::size_t mode;
  bool creation;
};

/// Fermion-to-qubit encoding of a closed sector on 2*n_orb spin orbitals in
/// blocked order: alpha orbitals 0..n_orb-1, then beta orbitals.
///
/// Every encoding is a GF(2)-linear map q = M f from occupation bits to qubit
/// bits. From M follow the update set (column j of M: qubits flipped when
/// mode j changes occupation), the parity set (qubits whose parity equals the
/// occupation parity of modes < j) and the occupation set (qubits whose
/// parity is f_j). Then
///   a^dag_j = 1/2 X_U Z_P (1 + Z_O),   a_j = 1/2 X_U Z_P (1 - Z_O).
/// With the parity encoding and two-qubit reduction, qubits n_orb-1 and
/// 2*n_orb-1 carry N_alpha and N_alpha + N_beta parities and are replaced by
/// their eigenvalues in the (n_alpha, n_beta) sector.
class FermionQubitMapper {
 public:
  FermionQubitMapper(std::size_t n_orb, MappingKind kind, bool two_qubit_reduction, int n_alpha, int n_beta);

  MappingKind kind() const { return kind_; }
  bool reduced() const { return reduce_; }
  std::size_t n_orbitals() const { return n_orb_; }
  std::size_t n_modes() const { return 2 * n_orb_; }
  std::size_t n_qubits() const { return reduce_ ? 2 * n_orb_ - 2 : 2 * n_orb_; }
  int n_alpha() const { return n_alpha_; }
  int n_beta() const { return n_beta_; }

  std::uint64_t update_set(std::size_t j) const;
  std::uint64_t parity_set(std::size_t j) const;
  std::uint64_t occupation_set(std::size_t j) const;

  /// Image of a single ladder operator on the full (unreduced) register.
  const QubitOperator& ladder(std::size_t mode, bool creation) const;

  /// Product of ladder operators, leftmost first, on the full register.
  QubitOperator map_product(std::span<const LadderOp> ops) const;

  /// Sector substitution for the reduced parity register; identity otherwise.
  QubitOperator reduce(const QubitOperator& full) const;

  /// Qubit computational basis state for occupation bits (bit k = mode k).
  std::uint64_t encode_occupation(std::uint64_t occupation) const;

  /// Hartree-Fock occupation in blocked order for this sector.
  std::uint64_t reference_occupation() const;

  /// T - T^dag for T = a^dag_{creators...} a_{annihilators...} (annihilators
  /// listed in the order they appear left to right), simplified and reduced.
  QubitOperator excitation_generator(std::span<const std::size_t> creators,
                                     std::span<const std::size_t> annihilators) const;

  /// Full molecular Hamiltonian, including e_core on the identity term.
  QubitOperator map(const MolecularHamiltonian& h) const;

 private:
  std::size_t n_orb_;
  MappingKind kind_;
  bool reduce_;
  int n_alpha_, n_beta_;
  std::vector<std::uint64_t> rows_;      // encoding matrix M
  std::vector<std::uint64_t> inv_rows_;  // M^{-1}
  std::vector<QubitOperator> creators_, annihilators_;
};

/// Closed-shell mapping of h (n_alpha = n_beta = n_elec / 2).
QubitOperator map(const MolecularHamiltonian& h, MappingKind kind, bool two_qubit_reduction);

}  // namespace qforce
