// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qforce/qubitmap.hpp"
#include "qforce/statesim.hpp"

namespace qforce {

enum class AnsatzKind { kHardwareEfficient, kUccsd };

std::string_view to_string(AnsatzKind kind);
/// hardware_efficient or uccsd.
AnsatzKind parse_ansatz(std::string_view name);

struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::kUccsd;
  int layers = 2;  // hardware_efficient only
};

/// Fermionic excitation in blocked spin-orbital indices, read left to right
/// as a product of ladder operators: a^dag_{create...} a_{annihilate...}.
struct Excitation {
  std::vector<std::size_t> create;
  std::vector<std::size_t> annihilate;
};

/// Sector-allowed spin-conserving singles and doubles from the reference:
/// singles alpha, singles beta, doubles alpha-alpha, alpha-beta, beta-beta.
std::vector<Excitation> uccsd_excitations(std::size_t n_orb, int n_alpha, int n_beta);

/// Computational basis state holding the encoded reference occupation.
Statevector prepare_reference(const FermionQubitMapper& mapper);

/// Circuit applied to |0...0>. Both kinds start with X gates that prepare the
/// reference.
///   hardware_efficient: for each layer an RY on every qubit followed by a
///     linear CNOT chain, then a final RY layer; n_qubits * (layers + 1)
///     parameters.
///   uccsd: one Trotter step of exp(t_k (T_k - T_k^dag)) over the excitation
///     list, each factor split into commuting Pauli rotations that share t_k.
Circuit build_ansatz(const AnsatzSpec& spec, const FermionQubitMapper& mapper);

}  // namespace qforce
