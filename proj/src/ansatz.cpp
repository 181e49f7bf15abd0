// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/ansatz.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "qforce/error.hpp"

namespace qforce {

namespace {

void add_reference_gates(Circuit& c, const FermionQubitMapper& mapper) {
  const std::uint64_t bits = mapper.encode_occupation(mapper.reference_occupation());
  for (std::size_t q = 0; q < mapper.n_qubits(); ++q) {
    if ((bits >> q) & 1U) c.x(q);
  }
}

void add_pair_doubles(std::vector<Excitation>& out, std::size_t offset, std::size_t n_orb, int n_occ) {
  const auto occ = static_cast<std::size_t>(n_occ);
  for (std::size_t i = 0; i < occ; ++i)
    for (std::size_t j = i + 1; j < occ; ++j)
      for (std::size_t a = occ; a < n_orb; ++a)
        for (std::size_t b = a + 1; b < n_orb; ++b)
          out.push_back({{a + offset, b + offset}, {j + offset, i + offset}});
}

}  // namespace

std::string_view to_string(AnsatzKind kind) {
  return kind == AnsatzKind::kUccsd ? "uccsd" : "hardware_efficient";
}

AnsatzKind parse_ansatz(std::string_view name) {
  std::string s(name);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "uccsd") return AnsatzKind::kUccsd;
  if (s == "hardware_efficient" || s == "hea") return AnsatzKind::kHardwareEfficient;
  throw Error(ErrorCode::kConfig, "unknown ansatz '" + std::string(name) + "'");
}

std::vector<Excitation> uccsd_excitations(std::size_t n_orb, int n_alpha, int n_beta) {
  const auto na = static_cast<std::size_t>(n_alpha);
  const auto nb = static_cast<std::size_t>(n_beta);
  std::vector<Excitation> out;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t a = na; a < n_orb; ++a) out.push_back({{a}, {i}});
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t a = nb; a < n_orb; ++a) out.push_back({{a + n_orb}, {i + n_orb}});
  add_pair_doubles(out, 0, n_orb, n_alpha);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t a = na; a < n_orb; ++a)
        for (std::size_t b = nb; b < n_orb; ++b) out.push_back({{a, b + n_orb}, {j + n_orb, i}});
  add_pair_doubles(out, n_orb, n_orb, n_beta);
  return out;
}

Statevector prepare_reference(const FermionQubitMapper& mapper) {
  return Statevector::basis_state(mapper.n_qubits(), mapper.encode_occupation(mapper.reference_occupation()));
}

Circuit build_ansatz(const AnsatzSpec& spec, const FermionQubitMapper& mapper) {
  const std::size_t n = mapper.n_qubits();
  Circuit c(n);
  add_reference_gates(c, mapper);
  if (spec.kind == AnsatzKind::kHardwareEfficient) {
    if (spec.layers < 1) throw Error(ErrorCode::kConfig, "ansatz_layers must be at least 1");
    for (int layer = 0; layer <= spec.layers; ++layer) {
      for (std::size_t q = 0; q < n; ++q) c.ry(q, c.add_parameter());
      if (layer == spec.layers) break;
      for (std::size_t q = 0; q + 1 < n; ++q) c.cnot(q, q + 1);
    }
    return c;
  }
  const auto excitations = uccsd_excitations(mapper.n_orbitals(), mapper.n_alpha(), mapper.n_beta());
  for (const auto& ex : excitations) {
    // G = T - T^dag maps to sum_k i r_k P_k; exp(t G) = prod_k exp(-i (-2 r_k t)/2 P_k).
    const QubitOperator g = mapper.excitation_generator(ex.create, ex.annihilate);
    if (g.size() == 0) continue;
    const int slot = c.add_parameter();
    for (const auto& [p, coeff] : g.terms()) {
      if (std::abs(coeff.real()) > 1e-12) {
        throw Error(ErrorCode::kInternal, "excitation generator is not anti-Hermitian");
      }
      c.pauli_rot(p, slot, -2.0 * coeff.imag());
    }
  }
  return c;
}

}  // namespace qforce
