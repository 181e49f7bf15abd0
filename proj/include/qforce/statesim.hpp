// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qforce/pauli.hpp"

namespace qforce {

/// Dense state on n qubits, little-endian: qubit 0 is the least significant
/// bit of the amplitude index.
class Statevector {
 public:
  Statevector() = default;
  explicit Statevector(std::size_t n_qubits);  // |0...0>

  static Statevector basis_state(std::size_t n_qubits, std::uint64_t index);
  static Statevector from_amplitudes(std::vector<Complex> amps);

  std::size_t n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex>& amplitudes() { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> amps_;
};

/// |<a|b>|^2
double fidelity(const Statevector& a, const Statevector& b);

enum class GateKind { kX, kRY, kRZ, kCNOT, kPauliRot };

/// Rotation angle of a parameterized gate is scale * params[param]; gates with
/// param < 0 use the fixed `angle`. RY(t) = exp(-i t/2 Y), RZ(t) = exp(-i t/2 Z)
/// and PauliRot(t, P) = exp(-i t/2 P).
struct Gate {
  GateKind kind = GateKind::kX;
  std::size_t q0 = 0;  // target, or control for CNOT
  std::size_t q1 = 0;  // CNOT target
  PauliString pauli;
  int param = -1;
  double scale = 1.0;
  double angle = 0.0;

  bool parameterized() const { return param >= 0; }
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits) : n_(n_qubits) {}

  std::size_t n_qubits() const { return n_; }
  std::size_t n_params() const { return n_params_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Reserves a new parameter slot and returns its index.
  int add_parameter();

  void x(std::size_t q);
  void cnot(std::size_t control, std::size_t target);
  void ry(std::size_t q, int param, double scale = 1.0);
  void rz(std::size_t q, int param, double scale = 1.0);
  void pauli_rot(const PauliString& p, int param, double scale = 1.0);
  void ry_fixed(std::size_t q, double angle);
  void rz_fixed(std::size_t q, double angle);
  void pauli_rot_fixed(const PauliString& p, double angle);

  /// Angle of every gate for the given parameters (0 for X and CNOT).
  std::vector<double> gate_angles(std::span<const double> params) const;

  std::string to_text() const;

 private:
  void check_qubit(std::size_t q) const;
  void check_param(int param) const;

  std::size_t n_ = 0;
  std::size_t n_params_ = 0;
  std::vector<Gate> gates_;
};

/// Applies one gate in place with an explicit angle.
void apply_gate(const Gate& g, double angle, Statevector& s);

Statevector apply(const Circuit& c, std::span<const double> params, const Statevector& s);
/// Like apply, with per-gate angles as returned by Circuit::gate_angles.
Statevector apply_with_angles(const Circuit& c, std::span<const double> angles, const Statevector& s);

/// P|psi> for a single Pauli string.
Statevector apply_pauli(const PauliString& p, const Statevector& s);
/// H|psi> for a general operator.
std::vector<Complex> apply_operator(const QubitOperator& h, std::span<const Complex> psi);

/// <psi|H|psi>, term by term. Throws kInvalidArgument when the imaginary
/// residue reaches 1e-9.
double expectation(const Statevector& s, const QubitOperator& h);

/// Dense matrix of H in the computational basis (n <= 14).
Eigen::MatrixXcd to_dense(const QubitOperator& h);

/// Smallest eigenvalue of H on the whole register. Dense diagonalization up
/// to 10 qubits, Lanczos with full reorthogonalization up to 14, error beyond.
double exact_lowest_eigenvalue(const QubitOperator& h);

/// Lowest `count` eigenvalues of H restricted to the span of the given
/// computational basis states. Throws when H couples the subspace to the rest.
std::vector<double> subspace_eigenvalues(const QubitOperator& h, std::span<const std::uint64_t> basis,
                                         std::size_t count);

}  // namespace qforce
