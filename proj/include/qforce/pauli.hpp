// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace qforce {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 64;
inline constexpr double kPruneThreshold = 1e-12;

/// Tensor product of single-qubit Paulis on n qubits, stored as X and Z bit
/// masks (Y sets both). As an operator the string equals i^{#Y} X^x Z^z.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);
  PauliString(std::size_t n_qubits, std::uint64_t x, std::uint64_t z);

  /// "X0 Z1 Y3" style label; "I" is the identity.
  static PauliString from_label(std::size_t n_qubits, std::string_view label);

  std::size_t n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  char letter(std::size_t q) const;
  void set(std::size_t q, char letter);

  bool is_identity() const { return (x_ | z_) == 0; }
  int weight() const;
  int y_count() const;

  std::string label() const;

  bool commutes_with(const PauliString& other) const;

  friend bool operator==(const PauliString& a, const PauliString& b) = default;
  friend bool operator<(const PauliString& a, const PauliString& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.z_ < b.z_;
  }

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// a * b = phase * result, phase in {1, i, -1, -i}.
std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b);

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.x_mask() * 0x9e3779b97f4a7c15ULL ^ p.z_mask()) ^ p.n_qubits();
  }
};

/// Weighted sum of Pauli strings on a fixed number of qubits.
class QubitOperator {
 public:
  using TermMap = std::map<PauliString, Complex>;

  QubitOperator() = default;
  explicit QubitOperator(std::size_t n_qubits) : n_(n_qubits) {}
  QubitOperator(const PauliString& p, Complex coeff);

  static QubitOperator identity(std::size_t n_qubits, Complex coeff = 1.0);

  std::size_t n_qubits() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Accumulates coeff onto an existing term; no pruning.
  void add_term(const PauliString& p, Complex coeff);
  Complex coefficient(const PauliString& p) const;

  QubitOperator& operator+=(const QubitOperator& other);
  QubitOperator& operator*=(Complex c);

  /// Drops terms with |coeff| < tol.
  QubitOperator simplified(double tol = kPruneThreshold) const;

  /// Hermitian conjugate (conjugates coefficients; Pauli strings are Hermitian).
  QubitOperator adjoint() const;

  double max_imag() const;

  /// One "coeff label" line per term, preceded by "# qubits N".
  std::string to_text() const;
  static QubitOperator from_text(std::string_view text);

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

QubitOperator operator+(QubitOperator a, const QubitOperator& b);
QubitOperator operator*(QubitOperator a, Complex c);
QubitOperator operator*(const QubitOperator& a, const QubitOperator& b);

inline QubitOperator add(const QubitOperator& a, const QubitOperator& b) { return a + b; }
inline QubitOperator scale(const QubitOperator& a, Complex c) { return a * c; }
inline QubitOperator multiply(const QubitOperator& a, const QubitOperator& b) { return a * b; }
inline QubitOperator simplify(const QubitOperator& a) { return a.simplified(); }

}  // namespace qforce
