// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include <catch_amalgamated.hpp>
#include <random>

#include "qforce/error.hpp"
#include "qforce/pauli.hpp"
#include "qforce/statesim.hpp"

using namespace qforce;

namespace {

// Kronecker product of single-qubit matrices, qubit 0 least significant.
Eigen::MatrixXcd kron_matrix(const PauliString& p) {
  Eigen::Matrix2cd m[4];
  m[0] << 1, 0, 0, 1;
  m[1] << 0, 1, 1, 0;
  m[2] << 0, Complex(0, -1), Complex(0, 1), 0;
  m[3] << 1, 0, 0, -1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t q = 0; q < p.n_qubits(); ++q) {
    const char c = p.letter(q);
    const Eigen::Matrix2cd& f = m[c == 'I' ? 0 : c == 'X' ? 1 : c == 'Y' ? 2 : 3];
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < 2; ++r)
      for (int k = 0; k < 2; ++k) next.block(r * out.rows(), k * out.cols(), out.rows(), out.cols()) = f(r, k) * out;
    out = next;
  }
  return out;
}

PauliString random_pauli(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> u(0, (1ULL << n) - 1);
  return PauliString(n, u(rng), u(rng));
}

}  // namespace

TEST_CASE("Pauli labels") {
  const PauliString p = PauliString::from_label(4, "X0 Y2 Z3");
  CHECK(p.label() == "X0 Y2 Z3");
  CHECK(p.letter(1) == 'I');
  CHECK(p.weight() == 3);
  CHECK(p.y_count() == 1);
  CHECK(PauliString(3).label() == "I");
  CHECK(PauliString::from_label(3, "I").is_identity());
  CHECK_THROWS_AS(PauliString::from_label(2, "X5"), Error);
  CHECK_THROWS_AS(PauliString::from_label(2, "Q0"), Error);
  CHECK_THROWS_AS(PauliString::from_label(2, "X0 Z0"), Error);
}

TEST_CASE("Pauli products match Kronecker matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const PauliString a = random_pauli(3, rng), b = random_pauli(3, rng);
    const auto [phase, r] = multiply(a, b);
    const Eigen::MatrixXcd lhs = kron_matrix(a) * kron_matrix(b);
    CHECK((lhs - phase * kron_matrix(r)).cwiseAbs().maxCoeff() < 1e-14);
    const bool commute = ((kron_matrix(a) * kron_matrix(b)) - (kron_matrix(b) * kron_matrix(a))).cwiseAbs().maxCoeff() < 1e-14;
    CHECK(a.commutes_with(b) == commute);
  }
}

TEST_CASE("string matrices agree with the simulator's dense conversion") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const PauliString p = random_pauli(3, rng);
    CHECK((to_dense(QubitOperator(p, 1.0)) - kron_matrix(p)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("operator algebra") {
  const QubitOperator x(PauliString::from_label(1, "X0"), 1.0);
  const QubitOperator y(PauliString::from_label(1, "Y0"), 1.0);
  const QubitOperator xy = x * y;
  CHECK(xy.size() == 1);
  CHECK(xy.coefficient(PauliString::from_label(1, "Z0")) == Complex(0, 1));
  const QubitOperator comm = (x * y + (y * x) * Complex(-1.0)).simplified();
  CHECK(comm.coefficient(PauliString::from_label(1, "Z0")) == Complex(0, 2));
  const QubitOperator zero = (x + x * Complex(-1.0)).simplified();
  CHECK(zero.size() == 0);
  CHECK(xy.adjoint().coefficient(PauliString::from_label(1, "Z0")) == Complex(0, -1));
  CHECK_THROWS_AS(x + QubitOperator(PauliString(2), 1.0), Error);
}

TEST_CASE("operator text round trip") {
  QubitOperator h(5);
  h.add_term(PauliString(5), -1.25);
  h.add_term(PauliString::from_label(5, "X0 Z1 Y4"), 0.125);
  h.add_term(PauliString::from_label(5, "Z3"), Complex(0.5, -0.25));
  const QubitOperator back = QubitOperator::from_text(h.to_text());
  CHECK(back.n_qubits() == 5);
  CHECK(back.size() == 3);
  for (const auto& [p, c] : h.terms()) CHECK(back.coefficient(p) == c);
  CHECK_THROWS_AS(QubitOperator::from_text("# qubits 2\nabc X0\n"), Error);
}
