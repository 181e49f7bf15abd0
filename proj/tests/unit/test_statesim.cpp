// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include <Eigen/Eigenvalues>
#include <catch_amalgamated.hpp>
#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "qforce/ansatz.hpp"
#include "qforce/error.hpp"
#include "qforce/statesim.hpp"
#include "support.hpp"

using namespace qforce;
using Catch::Matchers::WithinAbs;

namespace {

Eigen::VectorXcd as_vector(const Statevector& s) {
  return Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(), static_cast<Eigen::Index>(s.dim()));
}

Statevector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& v : a) {
    v = {g(rng), g(rng)};
    norm += std::norm(v);
  }
  for (auto& v : a) v /= std::sqrt(norm);
  return Statevector::from_amplitudes(std::move(a));
}

QubitOperator random_operator(std::size_t n, int terms, bool hermitian, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (1ULL << n) - 1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  QubitOperator h(n);
  for (int t = 0; t < terms; ++t) {
    h.add_term(PauliString(n, mask(rng), mask(rng)), hermitian ? Complex(u(rng)) : Complex(u(rng), u(rng)));
  }
  return h;
}

}  // namespace

TEST_CASE("basis states are little-endian") {
  const Statevector s = Statevector::basis_state(3, 0b101);
  CHECK(s[5] == Complex(1.0));
  CHECK(s.norm() == 1.0);
  Circuit c(3);
  c.x(0);
  c.x(2);
  CHECK(fidelity(apply(c, {}, Statevector(3)), s) == 1.0);
  CHECK_THROWS_AS(Statevector::from_amplitudes(std::vector<Complex>(3)), Error);
  CHECK_THROWS_AS(Statevector::basis_state(2, 4), Error);
}

TEST_CASE("single gates") {
  Circuit c(2);
  const int t = c.add_parameter();
  c.ry(0, t);
  c.cnot(0, 1);
  const std::vector<double> pi{std::numbers::pi};
  // RY(pi)|0> = |1>, then CNOT copies it.
  const Statevector s = apply(c, pi, Statevector(2));
  CHECK_THAT(std::abs(s[3]), WithinAbs(1.0, 1e-15));
  const std::vector<double> half{std::numbers::pi / 2};
  const Statevector bell = apply(c, half, Statevector(2));
  CHECK_THAT(std::abs(bell[0]), WithinAbs(std::sqrt(0.5), 1e-15));
  CHECK_THAT(std::abs(bell[3]), WithinAbs(std::sqrt(0.5), 1e-15));
  CHECK_THROWS_AS(c.cnot(1, 1), Error);
  CHECK_THROWS_AS(c.x(2), Error);
  CHECK_THROWS_AS(c.ry(0, 3), Error);
  CHECK_THROWS_AS(apply(c, std::vector<double>{}, Statevector(2)), Error);
}

TEST_CASE("Pauli rotation equals the matrix exponential") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> mask(0, 7);
  for (int trial = 0; trial < 30; ++trial) {
    const PauliString p(3, mask(rng), mask(rng));
    const double theta = 0.37 * (trial + 1);
    const Statevector s0 = random_state(3, rng);
    Circuit c(3);
    c.pauli_rot_fixed(p, theta);
    const Statevector s = apply(c, {}, s0);
    const Eigen::MatrixXcd gen = Complex(0.0, -theta / 2) * to_dense(QubitOperator(p, 1.0));
    const Eigen::MatrixXcd u = gen.exp();
    CHECK((as_vector(s) - u * as_vector(s0)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("RY and RZ follow the exp(-i theta P / 2) convention") {
  std::mt19937_64 rng(2);
  const Statevector s0 = random_state(2, rng);
  for (char axis : {'Y', 'Z'}) {
    Circuit a(2), b(2);
    if (axis == 'Y') a.ry_fixed(1, 0.8); else a.rz_fixed(1, 0.8);
    b.pauli_rot_fixed(PauliString::from_label(2, std::string(1, axis) + "1"), 0.8);
    CHECK(fidelity(apply(a, {}, s0), apply(b, {}, s0)) > 1.0 - 1e-14);
  }
}

TEST_CASE("unitary circuits preserve the norm") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_int_distribution<std::uint64_t> mask(0, 15);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c(4);
    for (int k = 0; k < 12; ++k) {
      const int p = c.add_parameter();
      c.ry(static_cast<std::size_t>(k % 4), p);
      c.cnot(static_cast<std::size_t>(k % 4), static_cast<std::size_t>((k + 1) % 4));
      c.pauli_rot(PauliString(4, mask(rng), mask(rng)), c.add_parameter(), -2.0);
      c.rz(static_cast<std::size_t>((k + 2) % 4), p, 0.5);
    }
    std::vector<double> params(c.n_params());
    for (auto& v : params) v = u(rng);
    CHECK_THAT(apply(c, params, random_state(4, rng)).norm(), WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("expectation agrees with the dense form") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const QubitOperator h = random_operator(3, 10, true, rng);
    const Statevector s = random_state(3, rng);
    const Eigen::VectorXcd v = as_vector(s);
    const double dense = (v.adjoint() * to_dense(h) * v)(0).real();
    CHECK_THAT(expectation(s, h), WithinAbs(dense, 1e-10));
    const auto hv = apply_operator(h, s.amplitudes());
    const Eigen::VectorXcd hv_dense = to_dense(h) * v;
    for (std::size_t i = 0; i < hv.size(); ++i) CHECK(std::abs(hv[i] - hv_dense(static_cast<Eigen::Index>(i))) < 1e-12);
  }
  const QubitOperator anti(PauliString::from_label(1, "Y0"), Complex(0.0, 1.0));
  CHECK_THROWS_AS(expectation(Statevector::from_amplitudes({std::sqrt(0.5), Complex(0.0, std::sqrt(0.5))}), anti), Error);
}

TEST_CASE("Lanczos and dense eigensolvers agree") {
  std::mt19937_64 rng(31);
  for (std::size_t n : {3u, 11u}) {
    const QubitOperator h = random_operator(n, 40, true, rng);
    const QubitOperator herm = (h + h.adjoint()).simplified();
    // 11 qubits exercises the Lanczos path; the dense solve is the oracle.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(herm), Eigen::EigenvaluesOnly);
    CHECK_THAT(exact_lowest_eigenvalue(herm), WithinAbs(es.eigenvalues()(0), 1e-9));
  }
}

TEST_CASE("Jordan-Wigner reference state of H2 sets qubits 0 and 2") {
  const FermionQubitMapper m(2, MappingKind::kJordanWigner, false, 1, 1);
  const Statevector ref = prepare_reference(m);
  CHECK(ref[0b0101] == Complex(1.0));
  const FermionQubitMapper empty(2, MappingKind::kJordanWigner, false, 0, 0);
  CHECK(prepare_reference(empty)[0] == Complex(1.0));
}

TEST_CASE("reference energy equals RHF for every encoding") {
  const auto p = testing::prepare(make_h2(0.7414), "STO-3G");
  const auto w = testing::prepare(make_water(0.96, 104.5), "STO-3G");
  const MolecularHamiltonian as = select_active_space(w.full, w.scf, {4, 4});
  for (MappingKind kind : {MappingKind::kJordanWigner, MappingKind::kParity, MappingKind::kBravyiKitaev}) {
    for (bool reduce : {false, true}) {
      if (reduce && kind != MappingKind::kParity) continue;
      const FermionQubitMapper m2(2, kind, reduce, 1, 1);
      CHECK_THAT(expectation(prepare_reference(m2), m2.map(p.full)), WithinAbs(p.scf.e_total, 1e-8));
      const FermionQubitMapper m4(4, kind, reduce, 2, 2);
      CHECK_THAT(expectation(prepare_reference(m4), m4.map(as)), WithinAbs(w.scf.e_total, 1e-8));
    }
  }
}
