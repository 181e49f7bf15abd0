// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include <catch_amalgamated.hpp>

#include "oracles/determinant_ci.hpp"
#include "qforce/error.hpp"
#include "reference_values.hpp"
#include "support.hpp"

using namespace qforce;
using Catch::Matchers::WithinAbs;

// Reference values come from a package using its own bohr constant; 1e-6
// absorbs the unit-conversion difference.
constexpr double kRefTol = 1e-6;

TEST_CASE("RHF energies against the reference package") {
  const Geometry h2_bohr = make_h2(1.4 / kBohrPerAngstrom);
  CHECK_THAT(testing::prepare(h2_bohr, "STO-3G").scf.e_total, WithinAbs(reference::kH2Bohr14RhfEnergy, 1e-9));
  CHECK_THAT(testing::prepare(make_h2(0.7414), "STO-3G").scf.e_total, WithinAbs(reference::kH2EqRhfEnergy, kRefTol));
  const Geometry w = make_water(0.96, 104.5);
  CHECK_THAT(testing::prepare(w, "STO-3G").scf.e_total, WithinAbs(reference::kWaterSto3gRhfEnergy, kRefTol));
  CHECK_THAT(testing::prepare(w, "6-31G").scf.e_total, WithinAbs(reference::kWater631gRhfEnergy, kRefTol));
  CHECK_THAT(testing::prepare(w, "6-31G*").scf.e_total, WithinAbs(reference::kWater631gsCartRhfEnergy, kRefTol));
}

TEST_CASE("RHF result is self-consistent") {
  const Geometry w = make_water(0.96, 104.5);
  const auto p = testing::prepare(w, "6-31G");
  const Eigen::MatrixXd& c = p.scf.coefficients;
  // C^T S C = 1 and C^T F C = diag(eps).
  const Eigen::MatrixXd ortho = c.transpose() * p.ints.overlap * c;
  CHECK((ortho - Eigen::MatrixXd::Identity(ortho.rows(), ortho.cols())).cwiseAbs().maxCoeff() < 1e-9);
  const Eigen::MatrixXd fmo = c.transpose() * p.scf.fock * c;
  for (Eigen::Index i = 0; i < fmo.rows(); ++i) {
    CHECK_THAT(fmo(i, i), WithinAbs(p.scf.orbital_energies(i), 1e-8));
    for (Eigen::Index j = 0; j < i; ++j) CHECK(std::abs(fmo(i, j)) < 1e-6);
  }
  for (Eigen::Index i = 1; i < p.scf.orbital_energies.size(); ++i) {
    CHECK(p.scf.orbital_energies(i) >= p.scf.orbital_energies(i - 1));
  }
  // Phase convention: largest-magnitude coefficient of each MO is positive.
  for (Eigen::Index k = 0; k < c.cols(); ++k) {
    Eigen::Index imax = 0;
    c.col(k).cwiseAbs().maxCoeff(&imax);
    CHECK(c(imax, k) > 0.0);
  }
}

TEST_CASE("MO Hamiltonian reproduces the RHF energy from the reference determinant") {
  const auto p = testing::prepare(make_water(0.96, 104.5), "STO-3G");
  const auto& h = p.full;
  double e = h.e_core;
  const std::size_t nocc = 5;
  for (std::size_t i = 0; i < nocc; ++i) {
    e += 2.0 * h.h1(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    for (std::size_t j = 0; j < nocc; ++j) e += 2.0 * h.g2(i, i, j, j) - h.g2(i, j, j, i);
  }
  CHECK_THAT(e, WithinAbs(p.scf.e_total, 1e-9));
}

TEST_CASE("full CI of H2 matches the reference package") {
  const auto p = testing::prepare(make_h2(0.7414), "STO-3G");
  CHECK_THAT(oracle::ci_ground_energy(p.full), WithinAbs(reference::kH2EqFciEnergy, kRefTol));
  const auto far = testing::prepare(make_h2(50.0), "STO-3G");
  CHECK_THAT(oracle::ci_ground_energy(far.full), WithinAbs(reference::kH2StretchedFciEnergy, kRefTol));
}

TEST_CASE("RHF input validation") {
  const Geometry h = Geometry::from_symbols({"H"}, {Vec3::Zero()});
  const IntegralSet ints = compute_integrals(build_basis("STO-3G", h), h);
  CHECK_THROWS_AS(run_rhf(ints, 1), Error);
  ScfOptions few;
  few.max_iter = 1;
  const Geometry w = make_water(0.96, 104.5);
  const IntegralSet wi = compute_integrals(build_basis("6-31G", w), w);
  try {
    run_rhf(wi, 10, few);
    FAIL("expected non-convergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConvergence);
  }
}
