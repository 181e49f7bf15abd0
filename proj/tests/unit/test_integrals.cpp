// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include <Eigen/Eigenvalues>
#include <catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "qforce/basis.hpp"
#include "qforce/error.hpp"
#include "qforce/integrals.hpp"
#include "reference_values.hpp"

using namespace qforce;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Composite Simpson quadrature of the 1D overlap of (x-A)^i exp(-a (x-A)^2)
// and (x-B)^j exp(-b (x-B)^2).
double quad_overlap_1d(double a, int i, double A, double b, int j, double B) {
  const double lo = std::min(A, B) - 12.0, hi = std::max(A, B) + 12.0;
  const int n = 20000;
  const double h = (hi - lo) / n;
  double s = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double x = lo + k * h;
    const double f = std::pow(x - A, i) * std::exp(-a * (x - A) * (x - A)) * std::pow(x - B, j) *
                     std::exp(-b * (x - B) * (x - B));
    s += f * (k == 0 || k == n ? 1.0 : (k % 2 ? 4.0 : 2.0));
  }
  return s * h / 3.0;
}

double quad_kinetic_1d(double a, int i, double A, double b, int j, double B) {
  // -1/2 <g_i | d^2/dx^2 | g_j> via the analytic second derivative of g_j.
  const double d2_1 = j >= 2 ? j * (j - 1) * 1.0 : 0.0;
  double t = 0.0;
  if (j >= 2) t += d2_1 * quad_overlap_1d(a, i, A, b, j - 2, B);
  t += -2.0 * b * (2 * j + 1) * quad_overlap_1d(a, i, A, b, j, B);
  t += 4.0 * b * b * quad_overlap_1d(a, i, A, b, j + 2, B);
  return -0.5 * t;
}

}  // namespace

TEST_CASE("Boys function matches high-precision quadrature") {
  for (const auto& ref : reference::kBoysValues) {
    CHECK_THAT(boys(ref.n, ref.t), WithinRel(ref.value, 1e-12));
  }
}

TEST_CASE("Boys downward recursion is consistent with the table") {
  double f[9];
  for (double t : {0.0, 0.3, 4.0, 25.0, 29.9, 30.1, 45.0, 200.0}) {
    boys(8, t, f);
    for (int n = 0; n < 8; ++n) {
      // F_n = (2t F_{n+1} + e^{-t}) / (2n + 1)
      CHECK_THAT(f[n], WithinRel((2 * t * f[n + 1] + std::exp(-t)) / (2 * n + 1), 1e-11));
    }
  }
}

TEST_CASE("primitive overlap and kinetic agree with quadrature") {
  const Vec3 A(0.1, -0.2, 0.3), B(-0.4, 0.5, 0.9);
  const double a = 0.8, b = 1.3;
  for (const auto& la : cartesian_powers(2)) {
    for (const auto& lb : cartesian_powers(1)) {
      double s = 1.0;
      for (int k = 0; k < 3; ++k) s *= quad_overlap_1d(a, la[k], A[k], b, lb[k], B[k]);
      CHECK_THAT(primitive_overlap(a, la, A, b, lb, B), WithinAbs(s, 1e-10));
      double t = 0.0;
      for (int k = 0; k < 3; ++k) {
        double term = quad_kinetic_1d(a, la[k], A[k], b, lb[k], B[k]);
        for (int m = 0; m < 3; ++m) {
          if (m != k) term *= quad_overlap_1d(a, la[m], A[m], b, lb[m], B[m]);
        }
        t += term;
      }
      CHECK_THAT(primitive_kinetic(a, la, A, b, lb, B), WithinAbs(t, 1e-9));
    }
  }
}

TEST_CASE("H2 STO-3G overlap at 1.4 bohr") {
  const Geometry g = make_h2(1.4 / kBohrPerAngstrom);
  const IntegralSet ints = compute_integrals(build_basis("sto-3g", g), g);
  CHECK_THAT(ints.overlap(0, 1), WithinAbs(reference::kH2Bohr14Overlap01, 1e-9));
  CHECK_THAT(ints.overlap(0, 0), WithinAbs(1.0, 1e-12));
  CHECK_THAT(ints.nuclear_repulsion, WithinAbs(1.0 / 1.4, 1e-9));
}

TEST_CASE("integral symmetries on water 6-31G*") {
  const Geometry g = make_water(0.96, 104.5);
  const BasisSet b = build_basis("6-31G*", g);
  CHECK(b.n_ao() == 19);
  const IntegralSet ints = compute_integrals(b, g);
  CHECK((ints.overlap - ints.overlap.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((ints.kinetic - ints.kinetic.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  for (Eigen::Index i = 0; i < ints.overlap.rows(); ++i) CHECK_THAT(ints.overlap(i, i), WithinAbs(1.0, 1e-10));
  // Kinetic energy matrix is positive definite.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ints.kinetic);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
  // Coulomb diagonal (pp|pp) > 0 and Schwarz inequality on a sample.
  const std::size_t n = ints.n_ao();
  for (std::size_t p = 0; p < n; ++p) {
    CHECK(ints.eri(p, p, p, p) > 0.0);
    for (std::size_t q = 0; q < n; q += 3) {
      const double pq = ints.eri(p, q, p, q);
      for (std::size_t r = 0; r < n; r += 4) {
        CHECK(std::abs(ints.eri(p, q, r, r)) <= std::sqrt(pq * ints.eri(r, r, r, r)) + 1e-12);
      }
    }
  }
}

TEST_CASE("ERI tensor packing covers all eight permutations") {
  EriTensor t(3);
  t.set(2, 1, 1, 0, 0.25);
  CHECK(t(1, 2, 1, 0) == 0.25);
  CHECK(t(1, 0, 2, 1) == 0.25);
  CHECK(t(0, 1, 1, 2) == 0.25);
  CHECK(t.data().size() == 21);
  const auto dense = t.to_dense();
  const EriTensor back = EriTensor::from_dense(3, dense);
  CHECK(back.data() == t.data());
}

TEST_CASE("basis library errors and checksums") {
  const Geometry h2 = make_h2(0.74);
  CHECK(basis_checksum_mismatches().empty());
  CHECK(available_bases().size() == 3);
  try {
    build_basis("cc-pVTZ", h2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnsupported);
    CHECK(std::string(e.what()).find("unsupported angular momentum") != std::string::npos);
  }
  try {
    build_basis("no-such-basis", h2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
  const char* f_shell = "****\nH 0\nF 1 1.00\n 1.0 1.0\n****\n";
  CHECK_THROWS_AS(build_basis_from_text("custom", f_shell, h2), Error);
  CHECK(build_basis("sto-3g", h2).n_ao() == 2);
  CHECK(build_basis("6-31G", make_water(0.96, 104.5)).n_ao() == 13);
}
