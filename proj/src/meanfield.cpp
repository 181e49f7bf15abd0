// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/meanfield.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "qforce/error.hpp"

namespace qforce {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;

constexpr double kMinOverlapEigenvalue = 1e-8;

MatrixXd two_electron_part(const std::vector<double>& eri, std::size_t n, const MatrixXd& p) {
  MatrixXd g = MatrixXd::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t v = 0; v <= m; ++v) {
      double acc = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t s = 0; s < n; ++s) {
          const double coulomb = eri[((m * n + v) * n + l) * n + s];
          const double exchange = eri[((m * n + l) * n + v) * n + s];
          acc += p(static_cast<Index>(l), static_cast<Index>(s)) * (coulomb - 0.5 * exchange);
        }
      }
      g(static_cast<Index>(m), static_cast<Index>(v)) = acc;
      g(static_cast<Index>(v), static_cast<Index>(m)) = acc;
    }
  }
  return g;
}

void fix_phases(MatrixXd& c) {
  for (Index j = 0; j < c.cols(); ++j) {
    Index imax = 0;
    c.col(j).cwiseAbs().maxCoeff(&imax);
    if (c(imax, j) < 0.0) c.col(j) *= -1.0;
  }
}

struct Diagonalized {
  MatrixXd c;
  Eigen::VectorXd eps;
};

constexpr double kDegenerateGap = 1e-9;

// Exactly degenerate orbitals (e.g. fragments too far apart to overlap) are
// rotated within their block to diagonalize the AO Coulomb matrix (mm|nn),
// largest eigenvalue first. This yields delocalized orbitals and keeps the
// iteration from flipping between localized choices.
void split_degenerate(Diagonalized& d, const MatrixXd& coulomb) {
  const Index n = d.eps.size();
  for (Index start = 0; start < n;) {
    Index end = start + 1;
    while (end < n && d.eps(end) - d.eps(start) < kDegenerateGap * std::max(1.0, std::abs(d.eps(start)))) ++end;
    if (end - start > 1) {
      const MatrixXd block = d.c.middleCols(start, end - start);
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(block.transpose() * coulomb * block);
      d.c.middleCols(start, end - start) = block * es.eigenvectors().rowwise().reverse();
    }
    start = end;
  }
}

Diagonalized diagonalize(const MatrixXd& f, const MatrixXd& x, const MatrixXd& coulomb) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(x.transpose() * f * x);
  Diagonalized d{x * es.eigenvectors(), es.eigenvalues()};
  split_degenerate(d, coulomb);
  fix_phases(d.c);
  return d;
}

MatrixXd density(const MatrixXd& c, int n_occ) {
  const auto occ = c.leftCols(n_occ);
  return 2.0 * occ * occ.transpose();
}

}  // namespace

ScfResult run_rhf(const IntegralSet& ints, int n_electrons, const ScfOptions& options) {
  const std::size_t n = ints.n_ao();
  if (n_electrons < 2 || n_electrons % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "RHF needs an even electron count >= 2, got " + std::to_string(n_electrons));
  }
  if (static_cast<std::size_t>(n_electrons) > 2 * n) {
    throw Error(ErrorCode::kInvalidArgument, "more electrons than the basis can hold");
  }
  const int n_occ = n_electrons / 2;

  Eigen::SelfAdjointEigenSolver<MatrixXd> s_es(ints.overlap);
  const double smin = s_es.eigenvalues().minCoeff();
  if (smin < kMinOverlapEigenvalue) {
    std::ostringstream msg;
    msg << "overlap matrix is near singular (smallest eigenvalue " << smin << ")";
    throw Error(ErrorCode::kInvalidArgument, msg.str());
  }
  const MatrixXd x = s_es.operatorInverseSqrt();
  const MatrixXd& s = ints.overlap;
  const MatrixXd h = ints.core_hamiltonian();
  const std::vector<double> eri = ints.eri.to_dense();
  MatrixXd coulomb(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t v = 0; v < n; ++v) coulomb(static_cast<Index>(m), static_cast<Index>(v)) = eri[((m * n + m) * n + v) * n + v];

  auto d = diagonalize(h, x, coulomb);
  MatrixXd p = density(d.c, n_occ);
  double e_old = 0.0;
  double residual = 0.0;
  std::deque<MatrixXd> focks, errors;

  ScfResult result;
  for (int it = 1; it <= options.max_iter; ++it) {
    const MatrixXd f = h + two_electron_part(eri, n, p);
    const double e = 0.5 * (p.cwiseProduct(h + f)).sum() + ints.nuclear_repulsion;
    const MatrixXd err = x.transpose() * (f * p * s - s * p * f) * x;
    residual = err.cwiseAbs().maxCoeff();

    focks.push_back(f);
    errors.push_back(err);
    if (static_cast<int>(focks.size()) > options.diis_depth) {
      focks.pop_front();
      errors.pop_front();
    }

    MatrixXd f_use = f;
    bool damp = false;
    const auto m = static_cast<Index>(focks.size());
    if (m > 1) {
      MatrixXd b = MatrixXd::Zero(m + 1, m + 1);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
      for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j <= i; ++j) {
          b(i, j) = b(j, i) = errors[static_cast<std::size_t>(i)].cwiseProduct(errors[static_cast<std::size_t>(j)]).sum();
        }
        b(i, m) = b(m, i) = -1.0;
      }
      rhs(m) = -1.0;
      // Scale the error block so the rank test is not fooled by tiny residuals.
      const double scale = b.topLeftCorner(m, m).diagonal().maxCoeff();
      if (scale > 0.0) b.topLeftCorner(m, m) /= scale;
      Eigen::FullPivLU<MatrixXd> lu(b);
      lu.setThreshold(1e-14);
      if (lu.isInvertible()) {
        const Eigen::VectorXd w = lu.solve(rhs);
        f_use.setZero();
        for (Index i = 0; i < m; ++i) f_use += w(i) * focks[static_cast<std::size_t>(i)];
      } else {
        damp = true;
      }
    }

    d = diagonalize(f_use, x, coulomb);
    MatrixXd p_new = density(d.c, n_occ);
    if (damp) p_new = (1.0 - options.damping) * p_new + options.damping * p;
    const double drms = std::sqrt((p_new - p).squaredNorm() / static_cast<double>(n * n));
    const double de = std::abs(e - e_old);
    p = p_new;
    e_old = e;
    result.n_iter = it;
    if (it > 1 && drms < options.density_tol && de < options.energy_tol) {
      result.converged = true;
      break;
    }
  }
  if (!result.converged) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "RHF did not converge in " << options.max_iter << " iterations (last energy " << e_old
        << " Hartree, commutator residual " << residual << ")";
    throw Error(ErrorCode::kConvergence, msg.str());
  }

  result.fock = h + two_electron_part(eri, n, p);
  d = diagonalize(result.fock, x, coulomb);
  result.coefficients = d.c;
  result.orbital_energies = d.eps;
  result.density = density(d.c, n_occ);
  result.e_total = 0.5 * (result.density.cwiseProduct(h + result.fock)).sum() + ints.nuclear_repulsion;
  return result;
}

MOIntegrals transform_to_mo(const IntegralSet& ints, const Eigen::MatrixXd& c) {
  const std::size_t n = ints.n_ao();
  if (static_cast<std::size_t>(c.rows()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "coefficient matrix rows do not match the AO count");
  }
  const auto m = static_cast<std::size_t>(c.cols());
  MOIntegrals mo;
  mo.h1 = c.transpose() * ints.core_hamiltonian() * c;
  mo.h1 = 0.5 * (mo.h1 + mo.h1.transpose()).eval();

  const std::vector<double> ao = ints.eri.to_dense();
  auto C = [&c](std::size_t mu, std::size_t p) { return c(static_cast<Index>(mu), static_cast<Index>(p)); };
  // Quarter transformations, one index at a time.
  std::vector<double> t1(m * n * n * n, 0.0);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t mu = 0; mu < n; ++mu) {
      const double cp = C(mu, p);
      if (cp == 0.0) continue;
      for (std::size_t rest = 0; rest < n * n * n; ++rest) t1[p * n * n * n + rest] += cp * ao[mu * n * n * n + rest];
    }
  std::vector<double> t2(m * m * n * n, 0.0);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t nu = 0; nu < n; ++nu) {
        const double cq = C(nu, q);
        if (cq == 0.0) continue;
        for (std::size_t rest = 0; rest < n * n; ++rest)
          t2[(p * m + q) * n * n + rest] += cq * t1[(p * n + nu) * n * n + rest];
      }
  std::vector<double> t3(m * m * m * n, 0.0);
  for (std::size_t pq = 0; pq < m * m; ++pq)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t la = 0; la < n; ++la) {
        const double cr = C(la, r);
        if (cr == 0.0) continue;
        for (std::size_t s = 0; s < n; ++s) t3[(pq * m + r) * n + s] += cr * t2[(pq * n + la) * n + s];
      }
  std::vector<double> t4(m * m * m * m, 0.0);
  for (std::size_t pqr = 0; pqr < m * m * m; ++pqr)
    for (std::size_t s = 0; s < m; ++s) {
      double acc = 0.0;
      for (std::size_t sg = 0; sg < n; ++sg) acc += C(sg, s) * t3[pqr * n + sg];
      t4[pqr * m + s] = acc;
    }
  mo.g2 = EriTensor::from_dense(m, t4);
  return mo;
}

}  // namespace qforce
