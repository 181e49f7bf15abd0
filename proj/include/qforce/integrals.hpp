// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <span>
#include <vector>

#include "qforce/basis.hpp"
#include "qforce/chemcore.hpp"

namespace qforce {

/// Boys function F_n(t) for n = 0..n_max written to out[0..n_max].
void boys(int n_max, double t, std::span<double> out);
double boys(int n, double t);

/// Real two-electron integrals (pq|rs) in chemist notation, stored once per
/// 8-fold permutation class. Index pairs are packed as pq = p(p+1)/2 + q with
/// p >= q and the element lives at pair index PQ(PQ+1)/2 + RS with PQ >= RS.
class EriTensor {
 public:
  EriTensor() = default;
  explicit EriTensor(std::size_t n);

  std::size_t dim() const { return n_; }

  double operator()(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return data_[index(p, q, r, s)];
  }
  void set(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double v) {
    data_[index(p, q, r, s)] = v;
  }

  static std::size_t pair_index(std::size_t p, std::size_t q) {
    return p >= q ? p * (p + 1) / 2 + q : q * (q + 1) / 2 + p;
  }
  std::size_t index(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    const std::size_t pq = pair_index(p, q);
    const std::size_t rs = pair_index(r, s);
    return pq >= rs ? pq * (pq + 1) / 2 + rs : rs * (rs + 1) / 2 + pq;
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  /// Dense n^4 copy, element [((p*n + q)*n + r)*n + s].
  std::vector<double> to_dense() const;
  static EriTensor from_dense(std::size_t n, const std::vector<double>& dense);

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct IntegralSet {
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd nuclear;
  EriTensor eri;
  double nuclear_repulsion = 0.0;

  std::size_t n_ao() const { return static_cast<std::size_t>(overlap.rows()); }
  Eigen::MatrixXd core_hamiltonian() const { return kinetic + nuclear; }
};

double nuclear_repulsion(const Geometry& g);

/// McMurchie-Davidson evaluation of S, T, V and (pq|rs) over b.
/// Throws kConvergence if S is numerically singular (eigenvalue < 1e-8).
IntegralSet compute_integrals(const BasisSet& b, const Geometry& g);

/// Primitive-level integrals over unnormalized Cartesian Gaussians
/// x^lx y^ly z^lz exp(-a r^2) centred at A (Bohr). Exposed for tests.
double primitive_overlap(double a, const std::array<int, 3>& la, const Vec3& A,
                         double b, const std::array<int, 3>& lb, const Vec3& B);
double primitive_kinetic(double a, const std::array<int, 3>& la, const Vec3& A,
                         double b, const std::array<int, 3>& lb, const Vec3& B);

}  // namespace qforce
