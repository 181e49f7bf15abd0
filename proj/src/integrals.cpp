// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/integrals.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qforce/error.hpp"

namespace qforce {

namespace {

constexpr double kPrimitiveCutoff = 1e-14;
constexpr double kLinearDependence = 1e-8;

// Hermite expansion coefficients E^{ij}_t along one axis, i <= imax,
// j <= jmax, t <= i + j.
class Hermite1D {
 public:
  Hermite1D(int imax, int jmax, double a, double b, double ax, double bx)
      : ni_(imax + 1), nj_(jmax + 1), nt_(imax + jmax + 1), data_(static_cast<std::size_t>(ni_ * nj_ * nt_), 0.0) {
    const double p = a + b;
    const double mu = a * b / p;
    const double q = ax - bx;
    const double xpa = (a * ax + b * bx) / p - ax;
    const double xpb = (a * ax + b * bx) / p - bx;
    const double inv2p = 0.5 / p;
    at(0, 0, 0) = std::exp(-mu * q * q);
    for (int i = 0; i < ni_; ++i) {
      for (int j = 0; j < nj_; ++j) {
        if (i == 0 && j == 0) continue;
        for (int t = 0; t <= i + j; ++t) {
          double v;
          if (i > 0) {
            v = xpa * get(i - 1, j, t) + (t + 1) * get(i - 1, j, t + 1);
            if (t > 0) v += inv2p * get(i - 1, j, t - 1);
          } else {
            v = xpb * get(i, j - 1, t) + (t + 1) * get(i, j - 1, t + 1);
            if (t > 0) v += inv2p * get(i, j - 1, t - 1);
          }
          at(i, j, t) = v;
        }
      }
    }
  }

  double get(int i, int j, int t) const {
    if (t < 0 || t > i + j) return 0.0;
    return data_[static_cast<std::size_t>((i * nj_ + j) * nt_ + t)];
  }

 private:
  double& at(int i, int j, int t) { return data_[static_cast<std::size_t>((i * nj_ + j) * nt_ + t)]; }

  int ni_, nj_, nt_;
  std::vector<double> data_;
};

// Hermite Coulomb integrals R^0_{tuv}(alpha, PC) for t + u + v <= L, stored
// in a (L+1)^3 box.
class HermiteCoulomb {
 public:
  HermiteCoulomb(int l_max, double alpha, const Vec3& pc) : n_(l_max + 1), r_(static_cast<std::size_t>(n_ * n_ * n_)) {
    std::array<double, 32> f{};
    boys(l_max, alpha * pc.squaredNorm(), std::span<double>(f.data(), static_cast<std::size_t>(l_max) + 1));
    std::vector<double> next(r_.size(), 0.0);
    std::vector<double> cur(r_.size(), 0.0);
    // Layer n holds R^n_{tuv} for t + u + v <= l_max - n.
    for (int n = l_max; n >= 0; --n) {
      const int lim = l_max - n;
      for (int t = 0; t <= lim; ++t) {
        for (int u = 0; u <= lim - t; ++u) {
          for (int v = 0; v <= lim - t - u; ++v) {
            double val;
            if (t > 0) {
              val = pc.x() * next[idx(t - 1, u, v)];
              if (t > 1) val += (t - 1) * next[idx(t - 2, u, v)];
            } else if (u > 0) {
              val = pc.y() * next[idx(t, u - 1, v)];
              if (u > 1) val += (u - 1) * next[idx(t, u - 2, v)];
            } else if (v > 0) {
              val = pc.z() * next[idx(t, u, v - 1)];
              if (v > 1) val += (v - 1) * next[idx(t, u, v - 2)];
            } else {
              val = std::pow(-2.0 * alpha, n) * f[static_cast<std::size_t>(n)];
            }
            cur[idx(t, u, v)] = val;
          }
        }
      }
      std::swap(cur, next);
    }
    r_ = std::move(next);
  }

  double operator()(int t, int u, int v) const { return r_[idx(t, u, v)]; }

 private:
  std::size_t idx(int t, int u, int v) const { return static_cast<std::size_t>((t * n_ + u) * n_ + v); }

  int n_;
  std::vector<double> r_;
};

struct HermiteIndex {
  int t, u, v;
};

std::vector<HermiteIndex> hermite_indices(int l) {
  std::vector<HermiteIndex> out;
  for (int t = 0; t <= l; ++t)
    for (int u = 0; u <= l - t; ++u)
      for (int v = 0; v <= l - t - u; ++v) out.push_back({t, u, v});
  return out;
}

// Contraction-weighted Hermite coefficients of one primitive pair for every
// Cartesian component pair of two shells, over the Hermite index list.
struct PrimitivePair {
  double p;
  Vec3 center;
  // [component pair][hermite index]
  std::vector<double> coeffs;
};

struct ShellPair {
  std::size_t a, b;  // shell indices
  int l;
  std::vector<HermiteIndex> herm;
  std::vector<std::pair<std::size_t, std::size_t>> ao_pairs;  // absolute AO indices
  std::vector<PrimitivePair> prims;
};

ShellPair make_shell_pair(const BasisSet& basis, std::size_t sa, std::size_t sb) {
  const Shell& A = basis.shells[sa];
  const Shell& B = basis.shells[sb];
  ShellPair sp;
  sp.a = sa;
  sp.b = sb;
  sp.l = A.l + B.l;
  sp.herm = hermite_indices(sp.l);
  const std::size_t oa = basis.shell_offsets[sa];
  const std::size_t ob = basis.shell_offsets[sb];
  for (std::size_t i = 0; i < A.n_cartesian(); ++i)
    for (std::size_t j = 0; j < B.n_cartesian(); ++j) sp.ao_pairs.emplace_back(oa + i, ob + j);

  double cmax = 0.0;
  for (const auto& [ia, ib] : sp.ao_pairs)
    for (double ca : basis.aos[ia].coefficients)
      for (double cb : basis.aos[ib].coefficients) cmax = std::max(cmax, std::abs(ca * cb));

  for (std::size_t pa = 0; pa < A.primitives.size(); ++pa) {
    for (std::size_t pb = 0; pb < B.primitives.size(); ++pb) {
      const double a = A.primitives[pa].exponent;
      const double b = B.primitives[pb].exponent;
      const double p = a + b;
      const double pref = std::exp(-a * b / p * (A.origin - B.origin).squaredNorm());
      if (pref * cmax < kPrimitiveCutoff) continue;
      Hermite1D ex(A.l, B.l, a, b, A.origin.x(), B.origin.x());
      Hermite1D ey(A.l, B.l, a, b, A.origin.y(), B.origin.y());
      Hermite1D ez(A.l, B.l, a, b, A.origin.z(), B.origin.z());
      PrimitivePair pp;
      pp.p = p;
      pp.center = (a * A.origin + b * B.origin) / p;
      pp.coeffs.assign(sp.ao_pairs.size() * sp.herm.size(), 0.0);
      for (std::size_t k = 0; k < sp.ao_pairs.size(); ++k) {
        const auto& aoa = basis.aos[sp.ao_pairs[k].first];
        const auto& aob = basis.aos[sp.ao_pairs[k].second];
        const double w = aoa.coefficients[pa] * aob.coefficients[pb];
        const auto& la = aoa.powers;
        const auto& lb = aob.powers;
        for (std::size_t h = 0; h < sp.herm.size(); ++h) {
          const auto& [t, u, v] = sp.herm[h];
          pp.coeffs[k * sp.herm.size() + h] = w * ex.get(la[0], lb[0], t) * ey.get(la[1], lb[1], u) *
                                              ez.get(la[2], lb[2], v);
        }
      }
      sp.prims.push_back(std::move(pp));
    }
  }
  return sp;
}

double overlap_1d(const Hermite1D& e, int i, int j, double p) { return e.get(i, j, 0) * std::sqrt(std::numbers::pi / p); }

// Integral of G_i d^2/dx^2 G_j along one axis.
double laplacian_1d(const Hermite1D& e, int i, int j, double b, double p) {
  double v = 4.0 * b * b * overlap_1d(e, i, j + 2, p) - 2.0 * b * (2 * j + 1) * overlap_1d(e, i, j, p);
  if (j >= 2) v += j * (j - 1) * overlap_1d(e, i, j - 2, p);
  return v;
}

void one_electron(const BasisSet& basis, const Geometry& g, IntegralSet& out) {
  const std::size_t n = basis.n_ao();
  out.overlap = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  out.kinetic = out.overlap;
  out.nuclear = out.overlap;
  std::vector<std::pair<double, Vec3>> nuclei;
  for (const auto& atom : g.atoms()) nuclei.emplace_back(atom.z, atom.position * kBohrPerAngstrom);

  for (std::size_t sa = 0; sa < basis.shells.size(); ++sa) {
    for (std::size_t sb = 0; sb < basis.shells.size(); ++sb) {
      const Shell& A = basis.shells[sa];
      const Shell& B = basis.shells[sb];
      const std::size_t oa = basis.shell_offsets[sa];
      const std::size_t ob = basis.shell_offsets[sb];
      const auto herm = hermite_indices(A.l + B.l);
      for (std::size_t pa = 0; pa < A.primitives.size(); ++pa) {
        for (std::size_t pb = 0; pb < B.primitives.size(); ++pb) {
          const double a = A.primitives[pa].exponent;
          const double b = B.primitives[pb].exponent;
          const double p = a + b;
          Hermite1D ex(A.l, B.l + 2, a, b, A.origin.x(), B.origin.x());
          Hermite1D ey(A.l, B.l + 2, a, b, A.origin.y(), B.origin.y());
          Hermite1D ez(A.l, B.l + 2, a, b, A.origin.z(), B.origin.z());
          const Vec3 P = (a * A.origin + b * B.origin) / p;
          std::vector<HermiteCoulomb> coulomb;
          coulomb.reserve(nuclei.size());
          for (const auto& [z, c] : nuclei) coulomb.emplace_back(A.l + B.l, p, P - c);
          for (std::size_t i = 0; i < A.n_cartesian(); ++i) {
            const auto& aoa = basis.aos[oa + i];
            for (std::size_t j = 0; j < B.n_cartesian(); ++j) {
              const auto& aob = basis.aos[ob + j];
              const double w = aoa.coefficients[pa] * aob.coefficients[pb];
              const auto& la = aoa.powers;
              const auto& lb = aob.powers;
              const double sx = overlap_1d(ex, la[0], lb[0], p);
              const double sy = overlap_1d(ey, la[1], lb[1], p);
              const double sz = overlap_1d(ez, la[2], lb[2], p);
              const double tx = laplacian_1d(ex, la[0], lb[0], b, p);
              const double ty = laplacian_1d(ey, la[1], lb[1], b, p);
              const double tz = laplacian_1d(ez, la[2], lb[2], b, p);
              double vsum = 0.0;
              for (std::size_t c = 0; c < nuclei.size(); ++c) {
                double acc = 0.0;
                for (const auto& [t, u, v] : herm) {
                  acc += ex.get(la[0], lb[0], t) * ey.get(la[1], lb[1], u) * ez.get(la[2], lb[2], v) *
                         coulomb[c](t, u, v);
                }
                vsum -= nuclei[c].first * acc;
              }
              const auto r = static_cast<Eigen::Index>(oa + i);
              const auto s = static_cast<Eigen::Index>(ob + j);
              out.overlap(r, s) += w * sx * sy * sz;
              out.kinetic(r, s) += w * -0.5 * (tx * sy * sz + sx * ty * sz + sx * sy * tz);
              out.nuclear(r, s) += w * 2.0 * std::numbers::pi / p * vsum;
            }
          }
        }
      }
    }
  }
  // Both triangles are evaluated; average away rounding asymmetry.
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      out.overlap(j, i) = out.overlap(i, j) = 0.5 * (out.overlap(i, j) + out.overlap(j, i));
      out.kinetic(j, i) = out.kinetic(i, j) = 0.5 * (out.kinetic(i, j) + out.kinetic(j, i));
      out.nuclear(j, i) = out.nuclear(i, j) = 0.5 * (out.nuclear(i, j) + out.nuclear(j, i));
    }
  }
}

void two_electron(const BasisSet& basis, IntegralSet& out) {
  const std::size_t n = basis.n_ao();
  out.eri = EriTensor(n);
  std::vector<ShellPair> pairs;
  for (std::size_t sa = 0; sa < basis.shells.size(); ++sa)
    for (std::size_t sb = 0; sb <= sa; ++sb) pairs.push_back(make_shell_pair(basis, sa, sb));

  const double pi52 = 2.0 * std::pow(std::numbers::pi, 2.5);
  std::vector<double> block;
  std::vector<double> ket_x;
  for (std::size_t ip = 0; ip < pairs.size(); ++ip) {
    const ShellPair& bra = pairs[ip];
    for (std::size_t iq = 0; iq <= ip; ++iq) {
      const ShellPair& ket = pairs[iq];
      const std::size_t nb = bra.ao_pairs.size();
      const std::size_t nk = ket.ao_pairs.size();
      const std::size_t hb = bra.herm.size();
      const std::size_t hk = ket.herm.size();
      block.assign(nb * nk, 0.0);
      ket_x.resize(nk * hb);
      const int ltot = bra.l + ket.l;
      for (const auto& pb : bra.prims) {
        for (const auto& pk : ket.prims) {
          const double p = pb.p;
          const double q = pk.p;
          const double alpha = p * q / (p + q);
          HermiteCoulomb r(ltot, alpha, pb.center - pk.center);
          const double pref = pi52 / (p * q * std::sqrt(p + q));
          // X[k][tuv] = sum over ket Hermite indices of (-1)^{tau+nu+phi} E R
          for (std::size_t k = 0; k < nk; ++k) {
            const double* ek = &pk.coeffs[k * hk];
            for (std::size_t h = 0; h < hb; ++h) {
              const auto& [t, u, v] = bra.herm[h];
              double acc = 0.0;
              for (std::size_t m = 0; m < hk; ++m) {
                if (ek[m] == 0.0) continue;
                const auto& [tau, nu, phi] = ket.herm[m];
                const double term = ek[m] * r(t + tau, u + nu, v + phi);
                acc += ((tau + nu + phi) & 1) ? -term : term;
              }
              ket_x[k * hb + h] = acc;
            }
          }
          for (std::size_t b = 0; b < nb; ++b) {
            const double* eb = &pb.coeffs[b * hb];
            for (std::size_t k = 0; k < nk; ++k) {
              const double* xk = &ket_x[k * hb];
              double acc = 0.0;
              for (std::size_t h = 0; h < hb; ++h) acc += eb[h] * xk[h];
              block[b * nk + k] += pref * acc;
            }
          }
        }
      }
      for (std::size_t b = 0; b < nb; ++b) {
        for (std::size_t k = 0; k < nk; ++k) {
          const auto [i, j] = bra.ao_pairs[b];
          const auto [kk, l] = ket.ao_pairs[k];
          out.eri.set(i, j, kk, l, block[b * nk + k]);
        }
      }
    }
  }
}

}  // namespace

EriTensor::EriTensor(std::size_t n) : n_(n) {
  const std::size_t npair = n * (n + 1) / 2;
  data_.assign(npair * (npair + 1) / 2, 0.0);
}

std::vector<double> EriTensor::to_dense() const {
  std::vector<double> d(n_ * n_ * n_ * n_);
  for (std::size_t p = 0; p < n_; ++p)
    for (std::size_t q = 0; q < n_; ++q)
      for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t s = 0; s < n_; ++s) d[((p * n_ + q) * n_ + r) * n_ + s] = (*this)(p, q, r, s);
  return d;
}

EriTensor EriTensor::from_dense(std::size_t n, const std::vector<double>& dense) {
  if (dense.size() != n * n * n * n) throw Error(ErrorCode::kInvalidArgument, "dense ERI has wrong size");
  EriTensor t(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (EriTensor::pair_index(r, s) > EriTensor::pair_index(p, q)) continue;
          t.set(p, q, r, s, dense[((p * n + q) * n + r) * n + s]);
        }
  return t;
}

double nuclear_repulsion(const Geometry& g) {
  double e = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double r = (g[i].position - g[j].position).norm() * kBohrPerAngstrom;
      e += g[i].z * g[j].z / r;
    }
  }
  return e;
}

IntegralSet compute_integrals(const BasisSet& b, const Geometry& g) {
  if (b.n_ao() == 0) throw Error(ErrorCode::kInvalidArgument, "empty basis");
  IntegralSet out;
  one_electron(b, g, out);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.overlap, Eigen::EigenvaluesOnly);
  const double smallest = es.eigenvalues().minCoeff();
  if (smallest < kLinearDependence) {
    std::ostringstream msg;
    msg << "basis is linearly dependent: smallest overlap eigenvalue " << smallest << " < " << kLinearDependence;
    throw Error(ErrorCode::kInvalidArgument, msg.str());
  }
  two_electron(b, out);
  out.nuclear_repulsion = nuclear_repulsion(g);
  return out;
}

double primitive_overlap(double a, const std::array<int, 3>& la, const Vec3& A,
                         double b, const std::array<int, 3>& lb, const Vec3& B) {
  const double p = a + b;
  double s = 1.0;
  for (int k = 0; k < 3; ++k) {
    Hermite1D e(la[k], lb[k], a, b, A[k], B[k]);
    s *= overlap_1d(e, la[k], lb[k], p);
  }
  return s;
}

double primitive_kinetic(double a, const std::array<int, 3>& la, const Vec3& A,
                         double b, const std::array<int, 3>& lb, const Vec3& B) {
  const double p = a + b;
  std::array<double, 3> s{}, t{};
  for (int k = 0; k < 3; ++k) {
    Hermite1D e(la[k], lb[k] + 2, a, b, A[k], B[k]);
    s[k] = overlap_1d(e, la[k], lb[k], p);
    t[k] = laplacian_1d(e, la[k], lb[k], b, p);
  }
  return -0.5 * (t[0] * s[1] * s[2] + s[0] * t[1] * s[2] + s[0] * s[1] * t[2]);
}

}  // namespace qforce
