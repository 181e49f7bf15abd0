// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/qubitmap.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <unordered_map>

#include "qforce/error.hpp"

namespace qforce {

namespace {

constexpr double kHermiticityTol = 1e-10;

using Accumulator = std::unordered_map<PauliString, Complex, PauliStringHash>;

std::vector<std::uint64_t> encoding_rows(MappingKind kind, std::size_t n) {
  std::vector<std::uint64_t> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    switch (kind) {
      case MappingKind::kJordanWigner:
        rows[i] = 1ULL << i;
        break;
      case MappingKind::kParity:
        for (std::size_t k = 0; k <= i; ++k) rows[i] |= 1ULL << k;
        break;
      case MappingKind::kBravyiKitaev: {
        // Fenwick tree on n nodes: qubit i stores the occupation parity of
        // modes ((i+1) & i) .. i.
        for (std::size_t k = (i + 1) & i; k <= i; ++k) rows[i] |= 1ULL << k;
        break;
      }
    }
  }
  return rows;
}

std::vector<std::uint64_t> gf2_inverse(const std::vector<std::uint64_t>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::uint64_t> a = rows;
  std::vector<std::uint64_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = 1ULL << i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !((a[pivot] >> col) & 1U)) ++pivot;
    if (pivot == n) throw Error(ErrorCode::kInternal, "encoding matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && ((a[r] >> col) & 1U)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

std::uint64_t drop_bit(std::uint64_t v, std::size_t bit) {
  const std::uint64_t low = v & ((1ULL << bit) - 1);
  const std::uint64_t high = bit + 1 >= 64 ? 0 : (v >> (bit + 1)) << bit;
  return low | high;
}

QubitOperator from_accumulator(std::size_t n, const Accumulator& acc) {
  QubitOperator out(n);
  for (const auto& [p, c] : acc) out.add_term(p, c);
  return out;
}

void accumulate_product(Accumulator& acc, const QubitOperator& a, const QubitOperator& b, Complex scale) {
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      auto [phase, r] = multiply(pa, pb);
      acc[r] += scale * phase * ca * cb;
    }
  }
}

}  // namespace

std::string_view to_string(MappingKind kind) {
  switch (kind) {
    case MappingKind::kJordanWigner: return "jordan_wigner";
    case MappingKind::kParity: return "parity";
    case MappingKind::kBravyiKitaev: return "bravyi_kitaev";
  }
  return "unknown";
}

MappingKind parse_mapping(std::string_view name) {
  std::string s(name);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "jordan_wigner" || s == "jw") return MappingKind::kJordanWigner;
  if (s == "parity") return MappingKind::kParity;
  if (s == "bravyi_kitaev" || s == "bk") return MappingKind::kBravyiKitaev;
  throw Error(ErrorCode::kConfig, "unknown mapping '" + std::string(name) + "'");
}

FermionQubitMapper::FermionQubitMapper(std::size_t n_orb, MappingKind kind, bool two_qubit_reduction, int n_alpha,
                                       int n_beta)
    : n_orb_(n_orb), kind_(kind), reduce_(two_qubit_reduction), n_alpha_(n_alpha), n_beta_(n_beta) {
  if (n_orb == 0 || 2 * n_orb > kMaxQubits) {
    throw Error(ErrorCode::kUnsupported, "spin-orbital count must be between 2 and 64");
  }
  if (n_alpha < 0 || n_beta < 0 || static_cast<std::size_t>(n_alpha) > n_orb ||
      static_cast<std::size_t>(n_beta) > n_orb) {
    throw Error(ErrorCode::kInvalidArgument, "electron sector does not fit the orbital count");
  }
  if (reduce_) {
    if (kind != MappingKind::kParity) {
      throw Error(ErrorCode::kInvalidArgument, "two-qubit reduction requires the parity mapping");
    }
    if ((n_alpha + n_beta) % 2 != 0) {
      throw Error(ErrorCode::kInvalidArgument, "two-qubit reduction requires an even electron count");
    }
    if (n_orb < 2) throw Error(ErrorCode::kInvalidArgument, "two-qubit reduction needs at least 2 orbitals");
  }
  const std::size_t n = n_modes();
  rows_ = encoding_rows(kind, n);
  inv_rows_ = gf2_inverse(rows_);
  for (std::size_t j = 0; j < n; ++j) {
    const PauliString xu(n, update_set(j), 0);
    const PauliString zp(n, 0, parity_set(j));
    const PauliString zo(n, 0, occupation_set(j));
    auto [ph1, c] = multiply(xu, zp);
    auto [ph2, d] = multiply(c, zo);
    QubitOperator majorana(c, 0.5 * ph1);
    QubitOperator difference(d, 0.5 * ph1 * ph2);
    creators_.push_back((majorana + difference).simplified());
    annihilators_.push_back((majorana + difference * Complex(-1.0)).simplified());
  }
}

std::uint64_t FermionQubitMapper::update_set(std::size_t j) const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((rows_[i] >> j) & 1U) mask |= 1ULL << i;
  }
  return mask;
}

std::uint64_t FermionQubitMapper::parity_set(std::size_t j) const {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < j; ++k) mask ^= inv_rows_[k];
  return mask;
}

std::uint64_t FermionQubitMapper::occupation_set(std::size_t j) const { return inv_rows_[j]; }

const QubitOperator& FermionQubitMapper::ladder(std::size_t mode, bool creation) const {
  if (mode >= n_modes()) throw Error(ErrorCode::kInvalidArgument, "mode index out of range");
  return creation ? creators_[mode] : annihilators_[mode];
}

QubitOperator FermionQubitMapper::map_product(std::span<const LadderOp> ops) const {
  QubitOperator out = QubitOperator::identity(n_modes());
  for (const auto& op : ops) out = out * ladder(op.mode, op.creation);
  return out.simplified();
}

QubitOperator FermionQubitMapper::reduce(const QubitOperator& full) const {
  if (!reduce_) return full;
  if (full.n_qubits() != n_modes()) throw Error(ErrorCode::kInvalidArgument, "operator is not on the full register");
  const std::size_t qa = n_orb_ - 1;
  const std::size_t qb = 2 * n_orb_ - 1;
  const double sign_a = (n_alpha_ % 2) ? -1.0 : 1.0;
  const double sign_b = ((n_alpha_ + n_beta_) % 2) ? -1.0 : 1.0;
  Accumulator acc;
  for (const auto& [p, c] : full.terms()) {
    const std::uint64_t both = (1ULL << qa) | (1ULL << qb);
    if (p.x_mask() & both) {
      throw Error(ErrorCode::kInvalidArgument, "operator does not conserve the sector parities; cannot reduce");
    }
    double sign = 1.0;
    if ((p.z_mask() >> qa) & 1U) sign *= sign_a;
    if ((p.z_mask() >> qb) & 1U) sign *= sign_b;
    // Remove the higher bit first so the lower position stays valid.
    const std::uint64_t x = drop_bit(drop_bit(p.x_mask(), qb), qa);
    const std::uint64_t z = drop_bit(drop_bit(p.z_mask(), qb), qa);
    acc[PauliString(n_qubits(), x, z)] += sign * c;
  }
  return from_accumulator(n_qubits(), acc).simplified();
}

std::uint64_t FermionQubitMapper::encode_occupation(std::uint64_t occupation) const {
  std::uint64_t q = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (std::popcount(rows_[i] & occupation) & 1) q |= 1ULL << i;
  }
  if (reduce_) q = drop_bit(drop_bit(q, 2 * n_orb_ - 1), n_orb_ - 1);
  return q;
}

std::uint64_t FermionQubitMapper::reference_occupation() const {
  std::uint64_t f = 0;
  for (int i = 0; i < n_alpha_; ++i) f |= 1ULL << i;
  for (int i = 0; i < n_beta_; ++i) f |= 1ULL << (n_orb_ + static_cast<std::size_t>(i));
  return f;
}

QubitOperator FermionQubitMapper::excitation_generator(std::span<const std::size_t> creators,
                                                       std::span<const std::size_t> annihilators) const {
  std::vector<LadderOp> ops;
  for (auto c : creators) ops.push_back({c, true});
  for (auto a : annihilators) ops.push_back({a, false});
  const QubitOperator t = map_product(ops);
  return reduce((t + t.adjoint() * Complex(-1.0)).simplified());
}

QubitOperator FermionQubitMapper::map(const MolecularHamiltonian& h) const {
  h.validate();
  if (h.n_orb() != n_orb_) throw Error(ErrorCode::kInvalidArgument, "Hamiltonian orbital count does not match mapper");
  const std::size_t n = n_orb_;
  const std::size_t nm = n_modes();

  // Pair images a^dag_P a_Q, a^dag_P a^dag_R and a_S a_Q on the full register.
  std::vector<QubitOperator> one(nm * nm), cc(nm * nm), aa(nm * nm);
  for (std::size_t p = 0; p < nm; ++p) {
    for (std::size_t q = 0; q < nm; ++q) {
      one[p * nm + q] = (creators_[p] * annihilators_[q]).simplified();
      if (p != q) {
        cc[p * nm + q] = (creators_[p] * creators_[q]).simplified();
        aa[p * nm + q] = (annihilators_[p] * annihilators_[q]).simplified();
      }
    }
  }

  Accumulator acc;
  acc[PauliString(nm)] += h.e_core;
  for (std::size_t sigma = 0; sigma < 2; ++sigma) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const double v = h.h1(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
        if (v == 0.0) continue;
        for (const auto& [s, c] : one[(p + sigma * n) * nm + q + sigma * n].terms()) acc[s] += v * c;
      }
    }
  }
  // 1/2 sum (pq|rs) a^dag_{p s1} a^dag_{r s2} a_{s s2} a_{q s1}
  for (std::size_t s1 = 0; s1 < 2; ++s1) {
    for (std::size_t s2 = 0; s2 < 2; ++s2) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t s = 0; s < n; ++s) {
              const double v = h.g2(p, q, r, s);
              if (v == 0.0) continue;
              const std::size_t P = p + s1 * n, Q = q + s1 * n, R = r + s2 * n, S = s + s2 * n;
              if (P == R || S == Q) continue;
              accumulate_product(acc, cc[P * nm + R], aa[S * nm + Q], 0.5 * v);
            }
          }
        }
      }
    }
  }
  QubitOperator full = from_accumulator(nm, acc).simplified();
  if (full.max_imag() > kHermiticityTol) {
    throw Error(ErrorCode::kInternal, "mapped Hamiltonian has imaginary coefficients");
  }
  QubitOperator real(nm);
  for (const auto& [p, c] : full.terms()) real.add_term(p, c.real());
  return reduce(real.simplified());
}

QubitOperator map(const MolecularHamiltonian& h, MappingKind kind, bool two_qubit_reduction) {
  if (h.n_elec % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "closed-shell mapping needs an even electron count");
  }
  FermionQubitMapper mapper(h.n_orb(), kind, two_qubit_reduction, h.n_elec / 2, h.n_elec / 2);
  return mapper.map(h);
}

}  // namespace qforce
