// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/statesim.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <unordered_map>

#include "qforce/error.hpp"

namespace qforce {

namespace {

constexpr std::size_t kDenseLimit = 10;
constexpr std::size_t kOracleLimit = 14;
constexpr double kImagResidueTol = 1e-9;

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Phase of P|b> = phase(b) |b ^ x>.
inline Complex pauli_phase(const PauliString& p, std::uint64_t b) {
  const int power = p.y_count() + 2 * (std::popcount(b & p.z_mask()) & 1);
  return kIPow[power & 3];
}

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

void check_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kInvalidArgument,
                "qubit count mismatch: state has " + std::to_string(a) + ", operator has " + std::to_string(b));
  }
}

Eigen::VectorXcd apply_dense(const QubitOperator& h, const Eigen::VectorXcd& v) {
  std::vector<Complex> out = apply_operator(h, std::span<const Complex>(v.data(), static_cast<std::size_t>(v.size())));
  return Eigen::Map<Eigen::VectorXcd>(out.data(), static_cast<Eigen::Index>(out.size()));
}

double lanczos_lowest(const QubitOperator& h) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.n_qubits());
  const Eigen::Index max_steps = std::min<Eigen::Index>(dim, 300);
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
  v.normalize();
  std::vector<Eigen::VectorXcd> basis{v};
  std::vector<double> alpha, beta;
  double previous = 0.0;
  for (Eigen::Index k = 0; k < max_steps; ++k) {
    Eigen::VectorXcd w = apply_dense(h, basis.back());
    alpha.push_back(basis.back().dot(w).real());
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) w -= b.dot(w) * b;
    }
    const double nb = w.norm();
    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      t(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
    const double lowest = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(t, Eigen::EigenvaluesOnly).eigenvalues()(0);
    if (nb < 1e-12 || (k > 5 && std::abs(lowest - previous) < 1e-13)) return lowest;
    previous = lowest;
    beta.push_back(nb);
    basis.push_back(w / nb);
  }
  return previous;
}

}  // namespace

Statevector::Statevector(std::size_t n_qubits) : n_(n_qubits) {
  if (n_qubits > 30) throw Error(ErrorCode::kUnsupported, "statevector limited to 30 qubits");
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
  amps_[0] = 1.0;
}

Statevector Statevector::basis_state(std::size_t n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dim()) throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amps) {
  const std::size_t n = amps.size();
  if (n == 0 || (n & (n - 1)) != 0) throw Error(ErrorCode::kInvalidArgument, "amplitude count is not a power of two");
  Statevector s;
  s.n_ = static_cast<std::size_t>(std::countr_zero(n));
  s.amps_ = std::move(amps);
  return s;
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double fidelity(const Statevector& a, const Statevector& b) {
  check_size(a.n_qubits(), b.n_qubits());
  Complex ov{};
  for (std::size_t i = 0; i < a.dim(); ++i) ov += std::conj(a[i]) * b[i];
  return std::norm(ov);
}

int Circuit::add_parameter() { return static_cast<int>(n_params_++); }

void Circuit::check_qubit(std::size_t q) const {
  if (q >= n_) throw Error(ErrorCode::kInvalidArgument, "gate qubit " + std::to_string(q) + " out of range");
}

void Circuit::check_param(int param) const {
  if (param < 0 || static_cast<std::size_t>(param) >= n_params_) {
    throw Error(ErrorCode::kInvalidArgument, "parameter slot " + std::to_string(param) + " not allocated");
  }
}

void Circuit::x(std::size_t q) {
  check_qubit(q);
  gates_.push_back({GateKind::kX, q, 0, {}, -1, 1.0, 0.0});
}

void Circuit::cnot(std::size_t control, std::size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw Error(ErrorCode::kInvalidArgument, "CNOT control equals target");
  gates_.push_back({GateKind::kCNOT, control, target, {}, -1, 1.0, 0.0});
}

void Circuit::ry(std::size_t q, int param, double scale) {
  check_qubit(q);
  check_param(param);
  gates_.push_back({GateKind::kRY, q, 0, {}, param, scale, 0.0});
}

void Circuit::rz(std::size_t q, int param, double scale) {
  check_qubit(q);
  check_param(param);
  gates_.push_back({GateKind::kRZ, q, 0, {}, param, scale, 0.0});
}

void Circuit::pauli_rot(const PauliString& p, int param, double scale) {
  if (p.n_qubits() != n_) throw Error(ErrorCode::kInvalidArgument, "Pauli rotation size mismatch");
  check_param(param);
  gates_.push_back({GateKind::kPauliRot, 0, 0, p, param, scale, 0.0});
}

void Circuit::ry_fixed(std::size_t q, double angle) {
  check_qubit(q);
  gates_.push_back({GateKind::kRY, q, 0, {}, -1, 1.0, angle});
}

void Circuit::rz_fixed(std::size_t q, double angle) {
  check_qubit(q);
  gates_.push_back({GateKind::kRZ, q, 0, {}, -1, 1.0, angle});
}

void Circuit::pauli_rot_fixed(const PauliString& p, double angle) {
  if (p.n_qubits() != n_) throw Error(ErrorCode::kInvalidArgument, "Pauli rotation size mismatch");
  gates_.push_back({GateKind::kPauliRot, 0, 0, p, -1, 1.0, angle});
}

std::vector<double> Circuit::gate_angles(std::span<const double> params) const {
  if (params.size() != n_params_) {
    throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(n_params_) + " parameters, got " +
                                                 std::to_string(params.size()));
  }
  std::vector<double> angles(gates_.size());
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    angles[i] = g.parameterized() ? g.scale * params[static_cast<std::size_t>(g.param)] : g.angle;
  }
  return angles;
}

std::string Circuit::to_text() const {
  std::string out = "# qubits " + std::to_string(n_) + " params " + std::to_string(n_params_) + "\n";
  char buf[96];
  for (const Gate& g : gates_) {
    switch (g.kind) {
      case GateKind::kX: out += "X " + std::to_string(g.q0); break;
      case GateKind::kCNOT: out += "CNOT " + std::to_string(g.q0) + " " + std::to_string(g.q1); break;
      case GateKind::kRY: out += "RY " + std::to_string(g.q0); break;
      case GateKind::kRZ: out += "RZ " + std::to_string(g.q0); break;
      case GateKind::kPauliRot: out += "ROT [" + g.pauli.label() + "]"; break;
    }
    if (g.kind == GateKind::kRY || g.kind == GateKind::kRZ || g.kind == GateKind::kPauliRot) {
      if (g.parameterized()) {
        std::snprintf(buf, sizeof buf, " %.12g*t%d", g.scale, g.param);
      } else {
        std::snprintf(buf, sizeof buf, " %.12g", g.angle);
      }
      out += buf;
    }
    out += "\n";
  }
  return out;
}

void apply_gate(const Gate& g, double angle, Statevector& s) {
  auto& a = s.amplitudes();
  const std::size_t dim = a.size();
  switch (g.kind) {
    case GateKind::kX: {
      const std::size_t bit = std::size_t{1} << g.q0;
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & bit)) std::swap(a[i], a[i | bit]);
      }
      break;
    }
    case GateKind::kCNOT: {
      const std::size_t cbit = std::size_t{1} << g.q0;
      const std::size_t tbit = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(a[i], a[i | tbit]);
      }
      break;
    }
    case GateKind::kRY: {
      const double c = std::cos(0.5 * angle), sn = std::sin(0.5 * angle);
      const std::size_t bit = std::size_t{1} << g.q0;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const Complex a0 = a[i], a1 = a[i | bit];
        a[i] = c * a0 - sn * a1;
        a[i | bit] = sn * a0 + c * a1;
      }
      break;
    }
    case GateKind::kRZ: {
      const Complex m0 = std::polar(1.0, -0.5 * angle), m1 = std::polar(1.0, 0.5 * angle);
      const std::size_t bit = std::size_t{1} << g.q0;
      for (std::size_t i = 0; i < dim; ++i) a[i] *= (i & bit) ? m1 : m0;
      break;
    }
    case GateKind::kPauliRot: {
      const double c = std::cos(0.5 * angle), sn = std::sin(0.5 * angle);
      const Complex mis(0.0, -sn);
      const std::uint64_t x = g.pauli.x_mask();
      if (x == 0) {
        for (std::size_t b = 0; b < dim; ++b) a[b] *= c + mis * pauli_phase(g.pauli, b);
        break;
      }
      for (std::size_t b = 0; b < dim; ++b) {
        const std::size_t f = b ^ x;
        if (f < b) continue;
        const Complex ab = a[b], af = a[f];
        // (P psi)[f] = phase(b) psi[b], (P psi)[b] = phase(f) psi[f]
        a[b] = c * ab + mis * pauli_phase(g.pauli, f) * af;
        a[f] = c * af + mis * pauli_phase(g.pauli, b) * ab;
      }
      break;
    }
  }
}

Statevector apply(const Circuit& c, std::span<const double> params, const Statevector& s) {
  const std::vector<double> angles = c.gate_angles(params);
  return apply_with_angles(c, angles, s);
}

Statevector apply_with_angles(const Circuit& c, std::span<const double> angles, const Statevector& s) {
  check_size(s.n_qubits(), c.n_qubits());
  if (angles.size() != c.gates().size()) throw Error(ErrorCode::kInvalidArgument, "angle count does not match gates");
  Statevector out = s;
  for (std::size_t i = 0; i < angles.size(); ++i) apply_gate(c.gates()[i], angles[i], out);
  return out;
}

Statevector apply_pauli(const PauliString& p, const Statevector& s) {
  check_size(s.n_qubits(), p.n_qubits());
  Statevector out = s;
  auto& o = out.amplitudes();
  for (std::size_t b = 0; b < s.dim(); ++b) o[b ^ p.x_mask()] = pauli_phase(p, b) * s[b];
  return out;
}

std::vector<Complex> apply_operator(const QubitOperator& h, std::span<const Complex> psi) {
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  if (psi.size() != dim) throw Error(ErrorCode::kInvalidArgument, "vector length does not match operator");
  std::vector<Complex> out(dim);
  for (const auto& [p, c] : h.terms()) {
    const std::uint64_t x = p.x_mask();
    for (std::size_t b = 0; b < dim; ++b) out[b ^ x] += c * pauli_phase(p, b) * psi[b];
  }
  return out;
}

double expectation(const Statevector& s, const QubitOperator& h) {
  check_size(s.n_qubits(), h.n_qubits());
  const auto& a = s.amplitudes();
  std::vector<double> re, im;
  re.reserve(h.size());
  im.reserve(h.size());
  for (const auto& [p, c] : h.terms()) {
    const std::uint64_t x = p.x_mask();
    Complex acc{};
    for (std::size_t b = 0; b < a.size(); ++b) acc += std::conj(a[b ^ x]) * pauli_phase(p, b) * a[b];
    const Complex v = c * acc;
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  const double imag = pairwise_sum(im.data(), im.size());
  if (std::abs(imag) >= kImagResidueTol) {
    throw Error(ErrorCode::kInvalidArgument, "operator is not Hermitian: imaginary expectation residue " +
                                                 std::to_string(imag));
  }
  return pairwise_sum(re.data(), re.size());
}

Eigen::MatrixXcd to_dense(const QubitOperator& h) {
  if (h.n_qubits() > kOracleLimit) throw Error(ErrorCode::kUnsupported, "dense matrix limited to 14 qubits");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.n_qubits());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : h.terms()) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      const auto col = static_cast<std::uint64_t>(b);
      m(static_cast<Eigen::Index>(col ^ p.x_mask()), b) += c * pauli_phase(p, col);
    }
  }
  return m;
}

double exact_lowest_eigenvalue(const QubitOperator& h) {
  if (h.n_qubits() > kOracleLimit) {
    throw Error(ErrorCode::kUnsupported, "exact diagonalization limited to 14 qubits, operator has " +
                                             std::to_string(h.n_qubits()));
  }
  if (h.n_qubits() <= kDenseLimit) {
    const Eigen::MatrixXcd m = to_dense(h);
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly).eigenvalues()(0);
  }
  return lanczos_lowest(h);
}

std::vector<double> subspace_eigenvalues(const QubitOperator& h, std::span<const std::uint64_t> basis,
                                         std::size_t count) {
  std::unordered_map<std::uint64_t, Eigen::Index> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<Eigen::Index>(i));
  if (index.size() != basis.size()) throw Error(ErrorCode::kInvalidArgument, "duplicate basis states");
  const auto dim = static_cast<Eigen::Index>(basis.size());
  if (dim == 0) throw Error(ErrorCode::kInvalidArgument, "empty subspace");
  if (dim > 20000) throw Error(ErrorCode::kUnsupported, "subspace too large for dense diagonalization");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  std::unordered_map<std::uint64_t, Complex> leak;
  for (Eigen::Index j = 0; j < dim; ++j) {
    const std::uint64_t b = basis[static_cast<std::size_t>(j)];
    leak.clear();
    for (const auto& [p, c] : h.terms()) {
      const Complex v = c * pauli_phase(p, b);
      auto it = index.find(b ^ p.x_mask());
      if (it == index.end()) {
        leak[b ^ p.x_mask()] += v;
      } else {
        m(it->second, j) += v;
      }
    }
    for (const auto& [state, v] : leak) {
      if (std::abs(v) > 1e-10) throw Error(ErrorCode::kInvalidArgument, "operator couples the subspace to other states");
    }
  }
  const Eigen::VectorXd evals = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly).eigenvalues();
  std::vector<double> out;
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(dim, static_cast<Eigen::Index>(count)); ++i) out.push_back(evals(i));
  return out;
}

}  // namespace qforce
