// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/vqe.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "qforce/error.hpp"

namespace qforce {

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); }

// Counts evaluations, enforces the budget and keeps history and best point.
class Objective {
 public:
  Objective(const QubitOperator& h, const Circuit& c, const Statevector& ref, int max_evals)
      : h_(h), c_(c), ref_(ref), max_evals_(max_evals) {}

  bool exhausted(int needed = 1) const { return evals_ + needed > max_evals_; }
  int gradient_cost() const {
    int n = 0;
    for (const auto& g : c_.gates()) n += g.parameterized() ? 2 : 0;
    return n;
  }

  double value(const Vec& x) {
    ++evals_;
    const double e = vqe_energy(h_, c_, ref_, x);
    history_.emplace_back(evals_, e);
    if (best_x_.empty() || e < best_e_) {
      best_e_ = e;
      best_x_ = x;
    }
    return e;
  }

  Vec gradient(const Vec& x) {
    evals_ += gradient_cost();
    return parameter_shift_gradient(h_, c_, ref_, x);
  }

  VQEResult result(bool converged) const {
    return {best_e_, best_x_, evals_, history_, converged};
  }

 private:
  const QubitOperator& h_;
  const Circuit& c_;
  const Statevector& ref_;
  int max_evals_;
  int evals_ = 0;
  std::vector<std::pair<int, double>> history_;
  double best_e_ = 0.0;
  Vec best_x_;
};

VQEResult lbfgs(Objective& obj, Vec x, const OptimizerSpec& opt) {
  constexpr std::size_t kMemory = 10;
  constexpr double kArmijo = 1e-4;
  const std::size_t n = x.size();
  double f = obj.value(x);
  if (obj.exhausted(obj.gradient_cost())) return obj.result(false);
  Vec g = obj.gradient(x);
  std::deque<std::pair<Vec, Vec>> memory;  // (s, y)
  bool first = true;
  while (true) {
    const double gnorm = std::sqrt(dot(g, g));
    if (gnorm < opt.gtol) return obj.result(true);

    // Two-loop recursion for d = -H g.
    Vec q = g;
    std::vector<double> alpha(memory.size());
    for (std::size_t k = memory.size(); k-- > 0;) {
      const auto& [s, y] = memory[k];
      alpha[k] = dot(s, q) / dot(y, s);
      for (std::size_t i = 0; i < n; ++i) q[i] -= alpha[k] * y[i];
    }
    double gamma = 1.0;
    if (!memory.empty()) gamma = dot(memory.back().first, memory.back().second) / dot(memory.back().second, memory.back().second);
    for (auto& v : q) v *= gamma;
    for (std::size_t k = 0; k < memory.size(); ++k) {
      const auto& [s, y] = memory[k];
      const double beta = dot(y, q) / dot(y, s);
      for (std::size_t i = 0; i < n; ++i) q[i] += s[i] * (alpha[k] - beta);
    }
    Vec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = -q[i];
    double slope = dot(g, d);
    if (slope >= 0.0) {
      memory.clear();
      for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
      slope = -gnorm * gnorm;
    }

    double step = first ? std::min(1.0, 1.0 / gnorm) : 1.0;
    first = false;
    Vec x_new(n);
    double f_new = f;
    bool accepted = false;
    for (int tries = 0; tries < 40; ++tries) {
      if (obj.exhausted()) return obj.result(false);
      for (std::size_t i = 0; i < n; ++i) x_new[i] = x[i] + step * d[i];
      f_new = obj.value(x_new);
      if (f_new <= f + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    // No decrease along a descent direction: at the resolution limit.
    if (!accepted) return obj.result(true);

    const double df = f - f_new;
    if (obj.exhausted(obj.gradient_cost())) return obj.result(df < opt.ftol);
    Vec g_new = obj.gradient(x_new);
    Vec s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = x_new[i] - x[i];
      y[i] = g_new[i] - g[i];
    }
    if (dot(s, y) > 1e-12 * std::max(1.0, dot(s, s))) {
      memory.emplace_back(std::move(s), std::move(y));
      if (memory.size() > kMemory) memory.pop_front();
    }
    x = std::move(x_new);
    f = f_new;
    g = std::move(g_new);
    if (df < opt.ftol) return obj.result(true);
  }
}

VQEResult nelder_mead(Objective& obj, const Vec& x0, const OptimizerSpec& opt) {
  constexpr double kStep = 0.1;
  const std::size_t n = x0.size();
  std::vector<Vec> simplex{x0};
  std::vector<double> fv;
  if (obj.exhausted()) return obj.result(false);
  fv.push_back(obj.value(x0));
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = x0;
    v[i] += kStep;
    if (obj.exhausted()) return obj.result(false);
    fv.push_back(obj.value(v));
    simplex.push_back(std::move(v));
  }
  std::vector<std::size_t> order(n + 1);
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (fv[worst] - fv[best] < opt.ftol) return obj.result(true);

    Vec centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[order[k]][i] / static_cast<double>(n);
    }
    auto along = [&](double t) {
      Vec v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = centroid[i] + t * (simplex[worst][i] - centroid[i]);
      return v;
    };
    if (obj.exhausted()) return obj.result(false);
    Vec xr = along(-1.0);
    const double fr = obj.value(xr);
    if (fr < fv[best]) {
      if (obj.exhausted()) return obj.result(false);
      Vec xe = along(-2.0);
      const double fe = obj.value(xe);
      if (fe < fr) {
        simplex[worst] = std::move(xe);
        fv[worst] = fe;
      } else {
        simplex[worst] = std::move(xr);
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      simplex[worst] = std::move(xr);
      fv[worst] = fr;
      continue;
    }
    if (obj.exhausted()) return obj.result(false);
    const bool outside = fr < fv[worst];
    Vec xc = along(outside ? -0.5 : 0.5);
    const double fc = obj.value(xc);
    if (fc < (outside ? fr : fv[worst])) {
      simplex[worst] = std::move(xc);
      fv[worst] = fc;
      continue;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      Vec& v = simplex[order[k]];
      for (std::size_t i = 0; i < n; ++i) v[i] = simplex[best][i] + 0.5 * (v[i] - simplex[best][i]);
      if (obj.exhausted()) return obj.result(false);
      fv[order[k]] = obj.value(v);
    }
  }
}

}  // namespace

std::string_view to_string(OptimizerKind kind) {
  return kind == OptimizerKind::kNelderMead ? "nelder_mead" : "lbfgs_parameter_shift";
}

OptimizerKind parse_optimizer(std::string_view name) {
  std::string s(name);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "nelder_mead") return OptimizerKind::kNelderMead;
  if (s == "lbfgs_parameter_shift" || s == "lbfgs") return OptimizerKind::kLbfgsParameterShift;
  throw Error(ErrorCode::kConfig, "unknown optimizer '" + std::string(name) + "'");
}

void OptimizerSpec::validate() const {
  if (max_evals < 1) throw Error(ErrorCode::kConfig, "vqe_max_evals must be at least 1");
  if (!(ftol > 0.0)) throw Error(ErrorCode::kConfig, "vqe_ftol must be positive");
  if (!(gtol > 0.0)) throw Error(ErrorCode::kConfig, "vqe_gtol must be positive");
}

double vqe_energy(const QubitOperator& h, const Circuit& ansatz, const Statevector& reference,
                  std::span<const double> params) {
  return expectation(apply(ansatz, params, reference), h);
}

std::vector<double> parameter_shift_gradient(const QubitOperator& h, const Circuit& ansatz,
                                             const Statevector& reference, std::span<const double> params) {
  std::vector<double> angles = ansatz.gate_angles(params);
  std::vector<double> grad(ansatz.n_params(), 0.0);
  constexpr double kShift = std::numbers::pi / 2;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const Gate& gate = ansatz.gates()[i];
    if (!gate.parameterized()) continue;
    const double a = angles[i];
    angles[i] = a + kShift;
    const double plus = expectation(apply_with_angles(ansatz, angles, reference), h);
    angles[i] = a - kShift;
    const double minus = expectation(apply_with_angles(ansatz, angles, reference), h);
    angles[i] = a;
    grad[static_cast<std::size_t>(gate.param)] += gate.scale * 0.5 * (plus - minus);
  }
  return grad;
}

std::vector<double> initial_parameters(AnsatzKind kind, std::size_t n_params, std::uint64_t seed) {
  std::vector<double> x(n_params, 0.0);
  if (kind == AnsatzKind::kHardwareEfficient) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-0.01, 0.01);
    for (auto& v : x) v = dist(rng);
  }
  return x;
}

VQEResult run_vqe(const QubitOperator& h, const Circuit& ansatz, const Statevector& reference,
                  std::span<const double> init, const OptimizerSpec& opt) {
  opt.validate();
  if (init.size() != ansatz.n_params()) {
    throw Error(ErrorCode::kInvalidArgument, "initial parameter count " + std::to_string(init.size()) +
                                                 " does not match ansatz (" + std::to_string(ansatz.n_params()) + ")");
  }
  if (h.n_qubits() != ansatz.n_qubits() || reference.n_qubits() != ansatz.n_qubits()) {
    throw Error(ErrorCode::kInvalidArgument, "Hamiltonian, ansatz and reference qubit counts differ");
  }
  if (h.max_imag() >= 1e-9) throw Error(ErrorCode::kInvalidArgument, "Hamiltonian has imaginary coefficients");
  Objective obj(h, ansatz, reference, opt.max_evals);
  Vec x(init.begin(), init.end());
  if (x.empty()) {
    obj.value(x);
    return obj.result(true);
  }
  return opt.kind == OptimizerKind::kNelderMead ? nelder_mead(obj, x, opt) : lbfgs(obj, x, opt);
}

VQEResult run_vqe(const QubitOperator& h, const AnsatzSpec& spec, const FermionQubitMapper& mapper,
                  const OptimizerSpec& opt, std::uint64_t seed) {
  const Circuit c = build_ansatz(spec, mapper);
  const std::vector<double> init = initial_parameters(spec.kind, c.n_params(), seed);
  return run_vqe(h, c, Statevector(mapper.n_qubits()), init, opt);
}

}  // namespace qforce
