// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qforce/ansatz.hpp"
#include "qforce/pauli.hpp"
#include "qforce/statesim.hpp"

namespace qforce {

enum class OptimizerKind { kNelderMead, kLbfgsParameterShift };

std::string_view to_string(OptimizerKind kind);
/// nelder_mead or lbfgs_parameter_shift (alias lbfgs).
OptimizerKind parse_optimizer(std::string_view name);

struct OptimizerSpec {
  OptimizerKind kind = OptimizerKind::kLbfgsParameterShift;
  int max_evals = 5000;
  double ftol = 1e-9;  // Hartree
  double gtol = 1e-7;  // Euclidean norm of the gradient, L-BFGS only

  void validate() const;
};

struct VQEResult {
  double energy = 0.0;
  std::vector<double> params;
  int n_cost_evals = 0;  // every circuit evaluation, shifted ones included
  std::vector<std::pair<int, double>> history;  // (evaluation index, energy) at trial points
  bool converged = false;
};

/// E(theta) = <ref| U(theta)^dag H U(theta) |ref>.
double vqe_energy(const QubitOperator& h, const Circuit& ansatz, const Statevector& reference,
                  std::span<const double> params);

/// Exact gradient by the two-point shift rule, gate by gate: every
/// parameterized gate is a rotation exp(-i a/2 P) with P^2 = 1, so
/// dE/da = [E(a + pi/2) - E(a - pi/2)] / 2, chained through a = scale * theta.
std::vector<double> parameter_shift_gradient(const QubitOperator& h, const Circuit& ansatz,
                                             const Statevector& reference, std::span<const double> params);

/// Zeros for uccsd, uniform in [-0.01, 0.01] from `seed` for hardware_efficient.
std::vector<double> initial_parameters(AnsatzKind kind, std::size_t n_params, std::uint64_t seed);

/// Minimizes vqe_energy from `init`. Returns the best point seen.
///   nelder_mead: stops when the simplex energy spread is below ftol.
///   lbfgs_parameter_shift: stops when |g| < gtol or an iteration lowers E by
///     less than ftol.
/// Both stop unconverged when max_evals is exhausted.
VQEResult run_vqe(const QubitOperator& h, const Circuit& ansatz, const Statevector& reference,
                  std::span<const double> init, const OptimizerSpec& opt);

/// Builds the ansatz for `mapper`, starts from initial_parameters(seed) and
/// runs run_vqe.
VQEResult run_vqe(const QubitOperator& h, const AnsatzSpec& spec, const FermionQubitMapper& mapper,
                  const OptimizerSpec& opt, std::uint64_t seed);

}  // namespace qforce
