// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/engine.hpp"

#include <chrono>
#include <cmath>

#include "qforce/ansatz.hpp"
#include "qforce/basis.hpp"
#include "qforce/error.hpp"
#include "qforce/integrals.hpp"
#include "qforce/meanfield.hpp"
#include "qforce/statesim.hpp"

namespace qforce {

namespace {

// Finite-difference forces need SCF energies far below the FD signal.
ScfOptions engine_scf_options() {
  ScfOptions o;
  o.density_tol = 1e-10;
  o.energy_tol = 1e-12;
  o.max_iter = 300;
  return o;
}

constexpr std::size_t kCacheLimit = 4096;

void combinations(std::size_t n, std::size_t k, std::size_t offset, std::vector<std::uint64_t>& out) {
  if (k > n) return;
  if (k == 0) {
    out.push_back(0);
    return;
  }
  std::uint64_t mask = (1ULL << k) - 1;
  const std::uint64_t limit = 1ULL << n;
  while (mask < limit) {
    out.push_back(mask << offset);
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

}  // namespace

QubitProblem build_problem(const Geometry& g, const EngineConfig& cfg) {
  const BasisSet basis = build_basis(cfg.basis, g);
  const IntegralSet ints = compute_integrals(basis, g);
  const int n_elec = g.total_nuclear_charge();
  ScfResult scf = run_rhf(ints, n_elec, engine_scf_options());
  const MOIntegrals mo = transform_to_mo(ints, scf.coefficients);
  MolecularHamiltonian h = build_full(mo, ints.nuclear_repulsion, n_elec);
  if (cfg.uses_active_space()) h = select_active_space(h, scf, {cfg.active_electrons, cfg.active_orbitals});
  FermionQubitMapper mapper(h.n_orb(), cfg.mapping, cfg.two_qubit_reduction, h.n_elec / 2, h.n_elec / 2);
  QubitOperator qh = mapper.map(h);
  return {std::move(scf), std::move(h), std::move(mapper), std::move(qh)};
}

std::vector<std::uint64_t> sector_basis(const FermionQubitMapper& mapper) {
  const std::size_t n = mapper.n_orbitals();
  std::vector<std::uint64_t> alpha, beta;
  combinations(n, static_cast<std::size_t>(mapper.n_alpha()), 0, alpha);
  combinations(n, static_cast<std::size_t>(mapper.n_beta()), n, beta);
  std::vector<std::uint64_t> out;
  out.reserve(alpha.size() * beta.size());
  for (auto b : beta)
    for (auto a : alpha) out.push_back(mapper.encode_occupation(a | b));
  return out;
}

double max_atom_force(const Eigen::MatrixXd& forces) {
  double m = 0.0;
  for (Eigen::Index a = 0; a < forces.rows(); ++a) m = std::max(m, forces.row(a).norm());
  return m;
}

double force_norm(const Eigen::MatrixXd& forces) { return forces.norm(); }

Engine::Engine(EngineConfig cfg) : cfg_(std::move(cfg)) { cfg_.validate(); }

void Engine::reset() {
  last_params_.clear();
  cache_.clear();
}

const Engine::Evaluation& Engine::evaluate(const Geometry& g, const std::vector<double>* start) {
  const std::size_t key = g.hash();
  auto [lo, hi] = cache_.equal_range(key);
  for (auto it = lo; it != hi; ++it) {
    if (it->second.geometry == g) return it->second;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const QubitProblem problem = build_problem(g, cfg_);
  const Circuit circuit = build_ansatz(cfg_.ansatz, problem.mapper);
  std::vector<double> init;
  if (cfg_.warm_start && start != nullptr && start->size() == circuit.n_params()) {
    init = *start;
  } else {
    init = initial_parameters(cfg_.ansatz.kind, circuit.n_params(), cfg_.seed);
  }
  const VQEResult r = run_vqe(problem.qubit_hamiltonian, circuit, Statevector(circuit.n_qubits()), init, cfg_.optimizer);
  CalcMetadata meta;
  meta.basis = cfg_.basis;
  meta.mapping = std::string(to_string(cfg_.mapping));
  meta.two_qubit_reduction = cfg_.two_qubit_reduction;
  meta.ansatz = std::string(to_string(cfg_.ansatz.kind));
  meta.optimizer = std::string(to_string(cfg_.optimizer.kind));
  meta.n_qubits = circuit.n_qubits();
  meta.n_params = circuit.n_params();
  meta.n_pauli_terms = problem.qubit_hamiltonian.size();
  meta.hf_energy = problem.scf.e_total;
  meta.vqe_evals = r.n_cost_evals;
  meta.vqe_converged = r.converged;
  meta.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (cache_.size() >= kCacheLimit) cache_.clear();
  auto it = cache_.emplace(key, Evaluation{g, r.energy, r.params, meta});
  return it->second;
}

CalcResult Engine::compute_energy(const Geometry& g) {
  const Evaluation& e = evaluate(g, last_params_.empty() ? nullptr : &last_params_);
  last_params_ = e.params;
  return {e.energy, std::nullopt, e.metadata};
}

CalcResult Engine::compute_forces(const Geometry& g) {
  const auto t0 = std::chrono::steady_clock::now();
  CalcResult center = compute_energy(g);
  const std::vector<double> center_params = last_params_;
  const double h = cfg_.fd_step;
  Eigen::MatrixXd forces(static_cast<Eigen::Index>(g.size()), 3);
  CalcMetadata meta = center.metadata;
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (int k = 0; k < 3; ++k) {
      double e[2];
      for (int side = 0; side < 2; ++side) {
        const double delta = side == 0 ? h : -h;
        try {
          const Evaluation& ev = evaluate(displace(g, a, k, delta), &center_params);
          e[side] = ev.energy;
          meta.vqe_evals += ev.metadata.vqe_evals;
          meta.vqe_converged = meta.vqe_converged && ev.metadata.vqe_converged;
        } catch (const Error& err) {
          throw Error(err.code(), "displacement atom " + std::to_string(a) + " axis " + "xyz"[k] +
                                      (side == 0 ? " +" : " -") + std::to_string(h) + " A: " + err.what());
        }
      }
      forces(static_cast<Eigen::Index>(a), k) = -(e[0] - e[1]) / (2.0 * h);
    }
  }
  last_params_ = center_params;
  meta.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {center.energy, forces, meta};
}

SpectrumReport Engine::spectrum(const Geometry& g, std::size_t count) {
  const QubitProblem problem = build_problem(g, cfg_);
  const std::vector<std::uint64_t> basis = sector_basis(problem.mapper);
  SpectrumReport r;
  r.eigenvalues = subspace_eigenvalues(problem.qubit_hamiltonian, basis, count);
  r.n_qubits = problem.mapper.n_qubits();
  r.n_pauli_terms = problem.qubit_hamiltonian.size();
  r.sector_dim = basis.size();
  r.hf_energy = problem.scf.e_total;
  return r;
}

CalcResult compute_energy(const Geometry& g, const EngineConfig& cfg) {
  Engine e(cfg);
  return e.compute_energy(g);
}

CalcResult compute_forces(const Geometry& g, const EngineConfig& cfg) {
  Engine e(cfg);
  return e.compute_forces(g);
}

}  // namespace qforce
