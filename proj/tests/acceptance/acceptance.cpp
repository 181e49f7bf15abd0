// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance checks A1-A7. Usage: acceptance [A1 ... A7 | all]
// Prints one PASS/FAIL line per criterion; exit status is nonzero if any fail.
#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles/determinant_ci.hpp"
#include "qforce/ansatz.hpp"
#include "qforce/engine.hpp"
#include "qforce/geomopt.hpp"
#include "qforce/statesim.hpp"
#include "reference_values.hpp"
#include "support.hpp"

using namespace qforce;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Eigen::VectorXd full_spectrum(const QubitOperator& h) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(to_dense(h), Eigen::EigenvaluesOnly).eigenvalues();
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

double h2_fci(double r) { return oracle::ci_ground_energy(testing::prepare(make_h2(r), "STO-3G").full); }

Outcome a1() {
  const Geometry g = make_h2(0.7414);
  const CalcResult r = compute_energy(g, EngineConfig{});
  const QubitProblem p = build_problem(g, EngineConfig{});
  const double exact = exact_lowest_eigenvalue(p.qubit_hamiltonian);
  const double d_vqe = std::abs(r.energy - exact);
  const double d_ref = std::abs(exact - reference::kH2EqFciEnergy);
  return {d_vqe <= 1e-6 && d_ref <= 1e-6,
          fmt("E_vqe=%.10f E_exact=%.10f |dE|=%.2e (tol 1e-6); |E_exact-E_fci_ref|=%.2e (tol 1e-6)", r.energy, exact,
              d_vqe, d_ref)};
}

Outcome a2() {
  std::vector<MolecularHamiltonian> sets{testing::prepare(make_h2(0.7414), "STO-3G").full};
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 5; ++i) sets.push_back(testing::random_hamiltonian(2, 2, rng));
  double worst_spec = 0.0, worst_red = 0.0;
  for (const auto& h : sets) {
    const Eigen::VectorXd jw = full_spectrum(map(h, MappingKind::kJordanWigner, false));
    const Eigen::VectorXd bk = full_spectrum(map(h, MappingKind::kBravyiKitaev, false));
    worst_spec = std::max(worst_spec, (jw - bk).cwiseAbs().maxCoeff());
    const FermionQubitMapper jw_map(2, MappingKind::kJordanWigner, false, 1, 1);
    const double sector = subspace_eigenvalues(jw_map.map(h), sector_basis(jw_map), 1)[0];
    const double reduced = exact_lowest_eigenvalue(map(h, MappingKind::kParity, true));
    worst_red = std::max(worst_red, std::abs(sector - reduced));
  }
  return {worst_spec <= 1e-9 && worst_red <= 1e-9,
          fmt("6 integral sets: max |spec_JW - spec_BK|=%.2e (tol 1e-9); max |E_parity2q - E_JW_sector|=%.2e (tol 1e-9)",
              worst_spec, worst_red)};
}

Outcome a3() {
  EngineConfig tight;
  tight.optimizer.ftol = 1e-14;
  tight.optimizer.gtol = 1e-10;
  const Geometry g = make_h2(0.7414);
  EngineConfig ref_cfg = tight;
  ref_cfg.fd_step = 1e-5;
  const double f_ref = (*compute_forces(g, ref_cfg).forces)(1, 2);
  Engine e(tight);
  const double e0 = e.compute_energy(g).energy;
  const std::vector<double> steps{0.02, 0.01, 0.005, 0.0025};
  std::vector<double> err_c, err_f;
  for (double d : steps) {
    const double ep = e.compute_energy(displace(g, 1, 2, d)).energy;
    const double em = e.compute_energy(displace(g, 1, 2, -d)).energy;
    err_c.push_back(std::abs(-(ep - em) / (2 * d) - f_ref));
    err_f.push_back(std::abs(-(ep - e0) / d - f_ref));
  }
  const double sc = slope(steps, err_c), sf = slope(steps, err_f);
  return {std::abs(sc - 2.0) <= 0.1 && std::abs(sf - 1.0) <= 0.1,
          fmt("F_ref=%.8f; central errors %.2e %.2e %.2e %.2e slope=%.3f (2.0+-0.1); one-sided slope=%.3f (1.0+-0.1)",
              f_ref, err_c[0], err_c[1], err_c[2], err_c[3], sc, sf)};
}

Outcome a4() {
  const OptTrajectory t = optimize_geometry(make_h2(1.0), EngineConfig{});
  const OptStep& last = t.final_step();
  const double r = bond_length(last.geometry, 0, 1);
  double r_scan = 0.0, e_scan = 0.0;
  for (int k = 0; k <= 800; ++k) {
    const double rr = 0.70 + 1e-4 * k;
    const double e = h2_fci(rr);
    if (k == 0 || e < e_scan) {
      r_scan = rr;
      e_scan = e;
    }
  }
  const double dr = std::abs(r - r_scan);
  return {t.converged && last.fmax <= 1e-5 && dr <= 1e-3,
          fmt("converged=%d after %d steps, fmax=%.2e (tol 1e-5); r=%.5f r_scan=%.4f |dr|=%.2e (tol 1e-3)",
              t.converged, last.iter, last.fmax, r, r_scan, dr)};
}

Outcome a5() {
  EngineConfig cfg;
  cfg.active_electrons = 4;
  cfg.active_orbitals = 4;
  cfg.report_bonds = {{0, 1}, {0, 2}};
  cfg.report_angles = {{1, 0, 2}};
  const OptTrajectory t = optimize_geometry(make_water(0.96, 104.5), cfg);
  const OptStep& last = t.final_step();
  const auto p = testing::prepare(last.geometry, "STO-3G");
  const double casci = oracle::ci_ground_energy(select_active_space(p.full, p.scf, {4, 4}));
  const double de = std::abs(last.energy - casci);
  return {t.converged && last.fmax <= 1e-5 && de <= 1e-6,
          fmt("converged=%d after %d steps, fmax=%.2e (tol 1e-5); rOH=%.5f aHOH=%.3f; E=%.9f CASCI=%.9f |dE|=%.2e "
              "(tol 1e-6)",
              t.converged, last.iter, last.fmax, last.bonds[0], last.angles[0], last.energy, casci, de)};
}

Outcome a6() {
  constexpr double kR = 0.94767139, kA = 105.6029291, kE = -76.009489361;
  EngineConfig cfg;
  cfg.basis = "6-31G*";
  cfg.active_electrons = 4;
  cfg.active_orbitals = 4;
  cfg.report_bonds = {{0, 1}, {0, 2}};
  cfg.report_angles = {{1, 0, 2}};
  const OptTrajectory t = optimize_geometry(make_water(0.96, 104.5), cfg);
  const OptStep& last = t.final_step();
  const double r = 0.5 * (last.bonds[0] + last.bonds[1]);
  const double dr = std::abs(r - kR), da = std::abs(last.angles[0] - kA), de = std::abs(last.energy - kE);
  return {t.converged && dr <= 0.01 && da <= 1.0 && de <= 0.05,
          fmt("converged=%d after %d steps; rOH=%.5f (|d|=%.2e, tol 0.01); aHOH=%.3f (|d|=%.2e, tol 1.0); E=%.9f "
              "(|d|=%.2e, tol 0.05)",
              t.converged, last.iter, r, dr, last.angles[0], da, last.energy, de)};
}

// Compact battery of the invariant checks; the unit suites cover them in depth.
Outcome a7() {
  std::map<std::string, bool> checks;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-2.0, 2.0);

  const auto w = testing::prepare(make_water(0.96, 104.5), "STO-3G");
  const MolecularHamiltonian as = select_active_space(w.full, w.scf, {4, 4});
  const FermionQubitMapper m(4, MappingKind::kJordanWigner, false, 2, 2);
  const QubitOperator qh = m.map(as);
  const double sector_ground = oracle::ci_ground_energy(as);
  const Circuit uccsd = build_ansatz({}, m);
  const Circuit hea = build_ansatz({AnsatzKind::kHardwareEfficient, 2}, m);

  bool bound = true, shift = true, norm = true;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(uccsd.n_params()), y(hea.n_params());
    for (auto& v : x) v = u(rng);
    for (auto& v : y) v = u(rng);
    bound = bound && vqe_energy(qh, uccsd, Statevector(8), x) >= sector_ground - 1e-10;
    norm = norm && std::abs(apply(hea, y, Statevector(8)).norm() - 1.0) < 1e-12;
    if (trial < 3) {
      const auto g = parameter_shift_gradient(qh, hea, Statevector(8), y);
      for (std::size_t k = 0; k < y.size(); ++k) {
        auto yp = y, ym = y;
        yp[k] += 1e-5;
        ym[k] -= 1e-5;
        const double fd = (vqe_energy(qh, hea, Statevector(8), yp) - vqe_energy(qh, hea, Statevector(8), ym)) / 2e-5;
        shift = shift && std::abs(fd - g[k]) < 1e-6;
      }
    }
  }
  checks["variational_bound"] = bound;
  checks["parameter_shift_vs_fd"] = shift;
  checks["norm_preservation"] = norm;

  const MolecularHamiltonian rt = parse_fcidump(format_fcidump(as));
  bool round_trip = std::abs(rt.e_core - as.e_core) < 1e-12 && (rt.h1 - as.h1).cwiseAbs().maxCoeff() < 1e-12;
  for (std::size_t i = 0; i < as.g2.data().size(); ++i) round_trip = round_trip && std::abs(rt.g2.data()[i] - as.g2.data()[i]) < 1e-12;
  checks["fcidump_round_trip"] = round_trip;

  EngineConfig cfg;
  cfg.active_electrons = 4;
  cfg.active_orbitals = 4;
  const Geometry g = make_water(0.99, 101.0);
  const double e0 = compute_energy(g, cfg).energy;
  const Eigen::Matrix3d rot = Eigen::AngleAxisd(1.2, Vec3(0.2, 0.7, -0.4).normalized()).toRotationMatrix();
  Eigen::VectorXd moved = g.coordinates();
  for (Eigen::Index a = 0; a < 3; ++a) moved.segment<3>(3 * a) = rot * moved.segment<3>(3 * a) + Vec3(1.0, -2.0, 0.5);
  checks["rigid_motion_invariance"] = std::abs(compute_energy(g.with_coordinates(moved), cfg).energy - e0) < 1e-9;

  const CalcResult f1 = compute_forces(g, cfg);
  checks["net_force_residual"] = f1.forces->colwise().sum().cwiseAbs().maxCoeff() < 1e-5;
  const CalcResult f2 = compute_forces(g, cfg);
  checks["determinism"] = f1.energy == f2.energy && *f1.forces == *f2.forces;

  bool all = true;
  std::string detail;
  for (const auto& [name, ok] : checks) {
    all = all && ok;
    if (!detail.empty()) detail += " ";
    detail += name + "=" + (ok ? "ok" : "FAILED");
  }
  return {all, detail};
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"A1", "H2 end-to-end energy", 30, a1},
      {"A2", "mapping isospectrality", 60, a2},
      {"A3", "finite-difference order", 600, a3},
      {"A4", "H2 geometry optimization", 900, a4},
      {"A5", "water STO-3G AS(4,4) optimization", 3600, a5},
      {"A6", "water 6-31G* AS(4,4) optimization (stretch)", 14400, a6},
      {"A7", "property suites", 1200, a7},
  };
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.empty()) wanted.push_back("all");
  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (wanted[0] != "all" && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && secs < c.limit_s;
    if (!pass) ++failures;
    std::printf("%s %s [%s] %s; runtime %.1f s (limit %.0f s)\n", c.id, pass ? "PASS" : "FAIL", c.title,
                o.detail.c_str(), secs, c.limit_s);
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "acceptance: no criterion matches the arguments\n");
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
