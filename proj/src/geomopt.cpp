// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/geomopt.hpp"

#include <Eigen/Dense>
#include <cstdio>

#include "qforce/error.hpp"

namespace qforce {

namespace {

OptStep make_step(int iter, const Geometry& g, const CalcResult& r, const EngineConfig& cfg) {
  OptStep s{.iter = iter, .geometry = g, .energy = r.energy, .forces = *r.forces, .fmax = 0.0, .fnorm = 0.0, .bonds = {}, .angles = {}};
  s.fmax = max_atom_force(s.forces);
  s.fnorm = force_norm(s.forces);
  for (const auto& b : cfg.report_bonds) {
    s.bonds.push_back(bond_length(g, static_cast<std::size_t>(b[0]), static_cast<std::size_t>(b[1])));
  }
  for (const auto& a : cfg.report_angles) {
    s.angles.push_back(bond_angle(g, static_cast<std::size_t>(a[0]), static_cast<std::size_t>(a[1]),
                                  static_cast<std::size_t>(a[2])));
  }
  return s;
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& f) {
  Eigen::VectorXd v(f.size());
  for (Eigen::Index a = 0; a < f.rows(); ++a)
    for (Eigen::Index k = 0; k < 3; ++k) v[3 * a + k] = f(a, k);
  return v;
}

void check_report_indices(const Geometry& g, const EngineConfig& cfg) {
  const auto n = static_cast<int>(g.size());
  for (const auto& b : cfg.report_bonds) {
    if (b[0] >= n || b[1] >= n) throw Error(ErrorCode::kConfig, "report_bonds index exceeds atom count");
  }
  for (const auto& a : cfg.report_angles) {
    if (a[0] >= n || a[1] >= n || a[2] >= n) throw Error(ErrorCode::kConfig, "report_angles index exceeds atom count");
  }
}

}  // namespace

OptTrajectory optimize_geometry(Engine& engine, const Geometry& g0) {
  const EngineConfig& cfg = engine.config();
  check_report_indices(g0, cfg);
  OptTrajectory t;
  for (const auto& b : cfg.report_bonds) t.bond_labels.push_back("r_" + std::to_string(b[0]) + "_" + std::to_string(b[1]));
  for (const auto& a : cfg.report_angles) {
    t.angle_labels.push_back("a_" + std::to_string(a[0]) + "_" + std::to_string(a[1]) + "_" + std::to_string(a[2]));
  }

  const auto n = static_cast<Eigen::Index>(3 * g0.size());
  Eigen::MatrixXd hessian = kInitialHessian * Eigen::MatrixXd::Identity(n, n);
  Geometry g = g0;
  CalcResult r = engine.compute_forces(g);
  int evals = r.metadata.vqe_evals;
  t.steps.push_back(make_step(0, g, r, cfg));
  for (int iter = 1;; ++iter) {
    if (t.steps.back().fmax <= cfg.fmax) {
      t.converged = true;
      break;
    }
    if (iter > cfg.max_opt_steps) break;
    const Eigen::VectorXd f = flatten(*r.forces);
    Eigen::VectorXd step = hessian.selfadjointView<Eigen::Lower>().ldlt().solve(f);
    double longest = 0.0;
    for (Eigen::Index a = 0; a < n / 3; ++a) longest = std::max(longest, step.segment<3>(3 * a).norm());
    if (longest > kMaxAtomStep) step *= kMaxAtomStep / longest;

    const Geometry g_new = g.with_coordinates(g.coordinates() + step);
    CalcResult r_new = engine.compute_forces(g_new);
    evals += r_new.metadata.vqe_evals;
    // Gradient is -F.
    const Eigen::VectorXd y = flatten(*r.forces) - flatten(*r_new.forces);
    const double sy = step.dot(y);
    if (sy > 1e-12) {
      const Eigen::VectorXd bs = hessian * step;
      hessian += y * y.transpose() / sy - bs * bs.transpose() / step.dot(bs);
    }
    g = g_new;
    r = std::move(r_new);
    t.steps.push_back(make_step(iter, g, r, cfg));
  }
  t.metadata = r.metadata;
  t.metadata.vqe_evals = evals;
  return t;
}

OptTrajectory optimize_geometry(const Geometry& g0, const EngineConfig& cfg) {
  Engine e(cfg);
  return optimize_geometry(e, g0);
}

std::string format_trajectory_xyz(const OptTrajectory& t) {
  std::string out;
  char buf[160];
  for (const auto& s : t.steps) {
    out += std::to_string(s.geometry.size()) + "\n";
    std::snprintf(buf, sizeof buf, "iter=%d energy_hartree=%.12f fmax=%.6e\n", s.iter, s.energy, s.fmax);
    out += buf;
    for (const auto& a : s.geometry.atoms()) {
      std::snprintf(buf, sizeof buf, "%s %.10f %.10f %.10f\n", a.symbol.c_str(), a.position.x(), a.position.y(),
                    a.position.z());
      out += buf;
    }
  }
  return out;
}

std::string format_trajectory_table(const OptTrajectory& t) {
  std::string out = "iter\tenergy_hartree\tfmax\tfnorm";
  for (const auto& l : t.bond_labels) out += "\t" + l;
  for (const auto& l : t.angle_labels) out += "\t" + l;
  out += "\n";
  char buf[64];
  for (const auto& s : t.steps) {
    std::snprintf(buf, sizeof buf, "%d\t%.12f\t%.6e\t%.6e", s.iter, s.energy, s.fmax, s.fnorm);
    out += buf;
    for (double b : s.bonds) {
      std::snprintf(buf, sizeof buf, "\t%.8f", b);
      out += buf;
    }
    for (double a : s.angles) {
      std::snprintf(buf, sizeof buf, "\t%.6f", a);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace qforce
