// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "qforce/chemcore.hpp"
#include "qforce/engine.hpp"

namespace qforce {

/// 70 eV/A^2 in Hartree/A^2.
inline constexpr double kInitialHessian = 70.0 / kEvPerHartree;
inline constexpr double kMaxAtomStep = 0.2;  // Angstrom

struct OptStep {
  int iter = 0;
  Geometry geometry;
  double energy = 0.0;  // Hartree
  Eigen::MatrixXd forces;  // N x 3, Hartree/Angstrom
  double fmax = 0.0;  // max per-atom |F|
  double fnorm = 0.0;  // |F| over all 3N components
  std::vector<double> bonds;  // Angstrom, in report_bonds order
  std::vector<double> angles;  // degrees, in report_angles order
};

struct OptTrajectory {
  std::vector<OptStep> steps;
  std::vector<std::string> bond_labels;  // r_i_j
  std::vector<std::string> angle_labels;  // a_i_j_k
  bool converged = false;
  CalcMetadata metadata;  // last force call; vqe_evals summed over the run

  const OptStep& final_step() const { return steps.back(); }
};

/// Cartesian BFGS without line search. B starts at kInitialHessian * I, the
/// step B^-1 F is scaled down so no atom moves more than kMaxAtomStep, and the
/// update is skipped when s.y <= 1e-12. Stops when the max per-atom force is
/// at most cfg.fmax or after cfg.max_opt_steps steps.
OptTrajectory optimize_geometry(Engine& engine, const Geometry& g0);
OptTrajectory optimize_geometry(const Geometry& g0, const EngineConfig& cfg);

/// One XYZ frame per step; the comment line carries iter and energy.
std::string format_trajectory_xyz(const OptTrajectory& t);
/// Tab-separated: iter, energy_hartree, fmax, fnorm, then bond and angle columns.
std::string format_trajectory_table(const OptTrajectory& t);

}  // namespace qforce
