// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qforce/ansatz.hpp"
#include "qforce/qubitmap.hpp"
#include "qforce/vqe.hpp"

namespace qforce {

/// Calculator settings. A configuration file is one flat JSON object whose
/// keys are exactly the names below; unknown keys are rejected.
///
///   basis                "STO-3G" | "6-31G" | "6-31G*"
///   active_electrons     int, 0 = no active-space reduction
///   active_orbitals      int, 0 = no active-space reduction
///   mapping              "jordan_wigner" | "parity" | "bravyi_kitaev"
///   two_qubit_reduction  bool, parity mapping only
///   ansatz               "uccsd" | "hardware_efficient"
///   ansatz_layers        int >= 1
///   optimizer            "lbfgs_parameter_shift" | "nelder_mead"
///   vqe_ftol             Hartree
///   vqe_gtol             gradient norm, L-BFGS only
///   vqe_max_evals        int >= 1
///   fd_step              Angstrom
///   fmax                 Hartree/Angstrom
///   max_opt_steps        int >= 0
///   warm_start           bool
///   seed                 unsigned int
///   report_bonds         [[i, j], ...]      zero-based atom indices
///   report_angles        [[i, j, k], ...]   vertex j
struct EngineConfig {
  std::string basis = "STO-3G";
  int active_electrons = 0;
  int active_orbitals = 0;
  MappingKind mapping = MappingKind::kJordanWigner;
  bool two_qubit_reduction = false;
  AnsatzSpec ansatz;
  OptimizerSpec optimizer;
  double fd_step = 1e-3;
  double fmax = 1e-5;
  int max_opt_steps = 100;
  bool warm_start = true;
  std::uint64_t seed = 7;
  std::vector<std::array<int, 2>> report_bonds;
  std::vector<std::array<int, 3>> report_angles;

  bool uses_active_space() const { return active_electrons > 0 || active_orbitals > 0; }

  /// Throws kConfig on out-of-range values.
  void validate() const;
};

EngineConfig parse_config(const std::string& json_text);
EngineConfig read_config_file(const std::string& path);
std::string config_to_json(const EngineConfig& cfg);

}  // namespace qforce
