// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "qforce/engine.hpp"

namespace qforce {

/// Line-delimited JSON protocol, one object per line in each direction.
///
/// Requests:
///   {"op":"init", "config":{...}}      or the config keys inline, or
///   {"op":"init", "config_path":"..."}; a repeated init reconfigures
///   {"op":"energy", "geometry":G}
///   {"op":"forces", "geometry":G}
///   {"op":"shutdown"}
/// where G is {"symbols":["H","H"], "positions":[[x,y,z],...]} in Angstrom.
///
/// Responses:
///   {"ok":true, "energy_hartree":E, "forces_hartree_per_angstrom":[[...]], "metadata":{...}}
///   {"ok":false, "error":"..."}
class ServeSession {
 public:
  /// Handles one request line and returns the response line (no newline).
  std::string handle(const std::string& line);

  bool shutdown_requested() const { return shutdown_; }
  bool initialized() const { return engine_ != nullptr; }

 private:
  std::unique_ptr<Engine> engine_;
  bool shutdown_ = false;
};

/// Reads requests until shutdown or end of input. Returns the exit status.
int serve(std::istream& in, std::ostream& out);

}  // namespace qforce
