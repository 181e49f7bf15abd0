// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/serve.hpp"

#include <istream>
#include <ostream>

#include "config_json.hpp"
#include "qforce/error.hpp"

namespace qforce {

namespace {

using nlohmann::json;

Geometry geometry_from_json(const json& j) {
  if (j.is_string()) return parse_xyz(j.get<std::string>());
  if (!j.is_object() || !j.contains("symbols") || !j.contains("positions")) {
    throw Error(ErrorCode::kParse, "geometry needs 'symbols' and 'positions'");
  }
  const json& sym = j.at("symbols");
  const json& pos = j.at("positions");
  if (!sym.is_array() || !pos.is_array() || sym.size() != pos.size()) {
    throw Error(ErrorCode::kParse, "geometry 'symbols' and 'positions' must be arrays of equal length");
  }
  std::vector<std::string> symbols;
  std::vector<Vec3> positions;
  for (std::size_t i = 0; i < sym.size(); ++i) {
    if (!sym[i].is_string()) throw Error(ErrorCode::kParse, "geometry symbol must be a string");
    const json& p = pos[i];
    if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() || !p[2].is_number()) {
      throw Error(ErrorCode::kParse, "geometry position must be three numbers");
    }
    symbols.push_back(sym[i].get<std::string>());
    positions.emplace_back(p[0].get<double>(), p[1].get<double>(), p[2].get<double>());
  }
  return Geometry::from_symbols(symbols, positions);
}

json metadata_json(const CalcMetadata& m) {
  return {{"basis", m.basis},
          {"mapping", m.mapping},
          {"two_qubit_reduction", m.two_qubit_reduction},
          {"ansatz", m.ansatz},
          {"optimizer", m.optimizer},
          {"n_qubits", m.n_qubits},
          {"n_params", m.n_params},
          {"n_pauli_terms", m.n_pauli_terms},
          {"hf_energy_hartree", m.hf_energy},
          {"vqe_evals", m.vqe_evals},
          {"vqe_converged", m.vqe_converged},
          {"wall_seconds", m.wall_seconds}};
}

json error_json(const std::string& message) { return {{"ok", false}, {"error", message}}; }

}  // namespace

std::string ServeSession::handle(const std::string& line) {
  json req;
  try {
    req = json::parse(line);
  } catch (const json::parse_error& e) {
    return error_json(std::string("malformed JSON: ") + e.what()).dump();
  }
  if (!req.is_object() || !req.contains("op") || !req.at("op").is_string()) {
    return error_json("request must be an object with a string 'op'").dump();
  }
  const std::string op = req.at("op").get<std::string>();
  try {
    if (op == "shutdown") {
      shutdown_ = true;
      return json{{"ok", true}}.dump();
    }
    if (op == "init") {
      EngineConfig cfg;
      if (req.contains("config_path")) {
        cfg = read_config_file(req.at("config_path").get<std::string>());
      } else if (req.contains("config")) {
        cfg = detail::config_from_json(req.at("config"));
      } else {
        json flat = req;
        flat.erase("op");
        cfg = detail::config_from_json(flat);
      }
      engine_ = std::make_unique<Engine>(cfg);
      return json{{"ok", true}, {"config", detail::config_as_json(cfg)}}.dump();
    }
    if (op == "energy" || op == "forces") {
      if (!engine_) return error_json("not initialized").dump();
      if (!req.contains("geometry")) return error_json("request lacks 'geometry'").dump();
      const Geometry g = geometry_from_json(req.at("geometry"));
      const CalcResult r = op == "energy" ? engine_->compute_energy(g) : engine_->compute_forces(g);
      json resp = {{"ok", true}, {"energy_hartree", r.energy}};
      if (r.forces) {
        json rows = json::array();
        for (Eigen::Index a = 0; a < r.forces->rows(); ++a) {
          rows.push_back({(*r.forces)(a, 0), (*r.forces)(a, 1), (*r.forces)(a, 2)});
        }
        resp["forces_hartree_per_angstrom"] = rows;
      }
      resp["metadata"] = metadata_json(r.metadata);
      return resp.dump();
    }
    return error_json("unknown op '" + op + "'").dump();
  } catch (const Error& e) {
    return error_json(e.what()).dump();
  } catch (const json::exception& e) {
    return error_json(std::string("bad request: ") + e.what()).dump();
  }
}

int serve(std::istream& in, std::ostream& out) {
  ServeSession session;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out << session.handle(line) << '\n';
    out.flush();
    if (session.shutdown_requested()) break;
  }
  return 0;
}

}  // namespace qforce
