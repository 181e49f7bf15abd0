// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "config_json.hpp"
#include "qforce/basis.hpp"
#include "qforce/error.hpp"

namespace qforce {

namespace detail {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "basis",         "active_electrons", "active_orbitals", "mapping",   "two_qubit_reduction",
      "ansatz",        "ansatz_layers",    "optimizer",       "vqe_ftol",  "vqe_gtol",
      "vqe_max_evals", "fd_step",          "fmax",            "max_opt_steps", "warm_start",
      "seed",          "report_bonds",     "report_angles"};
  return keys;
}

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kConfig, std::string("config key '") + key + "' has the wrong type");
  }
}

int get_int(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw Error(ErrorCode::kConfig, std::string("config key '") + key + "' must be an integer");
  return v.get<int>();
}

double get_number(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number()) throw Error(ErrorCode::kConfig, std::string("config key '") + key + "' must be a number");
  return v.get<double>();
}

bool get_bool(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_boolean()) throw Error(ErrorCode::kConfig, std::string("config key '") + key + "' must be true or false");
  return v.get<bool>();
}

template <std::size_t N>
std::vector<std::array<int, N>> get_index_tuples(const json& j, const char* key) {
  const json& v = j.at(key);
  const std::string msg = std::string("config key '") + key + "' must be a list of " + std::to_string(N) + "-element index lists";
  if (!v.is_array()) throw Error(ErrorCode::kConfig, msg);
  std::vector<std::array<int, N>> out;
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != N) throw Error(ErrorCode::kConfig, msg);
    std::array<int, N> t{};
    for (std::size_t i = 0; i < N; ++i) {
      if (!row[i].is_number_integer()) throw Error(ErrorCode::kConfig, msg);
      t[i] = row[i].get<int>();
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace

EngineConfig config_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kConfig, "configuration must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!known_keys().count(key)) throw Error(ErrorCode::kConfig, "unknown config key '" + key + "'");
  }
  EngineConfig cfg;
  if (j.contains("basis")) cfg.basis = get_as<std::string>(j, "basis");
  if (j.contains("active_electrons")) cfg.active_electrons = get_int(j, "active_electrons");
  if (j.contains("active_orbitals")) cfg.active_orbitals = get_int(j, "active_orbitals");
  if (j.contains("mapping")) cfg.mapping = parse_mapping(get_as<std::string>(j, "mapping"));
  if (j.contains("two_qubit_reduction")) cfg.two_qubit_reduction = get_bool(j, "two_qubit_reduction");
  if (j.contains("ansatz")) cfg.ansatz.kind = parse_ansatz(get_as<std::string>(j, "ansatz"));
  if (j.contains("ansatz_layers")) cfg.ansatz.layers = get_int(j, "ansatz_layers");
  if (j.contains("optimizer")) cfg.optimizer.kind = parse_optimizer(get_as<std::string>(j, "optimizer"));
  if (j.contains("vqe_ftol")) cfg.optimizer.ftol = get_number(j, "vqe_ftol");
  if (j.contains("vqe_gtol")) cfg.optimizer.gtol = get_number(j, "vqe_gtol");
  if (j.contains("vqe_max_evals")) cfg.optimizer.max_evals = get_int(j, "vqe_max_evals");
  if (j.contains("fd_step")) cfg.fd_step = get_number(j, "fd_step");
  if (j.contains("fmax")) cfg.fmax = get_number(j, "fmax");
  if (j.contains("max_opt_steps")) cfg.max_opt_steps = get_int(j, "max_opt_steps");
  if (j.contains("warm_start")) cfg.warm_start = get_bool(j, "warm_start");
  if (j.contains("seed")) {
    const json& v = j.at("seed");
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw Error(ErrorCode::kConfig, "config key 'seed' must be a non-negative integer");
    }
    cfg.seed = v.get<std::uint64_t>();
  }
  if (j.contains("report_bonds")) cfg.report_bonds = get_index_tuples<2>(j, "report_bonds");
  if (j.contains("report_angles")) cfg.report_angles = get_index_tuples<3>(j, "report_angles");
  cfg.validate();
  return cfg;
}

json config_as_json(const EngineConfig& cfg) {
  json j;
  j["basis"] = cfg.basis;
  j["active_electrons"] = cfg.active_electrons;
  j["active_orbitals"] = cfg.active_orbitals;
  j["mapping"] = std::string(to_string(cfg.mapping));
  j["two_qubit_reduction"] = cfg.two_qubit_reduction;
  j["ansatz"] = std::string(to_string(cfg.ansatz.kind));
  j["ansatz_layers"] = cfg.ansatz.layers;
  j["optimizer"] = std::string(to_string(cfg.optimizer.kind));
  j["vqe_ftol"] = cfg.optimizer.ftol;
  j["vqe_gtol"] = cfg.optimizer.gtol;
  j["vqe_max_evals"] = cfg.optimizer.max_evals;
  j["fd_step"] = cfg.fd_step;
  j["fmax"] = cfg.fmax;
  j["max_opt_steps"] = cfg.max_opt_steps;
  j["warm_start"] = cfg.warm_start;
  j["seed"] = cfg.seed;
  j["report_bonds"] = cfg.report_bonds;
  j["report_angles"] = cfg.report_angles;
  return j;
}

}  // namespace detail

void EngineConfig::validate() const {
  try {
    build_basis(basis, make_h2(0.74));
  } catch (const Error& e) {
    throw Error(e.code() == ErrorCode::kUnsupported ? ErrorCode::kUnsupported : ErrorCode::kConfig, e.what());
  }
  if (active_electrons < 0 || active_orbitals < 0) throw Error(ErrorCode::kConfig, "active space sizes must be non-negative");
  if ((active_electrons > 0) != (active_orbitals > 0)) {
    throw Error(ErrorCode::kConfig, "active_electrons and active_orbitals must be set together");
  }
  if (active_electrons % 2 != 0) throw Error(ErrorCode::kConfig, "active_electrons must be even (closed shell)");
  if (two_qubit_reduction && mapping != MappingKind::kParity) {
    throw Error(ErrorCode::kConfig, "two_qubit_reduction requires the parity mapping");
  }
  if (ansatz.layers < 1) throw Error(ErrorCode::kConfig, "ansatz_layers must be at least 1");
  optimizer.validate();
  if (!(fd_step > 0.0)) throw Error(ErrorCode::kConfig, "fd_step must be positive");
  if (!(fmax > 0.0)) throw Error(ErrorCode::kConfig, "fmax must be positive");
  if (max_opt_steps < 0) throw Error(ErrorCode::kConfig, "max_opt_steps must be non-negative");
  for (const auto& b : report_bonds) {
    if (b[0] < 0 || b[1] < 0 || b[0] == b[1]) throw Error(ErrorCode::kConfig, "invalid report_bonds entry");
  }
  for (const auto& a : report_angles) {
    if (a[0] < 0 || a[1] < 0 || a[2] < 0 || a[0] == a[1] || a[1] == a[2] || a[0] == a[2]) {
      throw Error(ErrorCode::kConfig, "invalid report_angles entry");
    }
  }
}

EngineConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kConfig, std::string("config is not valid JSON: ") + e.what());
  }
  return detail::config_from_json(j);
}

EngineConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string config_to_json(const EngineConfig& cfg) { return detail::config_as_json(cfg).dump(2); }

}  // namespace qforce
