// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "qforce/error.hpp"
#include "qforce/hamiltonian.hpp"

namespace qforce {

namespace {

void append_entry(std::string& out, double v, std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  char line[96];
  std::snprintf(line, sizeof line, "%24.16E %4zu %4zu %4zu %4zu\n", v, p, q, r, s);
  out += line;
}

int header_int(const std::string& header, const char* key, bool required, int fallback) {
  const std::regex re(std::string(key) + R"(\s*=\s*(-?\d+))", std::regex::icase);
  std::smatch m;
  if (!std::regex_search(header, m, re)) {
    if (required) throw Error(ErrorCode::kParse, std::string("FCIDUMP header lacks ") + key);
    return fallback;
  }
  return std::stoi(m[1].str());
}

}  // namespace

std::string format_fcidump(const MolecularHamiltonian& h) {
  h.validate();
  const std::size_t n = h.n_orb();
  std::string out = " &FCI NORB=" + std::to_string(n) + ",NELEC=" + std::to_string(h.n_elec) + ",MS2=0,\n  ORBSYM=";
  for (std::size_t i = 0; i < n; ++i) out += "1,";
  out += "\n  ISYM=1,\n &END\n";
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r <= p; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (EriTensor::pair_index(r, s) > EriTensor::pair_index(p, q)) continue;
          const double v = h.g2(p, q, r, s);
          if (v != 0.0) append_entry(out, v, p + 1, q + 1, r + 1, s + 1);
        }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q) {
      const double v = h.h1(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
      if (v != 0.0) append_entry(out, v, p + 1, q + 1, 0, 0);
    }
  append_entry(out, h.e_core, 0, 0, 0, 0);
  return out;
}

MolecularHamiltonian parse_fcidump(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string header;
  bool closed = false;
  while (std::getline(in, line)) {
    header += line + "\n";
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos) {
      const std::string trimmed = line.substr(first);
      if (trimmed.rfind("&END", 0) == 0 || trimmed.rfind("&end", 0) == 0 || trimmed.rfind("/", 0) == 0) {
        closed = true;
        break;
      }
    }
  }
  if (!closed || header.find("&FCI") == std::string::npos) {
    throw Error(ErrorCode::kParse, "malformed FCIDUMP header (expected &FCI ... &END)");
  }
  const int norb = header_int(header, "NORB", true, 0);
  const int nelec = header_int(header, "NELEC", true, 0);
  const int ms2 = header_int(header, "MS2", false, 0);
  if (norb < 1 || nelec < 0) throw Error(ErrorCode::kParse, "FCIDUMP header has invalid NORB/NELEC");
  if (ms2 != 0) throw Error(ErrorCode::kUnsupported, "only MS2=0 FCIDUMP files are supported");

  const auto n = static_cast<std::size_t>(norb);
  MolecularHamiltonian h;
  h.h1 = Eigen::MatrixXd::Zero(norb, norb);
  h.g2 = EriTensor(n);
  h.n_elec = nelec;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string value_tok;
    if (!(ls >> value_tok)) continue;
    for (auto& c : value_tok) {
      if (c == 'D' || c == 'd') c = 'E';
    }
    char* end = nullptr;
    const double v = std::strtod(value_tok.c_str(), &end);
    if (end == value_tok.c_str() || *end != '\0') {
      throw Error(ErrorCode::kParse, "non-numeric FCIDUMP value '" + value_tok + "' on data line " + std::to_string(lineno));
    }
    long idx[4];
    for (auto& i : idx) {
      if (!(ls >> i)) throw Error(ErrorCode::kParse, "FCIDUMP data line " + std::to_string(lineno) + " needs 4 indices");
      if (i < 0 || i > norb) throw Error(ErrorCode::kParse, "FCIDUMP index out of range on data line " + std::to_string(lineno));
    }
    const auto p = static_cast<std::size_t>(idx[0]);
    const auto q = static_cast<std::size_t>(idx[1]);
    const auto r = static_cast<std::size_t>(idx[2]);
    const auto s = static_cast<std::size_t>(idx[3]);
    if (p && q && r && s) {
      h.g2.set(p - 1, q - 1, r - 1, s - 1, v);
    } else if (p && q && !r && !s) {
      h.h1(static_cast<Eigen::Index>(p - 1), static_cast<Eigen::Index>(q - 1)) = v;
      h.h1(static_cast<Eigen::Index>(q - 1), static_cast<Eigen::Index>(p - 1)) = v;
    } else if (!p && !q && !r && !s) {
      h.e_core = v;
    } else if (p && !q && !r && !s) {
      // orbital energy line; not part of the Hamiltonian
    } else {
      throw Error(ErrorCode::kParse, "unrecognized FCIDUMP index pattern on data line " + std::to_string(lineno));
    }
  }
  h.validate();
  return h;
}

void write_fcidump(const MolecularHamiltonian& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write FCIDUMP '" + path + "'");
  out << format_fcidump(h);
  if (!out) throw Error(ErrorCode::kIo, "failed writing FCIDUMP '" + path + "'");
}

MolecularHamiltonian read_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open FCIDUMP '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fcidump(buf.str());
}

}  // namespace qforce
