// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/chemcore.hpp"

#include <Eigen/Geometry>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qforce/error.hpp"

namespace qforce {

namespace {

constexpr std::array<std::string_view, 18> kSymbols = {
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F",
    "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar"};

constexpr double kMinSeparation = 1e-6;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_double(std::string_view tok, const char* what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::kParse, std::string("non-numeric ") + what + ": '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

int atomic_number(std::string_view symbol) {
  for (std::size_t i = 0; i < kSymbols.size(); ++i) {
    if (kSymbols[i] == symbol) return static_cast<int>(i) + 1;
  }
  throw Error(ErrorCode::kParse, "unknown element symbol '" + std::string(symbol) + "'");
}

std::string_view element_symbol(int z) {
  if (z < 1 || z > static_cast<int>(kSymbols.size())) {
    throw Error(ErrorCode::kInvalidArgument, "atomic number out of range: " + std::to_string(z));
  }
  return kSymbols[z - 1];
}

Geometry::Geometry(std::vector<Atom> atoms, std::string comment)
    : atoms_(std::move(atoms)), comment_(std::move(comment)) {
  if (atoms_.empty()) throw Error(ErrorCode::kInvalidArgument, "geometry has no atoms");
  for (const auto& a : atoms_) {
    if (atomic_number(a.symbol) != a.z) {
      throw Error(ErrorCode::kInvalidArgument,
                  "atomic number " + std::to_string(a.z) + " does not match symbol " + a.symbol);
    }
    if (!a.position.allFinite()) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite coordinate for atom " + a.symbol);
    }
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms_.size(); ++j) {
      if ((atoms_[i].position - atoms_[j].position).norm() <= kMinSeparation) {
        throw Error(ErrorCode::kInvalidArgument,
                    "coincident atoms " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

Geometry Geometry::from_symbols(const std::vector<std::string>& symbols,
                                const std::vector<Vec3>& positions) {
  if (symbols.size() != positions.size()) {
    throw Error(ErrorCode::kInvalidArgument, "symbol and position counts differ");
  }
  std::vector<Atom> atoms;
  atoms.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    atoms.push_back({symbols[i], atomic_number(symbols[i]), positions[i]});
  }
  return Geometry(std::move(atoms));
}

int Geometry::total_nuclear_charge() const {
  int total = 0;
  for (const auto& a : atoms_) total += a.z;
  return total;
}

Eigen::VectorXd Geometry::coordinates() const {
  Eigen::VectorXd x(3 * atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) x.segment<3>(3 * i) = atoms_[i].position;
  return x;
}

Geometry Geometry::with_coordinates(const Eigen::VectorXd& coords) const {
  if (coords.size() != static_cast<Eigen::Index>(3 * atoms_.size())) {
    throw Error(ErrorCode::kInvalidArgument, "coordinate vector has wrong length");
  }
  auto atoms = atoms_;
  for (std::size_t i = 0; i < atoms.size(); ++i) atoms[i].position = coords.segment<3>(3 * i);
  return Geometry(std::move(atoms), comment_);
}

std::size_t Geometry::hash() const {
  // FNV-1a over atomic numbers and coordinate bit patterns.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& a : atoms_) {
    mix(static_cast<std::uint64_t>(a.z));
    for (int k = 0; k < 3; ++k) mix(std::bit_cast<std::uint64_t>(a.position[k]));
  }
  return static_cast<std::size_t>(h);
}

bool Geometry::operator==(const Geometry& other) const {
  if (atoms_.size() != other.atoms_.size()) return false;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].z != other.atoms_[i].z || atoms_[i].position != other.atoms_[i].position) return false;
  }
  return true;
}

Geometry parse_xyz(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty() || split_ws(lines[0]).size() != 1) {
    throw Error(ErrorCode::kParse, "malformed XYZ atom count line");
  }
  auto count_tok = split_ws(lines[0])[0];
  long count = 0;
  auto [ptr, ec] = std::from_chars(count_tok.data(), count_tok.data() + count_tok.size(), count);
  if (ec != std::errc() || ptr != count_tok.data() + count_tok.size() || count < 1) {
    throw Error(ErrorCode::kParse, "malformed XYZ atom count '" + std::string(count_tok) + "'");
  }
  if (lines.size() < static_cast<std::size_t>(count) + 2) {
    throw Error(ErrorCode::kParse, "XYZ file declares " + std::to_string(count) + " atoms but is truncated");
  }
  std::vector<Atom> atoms;
  for (long i = 0; i < count; ++i) {
    auto toks = split_ws(lines[static_cast<std::size_t>(i) + 2]);
    if (toks.size() < 4) {
      throw Error(ErrorCode::kParse, "XYZ atom line " + std::to_string(i + 1) + " needs symbol x y z");
    }
    Atom a;
    a.symbol = std::string(toks[0]);
    a.z = atomic_number(a.symbol);
    for (int k = 0; k < 3; ++k) a.position[k] = parse_double(toks[k + 1], "coordinate");
    atoms.push_back(std::move(a));
  }
  for (std::size_t i = static_cast<std::size_t>(count) + 2; i < lines.size(); ++i) {
    if (!split_ws(lines[i]).empty()) throw Error(ErrorCode::kParse, "trailing content after XYZ atom block");
  }
  return Geometry(std::move(atoms), std::string(lines[1]));
}

Geometry read_xyz_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open geometry file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_xyz(buf.str());
}

std::string write_xyz(const Geometry& g) {
  std::string out = std::to_string(g.size()) + "\n\n";
  char line[128];
  for (const auto& a : g.atoms()) {
    std::snprintf(line, sizeof line, "%s %.8f %.8f %.8f\n", a.symbol.c_str(), a.position.x(),
                  a.position.y(), a.position.z());
    out += line;
  }
  return out;
}

Geometry displace(const Geometry& g, std::size_t atom_index, int axis, double delta) {
  if (atom_index >= g.size()) {
    throw Error(ErrorCode::kInvalidArgument, "atom index " + std::to_string(atom_index) + " out of range");
  }
  if (axis < 0 || axis > 2) throw Error(ErrorCode::kInvalidArgument, "axis must be 0, 1 or 2");
  auto atoms = g.atoms();
  atoms[atom_index].position[axis] += delta;
  return Geometry(std::move(atoms), g.comment());
}

double bond_length(const Geometry& g, std::size_t i, std::size_t j) {
  if (i >= g.size() || j >= g.size()) throw Error(ErrorCode::kInvalidArgument, "atom index out of range");
  if (i == j) throw Error(ErrorCode::kInvalidArgument, "bond_length needs two distinct atoms");
  return (g[i].position - g[j].position).norm();
}

double bond_angle(const Geometry& g, std::size_t i, std::size_t j, std::size_t k) {
  if (i >= g.size() || j >= g.size() || k >= g.size()) {
    throw Error(ErrorCode::kInvalidArgument, "atom index out of range");
  }
  if (i == j || j == k || i == k) throw Error(ErrorCode::kInvalidArgument, "bond_angle needs three distinct atoms");
  const Vec3 a = g[i].position - g[j].position;
  const Vec3 b = g[k].position - g[j].position;
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw Error(ErrorCode::kInvalidArgument, "zero-length vector in bond_angle");
  // atan2 keeps full precision near 0 and 180 degrees.
  const double angle = std::atan2(a.cross(b).norm(), a.dot(b));
  return angle * 180.0 / std::numbers::pi;
}

Geometry make_water(double r_oh, double angle_deg) {
  const double half = angle_deg * std::numbers::pi / 360.0;
  const double y = r_oh * std::sin(half);
  const double z = r_oh * std::cos(half);
  return Geometry::from_symbols({"O", "H", "H"}, {Vec3(0, 0, 0), Vec3(0, y, z), Vec3(0, -y, z)});
}

Geometry make_h2(double bond) {
  return Geometry::from_symbols({"H", "H"}, {Vec3(0, 0, 0), Vec3(0, 0, bond)});
}

}  // namespace qforce
