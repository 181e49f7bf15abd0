// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qforce {

/// Length conversion used by everything that works in atomic units.
inline constexpr double kBohrPerAngstrom = 1.8897259886;
inline constexpr double kEvPerHartree = 27.211386245988;

using Vec3 = Eigen::Vector3d;

/// Atomic number for an element symbol (H through Ar); throws kParse on
/// unknown symbols. Matching is case-sensitive, as in XYZ files.
int atomic_number(std::string_view symbol);
std::string_view element_symbol(int z);

struct Atom {
  std::string symbol;
  int z = 0;
  Vec3 position = Vec3::Zero();  // Angstrom
};

/// An ordered list of atoms with Cartesian positions in Angstrom.
///
/// Construction validates the invariants: at least one atom, finite
/// coordinates, symbols consistent with atomic numbers and no two nuclei
/// closer than 1e-6 A. A Geometry is an immutable value once built.
class Geometry {
 public:
  explicit Geometry(std::vector<Atom> atoms, std::string comment = {});

  /// Convenience: symbols and positions (Angstrom) of equal length.
  static Geometry from_symbols(const std::vector<std::string>& symbols,
                               const std::vector<Vec3>& positions);

  std::size_t size() const { return atoms_.size(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::string& comment() const { return comment_; }

  int total_nuclear_charge() const;

  /// Positions flattened as x0 y0 z0 x1 ... (Angstrom).
  Eigen::VectorXd coordinates() const;
  Geometry with_coordinates(const Eigen::VectorXd& coords) const;

  /// Stable hash of species and the exact bit patterns of the coordinates.
  std::size_t hash() const;

  bool operator==(const Geometry& other) const;

 private:
  std::vector<Atom> atoms_;
  std::string comment_;
};

Geometry parse_xyz(std::string_view text);
Geometry read_xyz_file(const std::string& path);
std::string write_xyz(const Geometry& g);

/// Copy of g with atom `atom_index` moved by delta along `axis` (0, 1, 2).
Geometry displace(const Geometry& g, std::size_t atom_index, int axis, double delta);

double bond_length(const Geometry& g, std::size_t i, std::size_t j);
/// Angle i-j-k in degrees with j at the vertex.
double bond_angle(const Geometry& g, std::size_t i, std::size_t j, std::size_t k);

/// Water with O at the origin and both H atoms in the yz plane.
Geometry make_water(double r_oh, double angle_deg);
/// H2 along z with the first atom at the origin.
Geometry make_h2(double bond);

}  // namespace qforce
