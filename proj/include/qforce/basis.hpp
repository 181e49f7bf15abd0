// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qforce/chemcore.hpp"

namespace qforce {

inline constexpr int kMaxAngularMomentum = 2;

struct Primitive {
  double exponent;     // 1/Bohr^2
  double coefficient;  // as tabulated, for normalized primitives
};

/// A contracted Cartesian shell on one atom.
struct Shell {
  std::size_t center = 0;
  int l = 0;
  std::vector<Primitive> primitives;
  Vec3 origin = Vec3::Zero();  // Bohr

  std::size_t n_cartesian() const { return static_cast<std::size_t>((l + 1) * (l + 2) / 2); }
};

/// One Cartesian atomic orbital: shell index, powers (lx, ly, lz) and the
/// per-primitive coefficients with normalization folded in.
struct AtomicOrbital {
  std::size_t shell = 0;
  std::array<int, 3> powers{};
  std::vector<double> coefficients;
};

struct BasisSet {
  std::string name;
  std::vector<Shell> shells;
  std::vector<AtomicOrbital> aos;
  std::vector<std::size_t> shell_offsets;  // first AO index of each shell

  std::size_t n_ao() const { return aos.size(); }
};

/// Cartesian powers of a shell in canonical order (xx, xy, xz, yy, yz, zz for d).
std::vector<std::array<int, 3>> cartesian_powers(int l);

/// Element -> list of (l, primitives) parsed from Gaussian94-layout text.
struct ElementBasis {
  std::string symbol;
  std::vector<std::pair<int, std::vector<Primitive>>> shells;
};
std::vector<ElementBasis> parse_g94(std::string_view text);

/// Names of the embedded basis sets.
std::vector<std::string> available_bases();

/// Embedded basis files whose checksum no longer matches MANIFEST.
std::vector<std::string> basis_checksum_mismatches();

/// Shells for every atom of g from the named embedded basis. Names are
/// matched case-insensitively (sto-3g, 6-31G*, ...).
BasisSet build_basis(std::string_view name, const Geometry& g);

/// Same, from caller-supplied Gaussian94 text.
BasisSet build_basis_from_text(std::string_view name, std::string_view g94_text, const Geometry& g);

}  // namespace qforce
