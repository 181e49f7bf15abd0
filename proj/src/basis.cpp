// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/basis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>

#include "basis_data.hpp"
#include "qforce/error.hpp"

namespace qforce {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

double parse_fortran_double(std::string tok) {
  std::replace(tok.begin(), tok.end(), 'D', 'E');
  std::replace(tok.begin(), tok.end(), 'd', 'e');
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw Error(ErrorCode::kParse, "bad number in basis data: '" + tok + "'");
  }
  return v;
}

int shell_letter_l(char c) {
  static constexpr std::string_view kLetters = "SPDFGHI";
  auto pos = kLetters.find(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (pos == std::string_view::npos) throw Error(ErrorCode::kParse, std::string("unknown shell type '") + c + "'");
  return static_cast<int>(pos);
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double double_factorial(int n) {
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

// Self-overlap of two unnormalized same-centre primitives sharing powers.
double same_center_overlap(double p, const std::array<int, 3>& powers) {
  double s = std::pow(std::numbers::pi / p, 1.5);
  for (int l : powers) s *= double_factorial(2 * l - 1) / std::pow(2.0 * p, l);
  return s;
}

// Basis sets users commonly ask for that need shells beyond d.
struct UnsupportedBasis {
  std::string_view name;
  char letter;
};
constexpr UnsupportedBasis kHighAngularBases[] = {
    {"CC-PVTZ", 'f'}, {"AUG-CC-PVTZ", 'f'}, {"CC-PVQZ", 'g'}, {"AUG-CC-PVQZ", 'g'},
    {"DEF2-TZVP", 'f'}, {"DEF2-QZVP", 'g'}, {"6-311G(2DF,2PD)", 'f'},
};

const detail::EmbeddedBasis* find_embedded(std::string_view name) {
  const std::string key = upper(name);
  for (const auto& b : detail::embedded_bases()) {
    if (upper(b.name) == key) return &b;
  }
  return nullptr;
}

}  // namespace

std::vector<std::array<int, 3>> cartesian_powers(int l) {
  std::vector<std::array<int, 3>> out;
  for (int lx = l; lx >= 0; --lx) {
    for (int ly = l - lx; ly >= 0; --ly) out.push_back({lx, ly, l - lx - ly});
  }
  return out;
}

std::vector<ElementBasis> parse_g94(std::string_view text) {
  std::vector<ElementBasis> out;
  std::istringstream in{std::string(text)};
  std::string line;
  ElementBasis* current = nullptr;
  while (std::getline(in, line)) {
    auto toks = tokens(line);
    if (toks.empty() || toks[0][0] == '!') continue;
    if (toks[0] == "****") {
      current = nullptr;
      continue;
    }
    if (current == nullptr) {
      out.push_back({toks[0], {}});
      current = &out.back();
      continue;
    }
    if (toks.size() < 2) throw Error(ErrorCode::kParse, "malformed shell header: '" + line + "'");
    const std::string letters = upper(toks[0]);
    const long n = std::strtol(toks[1].c_str(), nullptr, 10);
    if (n < 1) throw Error(ErrorCode::kParse, "shell with no primitives: '" + line + "'");
    std::vector<std::vector<Primitive>> cols(letters.size());
    for (long i = 0; i < n; ++i) {
      if (!std::getline(in, line)) throw Error(ErrorCode::kParse, "truncated shell in basis data");
      auto p = tokens(line);
      if (p.size() != letters.size() + 1) throw Error(ErrorCode::kParse, "malformed primitive: '" + line + "'");
      const double exponent = parse_fortran_double(p[0]);
      if (exponent <= 0.0) throw Error(ErrorCode::kParse, "non-positive exponent in basis data");
      for (std::size_t c = 0; c < letters.size(); ++c) {
        cols[c].push_back({exponent, parse_fortran_double(p[c + 1])});
      }
    }
    for (std::size_t c = 0; c < letters.size(); ++c) {
      current->shells.emplace_back(shell_letter_l(letters[c]), std::move(cols[c]));
    }
  }
  return out;
}

std::vector<std::string> available_bases() {
  std::vector<std::string> names;
  for (const auto& b : detail::embedded_bases()) names.emplace_back(b.name);
  return names;
}

std::vector<std::string> basis_checksum_mismatches() {
  std::vector<std::string> bad;
  std::istringstream in{std::string(detail::embedded_basis_manifest())};
  std::string name, file, sum;
  std::size_t listed = 0;
  while (in >> name >> file >> sum) {
    ++listed;
    const auto* b = find_embedded(name);
    if (b == nullptr || b->file != file || std::strtoull(sum.c_str(), nullptr, 16) != fnv1a64(b->text)) {
      bad.push_back(name);
    }
  }
  if (listed != detail::embedded_bases().size()) bad.emplace_back("MANIFEST");
  return bad;
}

BasisSet build_basis_from_text(std::string_view name, std::string_view g94_text, const Geometry& g) {
  const auto table = parse_g94(g94_text);
  BasisSet basis;
  basis.name = std::string(name);
  for (std::size_t atom = 0; atom < g.size(); ++atom) {
    const auto& symbol = g[atom].symbol;
    auto it = std::find_if(table.begin(), table.end(), [&](const ElementBasis& e) { return e.symbol == symbol; });
    if (it == table.end()) {
      throw Error(ErrorCode::kUnsupported, "element " + symbol + " is not in basis " + std::string(name));
    }
    for (const auto& [l, prims] : it->shells) {
      if (l > kMaxAngularMomentum) {
        throw Error(ErrorCode::kUnsupported, "unsupported angular momentum L=" + std::to_string(l) + " in basis " +
                                                 std::string(name) + " for " + symbol +
                                                 " (only s, p, d shells are supported)");
      }
      Shell sh;
      sh.center = atom;
      sh.l = l;
      sh.primitives = prims;
      sh.origin = g[atom].position * kBohrPerAngstrom;
      basis.shell_offsets.push_back(basis.aos.size());
      for (const auto& powers : cartesian_powers(l)) {
        AtomicOrbital ao;
        ao.shell = basis.shells.size();
        ao.powers = powers;
        // Primitive normalization for this Cartesian component, then the
        // contraction is rescaled to unit self-overlap.
        const double dfact = double_factorial(2 * powers[0] - 1) * double_factorial(2 * powers[1] - 1) *
                             double_factorial(2 * powers[2] - 1);
        for (const auto& p : prims) {
          const double norm = std::pow(2.0 * p.exponent / std::numbers::pi, 0.75) *
                              std::pow(4.0 * p.exponent, 0.5 * l) / std::sqrt(dfact);
          ao.coefficients.push_back(p.coefficient * norm);
        }
        double self = 0.0;
        for (std::size_t i = 0; i < prims.size(); ++i) {
          for (std::size_t j = 0; j < prims.size(); ++j) {
            self += ao.coefficients[i] * ao.coefficients[j] *
                    same_center_overlap(prims[i].exponent + prims[j].exponent, powers);
          }
        }
        for (auto& c : ao.coefficients) c /= std::sqrt(self);
        basis.aos.push_back(std::move(ao));
      }
      basis.shells.push_back(std::move(sh));
    }
  }
  return basis;
}

BasisSet build_basis(std::string_view name, const Geometry& g) {
  const std::string key = upper(name);
  for (const auto& u : kHighAngularBases) {
    if (u.name == key) {
      throw Error(ErrorCode::kUnsupported, "unsupported angular momentum: basis " + std::string(name) +
                                               " needs " + std::string(1, u.letter) +
                                               " shells; only s, p, d shells are supported");
    }
  }
  const auto* embedded = find_embedded(name);
  if (embedded == nullptr) throw Error(ErrorCode::kInvalidArgument, "unknown basis set '" + std::string(name) + "'");
  return build_basis_from_text(embedded->name, embedded->text, g);
}

}  // namespace qforce
