// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#include "qforce/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "qforce/error.hpp"

namespace qforce {

namespace {

constexpr Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubit(std::size_t n, std::size_t q) {
  if (q >= n) throw Error(ErrorCode::kInvalidArgument, "qubit index " + std::to_string(q) + " out of range");
}

void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kInvalidArgument,
                "qubit count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits) : n_(n_qubits) {
  if (n_qubits > kMaxQubits) throw Error(ErrorCode::kUnsupported, "at most 64 qubits are supported");
}

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x, std::uint64_t z) : PauliString(n_qubits) {
  const std::uint64_t mask = n_qubits == 64 ? ~0ULL : ((1ULL << n_qubits) - 1);
  if ((x | z) & ~mask) throw Error(ErrorCode::kInvalidArgument, "Pauli mask exceeds qubit count");
  x_ = x;
  z_ = z;
}

PauliString PauliString::from_label(std::size_t n_qubits, std::string_view label) {
  PauliString p(n_qubits);
  std::istringstream in{std::string(label)};
  std::string tok;
  while (in >> tok) {
    if (tok == "I") continue;
    if (tok.size() < 2) throw Error(ErrorCode::kParse, "bad Pauli token '" + tok + "'");
    char* end = nullptr;
    const unsigned long q = std::strtoul(tok.c_str() + 1, &end, 10);
    if (*end != '\0') throw Error(ErrorCode::kParse, "bad Pauli token '" + tok + "'");
    if (p.letter(q) != 'I') throw Error(ErrorCode::kParse, "qubit repeated in Pauli label '" + std::string(label) + "'");
    p.set(q, tok[0]);
  }
  return p;
}

char PauliString::letter(std::size_t q) const {
  check_qubit(n_, q);
  const bool x = (x_ >> q) & 1U;
  const bool z = (z_ >> q) & 1U;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

void PauliString::set(std::size_t q, char letter) {
  check_qubit(n_, q);
  const std::uint64_t bit = 1ULL << q;
  x_ &= ~bit;
  z_ &= ~bit;
  switch (letter) {
    case 'I': break;
    case 'X': x_ |= bit; break;
    case 'Y': x_ |= bit; z_ |= bit; break;
    case 'Z': z_ |= bit; break;
    default: throw Error(ErrorCode::kParse, std::string("unknown Pauli letter '") + letter + "'");
  }
}

int PauliString::weight() const { return std::popcount(x_ | z_); }
int PauliString::y_count() const { return std::popcount(x_ & z_); }

std::string PauliString::label() const {
  if (is_identity()) return "I";
  std::string out;
  for (std::size_t q = 0; q < n_; ++q) {
    const char c = letter(q);
    if (c == 'I') continue;
    if (!out.empty()) out += ' ';
    out += c;
    out += std::to_string(q);
  }
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  return (std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_)) % 2 == 0;
}

std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b) {
  check_same_size(a.n_qubits(), b.n_qubits());
  PauliString r(a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask());
  // i^{ya} X^xa Z^za i^{yb} X^xb Z^zb = i^{ya+yb} (-1)^{|za & xb|} X^{xa^xb} Z^{za^zb}
  const int power = a.y_count() + b.y_count() - r.y_count() + 2 * std::popcount(a.z_mask() & b.x_mask());
  return {kPhases[((power % 4) + 4) % 4], r};
}

QubitOperator::QubitOperator(const PauliString& p, Complex coeff) : n_(p.n_qubits()) { terms_[p] = coeff; }

QubitOperator QubitOperator::identity(std::size_t n_qubits, Complex coeff) {
  return QubitOperator(PauliString(n_qubits), coeff);
}

void QubitOperator::add_term(const PauliString& p, Complex coeff) {
  check_same_size(n_, p.n_qubits());
  terms_[p] += coeff;
}

Complex QubitOperator::coefficient(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Complex{} : it->second;
}

QubitOperator& QubitOperator::operator+=(const QubitOperator& other) {
  check_same_size(n_, other.n_);
  for (const auto& [p, c] : other.terms_) terms_[p] += c;
  return *this;
}

QubitOperator& QubitOperator::operator*=(Complex c) {
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

QubitOperator QubitOperator::simplified(double tol) const {
  QubitOperator out(n_);
  for (const auto& [p, c] : terms_) {
    if (std::abs(c) >= tol) out.terms_.emplace_hint(out.terms_.end(), p, c);
  }
  return out;
}

QubitOperator QubitOperator::adjoint() const {
  QubitOperator out(n_);
  for (const auto& [p, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), p, std::conj(c));
  return out;
}

double QubitOperator::max_imag() const {
  double m = 0.0;
  for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c.imag()));
  return m;
}

std::string QubitOperator::to_text() const {
  std::string out = "# qubits " + std::to_string(n_) + "\n";
  for (const auto& [p, c] : terms_) {
    if (c.imag() == 0.0) {
      out += format_double(c.real());
    } else {
      out += "(" + format_double(c.real()) + "," + format_double(c.imag()) + ")";
    }
    out += "  " + p.label() + "\n";
  }
  return out;
}

QubitOperator QubitOperator::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<std::pair<Complex, std::string>> rows;
  std::size_t max_q = 0;
  bool any_q = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string key;
      if (hs >> key && key == "qubits" && hs >> n) have_n = true;
      continue;
    }
    std::istringstream ls(line.substr(first));
    std::string coeff_tok;
    ls >> coeff_tok;
    Complex c;
    char* end = nullptr;
    if (coeff_tok.front() == '(') {
      const auto comma = coeff_tok.find(',');
      if (comma == std::string::npos || coeff_tok.back() != ')') throw Error(ErrorCode::kParse, "bad coefficient '" + coeff_tok + "'");
      const std::string re = coeff_tok.substr(1, comma - 1);
      const std::string im = coeff_tok.substr(comma + 1, coeff_tok.size() - comma - 2);
      const double r = std::strtod(re.c_str(), &end);
      if (*end != '\0') throw Error(ErrorCode::kParse, "bad coefficient '" + coeff_tok + "'");
      const double i = std::strtod(im.c_str(), &end);
      if (*end != '\0') throw Error(ErrorCode::kParse, "bad coefficient '" + coeff_tok + "'");
      c = {r, i};
    } else {
      c = std::strtod(coeff_tok.c_str(), &end);
      if (*end != '\0') throw Error(ErrorCode::kParse, "bad coefficient '" + coeff_tok + "'");
    }
    std::string label;
    std::getline(ls, label);
    std::istringstream lt(label);
    std::string tok;
    while (lt >> tok) {
      if (tok != "I" && tok.size() > 1) {
        max_q = std::max<std::size_t>(max_q, std::strtoul(tok.c_str() + 1, nullptr, 10));
        any_q = true;
      }
    }
    rows.emplace_back(c, label);
  }
  if (!have_n) n = any_q ? max_q + 1 : 0;
  QubitOperator op(n);
  for (const auto& [c, label] : rows) op.add_term(PauliString::from_label(n, label), c);
  return op;
}

QubitOperator operator+(QubitOperator a, const QubitOperator& b) {
  a += b;
  return a;
}

QubitOperator operator*(QubitOperator a, Complex c) {
  a *= c;
  return a;
}

QubitOperator operator*(const QubitOperator& a, const QubitOperator& b) {
  check_same_size(a.n_qubits(), b.n_qubits());
  std::unordered_map<PauliString, Complex, PauliStringHash> acc;
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      auto [phase, r] = multiply(pa, pb);
      acc[r] += phase * ca * cb;
    }
  }
  QubitOperator out(a.n_qubits());
  for (const auto& [p, c] : acc) out.add_term(p, c);
  return out;
}

}  // namespace qforce
