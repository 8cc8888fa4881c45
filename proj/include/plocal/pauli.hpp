// Copyright 2026 The plocal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plocal {

/// Single-site Pauli axes, in canonical order X < Y < Z.
enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline char axis_letter(Axis a) { return "XYZ"[static_cast<int>(a)]; }

/**
 * A Pauli string on n qubits in symplectic (bitmask) encoding.
 *
 * Site i (1-indexed in text form) corresponds to bit i-1 of the masks and of
 * computational-basis state indices. A site carries X if only its x-bit is
 * set, Z if only its z-bit is set, and Y if both are set.
 *
 * The represented operator is
 *
 *   i^phase_pow * P(x_mask, z_mask)
 *
 * where P is the Hermitian string with {1,X,Y,Z} factors given by the masks.
 * Canonical strings (the ones stored in bases) have phase_pow = 0 and are
 * Hermitian with +/-1 eigenvalues; products track the accumulated power of i.
 */
class PauliString {
 public:
  PauliString() = default;

  static PauliString identity(int n_qubits) {
    return PauliString(n_qubits, 0, 0, 0);
  }

  static PauliString from_masks(int n_qubits, std::uint64_t x_mask,
                                std::uint64_t z_mask, int phase_pow = 0) {
    return PauliString(n_qubits, x_mask, z_mask, phase_pow);
  }

  /// Weight-1 string: the given axis at `site` (0-indexed).
  static PauliString single(int n_qubits, int site, Axis axis) {
    if (site < 0 || site >= n_qubits)
      throw std::invalid_argument("PauliString::single: site out of range");
    std::uint64_t bit = std::uint64_t{1} << site;
    switch (axis) {
      case Axis::X: return PauliString(n_qubits, bit, 0, 0);
      case Axis::Y: return PauliString(n_qubits, bit, bit, 0);
      case Axis::Z: return PauliString(n_qubits, 0, bit, 0);
    }
    throw std::invalid_argument("PauliString::single: bad axis");
  }

  /// Weight-2 string with axes a,b at distinct sites (0-indexed).
  static PauliString pair(int n_qubits, int site_a, Axis axis_a, int site_b,
                          Axis axis_b) {
    if (site_a == site_b)
      throw std::invalid_argument("PauliString::pair: sites must differ");
    PauliString p = single(n_qubits, site_a, axis_a);
    PauliString q = single(n_qubits, site_b, axis_b);
    return PauliString(n_qubits, p.x_mask_ | q.x_mask_, p.z_mask_ | q.z_mask_,
                       0);
  }

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_mask_; }
  std::uint64_t z_mask() const { return z_mask_; }
  int phase_pow() const { return phase_pow_; }

  bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }
  bool is_diagonal() const { return x_mask_ == 0; }

  int weight() const { return std::popcount(x_mask_ | z_mask_); }
  int y_count() const { return std::popcount(x_mask_ & z_mask_); }

  /// True when the represented operator equals its adjoint. Canonical
  /// (phase_pow = 0) strings are always Hermitian; an extra factor i^2 = -1
  /// keeps Hermiticity, i or -i breaks it.
  bool is_hermitian() const { return phase_pow_ % 2 == 0; }

  bool same_masks(const PauliString& other) const {
    return x_mask_ == other.x_mask_ && z_mask_ == other.z_mask_;
  }

  bool operator==(const PauliString& other) const {
    return n_qubits_ == other.n_qubits_ && same_masks(other) &&
           phase_pow_ == other.phase_pow_;
  }

  /// Product with phase tracking. Associative; tau*tau = identity for
  /// canonical strings.
  friend PauliString operator*(const PauliString& a, const PauliString& b) {
    if (a.n_qubits_ != b.n_qubits_)
      throw std::invalid_argument("PauliString product: qubit count mismatch");
    std::uint64_t x = a.x_mask_ ^ b.x_mask_;
    std::uint64_t z = a.z_mask_ ^ b.z_mask_;
    // Phase bookkeeping: each operand contributes i^{#Y}; commuting the Z part
    // of a past the X part of b contributes (-1)^{|z_a & x_b|}; the result is
    // renormalized to the Hermitian form of (x, z).
    int p = a.phase_pow_ + b.phase_pow_ + a.y_count() + b.y_count() +
            2 * std::popcount(a.z_mask_ & b.x_mask_) - std::popcount(x & z);
    return PauliString(a.n_qubits_, x, z, ((p % 4) + 4) % 4);
  }

  /// Text form like "X1*Z3" (1-indexed sites, identity sites omitted).
  /// The identity string renders as "I"; non-canonical phases are prefixed
  /// with "i*", "-" or "-i*".
  std::string str() const {
    static const char* prefix[4] = {"", "i*", "-", "-i*"};
    std::string out = prefix[phase_pow_];
    if (is_identity()) return out + "I";
    bool first = true;
    for (int site = 0; site < n_qubits_; ++site) {
      std::uint64_t bit = std::uint64_t{1} << site;
      bool x = x_mask_ & bit, z = z_mask_ & bit;
      if (!x && !z) continue;
      if (!first) out += '*';
      out += x ? (z ? 'Y' : 'X') : 'Z';
      out += std::to_string(site + 1);
      first = false;
    }
    return out;
  }

  /// Parses the text form produced by str(). Throws on malformed input.
  static PauliString parse(std::string_view text, int n_qubits) {
    PauliString out = identity(n_qubits);
    std::size_t pos = 0;
    if (text.substr(pos, 1) == "-") {
      out.phase_pow_ = 2;
      pos += 1;
    }
    if (text.substr(pos, 2) == "i*") {
      out.phase_pow_ = (out.phase_pow_ + 1) % 4;
      pos += 2;
    }
    if (text.substr(pos) == "I") return out;
    while (pos < text.size()) {
      char axis = text[pos++];
      if (axis != 'X' && axis != 'Y' && axis != 'Z')
        throw std::invalid_argument("PauliString::parse: bad axis letter");
      std::size_t digits = 0;
      int site = 0;
      while (pos + digits < text.size() && std::isdigit(text[pos + digits])) {
        site = site * 10 + (text[pos + digits] - '0');
        ++digits;
      }
      if (digits == 0)
        throw std::invalid_argument("PauliString::parse: missing site index");
      pos += digits;
      if (site < 1 || site > n_qubits)
        throw std::invalid_argument("PauliString::parse: site out of range");
      std::uint64_t bit = std::uint64_t{1} << (site - 1);
      if ((out.x_mask_ | out.z_mask_) & bit)
        throw std::invalid_argument("PauliString::parse: repeated site");
      if (axis != 'Z') out.x_mask_ |= bit;
      if (axis != 'X') out.z_mask_ |= bit;
      if (pos < text.size()) {
        if (text[pos] != '*')
          throw std::invalid_argument("PauliString::parse: expected '*'");
        ++pos;
      }
    }
    return out;
  }

  /// Key packing both masks; usable as a hash-map key for strings of up to
  /// 32 qubits.
  std::uint64_t mask_key() const { return (x_mask_ << 32) | z_mask_; }

 private:
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
              int phase_pow)
      : n_qubits_(n_qubits),
        x_mask_(x_mask),
        z_mask_(z_mask),
        phase_pow_(phase_pow) {
    if (n_qubits < 0 || n_qubits > 32)
      throw std::invalid_argument("PauliString: unsupported qubit count");
    std::uint64_t allowed =
        n_qubits == 0 ? 0 : (~std::uint64_t{0} >> (64 - n_qubits));
    if ((x_mask & ~allowed) || (z_mask & ~allowed))
      throw std::invalid_argument("PauliString: mask exceeds qubit count");
  }

  int n_qubits_ = 0;
  std::uint64_t x_mask_ = 0;
  std::uint64_t z_mask_ = 0;
  int phase_pow_ = 0;
};

/**
 * Tr(a * b) for canonical Hermitian strings: 2^N when a = b, else 0.
 */
inline double pair_trace(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("pair_trace: qubit count mismatch");
  PauliString c = a * b;
  if (!c.is_identity()) return 0.0;
  double dim = static_cast<double>(std::uint64_t{1} << a.n_qubits());
  switch (c.phase_pow()) {
    case 0: return dim;
    case 2: return -dim;
    default:
      throw std::runtime_error("pair_trace: non-real trace (non-Hermitian inputs)");
  }
}

}  // namespace plocal
