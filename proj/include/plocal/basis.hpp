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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plocal/pauli.hpp"

namespace plocal {

/**
 * Flavors of the local string subspace.
 *
 * - complex_2local: every weight-1 and weight-2 string (3N + 9/2 N(N-1)).
 * - real_2local:    strings with an even number of Y factors
 *                   (2N + 5/2 N(N-1)); these materialize to real symmetric
 *                   matrices, which is all a real target spectrum needs.
 * - z_only_2local:  ZZ pairs only, N(N-1)/2 — the classical Ising couplings.
 * - one_local_z:    the N single-site Z strings.
 * - one_local_real: the 2N single-site X and Z strings.
 * - custom:         caller-provided string set (no counting guarantees).
 */
enum class BasisFlavor {
  complex_2local,
  real_2local,
  z_only_2local,
  one_local_z,
  one_local_real,
  custom,
};

inline std::string_view flavor_name(BasisFlavor f) {
  switch (f) {
    case BasisFlavor::complex_2local: return "complex_2local";
    case BasisFlavor::real_2local: return "real_2local";
    case BasisFlavor::z_only_2local: return "z_only_2local";
    case BasisFlavor::one_local_z: return "one_local_z";
    case BasisFlavor::one_local_real: return "one_local_real";
    case BasisFlavor::custom: return "custom";
  }
  return "unknown";
}

inline std::optional<BasisFlavor> flavor_from_name(std::string_view name) {
  for (BasisFlavor f :
       {BasisFlavor::complex_2local, BasisFlavor::real_2local,
        BasisFlavor::z_only_2local, BasisFlavor::one_local_z,
        BasisFlavor::one_local_real, BasisFlavor::custom})
    if (name == flavor_name(f)) return f;
  return std::nullopt;
}

/// Closed-form string count for the named flavors.
inline std::size_t expected_basis_size(int n, BasisFlavor flavor) {
  auto nn = static_cast<std::size_t>(n);
  switch (flavor) {
    case BasisFlavor::complex_2local: return 3 * nn + 9 * nn * (nn - 1) / 2;
    case BasisFlavor::real_2local: return 2 * nn + 5 * nn * (nn - 1) / 2;
    case BasisFlavor::z_only_2local: return nn * (nn - 1) / 2;
    case BasisFlavor::one_local_z: return nn;
    case BasisFlavor::one_local_real: return 2 * nn;
    case BasisFlavor::custom:
      throw std::invalid_argument("expected_basis_size: custom has no formula");
  }
  throw std::invalid_argument("expected_basis_size: bad flavor");
}

/**
 * An ordered set of canonical Pauli strings spanning a local subspace.
 *
 * Ordering is deterministic: weight-1 strings ascending by (site, axis with
 * X < Y < Z), then weight-2 strings ascending by (site_i, site_j, axis_i,
 * axis_j) with site_i < site_j. The identity is always excluded, so any
 * linear combination is traceless.
 */
class StringBasis {
 public:
  static constexpr int kMaxQubits = 24;

  static StringBasis enumerate(int n_qubits, BasisFlavor flavor) {
    if (flavor == BasisFlavor::custom)
      throw std::invalid_argument(
          "StringBasis::enumerate: custom flavor needs explicit strings");
    if (n_qubits < 1 || n_qubits > kMaxQubits)
      throw std::invalid_argument("StringBasis::enumerate: n_qubits out of range");

    std::vector<PauliString> strings;
    auto axis_allowed_1 = [&](Axis a) {
      switch (flavor) {
        case BasisFlavor::complex_2local: return true;
        case BasisFlavor::real_2local:
        case BasisFlavor::one_local_real: return a != Axis::Y;
        case BasisFlavor::one_local_z: return a == Axis::Z;
        default: return false;  // z_only_2local has no weight-1 strings
      }
    };
    auto pair_allowed = [&](Axis a, Axis b) {
      switch (flavor) {
        case BasisFlavor::complex_2local: return true;
        case BasisFlavor::real_2local:
          return ((a == Axis::Y) + (b == Axis::Y)) % 2 == 0;
        case BasisFlavor::z_only_2local: return a == Axis::Z && b == Axis::Z;
        default: return false;  // 1-local flavors have no pairs
      }
    };

    for (int site = 0; site < n_qubits; ++site)
      for (Axis a : {Axis::X, Axis::Y, Axis::Z})
        if (axis_allowed_1(a)) strings.push_back(PauliString::single(n_qubits, site, a));
    for (int i = 0; i < n_qubits; ++i)
      for (int j = i + 1; j < n_qubits; ++j)
        for (Axis a : {Axis::X, Axis::Y, Axis::Z})
          for (Axis b : {Axis::X, Axis::Y, Axis::Z})
            if (pair_allowed(a, b))
              strings.push_back(PauliString::pair(n_qubits, i, a, j, b));

    return StringBasis(n_qubits, flavor, std::move(strings));
  }

  /// Builds a custom basis. Strings must be canonical (phase 0), non-identity
  /// and duplicate-free; weights are not restricted.
  static StringBasis custom(int n_qubits, std::vector<PauliString> strings) {
    return StringBasis(n_qubits, BasisFlavor::custom, std::move(strings));
  }

  int n_qubits() const { return n_qubits_; }
  BasisFlavor flavor() const { return flavor_; }
  std::size_t size() const { return strings_.size(); }
  const std::vector<PauliString>& strings() const { return strings_; }
  const PauliString& operator[](std::size_t i) const { return strings_[i]; }

  std::optional<std::size_t> index_of(const PauliString& s) const {
    auto it = index_.find(s.mask_key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// All strings have an even number of Y factors, so every real linear
  /// combination materializes to a real symmetric matrix.
  bool is_real() const {
    for (const auto& s : strings_)
      if (s.y_count() % 2 != 0) return false;
    return true;
  }

  /// All strings are products of Z's (and identity): the span is diagonal in
  /// the computational basis.
  bool is_diagonal() const {
    for (const auto& s : strings_)
      if (!s.is_diagonal()) return false;
    return true;
  }

 private:
  StringBasis(int n_qubits, BasisFlavor flavor, std::vector<PauliString> strings)
      : n_qubits_(n_qubits), flavor_(flavor), strings_(std::move(strings)) {
    index_.reserve(strings_.size());
    for (std::size_t i = 0; i < strings_.size(); ++i) {
      const auto& s = strings_[i];
      if (s.n_qubits() != n_qubits_)
        throw std::invalid_argument("StringBasis: string qubit count mismatch");
      if (s.is_identity())
        throw std::invalid_argument("StringBasis: identity not allowed");
      if (s.phase_pow() != 0)
        throw std::invalid_argument("StringBasis: strings must be canonical");
      if (!index_.emplace(s.mask_key(), i).second)
        throw std::invalid_argument("StringBasis: duplicate string");
    }
  }

  int n_qubits_;
  BasisFlavor flavor_;
  std::vector<PauliString> strings_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace plocal
