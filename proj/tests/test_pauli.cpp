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

#include <catch2/catch_amalgamated.hpp>

#include "plocal/basis.hpp"
#include "plocal/pauli.hpp"
#include "plocal/rng.hpp"
#include "support/oracles.hpp"

using namespace plocal;
using plocal::testing::kron_oracle;

namespace {

PauliString random_string(int n, Xoshiro256PP& rng) {
  std::uint64_t mask = (~std::uint64_t{0}) >> (64 - n);
  return PauliString::from_masks(n, rng.next() & mask, rng.next() & mask,
                                 static_cast<int>(rng.next() % 4));
}

}  // namespace

TEST_CASE("single-site products carry the right phases") {
  int n = 2;
  auto X1 = PauliString::single(n, 0, Axis::X);
  auto Z1 = PauliString::single(n, 0, Axis::Z);
  auto Y1 = PauliString::single(n, 0, Axis::Y);

  // XZ = -iY on the first site.
  auto prod = X1 * Z1;
  CHECK(prod.x_mask() == Y1.x_mask());
  CHECK(prod.z_mask() == Y1.z_mask());
  CHECK(prod.phase_pow() == 3);
  CHECK(prod.str() == "-i*Y1");

  // ZX = +iY.
  CHECK((Z1 * X1).phase_pow() == 1);

  // tau * tau = identity with phase 1 for any Hermitian string.
  Xoshiro256PP rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = random_string(4, rng);
    auto canonical = PauliString::from_masks(4, s.x_mask(), s.z_mask(), 0);
    auto sq = canonical * canonical;
    CHECK(sq.is_identity());
    CHECK(sq.phase_pow() == 0);
  }

  // Identity is neutral.
  auto id = PauliString::identity(n);
  CHECK((id * X1) == X1);
  CHECK((X1 * id) == X1);
}

TEST_CASE("products match dense matrix multiplication") {
  Xoshiro256PP rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 5);
    auto a = random_string(n, rng);
    auto b = random_string(n, rng);
    auto c = a * b;
    Eigen::MatrixXcd want = kron_oracle(a) * kron_oracle(b);
    Eigen::MatrixXcd got = kron_oracle(c);
    REQUIRE((want - got).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("product is associative") {
  Xoshiro256PP rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 6);
    auto a = random_string(n, rng);
    auto b = random_string(n, rng);
    auto c = random_string(n, rng);
    CHECK(((a * b) * c) == (a * (b * c)));
  }
}

TEST_CASE("product rejects mismatched qubit counts") {
  auto a = PauliString::single(2, 0, Axis::X);
  auto b = PauliString::single(3, 0, Axis::X);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(pair_trace(a, b), std::invalid_argument);
}

TEST_CASE("pair_trace orthogonality") {
  auto x1z2 = PauliString::pair(3, 0, Axis::X, 1, Axis::Z);
  CHECK(pair_trace(x1z2, x1z2) == 8.0);
  auto x1 = PauliString::single(3, 0, Axis::X);
  auto z1 = PauliString::single(3, 0, Axis::Z);
  CHECK(pair_trace(x1, z1) == 0.0);
  auto id = PauliString::identity(4);
  CHECK(pair_trace(id, id) == 16.0);
}

TEST_CASE("pair_trace agrees with dense traces over whole bases") {
  for (BasisFlavor flavor : {BasisFlavor::complex_2local, BasisFlavor::real_2local,
                             BasisFlavor::z_only_2local, BasisFlavor::one_local_z,
                             BasisFlavor::one_local_real}) {
    for (int n = 2; n <= 4; ++n) {
      auto basis = StringBasis::enumerate(n, flavor);
      std::vector<Eigen::MatrixXcd> dense;
      dense.reserve(basis.size());
      for (const auto& s : basis.strings()) dense.push_back(kron_oracle(s));
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
          std::complex<double> tr =
              dense[i].transpose().cwiseProduct(dense[j]).sum();
          double want = (i == j) ? double(1 << n) : 0.0;
          REQUIRE(std::abs(tr.real() - want) < 1e-12);
          REQUIRE(std::abs(tr.imag()) < 1e-12);
          REQUIRE(pair_trace(basis[i], basis[j]) == want);
        }
    }
  }
  // One larger sweep on the heaviest flavor.
  auto basis = StringBasis::enumerate(5, BasisFlavor::complex_2local);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      double want = (i == j) ? 32.0 : 0.0;
      REQUIRE(pair_trace(basis[i], basis[j]) == want);
    }
}

TEST_CASE("basis counts match the closed forms for N in [2, 10]") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(StringBasis::enumerate(n, BasisFlavor::complex_2local).size() ==
          expected_basis_size(n, BasisFlavor::complex_2local));
    CHECK(StringBasis::enumerate(n, BasisFlavor::real_2local).size() ==
          expected_basis_size(n, BasisFlavor::real_2local));
    CHECK(StringBasis::enumerate(n, BasisFlavor::z_only_2local).size() ==
          static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(StringBasis::enumerate(n, BasisFlavor::one_local_z).size() ==
          static_cast<std::size_t>(n));
    CHECK(StringBasis::enumerate(n, BasisFlavor::one_local_real).size() ==
          static_cast<std::size_t>(2 * n));
  }
  // The headline examples.
  CHECK(StringBasis::enumerate(3, BasisFlavor::complex_2local).size() == 36);
  CHECK(StringBasis::enumerate(3, BasisFlavor::real_2local).size() == 21);
  CHECK(StringBasis::enumerate(3, BasisFlavor::z_only_2local).size() == 3);
}

TEST_CASE("canonical ordering is deterministic") {
  auto basis = StringBasis::enumerate(3, BasisFlavor::complex_2local);
  CHECK(basis[0].str() == "X1");
  CHECK(basis[1].str() == "Y1");
  CHECK(basis[2].str() == "Z1");
  CHECK(basis[3].str() == "X2");
  CHECK(basis[8].str() == "Z3");
  CHECK(basis[9].str() == "X1*X2");
  CHECK(basis[10].str() == "X1*Y2");
  CHECK(basis[11].str() == "X1*Z2");
  CHECK(basis[12].str() == "Y1*X2");

  auto zbasis = StringBasis::enumerate(3, BasisFlavor::z_only_2local);
  REQUIRE(zbasis.size() == 3);
  CHECK(zbasis[0].str() == "Z1*Z2");
  CHECK(zbasis[1].str() == "Z1*Z3");
  CHECK(zbasis[2].str() == "Z2*Z3");

  // index map round-trips.
  for (std::size_t i = 0; i < basis.size(); ++i)
    CHECK(basis.index_of(basis[i]) == i);
  CHECK(!basis.index_of(PauliString::identity(3)).has_value());
}

TEST_CASE("real flavors contain only even-Y strings") {
  for (int n = 2; n <= 6; ++n) {
    for (BasisFlavor flavor : {BasisFlavor::real_2local, BasisFlavor::z_only_2local,
                               BasisFlavor::one_local_z, BasisFlavor::one_local_real}) {
      auto basis = StringBasis::enumerate(n, flavor);
      CHECK(basis.is_real());
      for (const auto& s : basis.strings()) CHECK(s.y_count() % 2 == 0);
    }
    auto complex_basis = StringBasis::enumerate(n, BasisFlavor::complex_2local);
    CHECK(!complex_basis.is_real());
  }
  CHECK(StringBasis::enumerate(4, BasisFlavor::z_only_2local).is_diagonal());
  CHECK(StringBasis::enumerate(4, BasisFlavor::one_local_z).is_diagonal());
  CHECK(!StringBasis::enumerate(4, BasisFlavor::real_2local).is_diagonal());
}

TEST_CASE("basis weights lie in [1, 2] and identity is excluded") {
  for (BasisFlavor flavor : {BasisFlavor::complex_2local, BasisFlavor::real_2local,
                             BasisFlavor::z_only_2local, BasisFlavor::one_local_z,
                             BasisFlavor::one_local_real}) {
    auto basis = StringBasis::enumerate(5, flavor);
    for (const auto& s : basis.strings()) {
      CHECK(s.weight() >= 1);
      CHECK(s.weight() <= 2);
      CHECK(s.phase_pow() == 0);
    }
  }
}

TEST_CASE("enumerate validates its inputs") {
  CHECK_THROWS_AS(StringBasis::enumerate(0, BasisFlavor::real_2local),
                  std::invalid_argument);
  CHECK_THROWS_AS(StringBasis::enumerate(40, BasisFlavor::real_2local),
                  std::invalid_argument);
  CHECK_THROWS_AS(StringBasis::enumerate(4, BasisFlavor::custom),
                  std::invalid_argument);
  // custom bases refuse identity, duplicates and phases.
  auto x1 = PauliString::single(2, 0, Axis::X);
  CHECK_THROWS_AS(StringBasis::custom(2, {PauliString::identity(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StringBasis::custom(2, {x1, x1}), std::invalid_argument);
  CHECK_THROWS_AS(
      StringBasis::custom(2, {PauliString::from_masks(2, 1, 0, 2)}),
      std::invalid_argument);
  CHECK(StringBasis::custom(2, {x1}).size() == 1);
}

TEST_CASE("string text form round-trips") {
  Xoshiro256PP rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 8);
    auto s = random_string(n, rng);
    auto back = PauliString::parse(s.str(), n);
    CHECK(back == s);
  }
  CHECK(PauliString::parse("X1*Z3", 3).str() == "X1*Z3");
  CHECK(PauliString::parse("I", 4).is_identity());
  CHECK_THROWS_AS(PauliString::parse("X9", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("Q1", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X1*X1", 3), std::invalid_argument);
}
