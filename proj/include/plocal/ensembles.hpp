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

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "plocal/rng.hpp"
#include "plocal/spectrum.hpp"

namespace plocal {

inline constexpr int kGoeDenseCap = 12;
inline constexpr int kTridiagonalCap = 20;

enum class SpectrumGenerator { goe_dense, hermite_tridiagonal };

inline std::string_view generator_name(SpectrumGenerator g) {
  return g == SpectrumGenerator::goe_dense ? "goe_dense" : "hermite_tridiagonal";
}

struct EnsembleConfig {
  int n_qubits = 0;
  int n_realizations = 1;
  std::uint64_t seed = 0;
  SpectrumGenerator generator = SpectrumGenerator::goe_dense;
  double scale = 1.0;

  void validate() const {
    if (n_realizations < 1)
      throw std::invalid_argument("EnsembleConfig: n_realizations must be >= 1");
    if (!(scale > 0.0))
      throw std::invalid_argument("EnsembleConfig: scale must be positive");
    int cap = generator == SpectrumGenerator::goe_dense ? kGoeDenseCap
                                                        : kTridiagonalCap;
    if (n_qubits < 1 || n_qubits > cap)
      throw std::invalid_argument("EnsembleConfig: n_qubits exceeds generator cap");
  }
};

/// Stream id for realization `index` of a sweep with the given base seed.
inline std::uint64_t realization_stream(std::uint64_t base_seed,
                                        std::uint64_t index) {
  return base_seed ^ index;
}

/**
 * Dense GOE sample: H = (A + A^T)/sqrt(2) with A i.i.d. standard normal,
 * so off-diagonal entries have variance 1 and diagonal entries variance 2.
 * Deterministic per seed.
 */
inline Eigen::MatrixXd sample_goe_dense(int n_qubits, std::uint64_t seed,
                                        double scale = 1.0) {
  if (n_qubits < 1 || n_qubits > kGoeDenseCap)
    throw std::invalid_argument("sample_goe_dense: n_qubits exceeds cap");
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Xoshiro256PP rng(seed);
  Eigen::MatrixXd H(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i; j < dim; ++j) {
      if (i == j) {
        H(i, i) = scale * std::sqrt(2.0) * rng.normal();
      } else {
        // (A_ij + A_ji)/sqrt(2) is itself standard normal off the diagonal.
        double v = scale * rng.normal();
        H(i, j) = v;
        H(j, i) = v;
      }
    }
  }
  return H;
}

/**
 * Spectrum of the beta = 1 tridiagonal Hermite model, in the same
 * normalization as sample_goe_dense: diagonal entries N(0, 2), sub-diagonal
 * entry k (counted from the bottom) chi-distributed with k degrees of
 * freedom. Eigenvalue densities of the two generators agree at equal N.
 */
inline Spectrum sample_spectrum_tridiagonal(int n_qubits, std::uint64_t seed,
                                            double scale = 1.0) {
  if (n_qubits < 1 || n_qubits > kTridiagonalCap)
    throw std::invalid_argument("sample_spectrum_tridiagonal: n_qubits exceeds cap");
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Xoshiro256PP rng(seed);
  Eigen::VectorXd diag(dim), sub(dim - 1);
  for (Eigen::Index i = 0; i < dim; ++i)
    diag[i] = scale * std::sqrt(2.0) * rng.normal();
  for (Eigen::Index i = 0; i < dim - 1; ++i)
    sub[i] = scale * rng.chi(static_cast<int>(dim - 1 - i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("sample_spectrum_tridiagonal: eigensolver failed");
  return Spectrum(n_qubits, solver.eigenvalues());
}

/// Target spectrum for one realization of an ensemble sweep.
inline Spectrum sample_target_spectrum(const EnsembleConfig& config,
                                       int realization) {
  config.validate();
  std::uint64_t stream = realization_stream(config.seed, realization);
  if (config.generator == SpectrumGenerator::goe_dense)
    return spectrum_of(sample_goe_dense(config.n_qubits, stream, config.scale));
  return sample_spectrum_tridiagonal(config.n_qubits, stream, config.scale);
}

}  // namespace plocal
