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
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace plocal {

inline int qubits_for_dimension(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim)
    throw std::invalid_argument("dimension is not a power of two");
  return n;
}

/**
 * An ascending-sorted spectrum of a 2^N-dimensional Hermitian operator.
 * Construction sorts and validates; values are immutable afterwards.
 */
class Spectrum {
 public:
  Spectrum() = default;

  Spectrum(int n_qubits, Eigen::VectorXd values)
      : n_qubits_(n_qubits), values_(std::move(values)) {
    if (values_.size() != (Eigen::Index{1} << n_qubits_))
      throw std::invalid_argument("Spectrum: length must be 2^n_qubits");
    if (!values_.allFinite())
      throw std::invalid_argument("Spectrum: non-finite eigenvalue");
    std::sort(values_.data(), values_.data() + values_.size());
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dimension() const { return values_.size(); }
  const Eigen::VectorXd& values() const { return values_; }
  double operator[](Eigen::Index i) const { return values_[i]; }

  /// (1/2^N) sum E_i^2 — the mean squared eigenvalue, used to match trial
  /// bandwidth at initialization.
  double mean_square() const {
    return values_.squaredNorm() / static_cast<double>(values_.size());
  }

  Spectrum scaled(double c) const {
    Spectrum out;
    out.n_qubits_ = n_qubits_;
    out.values_ = c * values_;
    if (c < 0) std::reverse(out.values_.data(), out.values_.data() + out.values_.size());
    return out;
  }

  Spectrum shifted(double c) const {
    Spectrum out;
    out.n_qubits_ = n_qubits_;
    out.values_ = values_.array() + c;
    return out;
  }

 private:
  int n_qubits_ = 0;
  Eigen::VectorXd values_;
};

struct SymEigenSystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns aligned with values
};

struct HermEigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

inline SymEigenSystem sym_eigen(const Eigen::MatrixXd& H, bool with_vectors = true) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      H, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("sym_eigen: eigensolver failed to converge");
  SymEigenSystem out;
  out.values = solver.eigenvalues();
  if (with_vectors) out.vectors = solver.eigenvectors();
  return out;
}

inline HermEigenSystem herm_eigen(const Eigen::MatrixXcd& H, bool with_vectors = true) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      H, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("herm_eigen: eigensolver failed to converge");
  HermEigenSystem out;
  out.values = solver.eigenvalues();
  if (with_vectors) out.vectors = solver.eigenvectors();
  return out;
}

namespace detail {

template <typename Matrix>
void require_hermitian(const Matrix& H, double tol = 1e-10) {
  if (H.rows() != H.cols())
    throw std::invalid_argument("spectrum_of: matrix must be square");
  double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  double dev = (H - H.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol * scale)
    throw std::invalid_argument("spectrum_of: matrix is not Hermitian");
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix, ascending. Rejects inputs that deviate
/// from Hermiticity by more than 1e-10 (relative).
inline Spectrum spectrum_of(const Eigen::MatrixXd& H) {
  detail::require_hermitian(H);
  Eigen::MatrixXd sym = 0.5 * (H + H.transpose());
  return Spectrum(qubits_for_dimension(H.rows()), sym_eigen(sym, false).values);
}

inline Spectrum spectrum_of(const Eigen::MatrixXcd& H) {
  detail::require_hermitian(H);
  Eigen::MatrixXcd herm = 0.5 * (H + H.adjoint());
  return Spectrum(qubits_for_dimension(H.rows()), herm_eigen(herm, false).values);
}

/// max-norm reconstruction residual ||H V - V diag(E)||, for accuracy checks.
inline double reconstruction_residual(const Eigen::MatrixXd& H,
                                      const SymEigenSystem& eig) {
  return (H * eig.vectors - eig.vectors * eig.values.asDiagonal()).norm();
}

/**
 * Mean squared localization error between two spectra, pairing by sorted
 * rank:  C = (1 / 2^{N+1}) sum_i (E_i - T_i)^2.
 */
inline double spectral_cost(const Spectrum& target, const Spectrum& trial) {
  if (target.dimension() != trial.dimension())
    throw std::invalid_argument("spectral_cost: spectrum length mismatch");
  return (target.values() - trial.values()).squaredNorm() /
         (2.0 * static_cast<double>(target.dimension()));
}

}  // namespace plocal
