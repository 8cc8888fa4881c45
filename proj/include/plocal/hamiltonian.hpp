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
#include <complex>
#include <stdexcept>
#include <utility>

#include "plocal/basis.hpp"
#include "plocal/pauli.hpp"

namespace plocal {

/// Largest qubit count for which 2^N x 2^N dense matrices are materialized.
inline constexpr int kDenseCap = 12;

/**
 * A Hamiltonian supported on a string basis: H' = sum_tau h_tau tau.
 * Couplings are real and aligned with the basis order, so the materialized
 * matrix is Hermitian and traceless.
 */
struct LocalHamiltonian {
  StringBasis basis;
  Eigen::VectorXd couplings;

  LocalHamiltonian(StringBasis b, Eigen::VectorXd h)
      : basis(std::move(b)), couplings(std::move(h)) {
    if (static_cast<std::size_t>(couplings.size()) != basis.size())
      throw std::invalid_argument("LocalHamiltonian: coupling length mismatch");
    if (!couplings.allFinite())
      throw std::invalid_argument("LocalHamiltonian: non-finite coupling");
  }
};

namespace detail {

inline void require_dense_dim(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kDenseCap)
    throw std::invalid_argument("dense operation beyond the 2^12 cap");
}

// tau |s> = c(s) |s ^ x_mask> with c(s) = i^{y_count + phase} (-1)^{|z & s|}.
// For even y_count + phase the coefficient is real.
inline int real_phase_sign(const PauliString& p) {
  int q = (p.y_count() + p.phase_pow()) % 4;
  if (q == 0) return 1;
  if (q == 2) return -1;
  throw std::invalid_argument("string does not materialize to a real matrix");
}

inline std::complex<double> i_power(int k) {
  static const std::complex<double> table[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

}  // namespace detail

/// Dense matrix of a single string (including its phase), in the basis where
/// site i acts on bit i-1 of the state index.
inline Eigen::MatrixXcd dense_matrix(const PauliString& p) {
  detail::require_dense_dim(p.n_qubits());
  Eigen::Index dim = Eigen::Index{1} << p.n_qubits();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  std::complex<double> base = detail::i_power(p.y_count() + p.phase_pow());
  for (Eigen::Index s = 0; s < dim; ++s) {
    int sign = std::popcount(static_cast<std::uint64_t>(s) & p.z_mask()) % 2 ? -1 : 1;
    M(s ^ static_cast<Eigen::Index>(p.x_mask()), s) = base * double(sign);
  }
  return M;
}

/// H' = sum_tau h_tau tau as a dense Hermitian matrix.
inline Eigen::MatrixXcd materialize(const LocalHamiltonian& h) {
  detail::require_dense_dim(h.basis.n_qubits());
  Eigen::Index dim = Eigen::Index{1} << h.basis.n_qubits();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t t = 0; t < h.basis.size(); ++t) {
    const PauliString& p = h.basis[t];
    if (h.couplings[t] == 0.0) continue;
    std::complex<double> coeff = h.couplings[t] * detail::i_power(p.y_count());
    auto x = static_cast<Eigen::Index>(p.x_mask());
    for (Eigen::Index s = 0; s < dim; ++s) {
      int sign = std::popcount(static_cast<std::uint64_t>(s) & p.z_mask()) % 2 ? -1 : 1;
      M(s ^ x, s) += coeff * double(sign);
    }
  }
  return M;
}

/// Real symmetric materialization; requires a real-flavor basis (every string
/// with an even number of Y factors).
inline Eigen::MatrixXd materialize_real(const LocalHamiltonian& h) {
  detail::require_dense_dim(h.basis.n_qubits());
  Eigen::Index dim = Eigen::Index{1} << h.basis.n_qubits();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t t = 0; t < h.basis.size(); ++t) {
    const PauliString& p = h.basis[t];
    if (h.couplings[t] == 0.0) continue;
    double coeff = h.couplings[t] * detail::real_phase_sign(p);
    auto x = static_cast<Eigen::Index>(p.x_mask());
    for (Eigen::Index s = 0; s < dim; ++s) {
      int sign = std::popcount(static_cast<std::uint64_t>(s) & p.z_mask()) % 2 ? -1 : 1;
      M(s ^ x, s) += coeff * double(sign);
    }
  }
  return M;
}

/// Tr(tau * M) computed from the permutation structure of tau — O(2^N).
inline std::complex<double> trace_with(const Eigen::MatrixXcd& M,
                                       const PauliString& p) {
  Eigen::Index dim = Eigen::Index{1} << p.n_qubits();
  if (M.rows() != dim || M.cols() != dim)
    throw std::invalid_argument("trace_with: dimension mismatch");
  std::complex<double> base = detail::i_power(p.y_count() + p.phase_pow());
  auto x = static_cast<Eigen::Index>(p.x_mask());
  std::complex<double> acc = 0;
  for (Eigen::Index s = 0; s < dim; ++s) {
    int sign = std::popcount(static_cast<std::uint64_t>(s) & p.z_mask()) % 2 ? -1 : 1;
    acc += double(sign) * M(s, s ^ x);
  }
  return base * acc;
}

inline double trace_with(const Eigen::MatrixXd& M, const PauliString& p) {
  Eigen::Index dim = Eigen::Index{1} << p.n_qubits();
  if (M.rows() != dim || M.cols() != dim)
    throw std::invalid_argument("trace_with: dimension mismatch");
  double base = detail::real_phase_sign(p);
  auto x = static_cast<Eigen::Index>(p.x_mask());
  double acc = 0;
  for (Eigen::Index s = 0; s < dim; ++s) {
    int sign = std::popcount(static_cast<std::uint64_t>(s) & p.z_mask()) % 2 ? -1 : 1;
    acc += double(sign) * M(s, s ^ x);
  }
  return base * acc;
}

/**
 * Coupling vector of the projection of H onto the basis:
 * h_tau = Tr(tau H) / 2^N. Idempotent on materialized LocalHamiltonians.
 */
inline Eigen::VectorXd project_onto_subspace(const Eigen::MatrixXcd& H,
                                             const StringBasis& basis) {
  Eigen::Index dim = Eigen::Index{1} << basis.n_qubits();
  if (H.rows() != dim || H.cols() != dim)
    throw std::invalid_argument("project_onto_subspace: dimension mismatch");
  Eigen::VectorXd h(basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t)
    h[t] = trace_with(H, basis[t]).real() / static_cast<double>(dim);
  return h;
}

inline Eigen::VectorXd project_onto_subspace(const Eigen::MatrixXd& H,
                                             const StringBasis& basis) {
  Eigen::Index dim = Eigen::Index{1} << basis.n_qubits();
  if (H.rows() != dim || H.cols() != dim)
    throw std::invalid_argument("project_onto_subspace: dimension mismatch");
  Eigen::VectorXd h(basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t)
    h[t] = trace_with(H, basis[t]) / static_cast<double>(dim);
  return h;
}

/**
 * Diagonal expectation values <n|tau|n> for every eigenvector column n and
 * every basis string tau; rows follow the eigenvector order, columns the
 * basis order. This is the 2^N x m building block of both the gradient and
 * the stability metric.
 */
inline Eigen::MatrixXd expectation_table(const Eigen::MatrixXd& eigvecs,
                                         const StringBasis& basis) {
  Eigen::Index dim = eigvecs.rows();
  if (dim != (Eigen::Index{1} << basis.n_qubits()))
    throw std::invalid_argument("expectation_table: dimension mismatch");
  // Work with the transpose so both factors of each product are contiguous.
  Eigen::MatrixXd Vt = eigvecs.transpose();
  Eigen::MatrixXd table(dim, basis.size());
  Eigen::VectorXd acc(dim);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const PauliString& p = basis[t];
    double base = detail::real_phase_sign(p);
    auto x = static_cast<Eigen::Index>(p.x_mask());
    acc.setZero();
    for (Eigen::Index s = 0; s < dim; ++s) {
      int sign = std::popcount(static_cast<std::uint64_t>(s) & p.z_mask()) % 2 ? -1 : 1;
      acc += (base * sign) * Vt.col(s).cwiseProduct(Vt.col(s ^ x));
    }
    table.col(t) = acc;
  }
  return table;
}

inline Eigen::MatrixXd expectation_table(const Eigen::MatrixXcd& eigvecs,
                                         const StringBasis& basis) {
  Eigen::Index dim = eigvecs.rows();
  if (dim != (Eigen::Index{1} << basis.n_qubits()))
    throw std::invalid_argument("expectation_table: dimension mismatch");
  Eigen::MatrixXcd Vt = eigvecs.transpose();
  Eigen::MatrixXd table(dim, basis.size());
  Eigen::VectorXcd acc(dim);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const PauliString& p = basis[t];
    std::complex<double> base = detail::i_power(p.y_count());
    auto x = static_cast<Eigen::Index>(p.x_mask());
    acc.setZero();
    for (Eigen::Index s = 0; s < dim; ++s) {
      int sign = std::popcount(static_cast<std::uint64_t>(s) & p.z_mask()) % 2 ? -1 : 1;
      acc += (base * double(sign)) *
             Vt.col(s ^ x).conjugate().cwiseProduct(Vt.col(s));
    }
    table.col(t) = acc.real();
  }
  return table;
}

}  // namespace plocal
