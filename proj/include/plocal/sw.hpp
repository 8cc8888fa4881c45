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
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "plocal/basis.hpp"
#include "plocal/hamiltonian.hpp"
#include "plocal/spectrum.hpp"

namespace plocal {

/**
 * State of the iterative Schrieffer–Wolff localization. The current H stays
 * isospectral to the initial one (unitary conjugation) and accumulated_U
 * collects the product of the per-step rotations.
 */
struct SwState {
  Eigen::MatrixXcd H;
  Eigen::MatrixXcd accumulated_U;
  double alpha = 0.1;
  int iteration = 0;
  double residual_norm = 0;       // Frobenius norm of the off-subspace part
  bool degenerate_warning = false;  // some generator elements were floored
};

struct SwOptions {
  double alpha = 0.1;
  int max_iterations = 5000;
  double residual_tolerance = 1e-8;
  double degeneracy_floor_rel = 1e-10;  // relative to the spectral width of H_k
  double unitarity_drift_tol = 1e-10;   // re-orthonormalize beyond this
  int stagnation_window = 50;
  double stagnation_decrease = 1e-14;
};

struct SwRunResult {
  SwState state;
  LocalHamiltonian local_part;
  bool converged = false;
  std::vector<double> residual_history;
};

namespace detail {

inline double sw_residual(const Eigen::MatrixXcd& H, const StringBasis& basis,
                          Eigen::VectorXd* couplings_out = nullptr) {
  Eigen::VectorXd h = project_onto_subspace(H, basis);
  Eigen::MatrixXcd Hk = materialize(LocalHamiltonian(basis, h));
  double r = (H - Hk).norm();
  if (couplings_out) *couplings_out = std::move(h);
  return r;
}

/// Closest-unitary polar projection, used when accumulated roundoff drifts.
inline void reunitarize(Eigen::MatrixXcd& U) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(U, Eigen::ComputeThinU | Eigen::ComputeThinV);
  U = svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace detail

inline SwState sw_init(const Eigen::MatrixXcd& H, const StringBasis& basis,
                       double alpha = 0.1) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("sw_init: alpha must lie in (0, 1]");
  detail::require_hermitian(H);
  SwState state;
  state.H = 0.5 * (H + H.adjoint());
  state.accumulated_U = Eigen::MatrixXcd::Identity(H.rows(), H.cols());
  state.alpha = alpha;
  state.residual_norm = detail::sw_residual(state.H, basis);
  return state;
}

/**
 * One Schrieffer–Wolff step. Splits H = H_k + H_perp against the basis,
 * builds the generator S with matrix elements
 *   <n|S|m> = -<n|H_perp|m> / (eps_n - eps_m)   (zero on the diagonal)
 * in the eigenbasis of H_k, and conjugates H <- e^{-aS} H e^{aS}. Elements
 * with near-degenerate denominators are zeroed and flagged.
 */
inline void sw_step(SwState& state, const StringBasis& basis,
                    const SwOptions& opts = {}) {
  const Eigen::Index dim = state.H.rows();
  Eigen::VectorXd h = project_onto_subspace(state.H, basis);
  Eigen::MatrixXcd Hk = materialize(LocalHamiltonian(basis, h));
  Eigen::MatrixXcd Hperp = state.H - Hk;

  HermEigenSystem eig = herm_eigen(Hk);
  double width = std::max(eig.values.cwiseAbs().maxCoeff(), 1e-300);
  double floor = opts.degeneracy_floor_rel * width;

  Eigen::MatrixXcd S = eig.vectors.adjoint() * Hperp * eig.vectors;
  for (Eigen::Index n = 0; n < dim; ++n) {
    for (Eigen::Index m = 0; m < dim; ++m) {
      double gap = eig.values[n] - eig.values[m];
      if (n == m || std::abs(gap) < floor) {
        if (n != m && S(n, m) != std::complex<double>(0, 0))
          state.degenerate_warning = true;
        S(n, m) = 0;
      } else {
        S(n, m) = -S(n, m) / gap;
      }
    }
  }
  S = (eig.vectors * S * eig.vectors.adjoint()).eval();
  S = 0.5 * (S - S.adjoint()).eval();  // clean roundoff: S is anti-Hermitian

  // exp(alpha S) through the Hermitian matrix A = iS.
  HermEigenSystem a_eig = herm_eigen(Eigen::MatrixXcd(std::complex<double>(0, 1) * S));
  Eigen::VectorXcd phases(dim);
  for (Eigen::Index k = 0; k < dim; ++k)
    phases[k] = std::exp(std::complex<double>(0, -state.alpha * a_eig.values[k]));
  Eigen::MatrixXcd U_step =
      a_eig.vectors * phases.asDiagonal() * a_eig.vectors.adjoint();

  state.H = (U_step.adjoint() * state.H * U_step).eval();
  state.H = 0.5 * (state.H + state.H.adjoint()).eval();
  state.accumulated_U = (state.accumulated_U * U_step).eval();
  ++state.iteration;
  state.residual_norm = detail::sw_residual(state.H, basis);

  double drift = (state.accumulated_U.adjoint() * state.accumulated_U -
                  Eigen::MatrixXcd::Identity(dim, dim))
                     .norm();
  if (drift > opts.unitarity_drift_tol) detail::reunitarize(state.accumulated_U);
}

/**
 * Iterates sw_step until the residual drops below tolerance, the iteration
 * budget runs out, or the residual stagnates. Returns the final state plus
 * the projection of the rotated H onto the basis.
 */
inline SwRunResult sw_localize(const Eigen::MatrixXcd& H, const StringBasis& basis,
                               const SwOptions& opts = {}) {
  SwState state = sw_init(H, basis, opts.alpha);
  std::vector<double> history{state.residual_norm};
  bool converged = state.residual_norm < opts.residual_tolerance;

  while (!converged && state.iteration < opts.max_iterations) {
    sw_step(state, basis, opts);
    history.push_back(state.residual_norm);
    if (state.residual_norm < opts.residual_tolerance) {
      converged = true;
      break;
    }
    if (static_cast<int>(history.size()) > opts.stagnation_window) {
      double past = history[history.size() - 1 - opts.stagnation_window];
      if (past - state.residual_norm < opts.stagnation_decrease) break;
    }
  }

  Eigen::VectorXd h;
  detail::sw_residual(state.H, basis, &h);
  SwRunResult out{std::move(state), LocalHamiltonian(basis, std::move(h)),
                  converged, std::move(history)};
  return out;
}

inline SwRunResult sw_localize(const Eigen::MatrixXd& H, const StringBasis& basis,
                               const SwOptions& opts = {}) {
  return sw_localize(Eigen::MatrixXcd(H.cast<std::complex<double>>()), basis, opts);
}

/// || [H_k, H_perp] ||_F of the current split — zero at a converged fixed point.
inline double sw_commutator_norm(const SwState& state, const StringBasis& basis) {
  Eigen::VectorXd h = project_onto_subspace(state.H, basis);
  Eigen::MatrixXcd Hk = materialize(LocalHamiltonian(basis, h));
  Eigen::MatrixXcd Hperp = state.H - Hk;
  return (Hk * Hperp - Hperp * Hk).norm();
}

}  // namespace plocal
