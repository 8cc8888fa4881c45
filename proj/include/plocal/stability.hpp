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
#include <optional>
#include <stdexcept>
#include <vector>

#include "plocal/basis.hpp"
#include "plocal/hamiltonian.hpp"
#include "plocal/localizer.hpp"
#include "plocal/spectrum.hpp"

namespace plocal {

/**
 * The cost-function Hessian at a localization minimum,
 *   g_{tau,eta} = (1/2^N) sum_n <n|tau|n> <n|eta|n>,
 * together with its eigendecomposition (eigenvalues descending). The factor
 * table Q_{n,tau} = <n|tau|n> and the trial energies are kept so operator
 * curves and polynomial eigenvalue estimates reuse the same diagonalization.
 */
struct MetricMatrix {
  StringBasis basis;
  Eigen::MatrixXd g;
  Eigen::VectorXd eigenvalues;   // descending
  Eigen::MatrixXd eigenvectors;  // columns, aligned with eigenvalues
  Eigen::VectorXd energies;      // trial eigenvalues, ascending
  Eigen::MatrixXd table;         // <n|tau|n>, rows follow `energies`
  bool converged_input = true;
};

namespace detail {

struct EigBundle {
  Eigen::VectorXd energies;
  Eigen::MatrixXd table;
};

inline EigBundle diagonal_expectations(const LocalHamiltonian& h0) {
  EigBundle out;
  if (h0.basis.is_real()) {
    SymEigenSystem eig = sym_eigen(materialize_real(h0));
    out.energies = std::move(eig.values);
    out.table = expectation_table(eig.vectors, h0.basis);
  } else {
    HermEigenSystem eig = herm_eigen(materialize(h0));
    out.energies = std::move(eig.values);
    out.table = expectation_table(eig.vectors, h0.basis);
  }
  return out;
}

}  // namespace detail

/**
 * Builds the metric g at a coupling vector h0 for the given target. h0 is
 * expected to be a converged minimum; if the Eq.-5 gradient there exceeds
 * `gradient_warn_tol` the result is still produced but flagged, since the
 * diagonal-expectation form of the Hessian is exact only at the minimum.
 */
inline MetricMatrix metric_at_minimum(const LocalHamiltonian& h0,
                                      const Spectrum& target,
                                      double gradient_warn_tol = 1e-6) {
  if (target.n_qubits() != h0.basis.n_qubits())
    throw std::invalid_argument("metric_at_minimum: target size mismatch");
  const double dim = static_cast<double>(target.dimension());

  detail::EigBundle bundle = detail::diagonal_expectations(h0);

  Eigen::VectorXd grad =
      h0.couplings - bundle.table.transpose() * target.values() / dim;

  MetricMatrix out{h0.basis, {}, {}, {}, {}, {}, true};
  out.converged_input = grad.lpNorm<Eigen::Infinity>() <= gradient_warn_tol;
  out.g = bundle.table.transpose() * bundle.table / dim;
  out.g = 0.5 * (out.g + out.g.transpose()).eval();

  SymEigenSystem eig = sym_eigen(out.g);
  // Descending order, with each eigenvector's largest component made positive.
  const Eigen::Index m = eig.values.size();
  out.eigenvalues.resize(m);
  out.eigenvectors.resize(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    out.eigenvalues[k] = eig.values[m - 1 - k];
    Eigen::VectorXd v = eig.vectors.col(m - 1 - k);
    Eigen::Index imax;
    v.cwiseAbs().maxCoeff(&imax);
    if (v[imax] < 0) v = -v;
    out.eigenvectors.col(k) = v;
  }
  out.energies = std::move(bundle.energies);
  out.table = std::move(bundle.table);
  return out;
}

/**
 * Operator dual to a metric eigenvector, O_k = sum_tau v^k_tau tau, with its
 * diagonal expectation curve <n|O_k|n> over the trial eigenbasis.
 */
struct EigenOperator {
  int k = 0;                     // 1-based rank by descending eigenvalue
  double eigenvalue = 0;
  Eigen::VectorXd coefficients;  // unit norm
  Eigen::VectorXd energies;      // ascending trial eigenvalues
  Eigen::VectorXd expectations;  // <n|O_k|n>, aligned with energies
};

inline std::vector<EigenOperator> eigen_operators(const MetricMatrix& metric,
                                                  int how_many) {
  if (how_many < 1 || how_many > metric.eigenvalues.size())
    throw std::invalid_argument("eigen_operators: how_many out of range");
  std::vector<EigenOperator> out;
  out.reserve(how_many);
  for (int k = 0; k < how_many; ++k) {
    EigenOperator op;
    op.k = k + 1;
    op.eigenvalue = metric.eigenvalues[k];
    op.coefficients = metric.eigenvectors.col(k);
    op.energies = metric.energies;
    op.expectations = metric.table * op.coefficients;
    out.push_back(std::move(op));
  }
  return out;
}

/**
 * Variational estimate of the k-th metric eigenvalue from projected
 * orthogonal polynomials of H':
 *
 *   lambda_k ~= (1/2^N) sum_tau Tr(F_k(H') tau)^2 / Tr(F_k(H')^2)
 *
 * with F_k built by trace-inner-product Gram–Schmidt on {1, H', ..., H'^k}.
 * Since every F_j is a polynomial of H', all traces reduce to sums over the
 * trial eigenbasis, which keeps degrees up to ~6 well conditioned.
 */
inline double estimate_lambda_k(const LocalHamiltonian& h0, int k) {
  if (k < 1) throw std::invalid_argument("estimate_lambda_k: k must be >= 1");
  if (h0.basis.n_qubits() > kDenseCap)
    throw std::invalid_argument("estimate_lambda_k: beyond dense cap");

  detail::EigBundle bundle = detail::diagonal_expectations(h0);
  const Eigen::Index dim = bundle.energies.size();

  double scale = std::max(bundle.energies.cwiseAbs().maxCoeff(), 1e-300);
  Eigen::VectorXd x = bundle.energies / scale;

  // Gram–Schmidt over eigenvalue-diagonal representatives, one extra
  // re-orthogonalization pass for stability.
  std::vector<Eigen::VectorXd> f;
  f.push_back(Eigen::VectorXd::Ones(dim));
  Eigen::VectorXd power = Eigen::VectorXd::Ones(dim);
  for (int j = 1; j <= k; ++j) {
    power = power.cwiseProduct(x);
    Eigen::VectorXd w = power;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& fj : f) w -= (fj.dot(w) / fj.squaredNorm()) * fj;
    if (w.squaredNorm() < 1e-24 * power.squaredNorm())
      throw std::runtime_error("estimate_lambda_k: Gram matrix ill-conditioned");
    f.push_back(std::move(w));
  }

  const Eigen::VectorXd& fk = f.back();
  Eigen::VectorXd projections = bundle.table.transpose() * fk;
  return projections.squaredNorm() / (static_cast<double>(dim) * fk.squaredNorm());
}

/// Closed-form diagonal-model lambda_2 plus its large-N asymptote and the
/// participation-ratio bound.
struct Lambda2Result {
  double closed_form = 0;
  double large_n_asymptote = 0;
  double participation_bound = 0;  // 4 Tr(J^4) / Tr(J^2)^2
};

inline Lambda2Result lambda2_closed_form(const CouplingMatrixJ& J) {
  const Eigen::MatrixXd& M = J.J;
  if (M.cwiseAbs().maxCoeff() == 0)
    throw std::invalid_argument("lambda2_closed_form: J must be nonzero");
  Eigen::MatrixXd J2 = M * M;
  double tr_j2 = J2.trace();
  double tr_j4 = J2.squaredNorm();  // Tr(J^4) for symmetric J
  double diag2 = J2.diagonal().squaredNorm();
  double quart = M.array().pow(4).sum();

  Lambda2Result out;
  double denom = 3.0 * tr_j4 + 0.5 * tr_j2 * tr_j2 - 6.0 * diag2 + 2.0 * quart;
  out.closed_form = 2.0 * (tr_j4 - diag2) / denom;
  out.large_n_asymptote = 2.0 * tr_j4 / (3.0 * tr_j4 + 0.5 * tr_j2 * tr_j2);
  out.participation_bound = 4.0 * tr_j4 / (tr_j2 * tr_j2);
  return out;
}

/**
 * Direct evaluation of the lambda_2 ratio for the diagonal model: F_2 is the
 * traceless part of H'^2 with H' = sum_{i<j} J_ij Z_i Z_j, and tau runs over
 * the ZZ pair strings. Exact sums over all 2^N spin configurations via a
 * Walsh–Hadamard transform; the independent check of the closed form.
 */
inline double lambda2_bruteforce_diagonal(const CouplingMatrixJ& J) {
  const int n = J.n_qubits;
  if (n < 2 || n > StringBasis::kMaxQubits)
    throw std::invalid_argument("lambda2_bruteforce_diagonal: bad size");
  const Eigen::Index dim = Eigen::Index{1} << n;

  // Trial energies for every configuration.
  Eigen::VectorXd f = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      f[(Eigen::Index{1} << i) | (Eigen::Index{1} << j)] = J.J(i, j);
  fwht(f);

  // F_2 diagonal values: E(s)^2 minus the mean.
  f = f.cwiseProduct(f);
  f.array() -= f.mean();
  double denom = f.squaredNorm();  // Tr(F_2^2)
  if (denom == 0)
    throw std::invalid_argument("lambda2_bruteforce_diagonal: degenerate F_2");

  // Tr(F_2 tau) for every ZZ pair is a Walsh coefficient of f.
  fwht(f);
  double num = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double c = f[(Eigen::Index{1} << i) | (Eigen::Index{1} << j)];
      num += c * c;
    }
  return num / (static_cast<double>(dim) * denom);
}

/// Rank lower bound for 2-localizable projectors: 2^N / (basis size + 1),
/// the +1 counting the identity. For N = 3 a tighter constant 4/3 holds.
struct RankBound {
  double generic = 0;
  std::optional<double> tighter;
};

inline RankBound rank_lower_bound(int n_qubits, const StringBasis& basis) {
  RankBound out;
  out.generic = static_cast<double>(Eigen::Index{1} << n_qubits) /
                static_cast<double>(basis.size() + 1);
  if (n_qubits == 3) out.tighter = 4.0 / 3.0;
  return out;
}

/**
 * Least-squares polynomial fit y ~ p(x) of the given degree; returns the
 * standard deviation of the residuals. Used for the smoothness diagnostics
 * of eigenoperator curves.
 */
inline double polynomial_fit_residual_std(const Eigen::VectorXd& x,
                                          const Eigen::VectorXd& y,
                                          int degree = 6) {
  if (x.size() != y.size() || x.size() == 0)
    throw std::invalid_argument("polynomial_fit_residual_std: bad inputs");
  double lo = x.minCoeff(), hi = x.maxCoeff();
  double span = hi - lo;
  if (span == 0) span = 1;
  Eigen::VectorXd u = (2.0 * (x.array() - lo) / span - 1.0).matrix();
  Eigen::MatrixXd V(x.size(), degree + 1);
  V.col(0).setOnes();
  for (int d = 1; d <= degree; ++d) V.col(d) = V.col(d - 1).cwiseProduct(u);
  Eigen::VectorXd coeffs = V.colPivHouseholderQr().solve(y);
  Eigen::VectorXd r = y - V * coeffs;
  double mean = r.mean();
  return std::sqrt((r.array() - mean).square().sum() / r.size());
}

}  // namespace plocal
