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
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "plocal/basis.hpp"
#include "plocal/bfgs.hpp"
#include "plocal/hamiltonian.hpp"
#include "plocal/rng.hpp"
#include "plocal/spectrum.hpp"

namespace plocal {

/// In-place Walsh–Hadamard transform: a[s] <- sum_z a[z] (-1)^{popcount(s&z)}.
inline void fwht(Eigen::VectorXd& a) {
  const Eigen::Index n = a.size();
  for (Eigen::Index len = 1; len < n; len <<= 1)
    for (Eigen::Index i = 0; i < n; i += len << 1)
      for (Eigen::Index j = i; j < i + len; ++j) {
        double u = a[j], v = a[j + len];
        a[j] = u + v;
        a[j + len] = u - v;
      }
}

struct OptimizerSettings {
  int max_iterations = 0;            // 0 = 10x the parameter count
  double gradient_tolerance = 1e-10;
  double l1_epsilon = 1e-8;          // smoothing of |h| in the sparse variant
};

enum class VariantKind { plain, low_rank, sparse };

struct LocalizationProblem {
  Spectrum target;
  StringBasis basis;
  VariantKind variant = VariantKind::plain;
  int rank = 1;         // low_rank only
  double lambda = 0.0;  // sparse only
  OptimizerSettings settings;

  void validate() const {
    if (target.n_qubits() != basis.n_qubits())
      throw std::invalid_argument("LocalizationProblem: target/basis size mismatch");
    if (variant == VariantKind::low_rank) {
      if (rank < 1 || rank > basis.n_qubits())
        throw std::invalid_argument("LocalizationProblem: rank out of range");
      if (!basis.is_diagonal())
        throw std::invalid_argument("LocalizationProblem: low_rank needs a Z-only basis");
    }
    if (variant == VariantKind::sparse) {
      if (lambda < 0)
        throw std::invalid_argument("LocalizationProblem: lambda must be >= 0");
      if (!(settings.l1_epsilon > 0))
        throw std::invalid_argument("LocalizationProblem: l1_epsilon must be > 0");
    }
  }

  Eigen::Index parameter_count() const {
    return variant == VariantKind::low_rank
               ? Eigen::Index(rank) * basis.n_qubits()
               : Eigen::Index(basis.size());
  }
};

struct LocalizationResult {
  Eigen::VectorXd couplings;  // optimization variables (factor entries for low_rank)
  double final_cost = 0;       // bare spectral cost
  double penalized_cost = 0;   // equals final_cost unless sparse
  double sparsity = 0;         // sum h^4 / (sum h^2)^2 of the string couplings
  std::vector<double> cost_history;  // optimizer objective per accepted step
  double gradient_norm = 0;
  int iterations = 0;
  bool converged = false;
  bool line_search_failed = false;
  double elapsed_seconds = 0;
  std::uint64_t seed = 0;
};

/// Symmetric zero-diagonal coupling matrix of the Ising (Z-only) model,
/// with trial energies E(s) = sum_{i<j} J_ij s_i s_j over s in {-1,+1}^N.
struct CouplingMatrixJ {
  int n_qubits = 0;
  Eigen::MatrixXd J;

  CouplingMatrixJ() = default;
  CouplingMatrixJ(int n, Eigen::MatrixXd m) : n_qubits(n), J(std::move(m)) {
    if (J.rows() != n_qubits || J.cols() != n_qubits)
      throw std::invalid_argument("CouplingMatrixJ: shape mismatch");
    if ((J - J.transpose()).cwiseAbs().maxCoeff() > 0)
      throw std::invalid_argument("CouplingMatrixJ: J must be symmetric");
    if (J.diagonal().cwiseAbs().maxCoeff() > 0)
      throw std::invalid_argument("CouplingMatrixJ: diagonal must be zero");
  }
};

/// Pair couplings in z_only_2local order (i < j ascending) -> matrix.
inline CouplingMatrixJ couplings_to_matrix(int n_qubits, const Eigen::VectorXd& h) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n_qubits, n_qubits);
  Eigen::Index t = 0;
  for (int i = 0; i < n_qubits; ++i)
    for (int j = i + 1; j < n_qubits; ++j) {
      J(i, j) = h[t];
      J(j, i) = h[t];
      ++t;
    }
  if (t != h.size())
    throw std::invalid_argument("couplings_to_matrix: coupling length mismatch");
  return CouplingMatrixJ(n_qubits, std::move(J));
}

inline Eigen::VectorXd matrix_to_couplings(const CouplingMatrixJ& J) {
  int n = J.n_qubits;
  Eigen::VectorXd h(Eigen::Index(n) * (n - 1) / 2);
  Eigen::Index t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h[t++] = J.J(i, j);
  return h;
}

/// IPR-style sparsity of a coupling vector: sum h^4 / (sum h^2)^2.
inline double sparsity_metric(const Eigen::VectorXd& h) {
  double s2 = h.squaredNorm();
  if (s2 == 0) return 0;
  return h.array().pow(4).sum() / (s2 * s2);
}

namespace detail {

// ---------------------------------------------------------------------------
// Objective evaluators. Each computes the spectral cost
//   C = (1/2^{N+1}) sum_i (E_i - T_i)^2
// with both spectra ascending and paired by rank, plus the gradient
//   dC/dh_tau = h_tau - (1/2^N) sum_n E_n <n|tau|n>,
// with |n> ordered by ascending trial eigenvalue.
// ---------------------------------------------------------------------------

struct DenseRealEvaluator {
  const StringBasis* basis;
  Eigen::VectorXd target;  // ascending
  int n_qubits;
  Eigen::Index dim;

  mutable Eigen::MatrixXd M, Vt, Y;

  DenseRealEvaluator(const StringBasis& b, const Spectrum& t)
      : basis(&b), target(t.values()), n_qubits(b.n_qubits()),
        dim(Eigen::Index{1} << b.n_qubits()) {
    detail::require_dense_dim(n_qubits);
    M.resize(dim, dim);
  }

  double operator()(const Eigen::VectorXd& h, Eigen::VectorXd& grad) const {
    if (!h.allFinite())
      throw std::invalid_argument("localize: non-finite couplings");
    M.setZero();
    for (std::size_t t = 0; t < basis->size(); ++t) {
      const PauliString& p = (*basis)[t];
      if (h[t] == 0.0) continue;
      double coeff = h[t] * real_phase_sign(p);
      auto x = static_cast<Eigen::Index>(p.x_mask());
      const std::uint64_t z = p.z_mask();
      for (Eigen::Index s = 0; s < dim; ++s) {
        int sign = std::popcount(static_cast<std::uint64_t>(s) & z) % 2 ? -1 : 1;
        M(s ^ x, s) += coeff * sign;
      }
    }
    SymEigenSystem eig = sym_eigen(M);
    double cost = (eig.values - target).squaredNorm() / (2.0 * double(dim));

    Vt = eig.vectors.transpose();
    Y = target.asDiagonal() * Vt;
    grad.resize(h.size());
    for (std::size_t t = 0; t < basis->size(); ++t) {
      const PauliString& p = (*basis)[t];
      double base = real_phase_sign(p);
      auto x = static_cast<Eigen::Index>(p.x_mask());
      const std::uint64_t z = p.z_mask();
      double acc = 0;
      for (Eigen::Index s = 0; s < dim; ++s) {
        int sign = std::popcount(static_cast<std::uint64_t>(s) & z) % 2 ? -1 : 1;
        acc += sign * Y.col(s).dot(Vt.col(s ^ x));
      }
      grad[t] = h[t] - base * acc / double(dim);
    }
    return cost;
  }

  Spectrum trial_spectrum(const Eigen::VectorXd& h) const {
    M.setZero();
    LocalHamiltonian lh(*basis, h);
    return spectrum_of(materialize_real(lh));
  }
};

struct DenseComplexEvaluator {
  const StringBasis* basis;
  Eigen::VectorXd target;
  int n_qubits;
  Eigen::Index dim;

  mutable Eigen::MatrixXcd M, Vt, Y;

  DenseComplexEvaluator(const StringBasis& b, const Spectrum& t)
      : basis(&b), target(t.values()), n_qubits(b.n_qubits()),
        dim(Eigen::Index{1} << b.n_qubits()) {
    detail::require_dense_dim(n_qubits);
    M.resize(dim, dim);
  }

  double operator()(const Eigen::VectorXd& h, Eigen::VectorXd& grad) const {
    if (!h.allFinite())
      throw std::invalid_argument("localize: non-finite couplings");
    M.setZero();
    for (std::size_t t = 0; t < basis->size(); ++t) {
      const PauliString& p = (*basis)[t];
      if (h[t] == 0.0) continue;
      std::complex<double> coeff = h[t] * i_power(p.y_count());
      auto x = static_cast<Eigen::Index>(p.x_mask());
      const std::uint64_t z = p.z_mask();
      for (Eigen::Index s = 0; s < dim; ++s) {
        int sign = std::popcount(static_cast<std::uint64_t>(s) & z) % 2 ? -1 : 1;
        M(s ^ x, s) += coeff * double(sign);
      }
    }
    HermEigenSystem eig = herm_eigen(M);
    double cost = (eig.values - target).squaredNorm() / (2.0 * double(dim));

    Vt = eig.vectors.transpose();
    Y = target.cast<std::complex<double>>().asDiagonal() * Vt;
    grad.resize(h.size());
    for (std::size_t t = 0; t < basis->size(); ++t) {
      const PauliString& p = (*basis)[t];
      std::complex<double> base = i_power(p.y_count());
      auto x = static_cast<Eigen::Index>(p.x_mask());
      const std::uint64_t z = p.z_mask();
      std::complex<double> acc = 0;
      for (Eigen::Index s = 0; s < dim; ++s) {
        int sign = std::popcount(static_cast<std::uint64_t>(s) & z) % 2 ? -1 : 1;
        acc += double(sign) * Vt.col(s ^ x).dot(Y.col(s));
      }
      grad[t] = h[t] - (base * acc).real() / double(dim);
    }
    return cost;
  }

  Spectrum trial_spectrum(const Eigen::VectorXd& h) const {
    LocalHamiltonian lh(*basis, h);
    return spectrum_of(materialize(lh));
  }
};

/**
 * Fast path for diagonal (all-Z) bases. Trial energies over the 2^N spin
 * configurations are a Walsh–Hadamard transform of the coupling vector, and
 * the gradient is the transform of the rank-paired residual, so one
 * evaluation is O(N 2^N) with no diagonalization.
 */
struct DiagonalEvaluator {
  Eigen::VectorXd target;
  int n_qubits;
  Eigen::Index dim;
  std::vector<Eigen::Index> zmask;  // per basis string

  mutable Eigen::VectorXd work, resid;
  mutable std::vector<Eigen::Index> order;

  DiagonalEvaluator(const StringBasis& b, const Spectrum& t)
      : target(t.values()), n_qubits(b.n_qubits()),
        dim(Eigen::Index{1} << b.n_qubits()) {
    if (!b.is_diagonal())
      throw std::invalid_argument("DiagonalEvaluator: basis is not Z-only");
    zmask.reserve(b.size());
    for (const auto& s : b.strings())
      zmask.push_back(static_cast<Eigen::Index>(s.z_mask()));
    work.resize(dim);
    resid.resize(dim);
    order.resize(dim);
  }

  // Ties in the trial spectrum are broken by configuration index, which
  // keeps evaluations deterministic.
  void sort_order() const {
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      return work[a] != work[b] ? work[a] < work[b] : a < b;
    });
  }

  double operator()(const Eigen::VectorXd& h, Eigen::VectorXd& grad) const {
    if (!h.allFinite())
      throw std::invalid_argument("localize: non-finite couplings");
    work.setZero();
    for (std::size_t t = 0; t < zmask.size(); ++t) work[zmask[t]] = h[t];
    fwht(work);
    sort_order();
    for (Eigen::Index k = 0; k < dim; ++k)
      resid[order[k]] = work[order[k]] - target[k];
    double cost = resid.squaredNorm() / (2.0 * double(dim));
    fwht(resid);
    grad.resize(h.size());
    for (std::size_t t = 0; t < zmask.size(); ++t)
      grad[t] = resid[zmask[t]] / double(dim);
    return cost;
  }

  Spectrum trial_spectrum(const Eigen::VectorXd& h) const {
    work.setZero();
    for (std::size_t t = 0; t < zmask.size(); ++t) work[zmask[t]] = h[t];
    fwht(work);
    return Spectrum(n_qubits, work);
  }
};

/**
 * Low-rank diagonal variant: J = sum_r v_r v_r^T with the diagonal zeroed
 * before the spectrum evaluation; parameters are the factor entries and the
 * gradient flows through the zero-diagonal map by the chain rule.
 */
struct LowRankEvaluator {
  DiagonalEvaluator core;
  int n_qubits;
  int rank;

  mutable Eigen::VectorXd pair_h, pair_grad;
  mutable Eigen::MatrixXd G;

  LowRankEvaluator(const StringBasis& zbasis, const Spectrum& t, int r)
      : core(zbasis, t), n_qubits(zbasis.n_qubits()), rank(r) {
    if (zbasis.flavor() != BasisFlavor::z_only_2local)
      throw std::invalid_argument("LowRankEvaluator: needs the ZZ pair basis");
    pair_h.resize(zbasis.size());
    pair_grad.resize(zbasis.size());
    G.resize(n_qubits, n_qubits);
  }

  void pairs_from_factors(const Eigen::VectorXd& theta) const {
    Eigen::Index t = 0;
    for (int i = 0; i < n_qubits; ++i)
      for (int j = i + 1; j < n_qubits; ++j) {
        double acc = 0;
        for (int r = 0; r < rank; ++r)
          acc += theta[r * n_qubits + i] * theta[r * n_qubits + j];
        pair_h[t++] = acc;
      }
  }

  double operator()(const Eigen::VectorXd& theta, Eigen::VectorXd& grad) const {
    pairs_from_factors(theta);
    double cost = core(pair_h, pair_grad);
    G.setZero();
    Eigen::Index t = 0;
    for (int i = 0; i < n_qubits; ++i)
      for (int j = i + 1; j < n_qubits; ++j) {
        G(i, j) = pair_grad[t];
        G(j, i) = pair_grad[t];
        ++t;
      }
    grad.resize(theta.size());
    for (int r = 0; r < rank; ++r)
      grad.segment(r * n_qubits, n_qubits).noalias() =
          G * theta.segment(r * n_qubits, n_qubits);
    return cost;
  }
};

}  // namespace detail

/// Spectral cost and Eq.-5-style gradient at a coupling vector (plain
/// variant). Exposed mainly for oracle tests.
inline std::pair<double, Eigen::VectorXd> cost_and_gradient(
    const Eigen::VectorXd& h, const LocalizationProblem& problem) {
  problem.validate();
  if (problem.variant != VariantKind::plain)
    throw std::invalid_argument("cost_and_gradient: plain variant only");
  Eigen::VectorXd grad;
  double cost;
  if (problem.basis.is_diagonal()) {
    detail::DiagonalEvaluator eval(problem.basis, problem.target);
    cost = eval(h, grad);
  } else if (problem.basis.is_real()) {
    detail::DenseRealEvaluator eval(problem.basis, problem.target);
    cost = eval(h, grad);
  } else {
    detail::DenseComplexEvaluator eval(problem.basis, problem.target);
    cost = eval(h, grad);
  }
  return {cost, std::move(grad)};
}

/// Trial spectrum of a diagonal basis without diagonalization.
inline Spectrum diagonal_trial_spectrum(const StringBasis& basis,
                                        const Eigen::VectorXd& h) {
  Spectrum dummy(basis.n_qubits(),
                 Eigen::VectorXd::Zero(Eigen::Index{1} << basis.n_qubits()));
  detail::DiagonalEvaluator eval(basis, dummy);
  return eval.trial_spectrum(h);
}

enum class InitKind { random_scaled, given };

namespace detail {

/// Gaussian init rescaled so the trial bandwidth matches the target:
/// sum h0^2 = (1/2^N) sum E_i^2.
inline Eigen::VectorXd random_scaled_init(const LocalizationProblem& problem,
                                          Xoshiro256PP& rng) {
  Eigen::Index m = problem.parameter_count();
  Eigen::VectorXd h0(m);
  for (Eigen::Index i = 0; i < m; ++i) h0[i] = rng.normal();
  double want = problem.target.mean_square();
  if (problem.variant == VariantKind::low_rank) {
    LowRankEvaluator eval(problem.basis, problem.target, problem.rank);
    eval.pairs_from_factors(h0);
    double have = eval.pair_h.squaredNorm();
    if (have > 0) h0 *= std::pow(want / have, 0.25);
  } else {
    double have = h0.squaredNorm();
    if (have > 0) h0 *= std::sqrt(want / have);
  }
  return h0;
}

inline LocalizationResult run_localization(const LocalizationProblem& problem,
                                           Eigen::VectorXd h0,
                                           std::uint64_t seed_echo) {
  problem.validate();
  if (h0.size() != problem.parameter_count())
    throw std::invalid_argument("localize: init length mismatch");

  using Objective = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;
  Objective bare;
  if (problem.variant == VariantKind::low_rank) {
    auto eval = std::make_shared<LowRankEvaluator>(problem.basis, problem.target,
                                                   problem.rank);
    bare = [eval](const Eigen::VectorXd& h, Eigen::VectorXd& g) {
      return (*eval)(h, g);
    };
  } else if (problem.basis.is_diagonal()) {
    auto eval = std::make_shared<DiagonalEvaluator>(problem.basis, problem.target);
    bare = [eval](const Eigen::VectorXd& h, Eigen::VectorXd& g) {
      return (*eval)(h, g);
    };
  } else if (problem.basis.is_real()) {
    auto eval = std::make_shared<DenseRealEvaluator>(problem.basis, problem.target);
    bare = [eval](const Eigen::VectorXd& h, Eigen::VectorXd& g) {
      return (*eval)(h, g);
    };
  } else {
    auto eval = std::make_shared<DenseComplexEvaluator>(problem.basis, problem.target);
    bare = [eval](const Eigen::VectorXd& h, Eigen::VectorXd& g) {
      return (*eval)(h, g);
    };
  }

  Objective objective = bare;
  if (problem.variant == VariantKind::sparse) {
    double lambda = problem.lambda;
    double eps = problem.settings.l1_epsilon;
    objective = [bare, lambda, eps](const Eigen::VectorXd& h, Eigen::VectorXd& g) {
      double c = bare(h, g);
      double pen = 0;
      for (Eigen::Index i = 0; i < h.size(); ++i) {
        double r = std::sqrt(h[i] * h[i] + eps * eps);
        pen += r;
        g[i] += lambda * h[i] / r;
      }
      return c + lambda * pen;
    };
  }

  BfgsOptions opts;
  opts.gradient_tolerance = problem.settings.gradient_tolerance;
  opts.max_iterations = problem.settings.max_iterations > 0
                            ? problem.settings.max_iterations
                            : 10 * static_cast<int>(problem.parameter_count());

  auto t0 = std::chrono::steady_clock::now();
  BfgsReport report = minimize_bfgs(objective, std::move(h0), opts);
  auto t1 = std::chrono::steady_clock::now();

  LocalizationResult result;
  result.couplings = report.x;
  result.penalized_cost = report.f;
  if (problem.variant == VariantKind::sparse) {
    Eigen::VectorXd g_unused;
    result.final_cost = bare(report.x, g_unused);
  } else {
    result.final_cost = report.f;
  }
  if (problem.variant == VariantKind::low_rank) {
    LowRankEvaluator eval(problem.basis, problem.target, problem.rank);
    eval.pairs_from_factors(report.x);
    result.sparsity = sparsity_metric(eval.pair_h);
  } else {
    result.sparsity = sparsity_metric(report.x);
  }
  result.cost_history = std::move(report.history);
  result.gradient_norm = report.gradient.lpNorm<Eigen::Infinity>();
  result.iterations = report.iterations;
  result.converged = report.converged;
  result.line_search_failed = report.line_search_failed;
  result.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
  result.seed = seed_echo;
  return result;
}

}  // namespace detail

/// Quasi-Newton spectral localization from a seeded random init.
inline LocalizationResult localize(const LocalizationProblem& problem,
                                   std::uint64_t seed, std::uint64_t stream = 0) {
  problem.validate();
  Xoshiro256PP rng(seed, stream);
  return detail::run_localization(problem,
                                  detail::random_scaled_init(problem, rng), seed);
}

/// Localization from a caller-provided init.
inline LocalizationResult localize_from(const LocalizationProblem& problem,
                                        Eigen::VectorXd h0) {
  return detail::run_localization(problem, std::move(h0), 0);
}

/// Repeated runs with per-restart RNG streams; results in restart order.
inline std::vector<LocalizationResult> localize_restarts(
    const LocalizationProblem& problem, std::uint64_t seed, int n_restarts) {
  std::vector<LocalizationResult> out;
  out.reserve(n_restarts);
  for (int r = 0; r < n_restarts; ++r) {
    Xoshiro256PP rng(seed, static_cast<std::uint64_t>(r) + 1);
    out.push_back(detail::run_localization(
        problem, detail::random_scaled_init(problem, rng), seed));
  }
  return out;
}

inline const LocalizationResult& best_result(
    const std::vector<LocalizationResult>& results) {
  if (results.empty()) throw std::invalid_argument("best_result: empty");
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].final_cost < results[best].final_cost) best = i;
  return results[best];
}

/// Z-only (Ising) localization via the diagonal fast path.
inline LocalizationResult localize_diagonal(
    const Spectrum& target, const std::optional<CouplingMatrixJ>& J0,
    std::uint64_t seed, const OptimizerSettings& settings = {}) {
  LocalizationProblem problem{target,
                              StringBasis::enumerate(target.n_qubits(),
                                                     BasisFlavor::z_only_2local),
                              VariantKind::plain, 1, 0.0, settings};
  if (J0) {
    if (J0->n_qubits != target.n_qubits())
      throw std::invalid_argument("localize_diagonal: J0 size mismatch");
    return detail::run_localization(problem, matrix_to_couplings(*J0), seed);
  }
  return localize(problem, seed);
}

/// Diagonal localization through a rank-limited factorization of J.
inline LocalizationResult localize_low_rank(const Spectrum& target, int rank,
                                            std::uint64_t seed,
                                            const OptimizerSettings& settings = {},
                                            std::uint64_t stream = 0) {
  LocalizationProblem problem{target,
                              StringBasis::enumerate(target.n_qubits(),
                                                     BasisFlavor::z_only_2local),
                              VariantKind::low_rank, rank, 0.0, settings};
  return localize(problem, seed, stream);
}

/// Factor entries of a low-rank result -> reconstructed J (diagonal zeroed).
inline CouplingMatrixJ low_rank_to_matrix(const Eigen::VectorXd& theta,
                                          int n_qubits, int rank) {
  if (theta.size() != Eigen::Index(rank) * n_qubits)
    throw std::invalid_argument("low_rank_to_matrix: length mismatch");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n_qubits, n_qubits);
  for (int r = 0; r < rank; ++r) {
    auto v = theta.segment(Eigen::Index(r) * n_qubits, n_qubits);
    J.noalias() += v * v.transpose();
  }
  J.diagonal().setZero();
  return CouplingMatrixJ(n_qubits, std::move(J));
}

/// L1-regularized localization with a smoothed absolute value.
inline LocalizationResult localize_sparse(const Spectrum& target,
                                          const StringBasis& basis,
                                          double lambda, double epsilon,
                                          std::uint64_t seed,
                                          OptimizerSettings settings = {},
                                          std::uint64_t stream = 0) {
  settings.l1_epsilon = epsilon;
  LocalizationProblem problem{target, basis, VariantKind::sparse, 1, lambda,
                              settings};
  return localize(problem, seed, stream);
}

}  // namespace plocal
