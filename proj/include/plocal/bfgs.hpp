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
#include <functional>
#include <limits>
#include <vector>

namespace plocal {

struct BfgsOptions {
  int max_iterations = 1000;
  double gradient_tolerance = 1e-10;  // on the max-norm of the gradient
  double c1 = 1e-4;                   // sufficient decrease
  double c2 = 0.9;                    // curvature
  int max_line_search_evals = 40;
  double max_step = 1e8;
};

struct BfgsReport {
  Eigen::VectorXd x;
  double f = std::numeric_limits<double>::infinity();
  Eigen::VectorXd gradient;
  int iterations = 0;
  bool converged = false;
  bool line_search_failed = false;
  std::vector<double> history;  // f after each accepted step, starting at f(x0)
  long long evaluations = 0;
};

/**
 * Dense-inverse BFGS with a strong-Wolfe line search (sufficient decrease
 * plus curvature), after Nocedal & Wright's bracket/zoom scheme. The
 * objective callback evaluates f and its gradient together:
 *
 *   double f = objective(x, grad_out);
 *
 * Every accepted step strictly decreases f. On line-search failure the best
 * iterate seen so far is returned with converged = false.
 */
inline BfgsReport minimize_bfgs(
    const std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>& objective,
    Eigen::VectorXd x0, const BfgsOptions& opts = {}) {
  const auto m = x0.size();
  BfgsReport report;

  Eigen::VectorXd x = std::move(x0);
  Eigen::VectorXd g(m), g_new(m);
  double f = objective(x, g);
  ++report.evaluations;
  report.history.push_back(f);

  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(m, m);
  bool h_is_fresh = true;

  Eigen::VectorXd p(m), x_new(m), s(m), y(m);

  auto finish = [&](bool converged, bool ls_failed) {
    report.x = x;
    report.f = f;
    report.gradient = g;
    report.converged = converged;
    report.line_search_failed = ls_failed;
    return report;
  };

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    report.iterations = iter;
    if (g.lpNorm<Eigen::Infinity>() < opts.gradient_tolerance)
      return finish(true, false);

    p.noalias() = -(H * g);
    double dphi0 = g.dot(p);
    if (!(dphi0 < 0)) {
      // Lost positive-definiteness (numerical floor); restart from steepest
      // descent.
      H.setIdentity();
      h_is_fresh = true;
      p = -g;
      dphi0 = g.dot(p);
      if (!(dphi0 < 0)) return finish(false, true);
    }

    // --- strong Wolfe line search -------------------------------------
    double alpha_prev = 0.0, phi_prev = f;
    double alpha = 1.0;
    double alpha_lo = -1, alpha_hi = -1, phi_lo = 0, dphi_lo = 0, phi_hi = 0;
    double accepted_alpha = -1, accepted_phi = 0;
    bool bracketed = false;
    int evals = 0;
    double dphi_prev = dphi0;

    auto eval_phi = [&](double a, double& dphi_out) {
      x_new = x + a * p;
      double phi = objective(x_new, g_new);
      ++report.evaluations;
      ++evals;
      dphi_out = g_new.dot(p);
      return phi;
    };

    // Bracketing stage.
    while (evals < opts.max_line_search_evals) {
      double dphi;
      double phi = eval_phi(alpha, dphi);
      if (phi > f + opts.c1 * alpha * dphi0 || (evals > 1 && phi >= phi_prev)) {
        alpha_lo = alpha_prev; phi_lo = phi_prev; dphi_lo = dphi_prev;
        alpha_hi = alpha; phi_hi = phi;
        bracketed = true;
        break;
      }
      if (std::abs(dphi) <= -opts.c2 * dphi0) {
        accepted_alpha = alpha;
        accepted_phi = phi;
        break;
      }
      if (dphi >= 0) {
        alpha_lo = alpha; phi_lo = phi; dphi_lo = dphi;
        alpha_hi = alpha_prev; phi_hi = phi_prev;
        bracketed = true;
        break;
      }
      alpha_prev = alpha; phi_prev = phi; dphi_prev = dphi;
      alpha = std::min(2.0 * alpha, opts.max_step);
      if (alpha >= opts.max_step) break;
    }

    // Zoom stage.
    if (bracketed && accepted_alpha < 0) {
      while (evals < opts.max_line_search_evals) {
        // Quadratic interpolation using (alpha_lo, phi_lo, dphi_lo) and
        // (alpha_hi, phi_hi); fall back to bisection when degenerate.
        double d = alpha_hi - alpha_lo;
        double denom = phi_hi - phi_lo - dphi_lo * d;
        double a_trial = (denom > 0 || denom < 0)
                             ? alpha_lo - 0.5 * dphi_lo * d * d / denom
                             : alpha_lo + 0.5 * d;
        double lo = std::min(alpha_lo, alpha_hi), hi = std::max(alpha_lo, alpha_hi);
        double margin = 0.1 * (hi - lo);
        if (!(a_trial > lo + margin) || !(a_trial < hi - margin))
          a_trial = 0.5 * (alpha_lo + alpha_hi);

        double dphi;
        double phi = eval_phi(a_trial, dphi);
        if (phi > f + opts.c1 * a_trial * dphi0 || phi >= phi_lo) {
          alpha_hi = a_trial; phi_hi = phi;
        } else {
          if (std::abs(dphi) <= -opts.c2 * dphi0) {
            accepted_alpha = a_trial;
            accepted_phi = phi;
            break;
          }
          if (dphi * (alpha_hi - alpha_lo) >= 0) {
            alpha_hi = alpha_lo; phi_hi = phi_lo;
          }
          alpha_lo = a_trial; phi_lo = phi; dphi_lo = dphi;
        }
        if (std::abs(alpha_hi - alpha_lo) <
            1e-16 * std::max(1.0, std::abs(alpha_lo))) {
          // Interval collapsed; take the lo end if it still decreases f.
          if (phi_lo < f) {
            double dphi2;
            accepted_phi = eval_phi(alpha_lo, dphi2);
            accepted_alpha = alpha_lo;
          }
          break;
        }
      }
      // If zoom exhausted its budget, settle for plain decrease at lo.
      if (accepted_alpha < 0 && alpha_lo > 0 && phi_lo < f) {
        double dphi2;
        accepted_phi = eval_phi(alpha_lo, dphi2);
        accepted_alpha = alpha_lo;
      }
    }

    if (accepted_alpha < 0 || !(accepted_phi < f)) {
      report.iterations = iter;
      return finish(g.lpNorm<Eigen::Infinity>() < opts.gradient_tolerance, true);
    }

    // x_new / g_new hold the accepted evaluation.
    s = x_new - x;
    y = g_new - g;
    x.swap(x_new);
    f = accepted_phi;
    g.swap(g_new);
    report.history.push_back(f);

    double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      if (h_is_fresh) {
        H.diagonal().setConstant(sy / y.squaredNorm());
        h_is_fresh = false;
      }
      // Sherman–Morrison BFGS update of the inverse Hessian.
      double rho = 1.0 / sy;
      Eigen::VectorXd Hy = H * y;
      double yHy = y.dot(Hy);
      H.noalias() += (rho * rho * yHy + rho) * (s * s.transpose());
      H.noalias() -= rho * (Hy * s.transpose() + s * Hy.transpose());
    }
    report.iterations = iter + 1;
  }

  return finish(g.lpNorm<Eigen::Infinity>() < opts.gradient_tolerance, false);
}

}  // namespace plocal
