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
#include <stdexcept>
#include <vector>

#include "plocal/spectrum.hpp"

namespace plocal {

/**
 * Spectral form factor curve: values[i] = < |Tr exp(i t_i H)|^2 > over the
 * ensemble. Values are raw (no normalization); at t = 0 the value is 4^N.
 */
struct SffCurve {
  Eigen::VectorXd times;
  Eigen::VectorXd values;
  int n_realizations = 0;
  int n_qubits = 0;

  Eigen::VectorXd normalized() const {
    double z0 = std::pow(4.0, n_qubits);
    return values / z0;
  }
};

/// Log-spaced grid covering dip, ramp and plateau.
inline Eigen::VectorXd default_time_grid(int points = 200, double t_min = 1e-2,
                                         double t_max = 1e4) {
  if (points < 2 || !(t_min > 0) || !(t_max > t_min))
    throw std::invalid_argument("default_time_grid: bad parameters");
  Eigen::VectorXd t(points);
  double step = std::log(t_max / t_min) / (points - 1);
  for (int i = 0; i < points; ++i) t[i] = t_min * std::exp(step * i);
  return t;
}

inline SffCurve sff(const std::vector<Spectrum>& spectra,
                    const Eigen::VectorXd& times) {
  if (spectra.empty()) throw std::invalid_argument("sff: empty ensemble");
  const Eigen::Index dim = spectra.front().dimension();
  for (const auto& s : spectra)
    if (s.dimension() != dim)
      throw std::invalid_argument("sff: dimension mismatch across ensemble");

  SffCurve curve;
  curve.times = times;
  curve.values = Eigen::VectorXd::Zero(times.size());
  curve.n_realizations = static_cast<int>(spectra.size());
  curve.n_qubits = spectra.front().n_qubits();

  for (const auto& s : spectra) {
    const Eigen::VectorXd& E = s.values();
    for (Eigen::Index i = 0; i < times.size(); ++i) {
      double t = times[i];
      double re = 0, im = 0;
      for (Eigen::Index n = 0; n < dim; ++n) {
        re += std::cos(t * E[n]);
        im += std::sin(t * E[n]);
      }
      curve.values[i] += re * re + im * im;
    }
  }
  curve.values /= static_cast<double>(spectra.size());
  return curve;
}

/// First time after the dip at which the curve exceeds 1.5x its minimum —
/// a simple ramp-onset estimate. Falls back to the last grid point.
inline double ramp_onset(const SffCurve& curve) {
  Eigen::Index i_min;
  double v_min = curve.values.minCoeff(&i_min);
  for (Eigen::Index i = i_min; i < curve.times.size(); ++i)
    if (curve.values[i] > 1.5 * v_min) return curve.times[i];
  return curve.times[curve.times.size() - 1];
}

struct SffComparison {
  double max_abs_log_ratio = 0;
  double ramp_onset_reference = 0;
  double ramp_onset_test = 0;
};

/// Quantifies the visual overlay of two curves on a shared grid.
inline SffComparison sff_compare(const SffCurve& reference, const SffCurve& test) {
  if (reference.times.size() != test.times.size() ||
      (reference.times - test.times).cwiseAbs().maxCoeff() >
          1e-12 * reference.times.cwiseAbs().maxCoeff())
    throw std::invalid_argument("sff_compare: time grids differ");
  SffComparison out;
  for (Eigen::Index i = 0; i < reference.times.size(); ++i) {
    double a = std::max(test.values[i], 1e-300);
    double b = std::max(reference.values[i], 1e-300);
    out.max_abs_log_ratio = std::max(out.max_abs_log_ratio, std::abs(std::log(a / b)));
  }
  out.ramp_onset_reference = ramp_onset(reference);
  out.ramp_onset_test = ramp_onset(test);
  return out;
}

}  // namespace plocal
