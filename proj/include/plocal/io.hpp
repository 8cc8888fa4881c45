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
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "plocal/basis.hpp"
#include "plocal/ensembles.hpp"
#include "plocal/localizer.hpp"
#include "plocal/spectrum.hpp"
#include "plocal/version.hpp"

namespace plocal {

using json = nlohmann::json;

inline json to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

inline Eigen::VectorXd vector_from_json(const json& j) {
  Eigen::VectorXd v(j.size());
  Eigen::Index i = 0;
  for (const auto& x : j) v[i++] = x.get<double>();
  return v;
}

/// Spectrum record: {n_qubits, seed, generator, scale, values, tool_version}.
inline json spectrum_to_json(const Spectrum& s, std::uint64_t seed,
                             std::string_view generator, double scale = 1.0) {
  json out;
  out["tool_version"] = std::string(kVersion);
  out["n_qubits"] = s.n_qubits();
  out["seed"] = seed;
  out["generator"] = std::string(generator);
  out["scale"] = scale;
  out["values"] = to_json(s.values());
  return out;
}

inline Spectrum spectrum_from_json(const json& j) {
  return Spectrum(j.at("n_qubits").get<int>(), vector_from_json(j.at("values")));
}

/// Full per-realization localization record, self-contained for later
/// analysis passes (stability, sff, lambda2).
struct ResultRecord {
  json config;
  std::uint64_t base_seed = 0;
  std::uint64_t stream_id = 0;
  int realization = 0;
  int n_qubits = 0;
  std::string flavor;
  std::string variant = "plain";
  int rank = 0;
  double lambda = 0;
  Spectrum target;
  Spectrum trial;
  LocalizationResult result;
  int n_restarts = 1;
  int best_restart = 0;
  std::vector<double> restart_costs;
};

inline json result_to_json(const ResultRecord& r) {
  json out;
  out["tool_version"] = std::string(kVersion);
  out["config"] = r.config;
  out["base_seed"] = r.base_seed;
  out["stream_id"] = r.stream_id;
  out["realization"] = r.realization;
  out["n_qubits"] = r.n_qubits;
  out["flavor"] = r.flavor;
  out["variant"] = r.variant;
  if (r.variant == "low_rank") out["rank"] = r.rank;
  if (r.variant == "sparse") out["lambda"] = r.lambda;
  out["target"] = to_json(r.target.values());
  out["trial"] = to_json(r.trial.values());
  out["couplings"] = to_json(r.result.couplings);
  out["final_cost"] = r.result.final_cost;
  out["penalized_cost"] = r.result.penalized_cost;
  out["sparsity"] = r.result.sparsity;
  out["gradient_norm"] = r.result.gradient_norm;
  out["iterations"] = r.result.iterations;
  out["converged"] = r.result.converged;
  out["cost_history"] = r.result.cost_history;
  out["wall_seconds"] = r.result.elapsed_seconds;
  out["n_restarts"] = r.n_restarts;
  out["best_restart"] = r.best_restart;
  out["restart_costs"] = r.restart_costs;
  return out;
}

inline ResultRecord result_from_json(const json& j) {
  ResultRecord r;
  r.config = j.value("config", json::object());
  r.base_seed = j.at("base_seed").get<std::uint64_t>();
  r.stream_id = j.at("stream_id").get<std::uint64_t>();
  r.realization = j.at("realization").get<int>();
  r.n_qubits = j.at("n_qubits").get<int>();
  r.flavor = j.at("flavor").get<std::string>();
  r.variant = j.value("variant", "plain");
  r.rank = j.value("rank", 0);
  r.lambda = j.value("lambda", 0.0);
  r.target = Spectrum(r.n_qubits, vector_from_json(j.at("target")));
  r.trial = Spectrum(r.n_qubits, vector_from_json(j.at("trial")));
  r.result.couplings = vector_from_json(j.at("couplings"));
  r.result.final_cost = j.at("final_cost").get<double>();
  r.result.penalized_cost = j.at("penalized_cost").get<double>();
  r.result.sparsity = j.at("sparsity").get<double>();
  r.result.gradient_norm = j.at("gradient_norm").get<double>();
  r.result.iterations = j.at("iterations").get<int>();
  r.result.converged = j.at("converged").get<bool>();
  r.result.cost_history = j.at("cost_history").get<std::vector<double>>();
  r.result.elapsed_seconds = j.at("wall_seconds").get<double>();
  r.n_restarts = j.value("n_restarts", 1);
  r.best_restart = j.value("best_restart", 0);
  if (j.contains("restart_costs"))
    r.restart_costs = j.at("restart_costs").get<std::vector<double>>();
  return r;
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

inline void write_json_file(const std::filesystem::path& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  json j;
  in >> j;
  return j;
}

/// Minimal CSV writer: rows of pre-formatted cells.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header)
      : header_(std::move(header)) {}

  void add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size())
      throw std::invalid_argument("CsvWriter: cell count mismatch");
    rows_.push_back(std::move(cells));
  }

  std::string str() const {
    std::string out = join(header_);
    for (const auto& row : rows_) out += join(row);
    return out;
  }

  void write(const std::filesystem::path& path) const {
    write_text_file(path, str());
  }

 private:
  static std::string join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      line += cells[i];
      line += (i + 1 == cells.size()) ? "\n" : ",";
    }
    return line;
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Shortest round-trip formatting for doubles in CSV cells.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace plocal
