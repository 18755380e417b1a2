// Copyright 2026 The mcdm-rank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCDM_WEIGHTING_HPP_
#define MCDM_WEIGHTING_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mcdm/error.hpp"
#include "mcdm/fuzzy.hpp"
#include "mcdm/text.hpp"

namespace mcdm {

inline constexpr double kReciprocityTolerance = 1e-9;
inline constexpr double kWeightSumTolerance = 1e-9;
inline constexpr double kConsistencyWarningThreshold = 0.10;
inline constexpr double kDefaultWeightSpread = 0.25;

// Saaty's random consistency index for n = 1..10.
inline std::optional<double> RandomIndex(std::size_t n) {
  static constexpr double kIndex[] = {0.0, 0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49};
  if (n == 0 || n > 10) return std::nullopt;
  return kIndex[n];
}

// Reciprocal matrix of importance ratios: entry (i, j) says how much more
// important criterion i is than criterion j.
class PairwiseComparisonMatrix {
 public:
  PairwiseComparisonMatrix(std::vector<std::string> criteria, std::vector<std::vector<double>> entries)
      : criteria_(std::move(criteria)), entries_(std::move(entries)) {
    const std::size_t n = criteria_.size();
    if (n < 2) throw ValidationError("pairwise matrix: need at least 2 criteria");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < i; ++k) {
        if (SameName(criteria_[i], criteria_[k])) {
          throw ValidationError("pairwise matrix: duplicate criterion '" + criteria_[i] + "'");
        }
      }
    }
    if (entries_.size() != n) {
      throw ValidationError("pairwise matrix: expected " + std::to_string(n) + " rows, got " +
                            std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (entries_[i].size() != n) {
        throw ValidationError("pairwise matrix: row " + std::to_string(i) + " has " +
                              std::to_string(entries_[i].size()) + " entries, expected " +
                              std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        const double v = entries_[i][j];
        if (!std::isfinite(v) || v <= 0.0) {
          throw ValidationError("pairwise matrix: entry (" + criteria_[i] + ", " + criteria_[j] +
                                ") must be a positive finite number");
        }
      }
      if (entries_[i][i] != 1.0) {
        throw ValidationError("pairwise matrix: diagonal entry for '" + criteria_[i] + "' is not 1");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (std::abs(entries_[i][j] * entries_[j][i] - 1.0) > kReciprocityTolerance) {
          throw ValidationError("pairwise matrix: entries (" + criteria_[i] + ", " + criteria_[j] +
                                ") and (" + criteria_[j] + ", " + criteria_[i] +
                                ") are not reciprocal");
        }
      }
    }
  }

  // a_ij = w_i / w_j, a perfectly consistent matrix.
  static PairwiseComparisonMatrix FromWeights(std::vector<std::string> criteria,
                                              std::span<const double> weights) {
    if (weights.size() != criteria.size()) {
      throw ValidationError("pairwise matrix: weight count does not match criteria");
    }
    const std::size_t n = weights.size();
    std::vector<std::vector<double>> entries(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        entries[i][j] = weights[i] / weights[j];
        entries[j][i] = 1.0 / entries[i][j];
      }
    }
    return PairwiseComparisonMatrix(std::move(criteria), std::move(entries));
  }

  std::size_t size() const noexcept { return criteria_.size(); }
  const std::vector<std::string>& criteria() const noexcept { return criteria_; }
  const std::vector<std::vector<double>>& entries() const noexcept { return entries_; }
  double at(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }

  // {"criteria": [...], "entries": [[...], ...]}; entries may be numbers or
  // fraction strings such as "1/3".
  static PairwiseComparisonMatrix FromJson(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("criteria") || !j.contains("entries")) {
      throw ValidationError("pairwise matrix: expected {\"criteria\": [...], \"entries\": [[...]]}");
    }
    std::vector<std::string> criteria;
    for (const auto& c : j.at("criteria")) {
      if (!c.is_string()) throw ValidationError("pairwise matrix: criteria must be strings");
      criteria.push_back(c.get<std::string>());
    }
    std::vector<std::vector<double>> entries;
    if (!j.at("entries").is_array()) throw ValidationError("pairwise matrix: entries must be an array");
    for (const auto& row : j.at("entries")) {
      if (!row.is_array()) throw ValidationError("pairwise matrix: each row must be an array");
      auto& out = entries.emplace_back();
      for (const auto& cell : row) out.push_back(ParseRatio(cell));
    }
    return PairwiseComparisonMatrix(std::move(criteria), std::move(entries));
  }

  nlohmann::ordered_json ToJson() const {
    return nlohmann::ordered_json{{"criteria", criteria_}, {"entries", entries_}};
  }

 private:
  static double ParseRatio(const nlohmann::json& cell) {
    if (cell.is_number()) return cell.get<double>();
    if (!cell.is_string()) throw ValidationError("pairwise matrix: entries must be numbers or \"a/b\"");
    const std::string text = Trim(cell.get<std::string>());
    const auto slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
      }
      const std::string num = Trim(text.substr(0, slash)), den = Trim(text.substr(slash + 1));
      const double a = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument(text);
      const double b = std::stod(den, &used);
      if (used != den.size()) throw std::invalid_argument(text);
      return a / b;
    } catch (const std::logic_error&) {
      throw ValidationError("pairwise matrix: cannot parse entry '" + text + "'");
    }
  }

  std::vector<std::string> criteria_;
  std::vector<std::vector<double>> entries_;
};

struct WeightVector {
  std::vector<std::string> criteria;
  std::vector<double> weights;
  std::optional<std::vector<Tfn>> fuzzy_weights;
  double consistency_ratio = 0.0;

  bool ConsistencyWarning() const { return consistency_ratio > kConsistencyWarningThreshold; }

  // Checks the sum-to-one and positivity invariants.
  void Validate() const {
    if (criteria.empty()) throw ValidationError("weights: no criteria");
    if (criteria.size() != weights.size()) {
      throw ValidationError("weights: " + std::to_string(criteria.size()) + " criteria but " +
                            std::to_string(weights.size()) + " weights");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!std::isfinite(weights[i]) || weights[i] <= 0.0) {
        throw ValidationError("weights: weight for '" + criteria[i] + "' must be positive");
      }
      sum += weights[i];
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
      throw ValidationError("weights: weights sum to " + FormatReal(sum) + ", expected 1");
    }
    if (fuzzy_weights && fuzzy_weights->size() != weights.size()) {
      throw ValidationError("weights: fuzzy weight count does not match criteria");
    }
  }
};

// Skills 0.60, Experience 0.20, Education 0.15, About 0.05.
inline WeightVector DefaultWeights() {
  return WeightVector{{"Skills", "Experience", "Education", "About"}, {0.60, 0.20, 0.15, 0.05}, std::nullopt, 0.0};
}

// Element-wise geometric mean over experts. Computed on the upper triangle
// and mirrored so the result is reciprocal by construction.
inline PairwiseComparisonMatrix AggregateJudgments(std::span<const PairwiseComparisonMatrix> matrices) {
  if (matrices.empty()) throw ValidationError("aggregate judgments: no matrices");
  const auto& criteria = matrices.front().criteria();
  const std::size_t n = criteria.size();
  for (std::size_t k = 1; k < matrices.size(); ++k) {
    const auto& other = matrices[k].criteria();
    for (std::size_t i = 0; i < std::max(n, other.size()); ++i) {
      if (i >= n || i >= other.size() || !SameName(criteria[i], other[i])) {
        const std::string name = i < n ? criteria[i] : other[i];
        throw ValidationError("aggregate judgments: matrix " + std::to_string(k) +
                              " diverges at criterion '" + name + "' (position " + std::to_string(i) + ")");
      }
    }
  }
  if (matrices.size() == 1) return matrices.front();
  std::vector<std::vector<double>> entries(n, std::vector<double>(n, 1.0));
  const double count = static_cast<double>(matrices.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double log_sum = 0.0;
      for (const auto& m : matrices) log_sum += std::log(m.at(i, j));
      entries[i][j] = std::exp(log_sum / count);
      entries[j][i] = 1.0 / entries[i][j];
    }
  }
  return PairwiseComparisonMatrix(criteria, std::move(entries));
}

struct PowerIterationOptions {
  double tolerance = 1e-12;
  int max_iterations = 10000;
};

struct EigenWeights {
  WeightVector weights;
  double lambda_max = 0.0;
  int iterations = 0;
};

// Principal right eigenvector by power iteration from the uniform vector,
// normalised to sum 1, together with lambda_max and Saaty's consistency ratio.
inline EigenWeights DeriveWeightsDetailed(const PairwiseComparisonMatrix& matrix,
                                          const PowerIterationOptions& options = {}) {
  const std::size_t n = matrix.size();
  const auto random_index = RandomIndex(n);
  if (!random_index) {
    throw ValidationError("derive weights: no random index for " + std::to_string(n) +
                          " criteria (supported: 2..10)");
  }
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  double residual = 0.0;
  int iteration = 0;
  bool converged = false;
  while (iteration < options.max_iterations) {
    ++iteration;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += matrix.at(i, j) * x[j];
      next[i] = s;
      total += s;
    }
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= total;
      residual += std::abs(next[i] - x[i]);
    }
    x.swap(next);
    if (residual < options.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ComputationError("derive weights: power iteration did not converge after " +
                           std::to_string(iteration) + " iterations (residual " +
                           FormatReal(residual) + ")");
  }
  double lambda = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += matrix.at(i, j) * x[j];
    lambda += s / x[i];
  }
  lambda /= static_cast<double>(n);
  double cr = 0.0;
  if (*random_index > 0.0) {
    const double ci = std::max(0.0, (lambda - static_cast<double>(n)) / static_cast<double>(n - 1));
    cr = ci / *random_index;
  }
  EigenWeights out;
  out.weights = WeightVector{matrix.criteria(), std::move(x), std::nullopt, cr};
  out.lambda_max = lambda;
  out.iterations = iteration;
  return out;
}

inline WeightVector DeriveWeights(const PairwiseComparisonMatrix& matrix,
                                  const PowerIterationOptions& options = {}) {
  return DeriveWeightsDetailed(matrix, options).weights;
}

// w -> (max(0, w(1 - spread)), w, min(1, w(1 + spread))).
inline WeightVector FuzzifyWeights(const WeightVector& weights, double spread) {
  if (!(spread >= 0.0 && spread < 1.0)) {
    throw ValidationError("fuzzify weights: spread " + FormatReal(spread) + " outside [0, 1)");
  }
  WeightVector out = weights;
  std::vector<Tfn> fuzzy;
  fuzzy.reserve(weights.weights.size());
  for (double w : weights.weights) {
    if (spread == 0.0) {
      fuzzy.push_back(Tfn::Crisp(w));
    } else {
      fuzzy.emplace_back(std::max(0.0, w * (1.0 - spread)), w, std::min(1.0, w * (1.0 + spread)));
    }
  }
  out.fuzzy_weights = std::move(fuzzy);
  return out;
}

// {"criteria": [...], "weights": [...]} with optional "fuzzy_weights" and
// "consistency_ratio", as written by the weights command.
inline WeightVector WeightsFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("criteria") || !j.contains("weights")) {
    throw ValidationError("weights: expected {\"criteria\": [...], \"weights\": [...]}");
  }
  WeightVector out;
  for (const auto& c : j.at("criteria")) {
    if (!c.is_string()) throw ValidationError("weights: criteria must be strings");
    out.criteria.push_back(c.get<std::string>());
  }
  for (const auto& w : j.at("weights")) {
    if (!w.is_number()) throw ValidationError("weights: weights must be numbers");
    out.weights.push_back(w.get<double>());
  }
  if (j.contains("fuzzy_weights") && !j.at("fuzzy_weights").is_null()) {
    std::vector<Tfn> fuzzy;
    for (const auto& t : j.at("fuzzy_weights")) fuzzy.push_back(TfnFromJson(t));
    out.fuzzy_weights = std::move(fuzzy);
  }
  if (j.contains("consistency_ratio") && j.at("consistency_ratio").is_number()) {
    out.consistency_ratio = j.at("consistency_ratio").get<double>();
  }
  out.Validate();
  return out;
}

inline nlohmann::ordered_json WeightsToJson(const WeightVector& w) {
  nlohmann::ordered_json j;
  j["criteria"] = w.criteria;
  auto weights = nlohmann::ordered_json::array();
  for (double v : w.weights) weights.push_back(RoundSignificant(v));
  j["weights"] = weights;
  if (w.fuzzy_weights) {
    j["fuzzy_weights"] = *w.fuzzy_weights;
  } else {
    j["fuzzy_weights"] = nullptr;
  }
  j["consistency_ratio"] = RoundSignificant(w.consistency_ratio);
  j["consistency_warning"] = w.ConsistencyWarning();
  return j;
}

}  // namespace mcdm

#endif  // MCDM_WEIGHTING_HPP_
