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

#ifndef MCDM_TOPSIS_HPP_
#define MCDM_TOPSIS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mcdm/error.hpp"
#include "mcdm/fuzzy.hpp"
#include "mcdm/text.hpp"
#include "mcdm/weighting.hpp"

namespace mcdm {

enum class CriterionKind { kBenefit, kCost };
enum class Normalization { kVector, kLinearMax };

inline std::string_view ToString(Normalization scheme) {
  return scheme == Normalization::kVector ? "vector" : "linear_max";
}

inline Normalization ParseNormalization(std::string_view text) {
  const std::string t = ToLower(Trim(text));
  if (t == "vector") return Normalization::kVector;
  if (t == "linear_max" || t == "linear-max") return Normalization::kLinearMax;
  throw ValidationError("unknown normalization '" + std::string(text) + "' (valid: vector, linear-max)");
}

inline std::string_view ToString(CriterionKind kind) {
  return kind == CriterionKind::kBenefit ? "benefit" : "cost";
}

inline CriterionKind ParseCriterionKind(std::string_view text) {
  const std::string t = ToLower(Trim(text));
  if (t == "benefit") return CriterionKind::kBenefit;
  if (t == "cost") return CriterionKind::kCost;
  throw ValidationError("unknown criterion kind '" + std::string(text) + "' (valid: benefit, cost)");
}

template <typename Cell>
concept ScoreCell = std::is_same_v<Cell, double> || std::is_same_v<Cell, Tfn>;

// Candidates x criteria decision matrix, row-major, homogeneous in Cell.
template <ScoreCell Cell>
class ScoreTable {
 public:
  ScoreTable(std::vector<std::string> candidates, std::vector<std::string> criteria,
             std::vector<Cell> cells, std::vector<CriterionKind> kinds = {})
      : candidates_(std::move(candidates)),
        criteria_(std::move(criteria)),
        kinds_(std::move(kinds)),
        cells_(std::move(cells)) {
    if (candidates_.empty()) throw ValidationError("score table: no candidates");
    if (criteria_.empty()) throw ValidationError("score table: no criteria");
    if (kinds_.empty()) kinds_.assign(criteria_.size(), CriterionKind::kBenefit);
    if (kinds_.size() != criteria_.size()) {
      throw ValidationError("score table: criterion kind count does not match criteria");
    }
    if (cells_.size() != candidates_.size() * criteria_.size()) {
      throw ValidationError("score table: expected " +
                            std::to_string(candidates_.size() * criteria_.size()) + " cells, got " +
                            std::to_string(cells_.size()));
    }
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (candidates_[i].empty()) throw ValidationError("score table: empty candidate id");
      for (std::size_t k = 0; k < i; ++k) {
        if (candidates_[k] == candidates_[i]) {
          throw ValidationError("score table: duplicate candidate '" + candidates_[i] + "'");
        }
      }
    }
    for (std::size_t j = 0; j < criteria_.size(); ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        if (SameName(criteria_[k], criteria_[j])) {
          throw ValidationError("score table: duplicate criterion '" + criteria_[j] + "'");
        }
      }
    }
    if constexpr (std::is_same_v<Cell, double>) {
      for (std::size_t c = 0; c < cells_.size(); ++c) {
        if (!std::isfinite(cells_[c])) {
          throw ValidationError("score table: non-finite score for '" +
                                candidates_[c / criteria_.size()] + "', '" +
                                criteria_[c % criteria_.size()] + "'");
        }
      }
    }
  }

  std::size_t rows() const noexcept { return candidates_.size(); }
  std::size_t cols() const noexcept { return criteria_.size(); }
  const std::vector<std::string>& candidates() const noexcept { return candidates_; }
  const std::vector<std::string>& criteria() const noexcept { return criteria_; }
  const std::vector<CriterionKind>& kinds() const noexcept { return kinds_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const Cell& at(std::size_t row, std::size_t col) const { return cells_.at(row * cols() + col); }

  // Same labels and kinds, different cell values.
  template <ScoreCell Other>
  ScoreTable<Other> WithCells(std::vector<Other> cells) const {
    return ScoreTable<Other>(candidates_, criteria_, std::move(cells), kinds_);
  }

 private:
  std::vector<std::string> candidates_;
  std::vector<std::string> criteria_;
  std::vector<CriterionKind> kinds_;
  std::vector<Cell> cells_;
};

using CrispTable = ScoreTable<double>;
using FuzzyTable = ScoreTable<Tfn>;

namespace detail {

inline double CellDistance(double a, double b) { return std::abs(a - b); }
inline double CellDistance(const Tfn& a, const Tfn& b) { return Distance(a, b); }

inline bool CellLess(double a, double b) { return a < b; }
inline bool CellLess(const Tfn& a, const Tfn& b) { return CentroidLess(a, b); }

inline double CellScale(double a, double divisor) { return a / divisor; }
inline Tfn CellScale(const Tfn& a, double divisor) {
  if (a.IsDegenerate()) return Tfn::Crisp(a.m() / divisor);
  return Tfn(a.l() / divisor, a.m() / divisor, a.u() / divisor);
}

inline double UpperValue(double a) { return a; }
inline double UpperValue(const Tfn& a) { return a.u(); }

}  // namespace detail

// Vector scheme: divide each crisp column by its Euclidean norm.
// Linear-max scheme: divide each cell (component-wise for TFNs) by the column
// maximum (of upper bounds for TFNs).
template <ScoreCell Cell>
ScoreTable<Cell> Normalize(const ScoreTable<Cell>& table, Normalization scheme) {
  if constexpr (std::is_same_v<Cell, Tfn>) {
    if (scheme == Normalization::kVector) {
      throw ValidationError("normalize: fuzzy tables support only linear_max normalization");
    }
  }
  const std::size_t rows = table.rows(), cols = table.cols();
  std::vector<double> divisor(cols, 0.0);
  for (std::size_t j = 0; j < cols; ++j) {
    bool all_zero = true;
    double acc = 0.0;
    double max_value = detail::UpperValue(table.at(0, j));
    for (std::size_t i = 0; i < rows; ++i) {
      const double v = detail::UpperValue(table.at(i, j));
      if (v != 0.0) all_zero = false;
      acc += v * v;
      max_value = std::max(max_value, v);
    }
    if (all_zero) {
      throw ComputationError("normalize: criterion '" + table.criteria()[j] + "' is all zero");
    }
    if (scheme == Normalization::kVector) {
      divisor[j] = std::sqrt(acc);
    } else {
      if (max_value <= 0.0) {
        throw ComputationError("normalize: criterion '" + table.criteria()[j] +
                               "' has no positive value for linear_max");
      }
      divisor[j] = max_value;
    }
  }
  std::vector<Cell> cells;
  cells.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) cells.push_back(detail::CellScale(table.at(i, j), divisor[j]));
  }
  return table.WithCells(std::move(cells));
}

// Index of each table criterion inside the weight vector, matched by name.
inline std::vector<std::size_t> ReconcileCriteria(const std::vector<std::string>& table_criteria,
                                                  const WeightVector& weights) {
  if (weights.criteria.size() != weights.weights.size()) {
    throw ValidationError("apply weights: weight vector is malformed");
  }
  std::vector<std::size_t> index;
  for (const auto& name : table_criteria) {
    auto it = std::find_if(weights.criteria.begin(), weights.criteria.end(),
                           [&](const std::string& w) { return SameName(w, name); });
    if (it == weights.criteria.end()) {
      throw ValidationError("apply weights: no weight for criterion '" + name + "'");
    }
    index.push_back(static_cast<std::size_t>(it - weights.criteria.begin()));
  }
  for (const auto& name : weights.criteria) {
    auto it = std::find_if(table_criteria.begin(), table_criteria.end(),
                           [&](const std::string& c) { return SameName(c, name); });
    if (it == table_criteria.end()) {
      throw ValidationError("apply weights: weight for '" + name + "' matches no table criterion");
    }
  }
  return index;
}

// Weights reordered to the table's criterion order.
inline WeightVector AlignWeights(const std::vector<std::string>& table_criteria,
                                 const WeightVector& weights) {
  const auto index = ReconcileCriteria(table_criteria, weights);
  WeightVector out;
  out.criteria = table_criteria;
  out.consistency_ratio = weights.consistency_ratio;
  for (std::size_t k : index) out.weights.push_back(weights.weights[k]);
  if (weights.fuzzy_weights) {
    std::vector<Tfn> fuzzy;
    for (std::size_t k : index) fuzzy.push_back(weights.fuzzy_weights->at(k));
    out.fuzzy_weights = std::move(fuzzy);
  }
  return out;
}

template <ScoreCell Cell>
ScoreTable<Cell> ApplyWeights(const ScoreTable<Cell>& table, const WeightVector& weights) {
  const WeightVector aligned = AlignWeights(table.criteria(), weights);
  std::vector<Cell> cells;
  cells.reserve(table.cells().size());
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      if constexpr (std::is_same_v<Cell, double>) {
        cells.push_back(table.at(i, j) * aligned.weights[j]);
      } else {
        if (!aligned.fuzzy_weights) {
          throw ValidationError("apply weights: fuzzy table requires fuzzy weights");
        }
        const Tfn& a = table.at(i, j);
        const Tfn& w = (*aligned.fuzzy_weights)[j];
        if (a.IsDegenerate() && w.IsDegenerate()) {
          cells.push_back(Tfn::Crisp(a.m() * w.m()));
        } else {
          cells.emplace_back(a.l() * w.l(), a.m() * w.m(), a.u() * w.u());
        }
      }
    }
  }
  return table.WithCells(std::move(cells));
}

template <ScoreCell Cell>
struct IdealSolutions {
  std::vector<Cell> best;
  std::vector<Cell> worst;
};

// Column extremes; cost criteria swap best and worst. TFNs are ordered by
// CentroidLess.
template <ScoreCell Cell>
IdealSolutions<Cell> FindIdealSolutions(const ScoreTable<Cell>& weighted) {
  IdealSolutions<Cell> out;
  for (std::size_t j = 0; j < weighted.cols(); ++j) {
    Cell hi = weighted.at(0, j), lo = weighted.at(0, j);
    for (std::size_t i = 1; i < weighted.rows(); ++i) {
      const Cell& v = weighted.at(i, j);
      if (detail::CellLess(hi, v)) hi = v;
      if (detail::CellLess(v, lo)) lo = v;
    }
    if (weighted.kinds()[j] == CriterionKind::kBenefit) {
      out.best.push_back(hi);
      out.worst.push_back(lo);
    } else {
      out.best.push_back(lo);
      out.worst.push_back(hi);
    }
  }
  return out;
}

struct CandidateOutcome {
  std::string id;
  double d_plus = 0.0;
  double d_minus = 0.0;
  double closeness = 0.0;
  int rank = 0;
};

struct TopsisMetadata {
  std::string mode;  // "crisp" or "fuzzy"
  Normalization normalization = Normalization::kVector;
  WeightVector weights;  // aligned to the table's criterion order
  std::vector<CriterionKind> kinds;
  std::string distance;
  // Groups of candidate ids whose closeness tied, in the order ranked.
  std::vector<std::vector<std::string>> tie_breaks;
};

struct TopsisResult {
  std::vector<CandidateOutcome> outcomes;  // input candidate order
  TopsisMetadata metadata;

  std::vector<CandidateOutcome> Ranked() const {
    auto out = outcomes;
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.rank < b.rank; });
    return out;
  }

  const CandidateOutcome& Find(std::string_view id) const {
    for (const auto& o : outcomes) {
      if (o.id == id) return o;
    }
    throw ValidationError("topsis result: unknown candidate '" + std::string(id) + "'");
  }
};

// Closeness values closer than this are ranked as ties.
inline constexpr double kClosenessTieTolerance = 1e-12;

// Ranks by descending closeness; tied groups are ordered by candidate id.
inline std::vector<std::vector<std::string>> AssignRanks(std::vector<CandidateOutcome>& outcomes) {
  std::vector<std::size_t> order(outcomes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (outcomes[a].closeness != outcomes[b].closeness) return outcomes[a].closeness > outcomes[b].closeness;
    return outcomes[a].id < outcomes[b].id;
  });
  std::vector<std::vector<std::string>> ties;
  int next_rank = 1;
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start + 1;
    while (end < order.size() &&
           outcomes[order[start]].closeness - outcomes[order[end]].closeness <= kClosenessTieTolerance) {
      ++end;
    }
    std::vector<std::size_t> group(order.begin() + static_cast<std::ptrdiff_t>(start),
                                   order.begin() + static_cast<std::ptrdiff_t>(end));
    std::sort(group.begin(), group.end(),
              [&](std::size_t a, std::size_t b) { return outcomes[a].id < outcomes[b].id; });
    if (group.size() > 1) {
      auto& ids = ties.emplace_back();
      for (std::size_t g : group) ids.push_back(outcomes[g].id);
    }
    for (std::size_t g : group) outcomes[g].rank = next_rank++;
    start = end;
  }
  return ties;
}

// normalize -> weight -> ideal solutions -> distances -> closeness -> ranks.
template <ScoreCell Cell>
TopsisResult RunTopsis(const ScoreTable<Cell>& table, const WeightVector& weights, Normalization scheme) {
  constexpr bool kFuzzy = std::is_same_v<Cell, Tfn>;
  if (table.rows() < 2) throw ValidationError("topsis: need at least 2 candidates");
  const ScoreTable<Cell> weighted = ApplyWeights(Normalize(table, scheme), weights);
  const IdealSolutions<Cell> ideal = FindIdealSolutions(weighted);

  TopsisResult result;
  result.outcomes.reserve(table.rows());
  for (std::size_t i = 0; i < weighted.rows(); ++i) {
    double plus = 0.0, minus = 0.0;
    for (std::size_t j = 0; j < weighted.cols(); ++j) {
      const double dp = detail::CellDistance(weighted.at(i, j), ideal.best[j]);
      const double dm = detail::CellDistance(weighted.at(i, j), ideal.worst[j]);
      plus += dp * dp;
      minus += dm * dm;
    }
    CandidateOutcome o;
    o.id = table.candidates()[i];
    o.d_plus = std::sqrt(plus);
    o.d_minus = std::sqrt(minus);
    if (o.d_plus + o.d_minus == 0.0) {
      throw ComputationError("degenerate decision problem: all candidates are identical in every weighted criterion");
    }
    o.closeness = o.d_minus / (o.d_plus + o.d_minus);
    result.outcomes.push_back(std::move(o));
  }
  result.metadata.mode = kFuzzy ? "fuzzy" : "crisp";
  result.metadata.normalization = scheme;
  result.metadata.weights = AlignWeights(table.criteria(), weights);
  if constexpr (!kFuzzy) result.metadata.weights.fuzzy_weights.reset();
  result.metadata.kinds = table.kinds();
  result.metadata.distance = kFuzzy ? "vertex" : "euclidean";
  result.metadata.tie_breaks = AssignRanks(result.outcomes);
  return result;
}

// {"results": [{id, d_plus, d_minus, closeness, rank}, ...] in rank order,
//  "metadata": {mode, normalization, weights, distance, tie_breaks}}
inline nlohmann::ordered_json TopsisResultToJson(const TopsisResult& result) {
  nlohmann::ordered_json j;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& o : result.Ranked()) {
    rows.push_back(nlohmann::ordered_json{{"id", o.id},
                                          {"d_plus", RoundSignificant(o.d_plus)},
                                          {"d_minus", RoundSignificant(o.d_minus)},
                                          {"closeness", RoundSignificant(o.closeness)},
                                          {"rank", o.rank}});
  }
  j["results"] = rows;
  const auto& meta = result.metadata;
  auto weights = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < meta.weights.criteria.size(); ++k) {
    nlohmann::ordered_json w;
    w["criterion"] = meta.weights.criteria[k];
    w["kind"] = ToString(k < meta.kinds.size() ? meta.kinds[k] : CriterionKind::kBenefit);
    w["weight"] = RoundSignificant(meta.weights.weights[k]);
    if (meta.weights.fuzzy_weights) w["fuzzy"] = (*meta.weights.fuzzy_weights)[k];
    weights.push_back(w);
  }
  j["metadata"] = nlohmann::ordered_json{{"mode", meta.mode},
                                         {"normalization", ToString(meta.normalization)},
                                         {"weights", weights},
                                         {"distance", meta.distance},
                                         {"tie_breaks", meta.tie_breaks}};
  return j;
}

// Reads the "results" array back; metadata is not needed for comparisons.
inline std::vector<CandidateOutcome> OutcomesFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("results") || !j.at("results").is_array()) {
    throw ValidationError("ranking json: expected an object with a 'results' array");
  }
  std::vector<CandidateOutcome> out;
  for (const auto& row : j.at("results")) {
    CandidateOutcome o;
    try {
      o.id = row.at("id").get<std::string>();
      o.rank = row.at("rank").get<int>();
      o.closeness = row.at("closeness").get<double>();
      o.d_plus = row.value("d_plus", 0.0);
      o.d_minus = row.value("d_minus", 0.0);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("ranking json: malformed result row: ") + e.what());
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace mcdm

#endif  // MCDM_TOPSIS_HPP_
