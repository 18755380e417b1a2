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

#ifndef MCDM_PROFILE_HPP_
#define MCDM_PROFILE_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "mcdm/csv.hpp"
#include "mcdm/error.hpp"
#include "mcdm/fuzzy.hpp"
#include "mcdm/text.hpp"
#include "mcdm/topsis.hpp"

namespace mcdm {

inline constexpr double kMinScore = 1.0;
inline constexpr double kMaxScore = 5.0;

enum class Label { kPoor, kFair, kExcellent };

inline constexpr Label kAllLabels[] = {Label::kPoor, Label::kFair, Label::kExcellent};

inline std::string_view ToString(Label label) {
  switch (label) {
    case Label::kPoor: return "Poor";
    case Label::kFair: return "Fair";
    case Label::kExcellent: return "Excellent";
  }
  return "?";
}

inline std::optional<Label> TryParseLabel(std::string_view text) {
  for (Label l : kAllLabels) {
    if (SameName(ToString(l), text)) return l;
  }
  return std::nullopt;
}

inline Label ParseLabel(std::string_view text) {
  if (auto l = TryParseLabel(text)) return *l;
  throw ValidationError("unknown label '" + Trim(text) + "' (valid: Poor, Fair, Excellent)");
}

// Integer scores follow 1-2 Poor, 3 Fair, 4-5 Excellent; fractional scores
// split at 2.5 and 3.5.
inline Label ScoreToLabel(double score) {
  if (!(score >= kMinScore && score <= kMaxScore)) {
    throw ValidationError("score " + FormatReal(score) + " outside [1, 5]");
  }
  if (score < 2.5) return Label::kPoor;
  if (score < 3.5) return Label::kFair;
  return Label::kExcellent;
}

// Representative score per label. Defaults are the range midpoints.
struct LabelMapping {
  double poor = 1.5;
  double fair = 3.0;
  double excellent = 4.5;

  double ToScore(Label label) const {
    switch (label) {
      case Label::kPoor: return poor;
      case Label::kFair: return fair;
      case Label::kExcellent: return excellent;
    }
    return fair;
  }

  // Each representative must classify back to its own label.
  void Validate() const {
    for (Label l : kAllLabels) {
      const double v = ToScore(l);
      if (!(v >= kMinScore && v <= kMaxScore) || ScoreToLabel(v) != l) {
        throw ValidationError("label mapping: representative " + FormatReal(v) + " for " +
                              std::string(ToString(l)) + " lies outside that label's score range");
      }
    }
  }
};

inline double LabelToScore(Label label, const LabelMapping& mapping = {}) {
  return mapping.ToScore(label);
}

enum class ScoreSource { kExpert, kModel };

inline std::string_view ToString(ScoreSource s) { return s == ScoreSource::kExpert ? "expert" : "model"; }

inline ScoreSource ParseScoreSource(std::string_view text) {
  if (SameName(text, "expert")) return ScoreSource::kExpert;
  if (SameName(text, "model")) return ScoreSource::kModel;
  throw ValidationError("unknown score source '" + Trim(text) + "' (valid: expert, model)");
}

using ScoreValue = std::variant<double, Label>;

struct ScoreRecord {
  std::string candidate_id;
  std::string criterion;
  ScoreValue score;
  ScoreSource source = ScoreSource::kExpert;
  std::optional<std::string> rater;

  double Numeric(const LabelMapping& mapping) const {
    if (const double* v = std::get_if<double>(&score)) return *v;
    return mapping.ToScore(std::get<Label>(score));
  }

  friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

// Number in [1, 5] or Poor/Fair/Excellent (any case).
inline ScoreValue ParseScoreValue(std::string_view text) {
  const std::string t = Trim(text);
  if (auto label = TryParseLabel(t)) return *label;
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
  } catch (const std::logic_error&) {
    throw ValidationError("unknown label '" + t + "' (valid: a number in [1, 5], Poor, Fair, Excellent)");
  }
  if (!(value >= kMinScore && value <= kMaxScore)) {
    throw ValidationError("score " + t + " outside [1, 5]");
  }
  return value;
}

// candidate_id,criterion,score,source,rater
inline std::vector<ScoreRecord> ParseScoreCsv(std::string_view text, std::string_view source_name) {
  const auto rows = csv::Parse(text, source_name);
  const csv::Header header(rows, {"candidate_id", "criterion", "score", "source"}, {"rater"}, source_name);
  std::vector<ScoreRecord> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    header.CheckWidth(row);
    const auto where = std::string(source_name) + ":" + std::to_string(row.line) + ": ";
    try {
      ScoreRecord rec;
      rec.candidate_id = header.Get(row, "candidate_id");
      rec.criterion = header.Get(row, "criterion");
      if (rec.candidate_id.empty()) throw ValidationError("empty candidate_id");
      if (rec.criterion.empty()) throw ValidationError("empty criterion");
      rec.score = ParseScoreValue(header.Get(row, "score"));
      rec.source = ParseScoreSource(header.Get(row, "source"));
      if (auto rater = header.Get(row, "rater"); !rater.empty()) rec.rater = rater;
      records.push_back(std::move(rec));
    } catch (const Error& e) {
      throw Error(e.kind(), where + e.what());
    }
  }
  return records;
}

inline std::string WriteScoreCsv(const std::vector<ScoreRecord>& records) {
  std::string out = "candidate_id,criterion,score,source,rater\n";
  for (const auto& r : records) {
    std::string score = std::holds_alternative<Label>(r.score) ? std::string(ToString(std::get<Label>(r.score)))
                                                               : FormatReal(std::get<double>(r.score));
    out += csv::JoinRow({r.candidate_id, r.criterion, score, std::string(ToString(r.source)), r.rater.value_or("")});
  }
  return out;
}

inline const std::vector<std::string>& CandidateAttributeKeys() {
  static const std::vector<std::string> keys = {"experience", "education", "skills", "about"};
  return keys;
}

struct CandidateRecord {
  std::string id;
  std::map<std::string, std::string> attributes;  // keys: CandidateAttributeKeys()
  std::string source;                              // file the record came from
  std::size_t line = 0;
};

// id,experience,education,skills,about; text columns are optional.
inline std::vector<CandidateRecord> ParseCandidateCsv(std::string_view text, std::string_view source_name) {
  const auto rows = csv::Parse(text, source_name);
  const csv::Header header(rows, {"id"}, CandidateAttributeKeys(), source_name);
  std::vector<CandidateRecord> out;
  std::set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    header.CheckWidth(rows[r]);
    CandidateRecord rec;
    rec.id = header.Get(rows[r], "id");
    rec.source = std::string(source_name);
    rec.line = rows[r].line;
    const auto where = std::string(source_name) + ":" + std::to_string(rec.line) + ": ";
    if (rec.id.empty()) throw ValidationError(where + "empty candidate id");
    if (!seen.insert(rec.id).second) throw ValidationError(where + "duplicate candidate id '" + rec.id + "'");
    for (const auto& key : CandidateAttributeKeys()) rec.attributes[key] = header.Raw(rows[r], key);
    out.push_back(std::move(rec));
  }
  return out;
}

struct TableBuildOptions {
  std::vector<std::string> criteria;
  // Row order; when empty, candidate ids are sorted lexicographically.
  std::vector<std::string> candidates;
  std::optional<ScoreSource> source;
  std::vector<CriterionKind> kinds;
};

namespace detail {

// (candidate row, criterion column) -> contributing records. Records whose
// criterion is not in the list are ignored.
struct CellGroups {
  std::vector<std::string> candidates;
  std::vector<std::vector<const ScoreRecord*>> cells;  // row-major
};

inline CellGroups GroupRecords(const std::vector<ScoreRecord>& records, const TableBuildOptions& options) {
  if (options.criteria.empty()) throw ValidationError("score table: no criteria configured");
  CellGroups groups;
  if (options.candidates.empty()) {
    std::set<std::string> ids;
    for (const auto& r : records) {
      if (options.source && r.source != *options.source) continue;
      ids.insert(r.candidate_id);
    }
    groups.candidates.assign(ids.begin(), ids.end());
  } else {
    groups.candidates = options.candidates;
  }
  if (groups.candidates.empty()) throw ValidationError("score table: no scored candidates");
  std::map<std::string, std::size_t> row_of;
  for (std::size_t i = 0; i < groups.candidates.size(); ++i) row_of[groups.candidates[i]] = i;
  const std::size_t cols = options.criteria.size();
  groups.cells.resize(groups.candidates.size() * cols);
  for (const auto& r : records) {
    if (options.source && r.source != *options.source) continue;
    auto col = std::find_if(options.criteria.begin(), options.criteria.end(),
                            [&](const std::string& c) { return SameName(c, r.criterion); });
    if (col == options.criteria.end()) continue;
    auto row = row_of.find(r.candidate_id);
    if (row == row_of.end()) {
      throw ValidationError("score table: scores reference unknown candidate '" + r.candidate_id + "'");
    }
    groups.cells[row->second * cols + static_cast<std::size_t>(col - options.criteria.begin())].push_back(&r);
  }
  std::string gaps;
  std::size_t gap_count = 0;
  for (std::size_t i = 0; i < groups.candidates.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!groups.cells[i * cols + j].empty()) continue;
      if (++gap_count <= 10) {
        if (!gaps.empty()) gaps += "; ";
        gaps += "(" + groups.candidates[i] + ", " + options.criteria[j] + ")";
      }
    }
  }
  if (gap_count > 0) {
    if (gap_count > 10) gaps += "; ... " + std::to_string(gap_count - 10) + " more";
    throw ValidationError("score table: missing scores for " + gaps);
  }
  return groups;
}

}  // namespace detail

// Averages raters per cell (labels converted first). Values are summed in
// sorted order so the result does not depend on record order.
inline CrispTable BuildScoreTable(const std::vector<ScoreRecord>& records, const TableBuildOptions& options,
                                  const LabelMapping& mapping = {}) {
  const auto groups = detail::GroupRecords(records, options);
  std::vector<double> cells;
  cells.reserve(groups.cells.size());
  for (const auto& cell : groups.cells) {
    std::vector<double> values;
    for (const ScoreRecord* r : cell) values.push_back(r->Numeric(mapping));
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    cells.push_back(sum / static_cast<double>(values.size()));
  }
  return CrispTable(groups.candidates, options.criteria, std::move(cells), options.kinds);
}

// Half-open score ranges [lower, upper) mapped to vocabulary terms; the last
// range also includes its upper bound. Must tile [1, 5] exactly.
class LinguisticBinding {
 public:
  struct Range {
    double lower;
    double upper;
    std::string term;
  };

  explicit LinguisticBinding(std::vector<Range> ranges) : ranges_(std::move(ranges)) {
    if (ranges_.empty()) throw ValidationError("linguistic binding: no ranges");
    if (ranges_.front().lower != kMinScore) {
      throw ValidationError("linguistic binding: gap below " + FormatReal(ranges_.front().lower) + " (must start at 1)");
    }
    if (ranges_.back().upper != kMaxScore) {
      throw ValidationError("linguistic binding: gap above " + FormatReal(ranges_.back().upper) + " (must end at 5)");
    }
    for (std::size_t i = 0; i < ranges_.size(); ++i) {
      if (!(ranges_[i].lower < ranges_[i].upper)) {
        throw ValidationError("linguistic binding: empty range for '" + ranges_[i].term + "'");
      }
      if (i > 0 && ranges_[i].lower > ranges_[i - 1].upper) {
        throw ValidationError("linguistic binding: gap between " + FormatReal(ranges_[i - 1].upper) + " and " +
                              FormatReal(ranges_[i].lower));
      }
      if (i > 0 && ranges_[i].lower < ranges_[i - 1].upper) {
        throw ValidationError("linguistic binding: ranges for '" + ranges_[i - 1].term + "' and '" +
                              ranges_[i].term + "' overlap");
      }
    }
  }

  // Uniform bins of width 0.8 onto Very Low .. Very High.
  static const LinguisticBinding& Default() {
    static const LinguisticBinding binding({{1.0, 1.8, "Very Low"},
                                            {1.8, 2.6, "Low"},
                                            {2.6, 3.4, "Medium"},
                                            {3.4, 4.2, "High"},
                                            {4.2, 5.0, "Very High"}});
    return binding;
  }

  const std::vector<Range>& ranges() const noexcept { return ranges_; }

  void CheckTerms(const LinguisticVocabulary& vocab) const {
    for (const auto& r : ranges_) {
      if (!vocab.Contains(r.term)) throw ValidationError("linguistic binding: term '" + r.term + "' not in vocabulary");
    }
  }

  const std::string& TermFor(double score) const {
    if (!(score >= kMinScore && score <= kMaxScore)) {
      throw ValidationError("linguistic binding: score " + FormatReal(score) + " outside [1, 5]");
    }
    for (const auto& r : ranges_) {
      if (score >= r.lower && score < r.upper) return r.term;
    }
    return ranges_.back().term;
  }

  // [{"term": "...", "lower": 1, "upper": 1.8}, ...]
  static LinguisticBinding FromJson(const nlohmann::json& j) {
    if (!j.is_array()) throw ValidationError("linguistic binding: expected a JSON array");
    std::vector<Range> ranges;
    for (const auto& item : j) {
      try {
        ranges.push_back({item.at("lower").get<double>(), item.at("upper").get<double>(),
                          item.at("term").get<std::string>()});
      } catch (const nlohmann::json::exception&) {
        throw ValidationError("linguistic binding: entries need numeric 'lower', 'upper' and string 'term'");
      }
    }
    return LinguisticBinding(std::move(ranges));
  }

  nlohmann::ordered_json ToJson() const {
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : ranges_) out.push_back({{"term", r.term}, {"lower", r.lower}, {"upper", r.upper}});
    return out;
  }

 private:
  std::vector<Range> ranges_;
};

inline FuzzyTable FuzzifyScoreTable(const CrispTable& table, const LinguisticVocabulary& vocab,
                                    const LinguisticBinding& binding = LinguisticBinding::Default()) {
  binding.CheckTerms(vocab);
  std::vector<Tfn> cells;
  cells.reserve(table.cells().size());
  for (double score : table.cells()) cells.push_back(vocab.Lookup(binding.TermFor(score)));
  return table.WithCells(std::move(cells));
}

// Every rater's score becomes its term's TFN; raters are fused per cell with
// the component-wise mean.
inline FuzzyTable BuildFuzzyScoreTable(const std::vector<ScoreRecord>& records, const TableBuildOptions& options,
                                       const LinguisticVocabulary& vocab,
                                       const LinguisticBinding& binding = LinguisticBinding::Default(),
                                       const LabelMapping& mapping = {}) {
  binding.CheckTerms(vocab);
  const auto groups = detail::GroupRecords(records, options);
  std::vector<Tfn> cells;
  cells.reserve(groups.cells.size());
  for (const auto& cell : groups.cells) {
    std::vector<Tfn> opinions;
    for (const ScoreRecord* r : cell) opinions.push_back(vocab.Lookup(binding.TermFor(r->Numeric(mapping))));
    // sorted so the mean is independent of record order
    std::sort(opinions.begin(), opinions.end(), [](const Tfn& a, const Tfn& b) {
      return std::make_tuple(a.l(), a.m(), a.u()) < std::make_tuple(b.l(), b.m(), b.u());
    });
    cells.push_back(Aggregate(opinions));
  }
  return FuzzyTable(groups.candidates, options.criteria, std::move(cells), options.kinds);
}

// Dataset-level settings shared by every command.
struct DatasetConfig {
  std::vector<std::string> criteria = {"Skills", "Experience", "Education", "About"};
  std::vector<CriterionKind> kinds;  // empty: all benefit
  LabelMapping label_mapping;
  LinguisticVocabulary vocabulary = LinguisticVocabulary::Default();
  LinguisticBinding binding = LinguisticBinding::Default();

  // Reads "criteria", "criterion_kinds" ({name: "benefit"|"cost"}),
  // "label_to_score" ({Poor: x, ...}), "vocabulary" and "linguistic_binding".
  // Absent keys keep their defaults.
  static DatasetConfig FromJson(const nlohmann::json& j) {
    DatasetConfig cfg;
    if (!j.is_object()) throw ValidationError("config: expected a JSON object");
    try {
      if (j.contains("criteria")) cfg.criteria = j.at("criteria").get<std::vector<std::string>>();
      if (cfg.criteria.empty()) throw ValidationError("config: criteria list is empty");
      if (j.contains("criterion_kinds")) {
        cfg.kinds.assign(cfg.criteria.size(), CriterionKind::kBenefit);
        for (const auto& [name, kind] : j.at("criterion_kinds").items()) {
          auto it = std::find_if(cfg.criteria.begin(), cfg.criteria.end(),
                                 [&](const std::string& c) { return SameName(c, name); });
          if (it == cfg.criteria.end()) throw ValidationError("config: criterion_kinds names unknown criterion '" + name + "'");
          cfg.kinds[static_cast<std::size_t>(it - cfg.criteria.begin())] = ParseCriterionKind(kind.get<std::string>());
        }
      }
      if (j.contains("label_to_score")) {
        for (const auto& [name, value] : j.at("label_to_score").items()) {
          const double v = value.get<double>();
          switch (ParseLabel(name)) {
            case Label::kPoor: cfg.label_mapping.poor = v; break;
            case Label::kFair: cfg.label_mapping.fair = v; break;
            case Label::kExcellent: cfg.label_mapping.excellent = v; break;
          }
        }
        cfg.label_mapping.Validate();
      }
      if (j.contains("vocabulary")) cfg.vocabulary = LinguisticVocabulary::FromJson(j.at("vocabulary"));
      if (j.contains("linguistic_binding")) cfg.binding = LinguisticBinding::FromJson(j.at("linguistic_binding"));
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("config: ") + e.what());
    }
    cfg.binding.CheckTerms(cfg.vocabulary);
    return cfg;
  }
};

}  // namespace mcdm

#endif  // MCDM_PROFILE_HPP_
