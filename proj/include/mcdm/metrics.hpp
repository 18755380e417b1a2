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

#ifndef MCDM_METRICS_HPP_
#define MCDM_METRICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mcdm/error.hpp"
#include "mcdm/text.hpp"

namespace mcdm {

// Rows are true labels, columns predicted labels.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::vector<std::string> classes)
      : classes_(std::move(classes)), counts_(classes_.size(), std::vector<std::size_t>(classes_.size(), 0)) {
    if (classes_.empty()) throw ValidationError("confusion matrix: no classes");
  }

  void Add(std::string_view truth, std::string_view predicted) {
    ++counts_[IndexOf(truth)][IndexOf(predicted)];
    ++total_;
  }

  std::size_t IndexOf(std::string_view label) const {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      if (SameName(classes_[i], label)) return i;
    }
    throw ValidationError("unknown label '" + Trim(label) + "'");
  }

  const std::vector<std::string>& classes() const noexcept { return classes_; }
  std::size_t count(std::size_t truth, std::size_t predicted) const { return counts_.at(truth).at(predicted); }
  std::size_t total() const noexcept { return total_; }

  std::size_t Trace() const {
    std::size_t t = 0;
    for (std::size_t i = 0; i < classes_.size(); ++i) t += counts_[i][i];
    return t;
  }

  nlohmann::ordered_json ToJson() const {
    return nlohmann::ordered_json{{"classes", classes_}, {"counts", counts_}};
  }

  // Aligned plain-text grid for terminals.
  std::string ToText() const {
    std::size_t width = std::string("true\\pred").size();
    for (const auto& c : classes_) width = std::max(width, c.size());
    for (const auto& row : counts_) {
      for (std::size_t v : row) width = std::max(width, std::to_string(v).size());
    }
    const auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
    std::string out = pad("true\\pred");
    for (const auto& c : classes_) out += "  " + pad(c);
    out += '\n';
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      out += pad(classes_[i]);
      for (std::size_t v : counts_[i]) out += "  " + pad(std::to_string(v));
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<std::string> classes_;
  std::vector<std::vector<std::size_t>> counts_;
  std::size_t total_ = 0;
};

struct ClassMetrics {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
  // Set when the metric's denominator was zero; the metric is then 0.
  bool precision_zero_division = false;
  bool recall_zero_division = false;
  bool f1_zero_division = false;
};

struct ClassificationReport {
  ConfusionMatrix confusion{{"?"}};
  std::vector<ClassMetrics> per_class;
  double accuracy = 0.0;
  double hamming_loss = 0.0;
  // Macro averages over classes that occur in the truth or the predictions.
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
};

inline ClassificationReport ClassificationMetrics(std::span<const std::string> truth,
                                                  std::span<const std::string> predicted,
                                                  std::vector<std::string> classes) {
  if (truth.size() != predicted.size()) {
    throw ValidationError("classification: " + std::to_string(truth.size()) + " true labels but " +
                          std::to_string(predicted.size()) + " predictions");
  }
  if (truth.empty()) throw ValidationError("classification: no samples");
  ClassificationReport report;
  report.confusion = ConfusionMatrix(std::move(classes));
  auto& cm = report.confusion;
  for (std::size_t i = 0; i < truth.size(); ++i) cm.Add(truth[i], predicted[i]);
  const std::size_t n = cm.classes().size();
  std::size_t present = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t tp = cm.count(c, c), predicted_pos = 0, actual_pos = 0;
    for (std::size_t k = 0; k < n; ++k) {
      predicted_pos += cm.count(k, c);
      actual_pos += cm.count(c, k);
    }
    ClassMetrics m;
    m.label = cm.classes()[c];
    m.support = actual_pos;
    if (predicted_pos == 0) {
      m.precision_zero_division = true;
    } else {
      m.precision = static_cast<double>(tp) / static_cast<double>(predicted_pos);
    }
    if (actual_pos == 0) {
      m.recall_zero_division = true;
    } else {
      m.recall = static_cast<double>(tp) / static_cast<double>(actual_pos);
    }
    if (m.precision + m.recall == 0.0) {
      m.f1_zero_division = true;
    } else {
      m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    }
    if (predicted_pos > 0 || actual_pos > 0) {
      ++present;
      report.macro_precision += m.precision;
      report.macro_recall += m.recall;
      report.macro_f1 += m.f1;
    }
    report.per_class.push_back(std::move(m));
  }
  report.macro_precision /= static_cast<double>(present);
  report.macro_recall /= static_cast<double>(present);
  report.macro_f1 /= static_cast<double>(present);
  report.accuracy = static_cast<double>(cm.Trace()) / static_cast<double>(cm.total());
  // single-label samples
  report.hamming_loss = 1.0 - report.accuracy;
  return report;
}

struct ScoreAgreement {
  double mae = 0.0;
  double rmse = 0.0;
  double cosine = 0.0;
};

inline ScoreAgreement CompareScores(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ValidationError("score agreement: vectors have lengths " + std::to_string(a.size()) + " and " +
                          std::to_string(b.size()));
  }
  if (a.empty()) throw ValidationError("score agreement: empty vectors");
  double abs_sum = 0.0, sq_sum = 0.0, dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    abs_sum += std::abs(d);
    sq_sum += d * d;
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw ValidationError("score agreement: cosine similarity undefined for a zero vector");
  const double n = static_cast<double>(a.size());
  ScoreAgreement out;
  out.mae = abs_sum / n;
  out.rmse = std::sqrt(sq_sum / n);
  // sqrt(na * nb) rather than sqrt(na) * sqrt(nb): exact 1 for a == b
  out.cosine = std::clamp(dot / std::sqrt(na * nb), -1.0, 1.0);
  return out;
}

struct RankingScores {
  double map = 0.0;
  double mrr = 0.0;
  double ndcg = 0.0;
};

// Relevance grades by id; grade > 0 counts as relevant for MAP and MRR.
using RelevanceGrades = std::map<std::string, double>;

namespace detail {

inline void CheckPermutation(std::span<const std::string> ranking, const RelevanceGrades& relevance) {
  std::set<std::string> seen;
  for (const auto& id : ranking) {
    if (!relevance.count(id)) throw ValidationError("ranking metrics: id '" + id + "' has no relevance grade");
    if (!seen.insert(id).second) throw ValidationError("ranking metrics: id '" + id + "' ranked twice");
  }
  if (seen.size() != relevance.size()) {
    for (const auto& [id, grade] : relevance) {
      if (!seen.count(id)) throw ValidationError("ranking metrics: id '" + id + "' missing from the ranking");
    }
  }
  for (const auto& [id, grade] : relevance) {
    if (!std::isfinite(grade) || grade < 0.0) {
      throw ValidationError("ranking metrics: grade for '" + id + "' must be non-negative");
    }
  }
}

inline std::size_t Depth(std::size_t n, std::optional<std::size_t> k) {
  if (k && *k == 0) throw ValidationError("ranking metrics: cutoff k must be positive");
  return k ? std::min(*k, n) : n;
}

}  // namespace detail

// Mean over relevant positions of precision at that position. With a cutoff
// k, only the first k positions count and the sum is divided by min(R, k).
inline double AveragePrecision(std::span<const std::string> ranking, const RelevanceGrades& relevance,
                               std::optional<std::size_t> k = std::nullopt) {
  detail::CheckPermutation(ranking, relevance);
  std::size_t relevant = 0;
  for (const auto& [id, g] : relevance) relevant += g > 0.0 ? 1 : 0;
  if (relevant == 0) throw ValidationError("ranking metrics: no relevant id, MAP undefined");
  const std::size_t depth = detail::Depth(ranking.size(), k);
  std::size_t hits = 0;
  double sum = 0.0;
  for (std::size_t pos = 0; pos < depth; ++pos) {
    if (relevance.at(ranking[pos]) > 0.0) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(pos + 1);
    }
  }
  return sum / static_cast<double>(std::min(relevant, depth));
}

inline double ReciprocalRank(std::span<const std::string> ranking, const RelevanceGrades& relevance,
                             std::optional<std::size_t> k = std::nullopt) {
  detail::CheckPermutation(ranking, relevance);
  bool any = false;
  for (const auto& [id, g] : relevance) any = any || g > 0.0;
  if (!any) throw ValidationError("ranking metrics: no relevant id, MRR undefined");
  const std::size_t depth = detail::Depth(ranking.size(), k);
  for (std::size_t pos = 0; pos < depth; ++pos) {
    if (relevance.at(ranking[pos]) > 0.0) return 1.0 / static_cast<double>(pos + 1);
  }
  return 0.0;
}

// DCG / IDCG with gain = grade and discount 1 / log2(position + 1).
inline double Ndcg(std::span<const std::string> ranking, const RelevanceGrades& relevance,
                   std::optional<std::size_t> k = std::nullopt) {
  detail::CheckPermutation(ranking, relevance);
  const std::size_t depth = detail::Depth(ranking.size(), k);
  std::vector<double> ideal;
  for (const auto& [id, g] : relevance) ideal.push_back(g);
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  double dcg = 0.0, idcg = 0.0;
  for (std::size_t pos = 0; pos < depth; ++pos) {
    const double discount = std::log2(static_cast<double>(pos) + 2.0);
    dcg += relevance.at(ranking[pos]) / discount;
    idcg += ideal[pos] / discount;
  }
  if (idcg == 0.0) throw ValidationError("ranking metrics: all grades are zero, NDCG undefined");
  // identical summation order when the ranking is ideal: exact 1
  return std::min(1.0, dcg / idcg);
}

inline RankingScores RankingMetrics(std::span<const std::string> ranking, const RelevanceGrades& relevance,
                                    std::optional<std::size_t> k = std::nullopt) {
  return RankingScores{AveragePrecision(ranking, relevance, k), ReciprocalRank(ranking, relevance, k),
                       Ndcg(ranking, relevance, k)};
}

struct RankingQuery {
  std::vector<std::string> ranking;
  RelevanceGrades relevance;
};

// MAP, MRR and NDCG averaged over queries.
inline RankingScores RankingMetricsOverQueries(std::span<const RankingQuery> queries,
                                               std::optional<std::size_t> k = std::nullopt) {
  if (queries.empty()) throw ValidationError("ranking metrics: no queries");
  RankingScores total;
  for (const auto& q : queries) {
    const auto s = RankingMetrics(q.ranking, q.relevance, k);
    total.map += s.map;
    total.mrr += s.mrr;
    total.ndcg += s.ndcg;
  }
  const double n = static_cast<double>(queries.size());
  return RankingScores{total.map / n, total.mrr / n, total.ndcg / n};
}

// ---------------------------------------------------------------------------
// Source comparisons

struct RankEntry {
  std::string id;
  int rank = 0;
  std::optional<double> closeness;
};

struct RankedSource {
  std::string name;
  std::vector<RankEntry> entries;
};

struct LabelEntry {
  std::string sample_id;
  std::string label;
};

struct LabeledSource {
  std::string name;
  std::vector<LabelEntry> entries;
};

struct SourceComparison {
  std::string source;
  std::optional<ScoreAgreement> agreement;
  std::string agreement_basis;  // "closeness", "rank" or "label_score"
  std::optional<RankingScores> ranking;
  std::optional<ClassificationReport> classification;
};

struct RankRow {
  std::string candidate_id;
  std::vector<int> ranks;  // parallel to EvaluationReport::sources
};

struct EvaluationReport {
  std::string kind;  // "ranking" or "classification"
  std::string reference;
  std::vector<std::string> sources;
  std::size_t relevant_k = 0;
  std::vector<SourceComparison> comparisons;  // every non-reference source vs reference
  std::vector<RankRow> rank_table;
};

namespace detail {

template <typename Entry, typename IdOf>
std::map<std::string, const Entry*> IndexEntries(const std::string& source, const std::vector<Entry>& entries,
                                                 IdOf id_of) {
  std::map<std::string, const Entry*> index;
  for (const auto& e : entries) {
    if (!index.emplace(id_of(e), &e).second) {
      throw ValidationError("source '" + source + "': duplicate id '" + id_of(e) + "'");
    }
  }
  if (index.empty()) throw ValidationError("source '" + source + "': no entries");
  return index;
}

template <typename A, typename B>
void CheckSameIds(const std::string& a_name, const std::map<std::string, A>& a, const std::string& b_name,
                  const std::map<std::string, B>& b) {
  std::vector<std::string> only_a, only_b;
  for (const auto& [id, v] : a) {
    if (!b.count(id)) only_a.push_back(id);
  }
  for (const auto& [id, v] : b) {
    if (!a.count(id)) only_b.push_back(id);
  }
  if (only_a.empty() && only_b.empty()) return;
  const auto join = [](const std::vector<std::string>& ids) {
    std::string s;
    for (const auto& id : ids) s += (s.empty() ? "" : " ") + id;
    return s.empty() ? std::string("-") : s;
  };
  throw ValidationError("id sets differ: only in '" + a_name + "': " + join(only_a) + "; only in '" + b_name +
                        "': " + join(only_b));
}

template <typename Source>
std::size_t FindReference(const std::vector<Source>& sources, const std::string& reference) {
  if (sources.size() < 2) throw ValidationError("compare: need at least two sources");
  std::size_t ref = sources.size();
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      if (sources[k].name == sources[i].name) throw ValidationError("compare: duplicate source name '" + sources[i].name + "'");
    }
    if (sources[i].name == reference) ref = i;
  }
  if (ref == sources.size()) throw ValidationError("compare: reference '" + reference + "' is not among the sources");
  return ref;
}

// Ids ordered by ascending rank, ties by id.
inline std::vector<std::string> OrderByRank(const std::map<std::string, const RankEntry*>& index) {
  std::vector<const RankEntry*> entries;
  for (const auto& [id, e] : index) entries.push_back(e);
  std::stable_sort(entries.begin(), entries.end(), [](const RankEntry* a, const RankEntry* b) {
    if (a->rank != b->rank) return a->rank < b->rank;
    return a->id < b->id;
  });
  std::vector<std::string> ids;
  for (const auto* e : entries) ids.push_back(e->id);
  return ids;
}

}  // namespace detail

// The reference is ground truth. Relevance for MAP/MRR is the reference's top
// k (default ceil(n / 2)); NDCG grades are n - p + 1 for reference position p.
// Score agreement uses closeness when both sides carry it, otherwise ranks.
inline EvaluationReport CompareRankings(const std::vector<RankedSource>& sources, const std::string& reference,
                                        std::optional<std::size_t> relevant_k = std::nullopt) {
  const std::size_t ref = detail::FindReference(sources, reference);
  std::vector<std::map<std::string, const RankEntry*>> index;
  for (const auto& s : sources) {
    index.push_back(detail::IndexEntries(s.name, s.entries, [](const RankEntry& e) { return e.id; }));
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (i != ref) detail::CheckSameIds(sources[ref].name, index[ref], sources[i].name, index[i]);
  }
  const auto ref_order = detail::OrderByRank(index[ref]);
  const std::size_t n = ref_order.size();
  const std::size_t k = relevant_k.value_or((n + 1) / 2);
  if (k == 0 || k > n) {
    throw ValidationError("compare: relevant k must be in [1, " + std::to_string(n) + "]");
  }
  RelevanceGrades binary, graded;
  for (std::size_t p = 0; p < n; ++p) {
    binary[ref_order[p]] = p < k ? 1.0 : 0.0;
    graded[ref_order[p]] = static_cast<double>(n - p);
  }

  EvaluationReport report;
  report.kind = "ranking";
  report.reference = reference;
  report.relevant_k = k;
  for (const auto& s : sources) report.sources.push_back(s.name);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (i == ref) continue;
    const auto order = detail::OrderByRank(index[i]);
    SourceComparison c;
    c.source = sources[i].name;
    RankingScores scores;
    scores.map = AveragePrecision(order, binary);
    scores.mrr = ReciprocalRank(order, binary);
    scores.ndcg = Ndcg(order, graded);
    c.ranking = scores;
    bool closeness = true;
    for (const auto& id : ref_order) {
      closeness = closeness && index[ref].at(id)->closeness && index[i].at(id)->closeness;
    }
    std::vector<double> a, b;
    for (const auto& [id, e] : index[ref]) {
      a.push_back(closeness ? *e->closeness : static_cast<double>(e->rank));
      const auto* other = index[i].at(id);
      b.push_back(closeness ? *other->closeness : static_cast<double>(other->rank));
    }
    c.agreement_basis = closeness ? "closeness" : "rank";
    c.agreement = CompareScores(a, b);
    report.comparisons.push_back(std::move(c));
  }
  for (const auto& id : ref_order) {
    RankRow row{id, {}};
    for (std::size_t i = 0; i < sources.size(); ++i) row.ranks.push_back(index[i].at(id)->rank);
    report.rank_table.push_back(std::move(row));
  }
  return report;
}

// Classification of every non-reference source against the reference labels,
// paired by sample id. `to_score` maps labels onto the score scale for the
// MAE / RMSE / cosine block.
template <typename ToScore>
EvaluationReport CompareLabels(const std::vector<LabeledSource>& sources, const std::string& reference,
                               const std::vector<std::string>& classes, ToScore to_score) {
  const std::size_t ref = detail::FindReference(sources, reference);
  std::vector<std::map<std::string, const LabelEntry*>> index;
  for (const auto& s : sources) {
    index.push_back(detail::IndexEntries(s.name, s.entries, [](const LabelEntry& e) { return e.sample_id; }));
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (i != ref) detail::CheckSameIds(sources[ref].name, index[ref], sources[i].name, index[i]);
  }
  EvaluationReport report;
  report.kind = "classification";
  report.reference = reference;
  for (const auto& s : sources) report.sources.push_back(s.name);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (i == ref) continue;
    std::vector<std::string> truth, predicted;
    std::vector<double> a, b;
    for (const auto& [id, e] : index[ref]) {
      truth.push_back(e->label);
      predicted.push_back(index[i].at(id)->label);
      a.push_back(to_score(truth.back()));
      b.push_back(to_score(predicted.back()));
    }
    SourceComparison c;
    c.source = sources[i].name;
    c.classification = ClassificationMetrics(truth, predicted, classes);
    c.agreement = CompareScores(a, b);
    c.agreement_basis = "label_score";
    report.comparisons.push_back(std::move(c));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::ordered_json EvaluationToJson(const EvaluationReport& report) {
  const auto r = [](double v) { return RoundSignificant(v); };
  nlohmann::ordered_json j;
  j["kind"] = report.kind;
  j["reference"] = report.reference;
  j["sources"] = report.sources;
  nlohmann::ordered_json meta;
  if (report.kind == "ranking") {
    meta["relevance"] = "reference_top_k";
    meta["relevant_k"] = report.relevant_k;
    meta["ndcg_gain"] = "grade";
    meta["ndcg_grades"] = "n - position + 1 in reference order";
    meta["ndcg_discount"] = "1/log2(rank+1)";
  } else {
    meta["hamming_loss"] = "single_label";
    meta["zero_division"] = "0 with flag";
  }
  j["metadata"] = meta;
  auto comparisons = nlohmann::ordered_json::array();
  for (const auto& c : report.comparisons) {
    nlohmann::ordered_json cj;
    cj["source"] = c.source;
    cj["reference"] = report.reference;
    if (c.classification) {
      const auto& cl = *c.classification;
      cj["accuracy"] = r(cl.accuracy);
      cj["hamming_loss"] = r(cl.hamming_loss);
      cj["macro_precision"] = r(cl.macro_precision);
      cj["macro_recall"] = r(cl.macro_recall);
      cj["macro_f1"] = r(cl.macro_f1);
      auto per = nlohmann::ordered_json::array();
      for (const auto& m : cl.per_class) {
        per.push_back(nlohmann::ordered_json{{"label", m.label},
                                             {"precision", r(m.precision)},
                                             {"recall", r(m.recall)},
                                             {"f1", r(m.f1)},
                                             {"support", m.support},
                                             {"precision_zero_division", m.precision_zero_division},
                                             {"recall_zero_division", m.recall_zero_division},
                                             {"f1_zero_division", m.f1_zero_division}});
      }
      cj["per_class"] = per;
      cj["confusion_matrix"] = cl.confusion.ToJson();
    }
    if (c.ranking) {
      cj["map"] = r(c.ranking->map);
      cj["mrr"] = r(c.ranking->mrr);
      cj["ndcg"] = r(c.ranking->ndcg);
    }
    if (c.agreement) {
      cj["agreement_basis"] = c.agreement_basis;
      cj["mae"] = r(c.agreement->mae);
      cj["rmse"] = r(c.agreement->rmse);
      cj["cosine"] = r(c.agreement->cosine);
    }
    comparisons.push_back(cj);
  }
  j["comparisons"] = comparisons;
  if (report.kind == "ranking") {
    auto table = nlohmann::ordered_json::array();
    for (const auto& row : report.rank_table) {
      nlohmann::ordered_json ranks;
      for (std::size_t i = 0; i < report.sources.size(); ++i) ranks[report.sources[i]] = row.ranks[i];
      table.push_back(nlohmann::ordered_json{{"candidate_id", row.candidate_id}, {"ranks", ranks}});
    }
    j["rank_table"] = table;
  }
  return j;
}

// Long format with fixed columns: reference,source,metric,value.
inline std::string EvaluationToCsv(const EvaluationReport& report) {
  std::string out = "reference,source,metric,value\n";
  const auto line = [&](const std::string& source, const std::string& metric, double value) {
    out += report.reference + "," + source + "," + metric + "," + FormatReal(value) + "\n";
  };
  for (const auto& c : report.comparisons) {
    if (c.classification) {
      const auto& cl = *c.classification;
      line(c.source, "accuracy", cl.accuracy);
      line(c.source, "hamming_loss", cl.hamming_loss);
      line(c.source, "macro_precision", cl.macro_precision);
      line(c.source, "macro_recall", cl.macro_recall);
      line(c.source, "macro_f1", cl.macro_f1);
      for (const auto& m : cl.per_class) {
        line(c.source, "precision:" + m.label, m.precision);
        line(c.source, "recall:" + m.label, m.recall);
        line(c.source, "f1:" + m.label, m.f1);
      }
    }
    if (c.ranking) {
      line(c.source, "map", c.ranking->map);
      line(c.source, "mrr", c.ranking->mrr);
      line(c.source, "ndcg", c.ranking->ndcg);
    }
    if (c.agreement) {
      line(c.source, "mae", c.agreement->mae);
      line(c.source, "rmse", c.agreement->rmse);
      line(c.source, "cosine", c.agreement->cosine);
    }
  }
  return out;
}

}  // namespace mcdm

#endif  // MCDM_METRICS_HPP_
