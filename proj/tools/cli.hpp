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

// Command-line driver: rank, weights, evaluate and fuzzify subcommands.

#ifndef MCDM_TOOLS_CLI_HPP_
#define MCDM_TOOLS_CLI_HPP_

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcdm/mcdm.hpp"

namespace mcdm::cli {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kValidationFailure = 1, kComputationFailure = 2 };

inline constexpr const char* kToolName = "mcdm-rank";
inline constexpr const char* kOutEnv = "MCDM_RANK_OUT";

inline std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline nlohmann::json ReadJson(const fs::path& path) {
  const std::string text = ReadFile(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": invalid JSON (byte " + std::to_string(e.byte) + ")");
  }
}

inline std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw ValidationError("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

// UTC ISO-8601; SOURCE_DATE_EPOCH pins it for reproducible builds.
inline std::string Timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::atoll(epoch));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Tracks inputs (hashed) and outputs for manifest.json.
class Manifest {
 public:
  explicit Manifest(std::string command) : command_(std::move(command)) {}

  std::string Read(const std::string& role, const fs::path& path) {
    std::string text = ReadFile(path);
    inputs_.push_back(ojson{{"role", role},
                            {"path", path.generic_string()},
                            {"sha256", Sha256Hex(text)},
                            {"bytes", text.size()}});
    return text;
  }

  nlohmann::json ReadJson(const std::string& role, const fs::path& path) {
    const std::string text = Read(role, path);
    try {
      return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(path.string() + ": invalid JSON (byte " + std::to_string(e.byte) + ")");
    }
  }

  void Write(const fs::path& dir, const std::string& name, const std::string& content) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write '" + path.string() + "'");
    out << content;
    outputs_.push_back(name);
  }

  void Finish(const fs::path& dir, const ojson& config) {
    outputs_.push_back("manifest.json");
    ojson m;
    m["tool"] = kToolName;
    m["version"] = kVersion;
    m["command"] = command_;
    m["config"] = config;
    m["inputs"] = inputs_;
    m["outputs"] = outputs_;
    m["created_at"] = Timestamp();
    Write(dir, "manifest.json", m.dump(2) + "\n");
  }

 private:
  std::string command_;
  ojson inputs_ = ojson::array();
  std::vector<std::string> outputs_;
};

// Settings for every subcommand. Config-file values are loaded first and
// command-line flags override them.
struct RunConfig {
  std::optional<std::string> scores;
  std::optional<std::string> candidates;
  std::optional<std::string> weights_file;
  std::vector<std::string> pairwise;
  bool default_weights = false;
  std::string mode = "crisp";
  std::optional<std::string> normalization;
  std::optional<double> spread;
  std::string cells = "linguistic";
  std::optional<std::string> score_source;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;  // reserved; every path is deterministic
  DatasetConfig dataset;

  int WeightSourceCount() const {
    return (weights_file ? 1 : 0) + (pairwise.empty() ? 0 : 1) + (default_weights ? 1 : 0);
  }

  // Relative paths inside the config resolve against the config's directory.
  static RunConfig FromJson(const nlohmann::json& j, const fs::path& base) {
    RunConfig cfg;
    cfg.dataset = DatasetConfig::FromJson(j);
    const auto path_of = [&](const nlohmann::json& v) {
      const fs::path p(v.get<std::string>());
      return (p.is_absolute() ? p : base / p).generic_string();
    };
    try {
      if (j.contains("scores")) cfg.scores = path_of(j.at("scores"));
      if (j.contains("candidates")) cfg.candidates = path_of(j.at("candidates"));
      if (j.contains("weights")) {
        const auto& w = j.at("weights");
        if (w.is_string() && w.get<std::string>() == "default") {
          cfg.default_weights = true;
        } else if (w.is_object()) {
          int given = 0;
          if (w.contains("file")) {
            cfg.weights_file = path_of(w.at("file"));
            ++given;
          }
          if (w.contains("pairwise")) {
            for (const auto& p : w.at("pairwise")) cfg.pairwise.push_back(path_of(p));
            ++given;
          }
          if (w.contains("default") && w.at("default").get<bool>()) {
            cfg.default_weights = true;
            ++given;
          }
          if (given != 1) throw ValidationError("config: 'weights' must name exactly one source");
        } else {
          throw ValidationError("config: 'weights' must be \"default\" or {\"file\"|\"pairwise\"|\"default\"}");
        }
      }
      if (j.contains("mode")) cfg.mode = j.at("mode").get<std::string>();
      if (j.contains("normalization")) cfg.normalization = j.at("normalization").get<std::string>();
      if (j.contains("spread")) cfg.spread = j.at("spread").get<double>();
      if (j.contains("cells")) cfg.cells = j.at("cells").get<std::string>();
      if (j.contains("score_source")) cfg.score_source = j.at("score_source").get<std::string>();
      if (j.contains("out")) cfg.out = path_of(j.at("out"));
      if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("config: ") + e.what());
    }
    return cfg;
  }

  fs::path OutputDir() const {
    if (out) return *out;
    if (const char* env = std::getenv(kOutEnv); env && *env) return env;
    return ".";
  }

  ojson Snapshot() const {
    ojson j;
    j["criteria"] = dataset.criteria;
    auto kinds = ojson::array();
    for (std::size_t i = 0; i < dataset.criteria.size(); ++i) {
      kinds.push_back(ToString(i < dataset.kinds.size() ? dataset.kinds[i] : CriterionKind::kBenefit));
    }
    j["criterion_kinds"] = kinds;
    j["label_to_score"] = ojson{{"Poor", dataset.label_mapping.poor},
                                {"Fair", dataset.label_mapping.fair},
                                {"Excellent", dataset.label_mapping.excellent}};
    j["vocabulary"] = dataset.vocabulary.ToJson();
    j["linguistic_binding"] = dataset.binding.ToJson();
    ojson weights;
    if (weights_file) weights["file"] = *weights_file;
    if (!pairwise.empty()) weights["pairwise"] = pairwise;
    if (default_weights) weights["default"] = true;
    j["weights"] = weights.is_null() ? ojson(nullptr) : weights;
    j["mode"] = mode;
    j["normalization"] = normalization ? ojson(*normalization) : ojson(nullptr);
    j["spread"] = spread ? ojson(*spread) : ojson(nullptr);
    j["cells"] = cells;
    j["score_source"] = score_source ? ojson(*score_source) : ojson(nullptr);
    j["seed"] = seed ? ojson(*seed) : ojson(nullptr);
    return j;
  }
};

namespace detail {

inline RunConfig LoadConfig(const std::string& config_path, Manifest& manifest) {
  if (config_path.empty()) return RunConfig{};
  const fs::path p(config_path);
  return RunConfig::FromJson(manifest.ReadJson("config", p), p.parent_path());
}

inline std::optional<ScoreSource> ResolveScoreSource(const RunConfig& cfg, const std::vector<ScoreRecord>& records) {
  if (cfg.score_source) return ParseScoreSource(*cfg.score_source);
  bool expert = false, model = false;
  for (const auto& r : records) {
    expert = expert || r.source == ScoreSource::kExpert;
    model = model || r.source == ScoreSource::kModel;
  }
  if (expert && model) {
    throw ValidationError("score file mixes expert and model records; choose one with --source expert|model");
  }
  return std::nullopt;
}

inline TableBuildOptions LoadTableOptions(const RunConfig& cfg, Manifest& manifest,
                                          std::vector<ScoreRecord>& records) {
  if (!cfg.scores) throw ValidationError("missing --scores");
  records = ParseScoreCsv(manifest.Read("scores", *cfg.scores), *cfg.scores);
  if (records.empty()) throw ValidationError(*cfg.scores + ": no score rows");
  TableBuildOptions options;
  options.criteria = cfg.dataset.criteria;
  options.kinds = cfg.dataset.kinds;
  options.source = ResolveScoreSource(cfg, records);
  if (cfg.candidates) {
    for (const auto& c : ParseCandidateCsv(manifest.Read("candidates", *cfg.candidates), *cfg.candidates)) {
      options.candidates.push_back(c.id);
    }
    if (options.candidates.empty()) throw ValidationError(*cfg.candidates + ": no candidates");
  }
  bool any = false;
  for (const auto& r : records) {
    if (options.source && r.source != *options.source) continue;
    for (const auto& c : options.criteria) any = any || SameName(c, r.criterion);
  }
  if (!any) throw ValidationError(*cfg.scores + ": no scores for any configured criterion");
  return options;
}

inline WeightVector LoadWeights(const RunConfig& cfg, Manifest& manifest, std::ostream& err) {
  if (cfg.WeightSourceCount() != 1) {
    throw ValidationError(cfg.WeightSourceCount() == 0
                              ? "no weight source: give --weights, --pairwise or --default-weights"
                              : "conflicting weight sources: give exactly one of --weights, --pairwise, --default-weights");
  }
  if (cfg.default_weights) return DefaultWeights();
  if (cfg.weights_file) return WeightsFromJson(manifest.ReadJson("weights", *cfg.weights_file));
  std::vector<PairwiseComparisonMatrix> matrices;
  for (const auto& p : cfg.pairwise) {
    try {
      matrices.push_back(PairwiseComparisonMatrix::FromJson(manifest.ReadJson("pairwise", p)));
    } catch (const Error& e) {
      throw Error(e.kind(), p + ": " + e.what());
    }
  }
  WeightVector w = DeriveWeights(AggregateJudgments(matrices));
  if (w.ConsistencyWarning()) {
    err << "warning: consistency ratio " << FormatReal(w.consistency_ratio) << " exceeds 0.10\n";
  }
  return w;
}

inline std::string RankingCsv(const TopsisResult& result) {
  std::string out = "rank,candidate_id,closeness,d_plus,d_minus\n";
  for (const auto& o : result.Ranked()) {
    out += csv::JoinRow({std::to_string(o.rank), o.id, FormatReal(o.closeness), FormatReal(o.d_plus),
                         FormatReal(o.d_minus)});
  }
  return out;
}

inline void PrintRanking(const TopsisResult& result, std::ostream& out) {
  std::size_t width = 12;
  for (const auto& o : result.outcomes) width = std::max(width, o.id.size());
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%4s  %-*s  %12s  %12s  %12s\n", "rank", static_cast<int>(width), "candidate",
                "closeness", "d_plus", "d_minus");
  out << buf;
  for (const auto& o : result.Ranked()) {
    std::snprintf(buf, sizeof(buf), "%4d  %-*s  %12.6f  %12.6f  %12.6f\n", o.rank, static_cast<int>(width),
                  o.id.c_str(), o.closeness, o.d_plus, o.d_minus);
    out << buf;
  }
}

}  // namespace detail

// rank: scores -> TOPSIS -> ranking.json, ranking.csv, manifest.json.
inline TopsisResult CmdRank(RunConfig cfg, std::ostream& out, std::ostream& err, Manifest& manifest) {
  const std::string mode = ToLower(cfg.mode);
  if (mode != "crisp" && mode != "fuzzy") throw ValidationError("unknown mode '" + cfg.mode + "' (valid: crisp, fuzzy)");
  const Normalization scheme = cfg.normalization ? ParseNormalization(*cfg.normalization)
                                                 : (mode == "fuzzy" ? Normalization::kLinearMax : Normalization::kVector);
  if (mode == "fuzzy" && scheme == Normalization::kVector) {
    throw ValidationError("unsupported combination: fuzzy mode requires linear-max normalization");
  }
  const std::string cells = ToLower(cfg.cells);
  if (cells != "linguistic" && cells != "degenerate") {
    throw ValidationError("unknown cells '" + cfg.cells + "' (valid: linguistic, degenerate)");
  }
  std::vector<ScoreRecord> records;
  const TableBuildOptions options = detail::LoadTableOptions(cfg, manifest, records);
  WeightVector weights = detail::LoadWeights(cfg, manifest, err);
  weights.Validate();
  AlignWeights(options.criteria, weights);

  TopsisResult result;
  if (mode == "crisp") {
    result = RunTopsis(BuildScoreTable(records, options, cfg.dataset.label_mapping), weights, scheme);
  } else {
    if (cfg.spread || !weights.fuzzy_weights) weights = FuzzifyWeights(weights, cfg.spread.value_or(kDefaultWeightSpread));
    FuzzyTable table = [&] {
      if (cells == "linguistic") {
        return BuildFuzzyScoreTable(records, options, cfg.dataset.vocabulary, cfg.dataset.binding,
                                    cfg.dataset.label_mapping);
      }
      const CrispTable crisp = BuildScoreTable(records, options, cfg.dataset.label_mapping);
      std::vector<Tfn> tfns;
      for (double v : crisp.cells()) tfns.push_back(Tfn::Crisp(v));
      return crisp.WithCells(std::move(tfns));
    }();
    result = RunTopsis(table, weights, scheme);
  }
  const fs::path dir = cfg.OutputDir();
  manifest.Write(dir, "ranking.json", TopsisResultToJson(result).dump(2) + "\n");
  manifest.Write(dir, "ranking.csv", detail::RankingCsv(result));
  manifest.Finish(dir, cfg.Snapshot());
  detail::PrintRanking(result, out);
  return result;
}

// weights: aggregate expert matrices -> eigenvector weights -> weights.json.
inline WeightVector CmdWeights(const std::vector<std::string>& files, std::optional<double> spread,
                               const fs::path& dir, std::ostream& out, std::ostream& err, Manifest& manifest) {
  if (files.empty()) throw ValidationError("weights: give at least one pairwise matrix file");
  std::vector<PairwiseComparisonMatrix> matrices;
  for (const auto& f : files) {
    try {
      matrices.push_back(PairwiseComparisonMatrix::FromJson(manifest.ReadJson("pairwise", f)));
    } catch (const Error& e) {
      throw Error(e.kind(), f + ": " + e.what());
    }
  }
  const auto aggregated = AggregateJudgments(matrices);
  const auto detailed = DeriveWeightsDetailed(aggregated);
  WeightVector w = detailed.weights;
  if (spread) w = FuzzifyWeights(w, *spread);
  ojson j = WeightsToJson(w);
  j["lambda_max"] = RoundSignificant(detailed.lambda_max);
  j["experts"] = matrices.size();
  j["aggregated_matrix"] = ojson::array();
  for (const auto& row : aggregated.entries()) {
    auto r = ojson::array();
    for (double v : row) r.push_back(RoundSignificant(v));
    j["aggregated_matrix"].push_back(r);
  }
  manifest.Write(dir, "weights.json", j.dump(2) + "\n");
  ojson snapshot{{"pairwise", files}, {"spread", spread ? ojson(*spread) : ojson(nullptr)}};
  manifest.Finish(dir, snapshot);
  for (std::size_t i = 0; i < w.criteria.size(); ++i) out << w.criteria[i] << "\t" << FormatReal(w.weights[i]) << "\n";
  out << "consistency_ratio\t" << FormatReal(w.consistency_ratio) << "\n";
  if (w.ConsistencyWarning()) {
    err << "warning: consistency ratio " << FormatReal(w.consistency_ratio) << " exceeds 0.10\n";
  }
  return w;
}

namespace detail {

struct LoadedSource {
  std::optional<RankedSource> ranked;
  std::optional<LabeledSource> labeled;
};

inline std::string SourceNameFor(const std::string& arg, std::string& path) {
  const auto eq = arg.find('=');
  std::string name;
  if (eq == std::string::npos) {
    path = arg;
    name = fs::path(arg).stem().string();
  } else {
    name = arg.substr(0, eq);
    path = arg.substr(eq + 1);
  }
  if (name.empty()) throw ValidationError("source '" + arg + "': empty name");
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
      throw ValidationError("source name '" + name + "' may contain only letters, digits, '_', '-', '.'");
    }
  }
  return name;
}

// ranking.json, a rank CSV (candidate_id,rank[,closeness]) or a label CSV
// (sample_id,label) where label is Poor/Fair/Excellent or a 1-5 score.
inline LoadedSource LoadSource(const std::string& arg, Manifest& manifest) {
  std::string path;
  const std::string name = SourceNameFor(arg, path);
  const std::string text = manifest.Read("source:" + name, path);
  LoadedSource out;
  if (fs::path(path).extension() == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(path + ": invalid JSON (byte " + std::to_string(e.byte) + ")");
    }
    RankedSource s{name, {}};
    for (const auto& o : OutcomesFromJson(j)) s.entries.push_back({o.id, o.rank, o.closeness});
    out.ranked = std::move(s);
    return out;
  }
  const auto rows = csv::Parse(text, path);
  if (rows.empty()) throw ValidationError(path + ": empty CSV (no header)");
  bool has_rank = false;
  for (const auto& f : rows.front().fields) has_rank = has_rank || SameName(f, "rank");
  if (has_rank) {
    const csv::Header header(rows, {"candidate_id", "rank"}, {"closeness"}, path);
    RankedSource s{name, {}};
    for (std::size_t r = 1; r < rows.size(); ++r) {
      header.CheckWidth(rows[r]);
      const auto where = path + ":" + std::to_string(rows[r].line) + ": ";
      RankEntry e;
      e.id = header.Get(rows[r], "candidate_id");
      if (e.id.empty()) throw ValidationError(where + "empty candidate_id");
      try {
        std::size_t used = 0;
        const std::string rank = header.Get(rows[r], "rank");
        e.rank = std::stoi(rank, &used);
        if (used != rank.size() || e.rank < 1) throw std::invalid_argument(rank);
        if (const std::string c = header.Get(rows[r], "closeness"); !c.empty()) {
          e.closeness = std::stod(c, &used);
          if (used != c.size()) throw std::invalid_argument(c);
        }
      } catch (const std::logic_error&) {
        throw ValidationError(where + "rank must be a positive integer and closeness a number");
      }
      s.entries.push_back(std::move(e));
    }
    out.ranked = std::move(s);
    return out;
  }
  const csv::Header header(rows, {"sample_id", "label"}, {}, path);
  LabeledSource s{name, {}};
  for (std::size_t r = 1; r < rows.size(); ++r) {
    header.CheckWidth(rows[r]);
    const auto where = path + ":" + std::to_string(rows[r].line) + ": ";
    try {
      const ScoreValue v = ParseScoreValue(header.Get(rows[r], "label"));
      const Label label = std::holds_alternative<Label>(v) ? std::get<Label>(v) : ScoreToLabel(std::get<double>(v));
      s.entries.push_back({header.Get(rows[r], "sample_id"), std::string(ToString(label))});
    } catch (const Error& e) {
      throw Error(e.kind(), where + e.what());
    }
  }
  out.labeled = std::move(s);
  return out;
}

}  // namespace detail

// evaluate: compare >= 2 sources against a reference.
inline EvaluationReport CmdEvaluate(const std::vector<std::string>& source_args, const std::string& reference,
                                    std::optional<std::size_t> k, const RunConfig& cfg, std::ostream& out,
                                    Manifest& manifest) {
  if (source_args.size() < 2) throw ValidationError("evaluate: give at least two sources");
  std::vector<RankedSource> ranked;
  std::vector<LabeledSource> labeled;
  for (const auto& arg : source_args) {
    auto loaded = detail::LoadSource(arg, manifest);
    if (loaded.ranked) ranked.push_back(std::move(*loaded.ranked));
    if (loaded.labeled) labeled.push_back(std::move(*loaded.labeled));
  }
  if (!ranked.empty() && !labeled.empty()) {
    throw ValidationError("evaluate: cannot mix ranking and label sources");
  }
  const std::string ref = reference.empty() ? (ranked.empty() ? labeled.front().name : ranked.front().name) : reference;
  EvaluationReport report;
  if (!ranked.empty()) {
    report = CompareRankings(ranked, ref, k);
  } else {
    std::vector<std::string> classes;
    for (Label l : kAllLabels) classes.emplace_back(ToString(l));
    const LabelMapping mapping = cfg.dataset.label_mapping;
    report = CompareLabels(labeled, ref, classes,
                           [&](const std::string& label) { return mapping.ToScore(ParseLabel(label)); });
  }
  const fs::path dir = cfg.OutputDir();
  manifest.Write(dir, "evaluation.json", EvaluationToJson(report).dump(2) + "\n");
  manifest.Write(dir, "evaluation.csv", EvaluationToCsv(report));
  ojson snapshot = cfg.Snapshot();
  snapshot["sources"] = source_args;
  snapshot["reference"] = ref;
  snapshot["k"] = k ? ojson(*k) : ojson(nullptr);
  manifest.Finish(dir, snapshot);

  out << EvaluationToCsv(report);
  for (const auto& c : report.comparisons) {
    if (c.classification) out << "\n" << c.source << " vs " << ref << "\n" << c.classification->confusion.ToText();
  }
  return report;
}

// fuzzify: scores -> per-cell TFNs via the linguistic binding.
inline FuzzyTable CmdFuzzify(const RunConfig& cfg, std::ostream& out, Manifest& manifest) {
  std::vector<ScoreRecord> records;
  const TableBuildOptions options = detail::LoadTableOptions(cfg, manifest, records);
  const FuzzyTable table =
      BuildFuzzyScoreTable(records, options, cfg.dataset.vocabulary, cfg.dataset.binding, cfg.dataset.label_mapping);
  ojson j;
  j["criteria"] = table.criteria();
  auto rows = ojson::array();
  for (std::size_t i = 0; i < table.rows(); ++i) {
    auto cells = ojson::array();
    for (std::size_t c = 0; c < table.cols(); ++c) {
      const Tfn& t = table.at(i, c);
      cells.push_back(ojson{{"criterion", table.criteria()[c]},
                            {"l", RoundSignificant(t.l())},
                            {"m", RoundSignificant(t.m())},
                            {"u", RoundSignificant(t.u())},
                            {"centroid", RoundSignificant(Centroid(t))}});
    }
    rows.push_back(ojson{{"id", table.candidates()[i]}, {"cells", cells}});
  }
  j["candidates"] = rows;
  const fs::path dir = cfg.OutputDir();
  manifest.Write(dir, "fuzzy_scores.json", j.dump(2) + "\n");
  manifest.Finish(dir, cfg.Snapshot());
  out << "wrote " << table.rows() << " candidates x " << table.cols() << " criteria to "
      << (dir / "fuzzy_scores.json").generic_string() << "\n";
  return table;
}

inline std::string OneLine(std::string message) {
  for (char& c : message) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return message;
}

// Parses arguments and dispatches. Returns the process exit code; every
// failure writes exactly one "error[kind]: message" line to `err`.
inline int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crisp and fuzzy TOPSIS candidate ranking with AHP weights and ranking evaluation", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string config_path;
  RunConfig flags;
  std::string weights_file, normalization, score_source, out_dir, mode, cells, reference;
  std::vector<std::string> pairwise, positional;
  double spread = 0.0;
  std::size_t k = 0;
  bool use_default = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Run configuration JSON");
    cmd->add_option("--out", out_dir, "Output directory (default: $MCDM_RANK_OUT or .)");
  };
  const auto add_data = [&](CLI::App* cmd) {
    cmd->add_option("--scores", flags.scores, "Score CSV: candidate_id,criterion,score,source,rater");
    cmd->add_option("--candidates", flags.candidates, "Candidate CSV: id,experience,education,skills,about");
    cmd->add_option("--source", score_source, "Use only expert or model score records");
  };

  auto* rank = app.add_subcommand("rank", "Rank candidates with crisp or fuzzy TOPSIS");
  add_common(rank);
  add_data(rank);
  auto* rank_weights = rank->add_option("--weights", weights_file, "Weight JSON {criteria, weights}");
  auto* rank_pairwise = rank->add_option("--pairwise", pairwise, "Pairwise comparison JSON (one per expert)");
  auto* rank_default = rank->add_flag("--default-weights", use_default, "Skills 0.60, Experience 0.20, Education 0.15, About 0.05");
  auto* rank_mode = rank->add_option("--mode", mode, "crisp or fuzzy");
  auto* rank_norm = rank->add_option("--normalization", normalization, "vector or linear-max");
  auto* rank_spread = rank->add_option("--spread", spread, "Fuzzy weight spread in [0, 1)");
  auto* rank_cells = rank->add_option("--cells", cells, "Fuzzy cells: linguistic or degenerate");

  auto* weights = app.add_subcommand("weights", "Derive criterion weights from pairwise comparison matrices");
  add_common(weights);
  weights->add_option("files", positional, "Pairwise comparison JSON files");
  weights->add_option("--pairwise", pairwise, "Pairwise comparison JSON files");
  auto* weights_spread = weights->add_option("--spread", spread, "Also emit fuzzy weights with this spread");

  auto* evaluate = app.add_subcommand("evaluate", "Compare rankings or label files against a reference");
  add_common(evaluate);
  evaluate->add_option("sources", positional, "NAME=PATH (ranking .json/.csv or label .csv)")->required();
  evaluate->add_option("--reference", reference, "Reference source name (default: first)");
  auto* eval_k = evaluate->add_option("--k", k, "Number of reference top candidates treated as relevant");

  auto* fuzzify = app.add_subcommand("fuzzify", "Convert scores to triangular fuzzy numbers");
  add_common(fuzzify);
  add_data(fuzzify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error[usage]: " << OneLine(e.what()) << "\n";
    return kValidationFailure;
  }

  CLI::App* cmd = app.get_subcommands().front();
  Manifest manifest(cmd->get_name());
  try {
    RunConfig cfg = detail::LoadConfig(config_path, manifest);
    if (flags.scores) cfg.scores = flags.scores;
    if (flags.candidates) cfg.candidates = flags.candidates;
    if (!score_source.empty()) cfg.score_source = score_source;
    if (!out_dir.empty()) cfg.out = out_dir;
    if (cmd == rank) {
      const bool flag_weights = rank_weights->count() + rank_pairwise->count() + rank_default->count() > 0;
      if (flag_weights) {
        cfg.weights_file.reset();
        cfg.pairwise.clear();
        cfg.default_weights = false;
        if (rank_weights->count()) cfg.weights_file = weights_file;
        cfg.pairwise = pairwise;
        cfg.default_weights = use_default;
      }
      if (rank_mode->count()) cfg.mode = mode;
      if (rank_norm->count()) cfg.normalization = normalization;
      if (rank_spread->count()) cfg.spread = spread;
      if (rank_cells->count()) cfg.cells = cells;
      CmdRank(cfg, out, err, manifest);
    } else if (cmd == weights) {
      std::vector<std::string> files = positional;
      files.insert(files.end(), pairwise.begin(), pairwise.end());
      CmdWeights(files, weights_spread->count() ? std::optional<double>(spread) : std::nullopt, cfg.OutputDir(), out,
                 err, manifest);
    } else if (cmd == evaluate) {
      CmdEvaluate(positional, reference, eval_k->count() ? std::optional<std::size_t>(k) : std::nullopt, cfg, out,
                  manifest);
    } else if (cmd == fuzzify) {
      CmdFuzzify(cfg, out, manifest);
    }
  } catch (const Error& e) {
    const bool computation = e.kind() == ErrorKind::kComputation;
    err << "error[" << (computation ? "computation" : "validation") << "]: " << OneLine(e.what()) << "\n";
    return computation ? kComputationFailure : kValidationFailure;
  } catch (const std::exception& e) {
    err << "error[validation]: " << OneLine(e.what()) << "\n";
    return kValidationFailure;
  }
  return kOk;
}

inline int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{kToolName};
  for (const auto& a : args) argv.push_back(a.c_str());
  return Run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mcdm::cli

#endif  // MCDM_TOOLS_CLI_HPP_
