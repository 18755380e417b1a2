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

#include "mcdm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace mcdm {
namespace {

const std::vector<std::string> kClasses = {"Poor", "Fair", "Excellent"};

TEST(Classification, PerfectPrediction) {
  const std::vector<std::string> y = {"Poor", "Fair", "Excellent", "Fair"};
  const auto r = ClassificationMetrics(y, y, kClasses);
  EXPECT_EQ(r.accuracy, 1.0);
  EXPECT_EQ(r.hamming_loss, 0.0);
  for (const auto& m : r.per_class) EXPECT_EQ(m.f1, 1.0);
  EXPECT_EQ(r.macro_f1, 1.0);
}

TEST(Classification, TwoSampleHandCount) {
  const std::vector<std::string> truth = {"Poor", "Fair"}, pred = {"Fair", "Fair"};
  const auto r = ClassificationMetrics(truth, pred, kClasses);
  EXPECT_EQ(r.accuracy, 0.5);
  EXPECT_EQ(r.hamming_loss, 0.5);
  EXPECT_EQ(r.per_class[1].precision, 0.5);
  EXPECT_EQ(r.per_class[1].recall, 1.0);
  EXPECT_NEAR(r.per_class[1].f1, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(r.per_class[0].precision, 0.0);
  EXPECT_TRUE(r.per_class[0].precision_zero_division);
  EXPECT_TRUE(r.per_class[2].recall_zero_division);
  EXPECT_EQ(r.confusion.count(0, 1), 1u);
  EXPECT_EQ(r.confusion.count(1, 1), 1u);
}

TEST(Classification, Errors) {
  const std::vector<std::string> a = {"Poor"}, b = {"Poor", "Fair"}, bad = {"Great"};
  EXPECT_THROW(ClassificationMetrics(a, b, kClasses), Error);
  EXPECT_THROW(ClassificationMetrics(a, bad, kClasses), Error);
  EXPECT_THROW(ClassificationMetrics(std::vector<std::string>{}, std::vector<std::string>{}, kClasses), Error);
}

TEST(Classification, ConfusionTextIsAligned) {
  const std::vector<std::string> truth = {"Poor", "Fair", "Excellent"}, pred = {"Poor", "Excellent", "Excellent"};
  const auto text = ClassificationMetrics(truth, pred, kClasses).confusion.ToText();
  EXPECT_EQ(text,
            "true\\pred       Poor       Fair  Excellent\n"
            "     Poor          1          0          0\n"
            "     Fair          0          0          1\n"
            "Excellent          0          0          1\n");
}

TEST(Classification, MatchesPerSampleOracle) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 40);
    std::vector<std::string> truth, pred;
    for (std::size_t i = 0; i < n; ++i) {
      truth.push_back(kClasses[static_cast<std::size_t>(pick(rng))]);
      pred.push_back(kClasses[static_cast<std::size_t>(pick(rng))]);
    }
    const auto r = ClassificationMetrics(truth, pred, kClasses);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) correct += truth[i] == pred[i];
    EXPECT_DOUBLE_EQ(r.accuracy, static_cast<double>(correct) / static_cast<double>(n));
    EXPECT_EQ(r.hamming_loss, 1.0 - r.accuracy);
    double f1_sum = 0.0;
    int present = 0;
    for (const auto& c : kClasses) {
      double tp = 0, fp = 0, fn = 0;
      for (std::size_t i = 0; i < n; ++i) {
        tp += truth[i] == c && pred[i] == c;
        fp += truth[i] != c && pred[i] == c;
        fn += truth[i] == c && pred[i] != c;
      }
      if (tp + fp + fn == 0) continue;
      ++present;
      const double p = tp + fp > 0 ? tp / (tp + fp) : 0.0, rc = tp + fn > 0 ? tp / (tp + fn) : 0.0;
      f1_sum += p + rc > 0 ? 2 * p * rc / (p + rc) : 0.0;
    }
    EXPECT_NEAR(r.macro_f1, f1_sum / present, 1e-12);
    for (const auto& m : r.per_class) {
      for (double v : {m.precision, m.recall, m.f1}) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
      }
    }
  }
}

TEST(ScoreAgreement, Examples) {
  const std::vector<double> a = {1, 2, 3}, b = {2, 2, 2};
  const auto s = CompareScores(a, b);
  EXPECT_NEAR(s.mae, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(s.rmse, std::sqrt(2.0 / 3.0), 1e-15);
  const auto self = CompareScores(a, a);
  EXPECT_EQ(self.mae, 0.0);
  EXPECT_EQ(self.rmse, 0.0);
  EXPECT_EQ(self.cosine, 1.0);
  const std::vector<double> x = {1, 0}, y = {0, 1};
  EXPECT_EQ(CompareScores(x, y).cosine, 0.0);
  const std::vector<double> zero = {0, 0};
  EXPECT_THROW(CompareScores(x, zero), Error);
  EXPECT_THROW(CompareScores(a, x), Error);
}

TEST(RankingMetrics, Examples) {
  const std::vector<std::string> ideal = {"A", "B", "C"};
  const RelevanceGrades graded = {{"A", 3}, {"B", 2}, {"C", 1}};
  const auto perfect = RankingMetrics(ideal, graded);
  EXPECT_EQ(perfect.ndcg, 1.0);
  EXPECT_EQ(perfect.map, 1.0);
  EXPECT_EQ(perfect.mrr, 1.0);

  const std::vector<std::string> ba = {"B", "A"};
  const RelevanceGrades only_a = {{"A", 1}, {"B", 0}};
  const auto r = RankingMetrics(ba, only_a);
  EXPECT_EQ(r.mrr, 0.5);
  EXPECT_EQ(r.map, 0.5);

  const std::vector<std::string> cba = {"C", "B", "A"};
  const double expected = (1 + 2 / std::log2(3.0) + 3.0 / 2) / (3 + 2 / std::log2(3.0) + 1.0 / 2);
  EXPECT_NEAR(Ndcg(cba, graded), expected, 1e-15);
  EXPECT_NEAR(expected, 0.7899980042460358, 1e-15);

  std::vector<std::string> perm = ideal;
  do {
    const double v = Ndcg(perm, graded);
    if (perm == ideal) {
      EXPECT_EQ(v, 1.0);
    } else {
      EXPECT_LT(v, 1.0);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(RankingMetrics, CutoffAndErrors) {
  const std::vector<std::string> order = {"x", "a", "b", "y"};
  const RelevanceGrades rel = {{"a", 1}, {"b", 1}, {"x", 0}, {"y", 0}};
  EXPECT_NEAR(AveragePrecision(order, rel), (1.0 / 2 + 2.0 / 3) / 2, 1e-15);
  EXPECT_NEAR(AveragePrecision(order, rel, 2), (1.0 / 2) / 2, 1e-15);
  EXPECT_EQ(ReciprocalRank(order, rel, 1), 0.0);
  EXPECT_THROW(AveragePrecision(order, rel, 0), Error);

  const RelevanceGrades none = {{"a", 0}, {"b", 0}, {"x", 0}, {"y", 0}};
  EXPECT_THROW(AveragePrecision(order, none), Error);
  EXPECT_THROW(ReciprocalRank(order, none), Error);
  EXPECT_THROW(Ndcg(order, none), Error);
  const std::vector<std::string> short_order = {"a", "b"};
  EXPECT_THROW(Ndcg(short_order, rel), Error);
  const std::vector<std::string> dup = {"a", "a", "b", "x"};
  EXPECT_THROW(Ndcg(dup, rel), Error);
}

TEST(RankingMetrics, AveragedOverQueries) {
  const std::vector<RankingQuery> qs = {{{"A", "B"}, {{"A", 1}, {"B", 0}}}, {{"B", "A"}, {{"A", 1}, {"B", 0}}}};
  const auto s = RankingMetricsOverQueries(qs);
  EXPECT_EQ(s.map, 0.75);
  EXPECT_EQ(s.mrr, 0.75);
}

TEST(CompareRankings, SelfComparisonIsIdentity) {
  const RankedSource a{"a", {{"x", 1, 0.9}, {"y", 2, 0.5}, {"z", 3, 0.1}}};
  RankedSource b = a;
  b.name = "b";
  const auto r = CompareRankings({a, b}, "a");
  ASSERT_EQ(r.comparisons.size(), 1u);
  const auto& c = r.comparisons[0];
  EXPECT_EQ(c.agreement_basis, "closeness");
  EXPECT_EQ(c.agreement->mae, 0.0);
  EXPECT_EQ(c.agreement->rmse, 0.0);
  EXPECT_EQ(c.agreement->cosine, 1.0);
  EXPECT_EQ(c.ranking->map, 1.0);
  EXPECT_EQ(c.ranking->mrr, 1.0);
  EXPECT_EQ(c.ranking->ndcg, 1.0);
}

TEST(CompareRankings, MismatchListsSymmetricDifference) {
  const RankedSource a{"a", {{"x", 1, {}}, {"y", 2, {}}}};
  const RankedSource b{"b", {{"x", 1, {}}, {"z", 2, {}}}};
  try {
    CompareRankings({a, b}, "a");
    FAIL();
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("only in 'a': y"), std::string::npos);
    EXPECT_NE(msg.find("only in 'b': z"), std::string::npos);
  }
  EXPECT_THROW(CompareRankings({a}, "a"), Error);
  EXPECT_THROW(CompareRankings({a, a}, "a"), Error);
  RankedSource a2 = a;
  a2.name = "c";
  EXPECT_THROW(CompareRankings({a, a2}, "nope"), Error);
}

TEST(CompareLabels, ClassificationPerSource) {
  const LabeledSource truth{"human", {{"s1", "Poor"}, {"s2", "Fair"}}};
  const LabeledSource model{"model", {{"s2", "Fair"}, {"s1", "Fair"}}};
  const auto r = CompareLabels({truth, model}, "human", kClasses, [](const std::string& l) {
    return l == "Poor" ? 1.5 : l == "Fair" ? 3.0 : 4.5;
  });
  ASSERT_EQ(r.comparisons.size(), 1u);
  EXPECT_EQ(r.comparisons[0].classification->accuracy, 0.5);
  EXPECT_NEAR(r.comparisons[0].agreement->mae, 0.75, 1e-15);
  const LabeledSource missing{"m2", {{"s1", "Fair"}}};
  EXPECT_THROW(CompareLabels({truth, missing}, "human", kClasses, [](const std::string&) { return 1.0; }), Error);
}

}  // namespace
}  // namespace mcdm
