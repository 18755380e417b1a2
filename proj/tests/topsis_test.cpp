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

#include "mcdm/topsis.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracle.hpp"

namespace mcdm {
namespace {

using testing::BruteForceTopsis;

const std::vector<std::string> kCriteria = {"Skills", "Experience", "Education", "About"};

// Decision matrix with columns Skills, Experience, Education, About.
CrispTable SampleTable() {
  return CrispTable({"C1", "C2", "C3"}, kCriteria,
                    {4.5, 3.8, 4.2, 5.0, 4.0, 4.5, 4.8, 4.6, 3.7, 4.2, 4.5, 4.9});
}

TEST(ScoreTable, Validation) {
  EXPECT_THROW(CrispTable({}, {"a"}, {}), Error);
  EXPECT_THROW(CrispTable({"x"}, {}, {}), Error);
  EXPECT_THROW(CrispTable({"x", "y"}, {"a"}, {1.0}), Error);
  EXPECT_THROW(CrispTable({"x", "x"}, {"a"}, {1.0, 2.0}), Error);
  EXPECT_THROW(CrispTable({"x", "y"}, {"a"}, {1.0, NAN}), Error);
  EXPECT_THROW(CrispTable({"x"}, {"a", "A"}, {1.0, 2.0}), Error);
}

TEST(Normalize, VectorSchemeSkillsColumn) {
  const auto n = Normalize(SampleTable(), Normalization::kVector);
  // 4.5, 4.0, 3.7 over sqrt(4.5^2 + 4.0^2 + 3.7^2) = 7.066823897621901
  EXPECT_NEAR(n.at(0, 0), 0.63678, 5e-6);
  EXPECT_NEAR(n.at(1, 0), 0.56603, 5e-6);
  EXPECT_NEAR(n.at(2, 0), 0.52357, 5e-6);
  EXPECT_NEAR(n.at(0, 0), 0.6367782847276443, 1e-15);
}

TEST(Normalize, LinearMax) {
  const CrispTable single({"only"}, {"a"}, {3.2});
  EXPECT_EQ(Normalize(single, Normalization::kLinearMax).at(0, 0), 1.0);
  const FuzzyTable fuzzy({"x", "y"}, {"a"}, {Tfn(0.1, 0.2, 0.4), Tfn(0.3, 0.5, 0.8)});
  const auto n = Normalize(fuzzy, Normalization::kLinearMax);
  EXPECT_EQ(n.at(0, 0), Tfn(0.1 / 0.8, 0.2 / 0.8, 0.4 / 0.8));
  EXPECT_EQ(n.at(1, 0), Tfn(0.3 / 0.8, 0.5 / 0.8, 1.0));
  const auto sample = Normalize(SampleTable(), Normalization::kLinearMax);
  for (double v : sample.cells()) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(Normalize, Errors) {
  const CrispTable zero({"x", "y"}, {"a", "b"}, {1.0, 0.0, 2.0, 0.0});
  try {
    Normalize(zero, Normalization::kVector);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos);
    EXPECT_EQ(e.kind(), ErrorKind::kComputation);
  }
  const FuzzyTable fuzzy({"x"}, {"a"}, {Tfn(0.1, 0.2, 0.4)});
  EXPECT_THROW(Normalize(fuzzy, Normalization::kVector), Error);
}

TEST(ApplyWeights, CrispAndFuzzy) {
  const auto n = Normalize(SampleTable(), Normalization::kVector);
  const auto w = ApplyWeights(n, DefaultWeights());
  EXPECT_NEAR(w.at(0, 0), 0.38207, 5e-6);

  WeightVector ones{kCriteria, {1, 1, 1, 1}, std::nullopt, 0.0};
  EXPECT_EQ(ApplyWeights(n, ones).cells(), n.cells());

  const FuzzyTable f({"x"}, {"a"}, {Tfn(0.5, 0.8, 1.0)});
  WeightVector fw{{"a"}, {0.6}, std::vector<Tfn>{Tfn(0.45, 0.60, 0.75)}, 0.0};
  const Tfn p = ApplyWeights(f, fw).at(0, 0);
  EXPECT_NEAR(p.l(), 0.225, 1e-15);
  EXPECT_NEAR(p.m(), 0.48, 1e-15);
  EXPECT_NEAR(p.u(), 0.75, 1e-15);
}

TEST(ApplyWeights, ReconcilesByNameAndRejectsMismatch) {
  const auto n = Normalize(SampleTable(), Normalization::kVector);
  WeightVector shuffled{{"about", "EDUCATION", "Skills", "Experience"}, {0.05, 0.15, 0.60, 0.20}, std::nullopt, 0.0};
  const auto a = ApplyWeights(n, shuffled);
  const auto b = ApplyWeights(n, DefaultWeights());
  EXPECT_EQ(a.cells(), b.cells());

  WeightVector missing{{"Skills", "Experience", "Education"}, {0.6, 0.25, 0.15}, std::nullopt, 0.0};
  EXPECT_THROW(ApplyWeights(n, missing), Error);
  WeightVector extra{{"Skills", "Experience", "Education", "About", "Overall"}, {0.5, 0.2, 0.15, 0.05, 0.1}, std::nullopt, 0.0};
  EXPECT_THROW(ApplyWeights(n, extra), Error);

  const FuzzyTable f({"x"}, {"a"}, {Tfn(0.5, 0.8, 1.0)});
  WeightVector crisp_only{{"a"}, {1.0}, std::nullopt, 0.0};
  EXPECT_THROW(ApplyWeights(f, crisp_only), Error);
}

TEST(IdealSolutions, BenefitCostAndSingle) {
  const CrispTable t({"x", "y", "z"}, {"skills"}, {0.38, 0.34, 0.31});
  const auto ideal = FindIdealSolutions(t);
  EXPECT_EQ(ideal.best[0], 0.38);
  EXPECT_EQ(ideal.worst[0], 0.31);

  const CrispTable cost({"x", "y"}, {"price"}, {0.2, 0.5}, {CriterionKind::kCost});
  const auto ci = FindIdealSolutions(cost);
  EXPECT_EQ(ci.best[0], 0.2);
  EXPECT_EQ(ci.worst[0], 0.5);

  const CrispTable single({"x"}, {"a"}, {0.7});
  const auto si = FindIdealSolutions(single);
  EXPECT_EQ(si.best[0], si.worst[0]);
}

TEST(IdealSolutions, FuzzyCentroidOrderWithTieBreak) {
  // same centroid 0.5; larger u wins for best, smaller u for worst
  const FuzzyTable t({"x", "y", "z"}, {"a"}, {Tfn(0.4, 0.5, 0.6), Tfn(0.3, 0.5, 0.7), Tfn(0.1, 0.2, 0.3)});
  const auto ideal = FindIdealSolutions(t);
  EXPECT_EQ(ideal.best[0], Tfn(0.3, 0.5, 0.7));
  EXPECT_EQ(ideal.worst[0], Tfn(0.1, 0.2, 0.3));
}

TEST(RunTopsis, SampleMatchesOracleAndFrozenValues) {
  const auto result = RunTopsis(SampleTable(), DefaultWeights(), Normalization::kVector);
  const auto oracle = BruteForceTopsis({{4.5, 3.8, 4.2, 5.0}, {4.0, 4.5, 4.8, 4.6}, {3.7, 4.2, 4.5, 4.9}},
                                       {0.60, 0.20, 0.15, 0.05}, {"C1", "C2", "C3"});
  // tests/oracles/frozen_values.py
  const double frozen[] = {0.75105711703026179, 0.44436244857202573, 0.15502649317325679};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(result.outcomes[i].closeness, oracle.closeness[i], 1e-10);
    EXPECT_NEAR(result.outcomes[i].closeness, frozen[i], 1e-12);
    EXPECT_EQ(result.outcomes[i].rank, oracle.rank[i]);
    EXPECT_EQ(result.outcomes[i].rank, static_cast<int>(i) + 1);
  }
  EXPECT_NEAR(result.outcomes[0].d_plus, 0.022527440780888048, 1e-12);
  EXPECT_NEAR(result.outcomes[0].d_minus, 0.067964966602481525, 1e-12);
  EXPECT_EQ(result.metadata.mode, "crisp");
  EXPECT_EQ(result.metadata.distance, "euclidean");
  EXPECT_TRUE(result.metadata.tie_breaks.empty());
}

TEST(RunTopsis, DominatorGetsClosenessOne) {
  const CrispTable t({"a", "b"}, {"x", "y"}, {5, 4, 2, 1});
  WeightVector w{{"x", "y"}, {0.5, 0.5}, std::nullopt, 0.0};
  const auto r = RunTopsis(t, w, Normalization::kVector);
  EXPECT_EQ(r.Find("a").closeness, 1.0);
  EXPECT_EQ(r.Find("a").rank, 1);
  EXPECT_EQ(r.Find("b").closeness, 0.0);
}

TEST(RunTopsis, DegenerateProblemIsAComputationError) {
  const CrispTable t({"a", "b", "c"}, {"x", "y"}, {3, 4, 3, 4, 3, 4});
  WeightVector w{{"x", "y"}, {0.5, 0.5}, std::nullopt, 0.0};
  try {
    RunTopsis(t, w, Normalization::kVector);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kComputation);
    EXPECT_NE(std::string(e.what()).find("degenerate decision problem"), std::string::npos);
  }
}

TEST(RunTopsis, TiesBrokenByIdAndRecorded) {
  const CrispTable t({"zed", "amy", "bob"}, {"x", "y"}, {3, 4, 3, 4, 5, 5});
  WeightVector w{{"x", "y"}, {0.5, 0.5}, std::nullopt, 0.0};
  const auto r = RunTopsis(t, w, Normalization::kVector);
  EXPECT_EQ(r.Find("bob").rank, 1);
  EXPECT_EQ(r.Find("amy").rank, 2);
  EXPECT_EQ(r.Find("zed").rank, 3);
  ASSERT_EQ(r.metadata.tie_breaks.size(), 1u);
  EXPECT_EQ(r.metadata.tie_breaks[0], (std::vector<std::string>{"amy", "zed"}));
}

TEST(RunTopsis, CostCriterionMatchesOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = testing::RandomMatrix(rng, 5, 3);
    const auto w = testing::RandomWeights(rng, 3);
    const auto ids = testing::MakeIds(5);
    const CrispTable t(ids, {"a", "b", "c"}, testing::Flatten(x),
                       {CriterionKind::kBenefit, CriterionKind::kCost, CriterionKind::kBenefit});
    const auto r = RunTopsis(t, WeightVector{{"a", "b", "c"}, w, std::nullopt, 0.0}, Normalization::kVector);
    const auto o = BruteForceTopsis(x, w, ids, true, {false, true, false});
    for (std::size_t i = 0; i < 5; ++i) {
      EXPECT_NEAR(r.outcomes[i].closeness, o.closeness[i], 1e-10);
      EXPECT_EQ(r.outcomes[i].rank, o.rank[i]);
    }
  }
}

TEST(RunTopsis, DegenerateFuzzyReducesToCrispLinearMax) {
  const auto crisp = SampleTable();
  std::vector<Tfn> cells;
  for (double v : crisp.cells()) cells.push_back(Tfn::Crisp(v));
  const auto fuzzy = crisp.WithCells(std::move(cells));
  const auto fr = RunTopsis(fuzzy, FuzzifyWeights(DefaultWeights(), 0.0), Normalization::kLinearMax);
  const auto cr = RunTopsis(crisp, DefaultWeights(), Normalization::kLinearMax);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(fr.outcomes[i].closeness, cr.outcomes[i].closeness, 1e-9);
    EXPECT_EQ(fr.outcomes[i].rank, cr.outcomes[i].rank);
  }
  EXPECT_EQ(fr.metadata.mode, "fuzzy");
  EXPECT_EQ(fr.metadata.distance, "vertex");
}

TEST(RunTopsis, FuzzyLinguisticRunIsWellFormed) {
  const auto& v = LinguisticVocabulary::Default();
  const FuzzyTable t({"a", "b", "c"}, {"Skills", "Experience", "Education", "About"},
                     {v.Lookup("Very High"), v.Lookup("High"), v.Lookup("Medium"), v.Lookup("Low"),
                      v.Lookup("High"), v.Lookup("Very High"), v.Lookup("High"), v.Lookup("Medium"),
                      v.Lookup("Low"), v.Lookup("Medium"), v.Lookup("Very High"), v.Lookup("Very High")});
  const auto r = RunTopsis(t, FuzzifyWeights(DefaultWeights(), 0.25), Normalization::kLinearMax);
  for (const auto& o : r.outcomes) {
    EXPECT_GE(o.closeness, 0.0);
    EXPECT_LE(o.closeness, 1.0);
  }
  EXPECT_EQ(r.Find("a").rank, 1);  // strongest on the 0.60-weighted criterion
  EXPECT_EQ(r.Find("c").rank, 3);
}

TEST(RunTopsis, RequiresTwoCandidates) {
  const CrispTable t({"a"}, {"x"}, {3});
  EXPECT_THROW(RunTopsis(t, WeightVector{{"x"}, {1.0}, std::nullopt, 0.0}, Normalization::kVector), Error);
}

TEST(TopsisJson, FixedKeyOrderAndRoundTrip) {
  const auto r = RunTopsis(SampleTable(), DefaultWeights(), Normalization::kVector);
  const auto j = TopsisResultToJson(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.at("results").at(0).items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "d_plus", "d_minus", "closeness", "rank"}));
  keys.clear();
  for (const auto& [k, v] : j.at("metadata").items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"mode", "normalization", "weights", "distance", "tie_breaks"}));
  EXPECT_EQ(j.at("results").at(0).at("closeness").dump(), "0.751057117");
  const auto back = OutcomesFromJson(nlohmann::json::parse(j.dump()));
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back[2].id, "C3");
  EXPECT_EQ(back[2].rank, 3);
}

}  // namespace
}  // namespace mcdm
