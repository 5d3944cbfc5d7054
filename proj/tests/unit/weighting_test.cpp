// Copyright 2026 The Facultas Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "facultas/weighting.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace facultas
{
namespace
{

using namespace facultas::testing;

TEST(ExpertWeight, DefaultShape)
{
  const WeightFunctionConfig cfg;
  EXPECT_EQ(expert_weight(15, cfg), 1.0);
  EXPECT_EQ(expert_weight(3, cfg), 0.1);
  EXPECT_EQ(expert_weight(0, cfg), 0.1);
  EXPECT_NEAR(expert_weight(25, cfg), std::exp(-0.5), 1e-15);
  EXPECT_NEAR(expert_weight(25, cfg), 0.6065, 5e-5);
  // At the threshold the Gaussian applies, not the floor.
  EXPECT_NEAR(expert_weight(5, cfg), std::exp(-0.5), 1e-15);
  // Far from the peak the Gaussian drops under the floor, which applies only below the threshold.
  EXPECT_LT(expert_weight(60, cfg), cfg.floor);
  EXPECT_GT(expert_weight(60, cfg), 0.0);
}

TEST(ExpertWeight, RejectsNegativeAndNonFinite)
{
  EXPECT_THROW(expert_weight(-0.5, {}), std::invalid_argument);
  EXPECT_THROW(expert_weight(std::nan(""), {}), std::invalid_argument);
  EXPECT_THROW(expert_weight(INFINITY, {}), std::invalid_argument);
}

TEST(ExpertWeight, FloorAndRangeProperties)
{
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    WeightFunctionConfig cfg;
    cfg.threshold = std::uniform_real_distribution<double>(0, 10)(rng);
    cfg.floor = std::uniform_real_distribution<double>(0.01, 1)(rng);
    cfg.peak = cfg.threshold + std::uniform_real_distribution<double>(0, 20)(rng);
    cfg.spread = std::uniform_real_distribution<double>(0.5, 15)(rng);
    ASSERT_TRUE(validate_weight_config(cfg).empty());
    const double below = std::uniform_real_distribution<double>(0, cfg.threshold)(rng);
    if (below < cfg.threshold) {
      EXPECT_EQ(expert_weight(below, cfg), cfg.floor);
    }
    const double x = std::uniform_real_distribution<double>(0, 60)(rng);
    const double w = expert_weight(x, cfg);
    EXPECT_GT(w, 0.0);
    EXPECT_LE(w, 1.0);
    EXPECT_EQ(expert_weight(cfg.peak, cfg), 1.0);
  }
}

TEST(ExpertWeight, UnderflowStaysPositive)
{
  const WeightFunctionConfig narrow{0, 0.1, 0, 0.5};
  EXPECT_GT(expert_weight(1000, narrow), 0.0);
  const auto rs = RuleSet{"e1", {Rule{"r", {Predicate::at_least(0)}, C("AI"), "e1"}}};
  const auto r = recommend_weighted(rs, uniform_profile("e1", 1000), query_candidate(), narrow, table_schema());
  EXPECT_EQ(r.course, C("AI"));
}

TEST(WeightConfig, Validation)
{
  EXPECT_TRUE(validate_weight_config({}).empty());
  EXPECT_FALSE(validate_weight_config({-1, 0.1, 15, 10}).empty());
  EXPECT_FALSE(validate_weight_config({5, 0, 15, 10}).empty());
  EXPECT_FALSE(validate_weight_config({5, 1.5, 15, 10}).empty());
  EXPECT_FALSE(validate_weight_config({5, 0.1, 15, 0}).empty());
  EXPECT_FALSE(validate_weight_config({5, 0.1, 3, 10}).empty());
  EXPECT_TRUE(validate_weight_config({5, 1, 5, 0.1}).empty());
}

TEST(RecommendWeighted, UniformExperienceKeepsUnweightedChoice)
{
  const auto schema = table_schema();
  const auto rs = rules_from_questionnaire(table_questionnaire());
  for (double exp : {0.0, 4.0, 15.0, 40.0}) {
    const auto r = recommend_weighted(rs, uniform_profile("e1", exp), query_candidate(), {}, schema);
    EXPECT_EQ(r.course, C("AD")) << exp;
  }
}

TEST(RecommendWeighted, LowExperienceInAdFlipsToAi)
{
  const auto schema = table_schema();
  const auto rs = rules_from_questionnaire(table_questionnaire());
  auto profile = uniform_profile("e1", 15);
  profile.per_course_experience[C("AD")] = 2;
  const auto r = recommend_weighted(rs, profile, query_candidate(), {}, schema);
  EXPECT_EQ(r.course, C("AI"));
  ASSERT_EQ(r.scores.size(), 5u);
  EXPECT_EQ(r.scores[4].course, C("AD"));
  EXPECT_EQ(r.scores[4].weight, 0.1);
  EXPECT_NEAR(r.scores[4].weighted, 0.5, 1e-12);
  EXPECT_EQ(r.scores[2].course, C("AI"));
  EXPECT_EQ(r.scores[2].weighted, 4.0);
}

TEST(RecommendWeighted, MismatchedExpertThrows)
{
  const auto rs = rules_from_questionnaire(table_questionnaire("e1"));
  EXPECT_THROW(recommend_weighted(rs, uniform_profile("e2", 15), query_candidate(), {}, table_schema()),
               std::invalid_argument);
}

TEST(RecommendWeighted, AllZeroGivesNoRecommendation)
{
  const auto rs = RuleSet{"e1", {Rule{"r", {Predicate::at_least(99)}, C("AI"), "e1"}}};
  const auto r = recommend_weighted(rs, uniform_profile("e1", 15), query_candidate(), {}, table_schema());
  EXPECT_FALSE(r.course.has_value());
}

TEST(ApplyWeights, UniformScalingNeverChangesArgmax)
{
  const auto schema = table_schema();
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rs = rules_from_questionnaire(random_questionnaire(rng, schema, "x"));
    const auto report = course_scores(rs, random_candidate(rng, schema, "c"), schema);
    std::vector<double> w;
    for (std::size_t i = 0; i < schema.courses.size(); ++i) {
      w.push_back(expert_weight(std::uniform_int_distribution<int>(0, 30)(rng), {}));
    }
    const double k = std::exp(std::uniform_real_distribution<double>(-5, 5)(rng));
    std::vector<double> scaled;
    for (double x : w) {
      scaled.push_back(k * x);
    }
    EXPECT_EQ(apply_weights(report, w).course, apply_weights(report, scaled).course) << "k=" << k;
  }
}

TEST(ApplyWeights, LengthMismatchThrows)
{
  const auto report = course_scores(rules_from_questionnaire(table_questionnaire()), query_candidate(), table_schema());
  EXPECT_THROW(apply_weights(report, std::vector<double>{1.0}), std::invalid_argument);
}

}  // namespace
}  // namespace facultas
