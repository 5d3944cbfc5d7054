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

#include <algorithm>

#include "facultas/aggregation.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace facultas
{
namespace
{

using namespace facultas::testing;

/// Vote for `course` whose weighted vector holds `weighted` for that course only.
ExpertVote vote(const std::string & expert, std::optional<const char *> course, double weighted = 1.0)
{
  ExpertVote v;
  v.expert_id = expert;
  for (const auto & c : table_schema().courses) {
    const bool mine = course && c == C(*course);
    v.scores.push_back({c, mine ? 1u : 0u, mine ? 1.0 : 0.0, weighted, mine ? weighted : 0.0});
  }
  if (course) {
    v.recommended = C(*course);
  }
  return v;
}

TEST(MajorityVote, StrictMajority)
{
  const auto r = majority_vote({vote("a", "AD"), vote("b", "AD"), vote("c", "DB")}, table_schema(), "x");
  EXPECT_EQ(r.final, C("AD"));
  EXPECT_EQ(r.candidate_id, "x");
  ASSERT_EQ(r.tally.size(), 2u);
  EXPECT_EQ(r.tally[0].course, C("DB"));
  EXPECT_EQ(r.tally[1].votes, 2u);
  EXPECT_TRUE(r.tie_break.empty());
}

TEST(MajorityVote, TieGoesToSummedWeightedScore)
{
  const auto r = majority_vote({vote("a", "AD", 5.0), vote("b", "DB", 6.2)}, table_schema());
  EXPECT_EQ(r.final, C("DB"));
  EXPECT_FALSE(r.tie_break.empty());
  const auto s = majority_vote({vote("a", "AD", 6.2), vote("b", "DB", 5.0)}, table_schema());
  EXPECT_EQ(s.final, C("AD"));
}

TEST(MajorityVote, RemainingTieGoesToCatalogOrder)
{
  const auto r = majority_vote({vote("a", "AD", 2.0), vote("b", "NS", 2.0)}, table_schema());
  EXPECT_EQ(r.final, C("NS"));
  EXPECT_NE(r.tie_break.find("catalog"), std::string::npos);
}

TEST(MajorityVote, NoneVotesAreExcluded)
{
  EXPECT_EQ(majority_vote({vote("a", std::nullopt), vote("b", std::nullopt), vote("c", "CN")}, table_schema()).final,
            C("CN"));
  const auto none = majority_vote({vote("a", std::nullopt), vote("b", std::nullopt)}, table_schema());
  EXPECT_FALSE(none.final.has_value());
  EXPECT_TRUE(none.tally.empty());
  EXPECT_THROW(majority_vote({}, table_schema()), std::invalid_argument);
}

std::vector<ExpertVote> random_votes(std::mt19937_64 & rng, std::size_t n)
{
  const std::vector<const char *> ids = {"DB", "NS", "AI", "CN", "AD"};
  std::vector<ExpertVote> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<const char *> c;
    if (std::bernoulli_distribution(0.85)(rng)) {
      c = pick(rng, ids);
    }
    out.push_back(vote("e" + std::to_string(i), c, std::uniform_int_distribution<int>(1, 4)(rng) * 0.7));
  }
  return out;
}

TEST(MajorityVote, PermutationInvariance)
{
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto votes = random_votes(rng, std::uniform_int_distribution<std::size_t>(1, 7)(rng));
    const auto base = majority_vote(votes, table_schema()).final;
    std::shuffle(votes.begin(), votes.end(), rng);
    EXPECT_EQ(majority_vote(votes, table_schema()).final, base);
  }
}

TEST(MajorityVote, UnanimityAndDuplication)
{
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    auto votes = random_votes(rng, std::uniform_int_distribution<std::size_t>(1, 7)(rng));
    const auto base = majority_vote(votes, table_schema()).final;
    auto doubled = votes;
    doubled.insert(doubled.end(), votes.begin(), votes.end());
    EXPECT_EQ(majority_vote(doubled, table_schema()).final, base);

    auto same = votes;
    for (auto & v : same) {
      v = vote(v.expert_id, "AI", 0.5);
    }
    EXPECT_EQ(majority_vote(same, table_schema()).final, C("AI"));
  }
}

/// Five experts sharing the reference questionnaire. Profiles differ only
/// in AD experience, which sets how much the AD score is discounted.
KnowledgeBaseDoc five_expert_kb()
{
  auto kb = table_kb(5);
  const double ad_experience[] = {15, 10, 8, 2, 2};
  for (std::size_t i = 0; i < 5; ++i) {
    auto & p = kb.experts[i].profile;
    p.per_course_experience[C("AD")] = ad_experience[i];
    p.per_course_experience[C("DB")] = 2;
  }
  return kb;
}

std::size_t votes_for(const FinalRecommendation & r, const char * course)
{
  return static_cast<std::size_t>(std::count_if(r.votes.begin(), r.votes.end(),
                                                [&](const ExpertVote & v) { return v.recommended == C(course); }));
}

TEST(RecommendCandidate, SingleExpertWorkedQuery)
{
  const auto r = recommend_candidate(table_kb(), query_candidate());
  EXPECT_EQ(r.final, C("AD"));
  ASSERT_EQ(r.votes.size(), 1u);
  EXPECT_EQ(r.votes[0].trace.course(C("AI"))->score, 4u);
  EXPECT_EQ(r.candidate_id, "F_query");
}

TEST(RecommendCandidate, IdenticalExpertsMatchOne)
{
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_candidate(rng, table_schema(), "c");
    EXPECT_EQ(recommend_candidate(table_kb(3), c).final, recommend_candidate(table_kb(1), c).final);
  }
}

TEST(RecommendCandidate, ThreeOfFiveWins)
{
  const auto kb = five_expert_kb();
  const auto r = recommend_candidate(kb, query_candidate());
  // 5 * W(AD) against 4 for AI: W(15)=1, W(10)=0.88 keep AD; W(8)=0.78 and W(2)=0.1 flip.
  EXPECT_EQ(votes_for(r, "AD"), 2u);
  EXPECT_EQ(votes_for(r, "AI"), 3u);
  EXPECT_EQ(r.final, C("AI"));
}

TEST(RecommendCandidate, WeightsOffMatchesUnweightedRecommendation)
{
  const auto kb = five_expert_kb();
  const auto rules = rule_sets(kb);
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_candidate(rng, kb.schema, "c");
    const auto r = recommend_candidate(kb, rules, c, RecommendOptions{false, std::nullopt});
    for (std::size_t i = 0; i < r.votes.size(); ++i) {
      EXPECT_EQ(r.votes[i].recommended, recommend_unweighted(rules[i], c, kb.schema).course);
    }
  }
  EXPECT_EQ(recommend_candidate(kb, query_candidate(), RecommendOptions{false, std::nullopt}).final, C("AD"));
}

TEST(RecommendCandidate, WeightOverrideReplacesKbConfig)
{
  const auto kb = five_expert_kb();
  WeightFunctionConfig flat{0, 1, 0, 1e9};  // every weight is 1
  const auto r = recommend_candidate(kb, query_candidate(), RecommendOptions{true, flat});
  EXPECT_EQ(r.final, C("AD"));
  EXPECT_EQ(votes_for(r, "AD"), 5u);
}

TEST(SelectInstructor, UniqueQualifier)
{
  const auto kb = table_kb();
  const std::vector<CandidateProfile> cands = {
    candidate("h", kHw, kCs, kCs, courses({"NS", "CN"}), 4), query_candidate(),
    candidate("s", kSw, kSw, kSw, courses({"DB"}), 3)};
  const auto a = select_instructor_for_course(kb, C("AD"), cands);
  EXPECT_EQ(a.selected, "F_query");
  ASSERT_EQ(a.tallies.size(), 3u);
  EXPECT_EQ(a.tallies[0].candidate_id, "h");
  EXPECT_EQ(a.tallies[1].votes, 1u);
  EXPECT_FALSE(select_instructor_for_course(kb, C("CN"), cands).selected.has_value());
}

TEST(SelectInstructor, MoreExpertsWin)
{
  const auto kb = five_expert_kb();
  auto a = query_candidate();
  a.candidate_id = "A";
  a.msc = kAd;  // AD 5, AI 3: only W(AD) = 0.1 flips it
  auto b = query_candidate();
  b.candidate_id = "B";
  ASSERT_EQ(votes_for(recommend_candidate(kb, a), "AI"), 2u);
  ASSERT_EQ(votes_for(recommend_candidate(kb, b), "AI"), 3u);
  const std::vector<CandidateProfile> cands = {a, b};
  const auto r = select_instructor_for_course(kb, C("AI"), cands);
  EXPECT_EQ(r.selected, "B");
  EXPECT_EQ(r.tallies[0].votes, 2u);
  EXPECT_EQ(r.tallies[1].votes, 3u);
}

TEST(SelectInstructor, TieBreaks)
{
  const auto kb = table_kb();
  auto low = candidate("a_low", kSw, kAi, kSw, courses({"AI", "AD"}), 4);  // AD scores 4
  auto high = query_candidate();                                           // AD scores 5
  high.candidate_id = "z_high";
  ASSERT_EQ(recommend_candidate(kb, low).final, C("AD"));
  std::vector<CandidateProfile> cands = {low, high};
  EXPECT_EQ(select_instructor_for_course(kb, C("AD"), cands).selected, "z_high");

  auto twin = high;
  twin.candidate_id = "m_twin";
  cands = {high, twin};
  EXPECT_EQ(select_instructor_for_course(kb, C("AD"), cands).selected, "m_twin");
}

TEST(SelectInstructor, Errors)
{
  const auto kb = table_kb();
  const std::vector<CandidateProfile> one = {query_candidate()};
  EXPECT_THROW(select_instructor_for_course(kb, C("XX"), one), ValidationError);
  EXPECT_THROW(select_instructor_for_course(kb, C("AD"), std::vector<CandidateProfile>{}), std::invalid_argument);
}

TEST(SelectInstructor, ConsistencyAndOrderInvariance)
{
  const auto kb = five_expert_kb();
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<CandidateProfile> cands;
    const auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    for (std::size_t i = 0; i < n; ++i) {
      cands.push_back(random_candidate(rng, kb.schema, "c" + std::to_string(i)));
    }
    for (const auto & course : kb.schema.courses) {
      const auto a = select_instructor_for_course(kb, course, cands);
      if (a.selected) {
        const auto it = std::find_if(cands.begin(), cands.end(),
                                     [&](const CandidateProfile & c) { return c.candidate_id == *a.selected; });
        ASSERT_NE(it, cands.end());
        EXPECT_GE(votes_for(recommend_candidate(kb, *it), course.str().c_str()), 1u);
      }
      auto shuffled = cands;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      EXPECT_EQ(select_instructor_for_course(kb, course, shuffled).selected, a.selected);
    }
  }
}

}  // namespace
}  // namespace facultas
