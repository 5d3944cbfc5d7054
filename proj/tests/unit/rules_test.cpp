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

#include <functional>
#include <map>
#include <set>

#include "facultas/rules.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace facultas
{
namespace
{

using namespace facultas::testing;

const Rule & rule_for(const RuleSet & rs, const char * course)
{
  for (const auto & r : rs.rules) {
    if (r.consequent == C(course)) {
      return r;
    }
  }
  throw std::logic_error("no rule");
}

std::map<std::string, std::size_t> score_map(const FiringReport & r)
{
  std::map<std::string, std::size_t> out;
  for (const auto & c : r.courses) {
    out[c.course.str()] = c.score;
  }
  return out;
}

TEST(DirectRules, OneRulePerRowWithFiveAntecedents)
{
  const auto rs = rules_from_questionnaire(table_questionnaire());
  EXPECT_EQ(rs.expert_id, "e1");
  ASSERT_EQ(rs.rules.size(), 5u);
  const auto & ad = rule_for(rs, "AD");
  EXPECT_EQ(ad.rule_id, "e1/AD");
  EXPECT_EQ(ad.describe(),
            "bsc in {Software}; msc in {Algorithm Designing, Artificial Intelligence}; "
            "phd in {Artificial Intelligence}; taught contains {AD}; experience >= 3 => AD");
  EXPECT_EQ(rule_for(rs, "NS").describe(),
            "bsc in {Hardware}; msc in {Computer Structure}; phd in {Computer Structure}; "
            "taught contains {CN, NS}; experience >= 4 => NS");
  for (const auto & r : rs.rules) {
    std::set<Attribute> attrs;
    for (const auto & p : r.antecedents) {
      attrs.insert(p.attribute);
    }
    EXPECT_EQ(attrs.size(), r.antecedents.size()) << r.rule_id;
  }
}

TEST(DirectRules, EmptyTaughtRequirementIsOmitted)
{
  Questionnaire q;
  q.expert_id = "solo";
  q.rows = {row("AI", {kSw}, {kAi}, {kAi}, {}, 2)};
  const auto rs = rules_from_questionnaire(q);
  ASSERT_EQ(rs.rules.size(), 1u);
  EXPECT_EQ(rs.rules[0].antecedents.size(), 4u);
  EXPECT_EQ(rs.rules[0].describe(),
            "bsc in {Software}; msc in {Artificial Intelligence}; phd in {Artificial Intelligence}; "
            "experience >= 2 => AI");
}

TEST(FiringScore, WorkedQuery)
{
  const auto rs = rules_from_questionnaire(table_questionnaire());
  const auto q = query_candidate();
  EXPECT_EQ(firing_score(rule_for(rs, "AD"), q), 5u);
  EXPECT_EQ(firing_score(rule_for(rs, "DB"), q), 3u);
  EXPECT_EQ(firing_score(rule_for(rs, "NS"), q), 1u);
  EXPECT_EQ(firing_score(rule_for(rs, "AI"), q), 4u);
  EXPECT_EQ(firing_score(rule_for(rs, "CN"), q), 1u);
  EXPECT_EQ(firing_score(Rule{"empty", {}, C("AD"), ""}, q), 0u);
}

TEST(CourseScores, WorkedQueryVectorAndTrace)
{
  const auto schema = table_schema();
  const auto rs = rules_from_questionnaire(table_questionnaire());
  const auto report = course_scores(rs, query_candidate(), schema);
  const std::map<std::string, std::size_t> want = {{"AD", 5}, {"AI", 4}, {"DB", 3}, {"NS", 1}, {"CN", 1}};
  EXPECT_EQ(score_map(report), want);
  ASSERT_EQ(report.courses.size(), 5u);
  EXPECT_EQ(report.courses[0].course, C("DB"));  // catalog order
  EXPECT_EQ(report.course(C("AD"))->best_rule, "e1/AD");
  EXPECT_DOUBLE_EQ(report.course(C("AI"))->fraction, 0.8);
  ASSERT_EQ(report.rules.size(), 5u);
  const auto & ai = report.rules[2];
  EXPECT_EQ(ai.rule_id, "e1/AI");
  EXPECT_EQ(ai.satisfied, (std::vector<bool>{true, true, true, true, false}));
  EXPECT_EQ(ai.tests.back(), "experience >= 5");

  const auto rec = recommend_unweighted(rs, query_candidate(), schema);
  EXPECT_EQ(rec.course, C("AD"));
}

TEST(CourseScores, VacuousCandidateGetsNothing)
{
  auto q = table_questionnaire();
  std::erase_if(q.rows, [](const QuestionnaireRow & r) { return r.bsc_req.count(kHw) > 0; });
  const auto rs = rules_from_questionnaire(q);
  const auto c = candidate("nobody", kHw, std::nullopt, std::nullopt, {}, 0);
  const auto rec = recommend_unweighted(rs, c, table_schema());
  for (const auto & s : rec.report.courses) {
    EXPECT_EQ(s.score, 0u) << s.course;
  }
  EXPECT_FALSE(rec.report.course(C("NS"))->best_rule.has_value());
  EXPECT_FALSE(rec.course.has_value());
}

TEST(CourseScores, MaxOverRulesOfOneCourse)
{
  const auto q = query_candidate();
  RuleSet rs{"e", {
    Rule{"a", {Predicate::at_least(1), Predicate::at_least(2), Predicate::at_least(9)}, C("DB"), "e"},
    Rule{"b", {Predicate::at_least(1), Predicate::at_least(2), Predicate::at_least(3), Predicate::at_least(4)}, C("DB"), "e"},
  }};
  const auto report = course_scores(rs, q, table_schema());
  EXPECT_EQ(report.course(C("DB"))->score, 4u);
  EXPECT_EQ(report.course(C("DB"))->best_rule, "b");
}

TEST(Recommend, SingletonRuleSet)
{
  RuleSet rs{"e", {Rule{"r", {Predicate::at_least(1), Predicate::at_least(100)}, C("CN"), "e"}}};
  EXPECT_EQ(recommend_unweighted(rs, query_candidate(), table_schema()).course, C("CN"));
}

TEST(Recommend, EqualScoresPreferHigherSatisfiedFraction)
{
  const auto q = query_candidate();  // experience 4
  const auto n_of = [](std::size_t satisfied, std::size_t total) {
    std::vector<Predicate> out;
    for (std::size_t i = 0; i < total; ++i) {
      out.push_back(Predicate::at_least(i < satisfied ? 1.0 : 50.0));
    }
    return out;
  };
  RuleSet rs{"e", {Rule{"ai", n_of(3, 5), C("AI"), "e"}, Rule{"db", n_of(3, 4), C("DB"), "e"}}};
  EXPECT_EQ(recommend_unweighted(rs, q, table_schema()).course, C("DB"));
  // DB precedes AI in the catalog, so this case isolates the fraction rule.
  rs = RuleSet{"e", {Rule{"ai", n_of(3, 4), C("AI"), "e"}, Rule{"db", n_of(3, 5), C("DB"), "e"}}};
  EXPECT_EQ(recommend_unweighted(rs, q, table_schema()).course, C("AI"));
  rs = RuleSet{"e", {Rule{"ai", n_of(3, 4), C("AI"), "e"}, Rule{"db", n_of(3, 4), C("DB"), "e"}}};
  EXPECT_EQ(recommend_unweighted(rs, q, table_schema()).course, C("DB"));
}

TEST(PickBest, OrderAndZeros)
{
  const std::vector<double> zeros = {0, 0, 0};
  EXPECT_FALSE(pick_best(zeros, zeros).has_value());
  const std::vector<double> v = {1, 3, 3};
  EXPECT_EQ(pick_best(v, std::vector<double>{1, 0.5, 0.75}), 2u);
  EXPECT_EQ(pick_best(v, std::vector<double>{1, 0.5, 0.5}), 1u);
  // 0.1 * 3 and 0.3 accumulate differently; they must still tie.
  const std::vector<double> near = {0.1 + 0.1 + 0.1, 0.3};
  EXPECT_EQ(pick_best(near, std::vector<double>{1, 1}), 0u);
}

TEST(Properties, ScoreBoundsAndFullSatisfaction)
{
  const auto schema = table_schema();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rs = rules_from_questionnaire(random_questionnaire(rng, schema, "x"));
    const auto c = random_candidate(rng, schema, "c");
    for (const auto & r : rs.rules) {
      const auto s = firing_score(r, c);
      EXPECT_LE(s, r.antecedents.size());
      const bool all = std::all_of(r.antecedents.begin(), r.antecedents.end(), [&](const Predicate & p) { return p.holds(c); });
      EXPECT_EQ(s == r.antecedents.size(), all);
    }
  }
}

TEST(Properties, MoreTaughtOrExperienceNeverLowersScores)
{
  const auto schema = table_schema();
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rs = rules_from_questionnaire(random_questionnaire(rng, schema, "x"));
    const auto c = random_candidate(rng, schema, "c");
    auto more = c;
    more.taught.insert(pick(rng, schema.courses));
    more.experience += std::uniform_int_distribution<int>(0, 5)(rng);
    for (const auto & r : rs.rules) {
      EXPECT_GE(firing_score(r, more), firing_score(r, c));
    }
  }
}

TEST(Properties, DisjunctionDuplicationEquivalence)
{
  const auto schema = table_schema();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rs = rules_from_questionnaire(random_questionnaire(rng, schema, "x"));
    RuleSet expanded{rs.expert_id, {}};
    for (const auto & r : rs.rules) {
      for (auto & clone : expand_disjunctions(r)) {
        expanded.rules.push_back(std::move(clone));
      }
    }
    ASSERT_GT(expanded.rules.size(), rs.rules.size());
    for (int k = 0; k < 10; ++k) {
      const auto c = random_candidate(rng, schema, "c");
      const auto a = recommend_unweighted(rs, c, schema);
      const auto b = recommend_unweighted(expanded, c, schema);
      EXPECT_EQ(score_map(a.report), score_map(b.report));
      for (std::size_t i = 0; i < a.report.courses.size(); ++i) {
        EXPECT_DOUBLE_EQ(a.report.courses[i].fraction, b.report.courses[i].fraction);
      }
      EXPECT_EQ(a.course, b.course);
    }
  }
}

TEST(JustQualifying, EachRowFiresItsOwnRuleFully)
{
  const auto q = table_questionnaire();
  const auto rs = rules_from_questionnaire(q);
  for (const auto & row : q.rows) {
    const auto c = candidate(row.course.str(), *row.bsc_req.begin(), *row.msc_req.begin(), *row.phd_req.begin(),
                             row.required_taught, row.min_experience);
    EXPECT_EQ(firing_score(rule_for(rs, row.course.str().c_str()), c), 5u) << row.course;
  }
}

/// Root-to-leaf test lists, found by walking the tree.
std::vector<std::pair<std::vector<Predicate>, CourseId>> leaf_paths(const DecisionTree & t)
{
  std::vector<std::pair<std::vector<Predicate>, CourseId>> out;
  std::vector<Predicate> path;
  std::function<void(std::size_t)> walk = [&](std::size_t id) {
    if (t.nodes[id].is_leaf()) {
      out.emplace_back(path, t.nodes[id].label);
      return;
    }
    for (const auto & b : t.nodes[id].branches) {
      path.push_back(b.test);
      walk(b.child);
      path.pop_back();
    }
  };
  walk(0);
  return out;
}

TEST(TreeRules, SingleLeafGivesUnconditionalRule)
{
  DecisionTree t{"e9", {DecisionNode{C("AD"), 1, std::nullopt, {}}}};
  const auto rs = extract_rules(t);
  ASSERT_EQ(rs.rules.size(), 1u);
  EXPECT_TRUE(rs.rules[0].antecedents.empty());
  EXPECT_EQ(rs.rules[0].consequent, C("AD"));
  EXPECT_EQ(rs.rules[0].rule_id, "e9/L1");
  EXPECT_EQ(firing_score(rs.rules[0], query_candidate()), 0u);
}

TEST(TreeRules, ReferenceTree)
{
  const auto tree = build_id3(table_questionnaire(), table_schema());
  const auto rs = extract_rules(tree);
  ASSERT_EQ(rs.rules.size(), 5u);
  EXPECT_EQ(rs.rules[0].describe(), "msc in {Algorithm Designing, Artificial Intelligence} => AD");
  EXPECT_EQ(rs.rules[2].describe(), "msc in {Computer Structure}; taught contains {CN, NS} => NS");
  EXPECT_EQ(rs.rules[3].describe(), "msc in {Computer Structure}; taught lacks {CN, NS} => CN");
}

TEST(TreeRules, RandomTreesKeepLeafCountAndCoverage)
{
  const auto schema = table_schema();
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    const auto s = random_conflict_free(rng, schema, n);
    const auto tree = build_id3(s, schema, "x");
    const auto rs = extract_rules(tree);
    ASSERT_EQ(rs.rules.size(), tree.leaf_count());
    const auto paths = leaf_paths(tree);
    for (std::size_t i = 0; i < rs.rules.size(); ++i) {
      EXPECT_EQ(rs.rules[i].antecedents, paths[i].first);
      EXPECT_EQ(rs.rules[i].consequent, paths[i].second);
      EXPECT_EQ(rs.rules[i].rule_id, "x/L" + std::to_string(i + 1));
    }
    for (const auto & x : s) {
      std::size_t fired = 0;
      for (const auto & r : rs.rules) {
        if (satisfied_by(r, x)) {
          ++fired;
          EXPECT_EQ(r.consequent, x.label);
        }
      }
      EXPECT_EQ(fired, 1u) << "trial " << trial;
    }
  }
}

}  // namespace
}  // namespace facultas
