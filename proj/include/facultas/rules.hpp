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

/// \file
/// \brief Rule sets, firing scores and per-expert course scores.

#ifndef FACULTAS__RULES_HPP_
#define FACULTAS__RULES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "facultas/core.hpp"
#include "facultas/id3.hpp"
#include "facultas/predicate.hpp"
#include "facultas/schema.hpp"

namespace facultas
{

struct Rule
{
  std::string rule_id;
  std::vector<Predicate> antecedents;
  CourseId consequent;
  std::string expert_id;

  std::string describe() const;

  friend bool operator==(const Rule &, const Rule &) = default;
};

struct RuleSet
{
  std::string expert_id;
  std::vector<Rule> rules;

  friend bool operator==(const RuleSet &, const RuleSet &) = default;
};

/// One rule per leaf: the root-to-leaf tests become the antecedents.
RuleSet extract_rules(const DecisionTree & tree);

/// One rule per row with antecedents bsc, msc, phd, taught, experience.
/// The taught antecedent is omitted when the row requires no course.
RuleSet rules_from_questionnaire(const Questionnaire & q);

/// Number of antecedents of `rule` that hold for the candidate.
std::size_t firing_score(const Rule & rule, const CandidateProfile & candidate);

/// Whether a training sample meets every antecedent under training semantics.
bool satisfied_by(const Rule & rule, const TrainingSample & sample);

struct RuleFiring
{
  std::string rule_id;
  CourseId consequent;
  std::vector<std::string> tests;  // antecedent descriptions
  std::vector<bool> satisfied;
  std::size_t score = 0;

  std::size_t antecedent_count() const noexcept { return satisfied.size(); }
  double satisfied_fraction() const noexcept;
};

/// DT(i) of one course: best firing score among the rules concluding it.
struct CourseScore
{
  CourseId course;
  std::size_t score = 0;
  double fraction = 0.0;  // score / antecedents of the best rule
  std::optional<std::string> best_rule;
};

struct FiringReport
{
  std::vector<RuleFiring> rules;
  std::vector<CourseScore> courses;  // catalog order

  const CourseScore * course(const CourseId & c) const noexcept;
};

/// Scores every rule and reduces them to one score per catalog course.
/// Courses no rule concludes score 0.
FiringReport course_scores(
  const RuleSet & rules, const CandidateProfile & candidate, const FacultySchema & schema);

/// Index of the best entry by value, then satisfied fraction, then position.
/// nullopt when every value is zero.
std::optional<std::size_t> pick_best(
  std::span<const double> values, std::span<const double> fractions);

struct Recommendation
{
  std::optional<CourseId> course;  // nullopt: no recommendation
  FiringReport report;
};

Recommendation recommend_unweighted(
  const RuleSet & rules, const CandidateProfile & candidate, const FacultySchema & schema);

}  // namespace facultas

#endif  // FACULTAS__RULES_HPP_
