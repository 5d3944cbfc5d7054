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
/// \brief Combining expert opinions: per-candidate majority vote and
/// per-course instructor selection.

#ifndef FACULTAS__AGGREGATION_HPP_
#define FACULTAS__AGGREGATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "facultas/knowledge_base.hpp"
#include "facultas/rules.hpp"
#include "facultas/weighting.hpp"

namespace facultas
{

struct ExpertVote
{
  std::string expert_id;
  std::optional<CourseId> recommended;  // nullopt: "none"
  std::vector<WeightedCourseScore> scores;
  FiringReport trace;
};

struct VoteCount
{
  CourseId course;
  std::size_t votes = 0;
  double weighted_sum = 0.0;
};

struct FinalRecommendation
{
  std::string candidate_id;
  std::vector<ExpertVote> votes;
  std::optional<CourseId> final;
  std::vector<VoteCount> tally;  // courses with at least one vote, catalog order
  std::string tie_break;         // empty unless a tie had to be broken
};

/// Modal course among the non-"none" votes. Ties go to the larger summed
/// weighted score across all experts, then catalog order.
/// Throws std::invalid_argument on an empty vote list.
FinalRecommendation majority_vote(
  std::vector<ExpertVote> votes, const FacultySchema & schema, std::string candidate_id = {});

struct RecommendOptions
{
  bool weighted = true;
  std::optional<WeightFunctionConfig> weight_override;
};

/// Runs one expert: course scores, weighting, argmax.
ExpertVote expert_vote(
  const KnowledgeBaseDoc & kb, std::size_t expert_index, const RuleSet & rules,
  const CandidateProfile & candidate, const RecommendOptions & options = {});

/// `rules` holds one rule set per expert, as returned by rule_sets(kb).
FinalRecommendation recommend_candidate(
  const KnowledgeBaseDoc & kb, std::span<const RuleSet> rules, const CandidateProfile & candidate,
  const RecommendOptions & options = {});

FinalRecommendation recommend_candidate(
  const KnowledgeBaseDoc & kb, const CandidateProfile & candidate,
  const RecommendOptions & options = {});

struct CandidateTally
{
  std::string candidate_id;
  std::size_t votes = 0;      // experts recommending the course
  double weighted_sum = 0.0;  // summed weighted score for the course
};

struct CourseAssignment
{
  CourseId course;
  std::optional<std::string> selected;  // nullopt: nobody qualifies
  std::vector<CandidateTally> tallies;  // input order
};

/// Picks the candidate most experts recommend for `course`. Ties go to the
/// larger summed weighted score, then the smaller candidate id.
/// Throws ValidationError on an unknown course and std::invalid_argument on
/// an empty candidate list.
CourseAssignment select_instructor_for_course(
  const KnowledgeBaseDoc & kb, const CourseId & course,
  std::span<const CandidateProfile> candidates, const RecommendOptions & options = {});

}  // namespace facultas

#endif  // FACULTAS__AGGREGATION_HPP_
