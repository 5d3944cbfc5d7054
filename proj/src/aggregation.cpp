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

#include "facultas/aggregation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace facultas
{

namespace
{

// Sorting first makes the sum independent of expert order.
double stable_sum(std::vector<double> xs)
{
  std::sort(xs.begin(), xs.end());
  return std::accumulate(xs.begin(), xs.end(), 0.0);
}

double weighted_for(const ExpertVote & v, const CourseId & course)
{
  for (const auto & s : v.scores) {
    if (s.course == course) {
      return s.weighted;
    }
  }
  return 0.0;
}

double summed_weighted(std::span<const ExpertVote> votes, const CourseId & course)
{
  std::vector<double> xs;
  xs.reserve(votes.size());
  for (const auto & v : votes) {
    xs.push_back(weighted_for(v, course));
  }
  return stable_sum(std::move(xs));
}

}  // namespace

FinalRecommendation majority_vote(
  std::vector<ExpertVote> votes, const FacultySchema & schema, std::string candidate_id)
{
  if (votes.empty()) {
    throw std::invalid_argument("majority_vote: no votes");
  }
  FinalRecommendation out;
  out.candidate_id = std::move(candidate_id);
  out.votes = std::move(votes);

  for (const auto & course : schema.courses) {
    const auto n = static_cast<std::size_t>(std::count_if(
      out.votes.begin(), out.votes.end(),
      [&](const ExpertVote & v) { return v.recommended == course; }));
    if (n > 0) {
      out.tally.push_back({course, n, summed_weighted(out.votes, course)});
    }
  }
  if (out.tally.empty()) {
    return out;
  }

  std::size_t top = 0;
  for (const auto & t : out.tally) {
    top = std::max(top, t.votes);
  }
  std::vector<const VoteCount *> tied;
  for (const auto & t : out.tally) {
    if (t.votes == top) {
      tied.push_back(&t);
    }
  }
  const VoteCount * best = tied.front();
  bool by_score = false;
  for (const auto * t : tied) {
    if (t == best) {
      continue;
    }
    if (!nearly_equal(t->weighted_sum, best->weighted_sum) && t->weighted_sum > best->weighted_sum) {
      best = t;
      by_score = true;
    } else if (!nearly_equal(t->weighted_sum, best->weighted_sum)) {
      by_score = true;
    }
  }
  out.final = best->course;

  if (tied.size() > 1) {
    std::string names;
    for (const auto * t : tied) {
      names += (names.empty() ? "" : ", ") + t->course.str();
    }
    out.tie_break = "vote tie between " + names + " at " + std::to_string(top) + " vote(s); " +
                    best->course.str() +
                    (by_score ? " has the largest summed weighted score" : " is first in catalog order");
  }
  return out;
}

ExpertVote expert_vote(
  const KnowledgeBaseDoc & kb, std::size_t expert_index, const RuleSet & rules,
  const CandidateProfile & candidate, const RecommendOptions & options)
{
  const auto & expert = kb.experts.at(expert_index);
  WeightedRecommendation rec;
  if (options.weighted) {
    rec = recommend_weighted(
      rules, expert.profile, candidate, options.weight_override.value_or(kb.weight_config), kb.schema);
  } else {
    const std::vector<double> ones(kb.schema.courses.size(), 1.0);
    rec = apply_weights(course_scores(rules, candidate, kb.schema), ones);
  }
  return ExpertVote{expert.questionnaire.expert_id, rec.course, std::move(rec.scores), std::move(rec.report)};
}

FinalRecommendation recommend_candidate(
  const KnowledgeBaseDoc & kb, std::span<const RuleSet> rules, const CandidateProfile & candidate,
  const RecommendOptions & options)
{
  if (rules.size() != kb.experts.size()) {
    throw std::invalid_argument("recommend_candidate: one rule set per expert required");
  }
  std::vector<ExpertVote> votes;
  votes.reserve(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) {
    votes.push_back(expert_vote(kb, i, rules[i], candidate, options));
  }
  return majority_vote(std::move(votes), kb.schema, candidate.candidate_id);
}

FinalRecommendation recommend_candidate(
  const KnowledgeBaseDoc & kb, const CandidateProfile & candidate, const RecommendOptions & options)
{
  const auto rules = rule_sets(kb);
  return recommend_candidate(kb, rules, candidate, options);
}

CourseAssignment select_instructor_for_course(
  const KnowledgeBaseDoc & kb, const CourseId & course, std::span<const CandidateProfile> candidates,
  const RecommendOptions & options)
{
  if (!kb.schema.has_course(course)) {
    throw ValidationError("unknown course '" + course.str() + "'");
  }
  if (candidates.empty()) {
    throw std::invalid_argument("select_instructor_for_course: no candidates");
  }
  const auto rules = rule_sets(kb);
  CourseAssignment out{course, std::nullopt, {}};
  for (const auto & c : candidates) {
    std::vector<ExpertVote> votes;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      votes.push_back(expert_vote(kb, i, rules[i], c, options));
    }
    CandidateTally t{c.candidate_id, 0, summed_weighted(votes, course)};
    t.votes = static_cast<std::size_t>(std::count_if(
      votes.begin(), votes.end(), [&](const ExpertVote & v) { return v.recommended == course; }));
    out.tallies.push_back(std::move(t));
  }
  const CandidateTally * best = nullptr;
  for (const auto & t : out.tallies) {
    if (t.votes == 0) {
      continue;
    }
    if (best == nullptr || t.votes > best->votes) {
      best = &t;
    } else if (t.votes == best->votes) {
      if (!nearly_equal(t.weighted_sum, best->weighted_sum)) {
        if (t.weighted_sum > best->weighted_sum) {
          best = &t;
        }
      } else if (t.candidate_id < best->candidate_id) {
        best = &t;
      }
    }
  }
  if (best != nullptr) {
    out.selected = best->candidate_id;
  }
  return out;
}

}  // namespace facultas
