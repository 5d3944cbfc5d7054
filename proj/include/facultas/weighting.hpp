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
/// \brief Experience-based expert weighting.
///
/// W(x) is the floor below the threshold and a Gaussian bump around the peak
/// above it. The Gaussian is not clamped to the floor, so very long
/// experience can weigh less than the floor.

#ifndef FACULTAS__WEIGHTING_HPP_
#define FACULTAS__WEIGHTING_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "facultas/rules.hpp"
#include "facultas/schema.hpp"

namespace facultas
{

struct WeightFunctionConfig
{
  double threshold = 5.0;
  double floor = 0.1;
  double peak = 15.0;
  double spread = 10.0;

  friend bool operator==(const WeightFunctionConfig &, const WeightFunctionConfig &) = default;
};

ValidationReport validate_weight_config(
  const WeightFunctionConfig & cfg, const std::string & path = "weight_config");

/// Result lies in (0, 1]; an underflowing Gaussian yields the smallest
/// positive normal double. Throws std::invalid_argument on negative or
/// non-finite experience.
double expert_weight(double experience, const WeightFunctionConfig & cfg);

struct WeightedCourseScore
{
  CourseId course;
  std::size_t score = 0;
  double fraction = 0.0;
  double weight = 1.0;
  double weighted = 0.0;
};

struct WeightedRecommendation
{
  std::optional<CourseId> course;
  std::vector<WeightedCourseScore> scores;  // catalog order
  FiringReport report;
};

/// Multiplies each course score by its weight and picks the best course.
/// `weights` follows the report's catalog order.
WeightedRecommendation apply_weights(FiringReport report, std::span<const double> weights);

/// Weights every course by the expert's experience teaching it.
/// Throws std::invalid_argument when the profile and rule set belong to
/// different experts.
WeightedRecommendation recommend_weighted(
  const RuleSet & rules, const ExpertProfile & profile, const CandidateProfile & candidate,
  const WeightFunctionConfig & cfg, const FacultySchema & schema);

}  // namespace facultas

#endif  // FACULTAS__WEIGHTING_HPP_
