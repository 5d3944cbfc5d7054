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

#include "facultas/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace facultas
{

ValidationReport validate_weight_config(const WeightFunctionConfig & cfg, const std::string & path)
{
  ValidationReport out;
  if (!(std::isfinite(cfg.threshold) && cfg.threshold >= 0.0)) {
    out.push_back({path + ".threshold", "must be >= 0"});
  }
  if (!(cfg.floor > 0.0 && cfg.floor <= 1.0)) {
    out.push_back({path + ".floor", "must be in (0, 1]"});
  }
  if (!(std::isfinite(cfg.spread) && cfg.spread > 0.0)) {
    out.push_back({path + ".spread", "must be > 0"});
  }
  if (!(std::isfinite(cfg.peak) && cfg.peak >= cfg.threshold)) {
    out.push_back({path + ".peak", "must be >= threshold"});
  }
  return out;
}

double expert_weight(double experience, const WeightFunctionConfig & cfg)
{
  if (!(std::isfinite(experience) && experience >= 0.0)) {
    throw std::invalid_argument("expert_weight: experience must be a non-negative number");
  }
  if (experience < cfg.threshold) {
    return cfg.floor;
  }
  const double z = (experience - cfg.peak) / cfg.spread;
  // Stays positive where exp underflows so a firing rule never weighs zero.
  return std::max(std::exp(-0.5 * z * z), std::numeric_limits<double>::min());
}

WeightedRecommendation apply_weights(FiringReport report, std::span<const double> weights)
{
  if (weights.size() != report.courses.size()) {
    throw std::invalid_argument("apply_weights: one weight per course required");
  }
  WeightedRecommendation out;
  std::vector<double> values;
  std::vector<double> fractions;
  for (std::size_t i = 0; i < report.courses.size(); ++i) {
    const auto & c = report.courses[i];
    const double weighted = static_cast<double>(c.score) * weights[i];
    out.scores.push_back({c.course, c.score, c.fraction, weights[i], weighted});
    values.push_back(weighted);
    fractions.push_back(c.fraction);
  }
  if (const auto best = pick_best(values, fractions)) {
    out.course = out.scores[*best].course;
  }
  out.report = std::move(report);
  return out;
}

WeightedRecommendation recommend_weighted(
  const RuleSet & rules, const ExpertProfile & profile, const CandidateProfile & candidate,
  const WeightFunctionConfig & cfg, const FacultySchema & schema)
{
  if (rules.expert_id != profile.expert_id) {
    throw std::invalid_argument(
      "recommend_weighted: rules of '" + rules.expert_id + "' paired with profile of '" +
      profile.expert_id + "'");
  }
  std::vector<double> weights;
  weights.reserve(schema.courses.size());
  for (const auto & course : schema.courses) {
    weights.push_back(expert_weight(profile.experience_for(course), cfg));
  }
  return apply_weights(course_scores(rules, candidate, schema), weights);
}

}  // namespace facultas
