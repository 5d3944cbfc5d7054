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

#include "facultas/rules.hpp"

#include <algorithm>
#include <functional>

namespace facultas
{

std::string Rule::describe() const
{
  std::string out;
  for (std::size_t i = 0; i < antecedents.size(); ++i) {
    if (i > 0) {
      out += "; ";
    }
    out += antecedents[i].describe();
  }
  if (antecedents.empty()) {
    out = "(always)";
  }
  return out + " => " + consequent.str();
}

namespace
{

std::string rule_id(const std::string & expert_id, const std::string & local)
{
  return expert_id.empty() ? local : expert_id + "/" + local;
}

}  // namespace

RuleSet extract_rules(const DecisionTree & tree)
{
  RuleSet out{tree.expert_id, {}};
  if (tree.nodes.empty()) {
    return out;
  }
  std::vector<Predicate> path;
  std::function<void(std::size_t)> walk = [&](std::size_t id) {
    const auto & node = tree.nodes[id];
    if (node.is_leaf()) {
      const std::string local = "L" + std::to_string(out.rules.size() + 1);
      out.rules.push_back(Rule{rule_id(tree.expert_id, local), path, node.label, tree.expert_id});
      return;
    }
    for (const auto & b : node.branches) {
      path.push_back(b.test);
      walk(b.child);
      path.pop_back();
    }
  };
  walk(0);
  return out;
}

RuleSet rules_from_questionnaire(const Questionnaire & q)
{
  RuleSet out{q.expert_id, {}};
  out.rules.reserve(q.rows.size());
  for (const auto & row : q.rows) {
    Rule r;
    r.rule_id = rule_id(q.expert_id, row.course.str());
    r.consequent = row.course;
    r.expert_id = q.expert_id;
    for (Degree d : kDegrees) {
      r.antecedents.push_back(Predicate::nominal_in(attribute_of(d), row.requirement(d)));
    }
    if (!row.required_taught.empty()) {
      r.antecedents.push_back(Predicate::contains_all(row.required_taught));
    }
    r.antecedents.push_back(Predicate::at_least(row.min_experience));
    out.rules.push_back(std::move(r));
  }
  return out;
}

std::size_t firing_score(const Rule & rule, const CandidateProfile & candidate)
{
  return static_cast<std::size_t>(std::count_if(
    rule.antecedents.begin(), rule.antecedents.end(),
    [&](const Predicate & p) { return p.holds(candidate); }));
}

bool satisfied_by(const Rule & rule, const TrainingSample & sample)
{
  return std::all_of(rule.antecedents.begin(), rule.antecedents.end(), [&](const Predicate & p) {
    return routes(p, sample);
  });
}

double RuleFiring::satisfied_fraction() const noexcept
{
  return satisfied.empty() ? 0.0 : static_cast<double>(score) / static_cast<double>(satisfied.size());
}

const CourseScore * FiringReport::course(const CourseId & c) const noexcept
{
  for (const auto & s : courses) {
    if (s.course == c) {
      return &s;
    }
  }
  return nullptr;
}

FiringReport course_scores(
  const RuleSet & rules, const CandidateProfile & candidate, const FacultySchema & schema)
{
  FiringReport report;
  report.rules.reserve(rules.rules.size());
  for (const auto & rule : rules.rules) {
    RuleFiring f{rule.rule_id, rule.consequent, {}, {}, 0};
    f.satisfied.reserve(rule.antecedents.size());
    for (const auto & p : rule.antecedents) {
      const bool ok = p.holds(candidate);
      f.tests.push_back(p.describe());
      f.satisfied.push_back(ok);
      f.score += ok ? 1 : 0;
    }
    report.rules.push_back(std::move(f));
  }
  report.courses.reserve(schema.courses.size());
  for (const auto & course : schema.courses) {
    CourseScore cs{course, 0, 0.0, std::nullopt};
    for (const auto & f : report.rules) {
      if (f.consequent != course) {
        continue;
      }
      const double frac = f.satisfied_fraction();
      if (!cs.best_rule || f.score > cs.score || (f.score == cs.score && frac > cs.fraction)) {
        cs.score = f.score;
        cs.fraction = frac;
        cs.best_rule = f.rule_id;
      }
    }
    report.courses.push_back(std::move(cs));
  }
  return report;
}

std::optional<std::size_t> pick_best(std::span<const double> values, std::span<const double> fractions)
{
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) {
      continue;
    }
    if (!best) {
      best = i;
      continue;
    }
    const double v = values[i];
    const double bv = values[*best];
    if (nearly_equal(v, bv)) {
      if (fractions[i] > fractions[*best] && !nearly_equal(fractions[i], fractions[*best])) {
        best = i;
      }
    } else if (v > bv) {
      best = i;
    }
  }
  return best;
}

Recommendation recommend_unweighted(
  const RuleSet & rules, const CandidateProfile & candidate, const FacultySchema & schema)
{
  Recommendation out;
  out.report = course_scores(rules, candidate, schema);
  std::vector<double> values;
  std::vector<double> fractions;
  for (const auto & c : out.report.courses) {
    values.push_back(static_cast<double>(c.score));
    fractions.push_back(c.fraction);
  }
  if (const auto best = pick_best(values, fractions)) {
    out.course = out.report.courses[*best].course;
  }
  return out;
}

}  // namespace facultas
