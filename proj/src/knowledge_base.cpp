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

#include "facultas/knowledge_base.hpp"

#include <set>

namespace facultas
{

std::string_view to_string(RuleMode m) noexcept
{
  return m == RuleMode::tree ? "tree" : "direct";
}

std::optional<RuleMode> rule_mode_from_string(std::string_view s) noexcept
{
  if (s == "direct") {
    return RuleMode::direct;
  }
  if (s == "tree") {
    return RuleMode::tree;
  }
  return std::nullopt;
}

ValidationReport validate_kb(const KnowledgeBaseDoc & doc)
{
  ValidationReport out = validate_schema(doc.schema);
  const auto append = [&out](ValidationReport more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  if (doc.experts.empty()) {
    out.push_back({"experts", "empty"});
  }
  std::set<std::string> ids;
  for (std::size_t i = 0; i < doc.experts.size(); ++i) {
    const auto & e = doc.experts[i];
    const std::string at = "experts[" + std::to_string(i) + "]";
    append(validate_questionnaire(e.questionnaire, doc.schema, at + ".questionnaire"));
    if (!e.questionnaire.expert_id.empty() && !ids.insert(e.questionnaire.expert_id).second) {
      out.push_back({at + ".questionnaire.expert_id", "duplicate expert '" + e.questionnaire.expert_id + "'"});
    }
    if (e.profile.expert_id != e.questionnaire.expert_id) {
      out.push_back(
        {at + ".profile.expert_id",
         "'" + e.profile.expert_id + "' does not match questionnaire expert '" +
           e.questionnaire.expert_id + "'"});
    }
    append(validate_expert_profile(e.profile, doc.schema, at + ".profile"));
  }
  append(validate_weight_config(doc.weight_config));

  if (doc.compiled && out.empty()) {
    const auto & cache = *doc.compiled;
    if (cache.mode != doc.rule_mode) {
      out.push_back(
        {"compiled.mode", "built for '" + std::string(to_string(cache.mode)) + "' but rule_mode is '" +
                            std::string(to_string(doc.rule_mode)) + "'"});
    } else if (cache != compile_kb(doc, cache.mode, Id3Options{cache.criterion})) {
      out.push_back({"compiled", "stale; rerun build"});
    }
  }
  return out;
}

void canonicalize(KnowledgeBaseDoc & doc)
{
  auto & schema = doc.schema;
  schema.faculty_name = trim(schema.faculty_name);
  for (auto & c : schema.courses) {
    c = CourseId(trim(c.str()));
  }
  for (auto * dom : {&schema.bsc_domain, &schema.msc_domain, &schema.phd_domain}) {
    for (auto & v : *dom) {
      v = trim(v);
    }
  }
  const auto course = [&schema](const CourseId & c) {
    return schema.match_course(c.str()).value_or(CourseId(trim(c.str())));
  };
  for (auto & e : doc.experts) {
    e.questionnaire.expert_id = trim(e.questionnaire.expert_id);
    e.profile.expert_id = trim(e.profile.expert_id);
    for (auto & row : e.questionnaire.rows) {
      row.course = course(row.course);
      for (Degree d : kDegrees) {
        ValueSet canon;
        for (const auto & v : row.requirement(d)) {
          canon.insert(schema.match_value(d, v).value_or(trim(v)));
        }
        row.requirement(d) = std::move(canon);
      }
      CourseSet taught;
      for (const auto & c : row.required_taught) {
        taught.insert(course(c));
      }
      row.required_taught = std::move(taught);
    }
    std::map<CourseId, double> exp;
    for (const auto & [c, years] : e.profile.per_course_experience) {
      exp[course(c)] = years;
    }
    e.profile.per_course_experience = std::move(exp);
  }
}

CompiledKb compile_kb(const KnowledgeBaseDoc & doc, RuleMode mode, Id3Options options)
{
  CompiledKb out{mode, options.criterion, {}};
  out.experts.reserve(doc.experts.size());
  for (const auto & e : doc.experts) {
    CompiledExpert ce{e.questionnaire.expert_id, std::nullopt, {}};
    if (mode == RuleMode::tree) {
      ce.tree = build_id3(e.questionnaire, doc.schema, options);
      ce.rules = extract_rules(*ce.tree);
    } else {
      ce.rules = rules_from_questionnaire(e.questionnaire);
    }
    out.experts.push_back(std::move(ce));
  }
  return out;
}

std::vector<RuleSet> rule_sets(const KnowledgeBaseDoc & doc)
{
  std::vector<RuleSet> out;
  out.reserve(doc.experts.size());
  if (doc.compiled && doc.compiled->mode == doc.rule_mode &&
      doc.compiled->experts.size() == doc.experts.size()) {
    for (const auto & ce : doc.compiled->experts) {
      out.push_back(ce.rules);
    }
    return out;
  }
  for (auto & ce : compile_kb(doc, doc.rule_mode).experts) {
    out.push_back(std::move(ce.rules));
  }
  return out;
}

}  // namespace facultas
