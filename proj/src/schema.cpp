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

#include "facultas/schema.hpp"

#include <cmath>
#include <set>

namespace facultas
{

std::string_view to_string(ExperienceUnit u) noexcept
{
  return u == ExperienceUnit::years ? "years" : "semesters";
}

const std::vector<std::string> & FacultySchema::domain(Degree d) const noexcept
{
  switch (d) {
    case Degree::bsc:
      return bsc_domain;
    case Degree::msc:
      return msc_domain;
    case Degree::phd:
      break;
  }
  return phd_domain;
}

std::optional<std::size_t> FacultySchema::course_rank(const CourseId & c) const noexcept
{
  for (std::size_t i = 0; i < courses.size(); ++i) {
    if (courses[i] == c) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<std::string> FacultySchema::match_value(Degree d, std::string_view raw) const
{
  const std::string key = fold_value(raw);
  for (const auto & v : domain(d)) {
    if (fold_value(v) == key) {
      return v;
    }
  }
  return std::nullopt;
}

std::optional<CourseId> FacultySchema::match_course(std::string_view raw) const
{
  const std::string key = fold_value(raw);
  for (const auto & c : courses) {
    if (fold_value(c.str()) == key) {
      return c;
    }
  }
  return std::nullopt;
}

const ValueSet & QuestionnaireRow::requirement(Degree d) const noexcept
{
  switch (d) {
    case Degree::bsc:
      return bsc_req;
    case Degree::msc:
      return msc_req;
    case Degree::phd:
      break;
  }
  return phd_req;
}

ValueSet & QuestionnaireRow::requirement(Degree d) noexcept
{
  return const_cast<ValueSet &>(std::as_const(*this).requirement(d));
}

const QuestionnaireRow * Questionnaire::row_for(const CourseId & c) const noexcept
{
  for (const auto & row : rows) {
    if (row.course == c) {
      return &row;
    }
  }
  return nullptr;
}

double ExpertProfile::experience_for(const CourseId & c) const noexcept
{
  const auto it = per_course_experience.find(c);
  return it == per_course_experience.end() ? 0.0 : it->second;
}

std::optional<std::string_view> CandidateProfile::degree(Degree d) const noexcept
{
  switch (d) {
    case Degree::bsc:
      return std::string_view(bsc);
    case Degree::msc:
      return msc ? std::optional<std::string_view>(*msc) : std::nullopt;
    case Degree::phd:
      break;
  }
  return phd ? std::optional<std::string_view>(*phd) : std::nullopt;
}

namespace
{

std::optional<std::string> normalize_degree(
  Degree d, const std::optional<std::string> & raw, const FacultySchema & schema, bool required)
{
  if (!raw || trim(*raw).empty()) {
    if (required) {
      throw ValidationError(std::string(to_string(d)) + ": value required");
    }
    return std::nullopt;
  }
  auto v = schema.match_value(d, *raw);
  if (!v) {
    throw ValidationError(
      std::string(to_string(d)) + ": value '" + trim(*raw) + "' is not in the " +
      std::string(to_string(d)) + " domain");
  }
  return v;
}

bool finite_non_negative(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

CandidateProfile parse_candidate(const RawCandidate & raw, const FacultySchema & schema)
{
  CandidateProfile c;
  c.candidate_id = trim(raw.candidate_id);
  c.bsc = *normalize_degree(Degree::bsc, raw.bsc, schema, true);
  c.msc = normalize_degree(Degree::msc, raw.msc, schema, false);
  c.phd = normalize_degree(Degree::phd, raw.phd, schema, false);
  for (const auto & t : raw.taught) {
    if (trim(t).empty()) {
      continue;
    }
    auto course = schema.match_course(t);
    if (!course) {
      throw ValidationError("taught: unknown course '" + trim(t) + "'");
    }
    c.taught.insert(*course);
  }
  if (!finite_non_negative(raw.experience)) {
    throw ValidationError("experience: must be a non-negative number");
  }
  c.experience = raw.experience;
  return c;
}

ValidationReport validate_schema(const FacultySchema & schema, const std::string & path)
{
  ValidationReport out;
  if (schema.courses.empty()) {
    out.push_back({path + ".courses", "empty"});
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < schema.courses.size(); ++i) {
    const auto & c = schema.courses[i];
    const std::string at = path + ".courses[" + std::to_string(i) + "]";
    if (trim(c.str()).empty()) {
      out.push_back({at, "empty course id"});
    } else if (!seen.insert(fold_value(c.str())).second) {
      out.push_back({at, "duplicate course '" + c.str() + "'"});
    }
  }
  for (Degree d : kDegrees) {
    const std::string at = path + "." + std::string(to_string(d)) + "_domain";
    const auto & dom = schema.domain(d);
    if (dom.empty()) {
      out.push_back({at, "empty"});
    }
    std::set<std::string> values;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (trim(dom[i]).empty()) {
        out.push_back({at + "[" + std::to_string(i) + "]", "empty value"});
      } else if (!values.insert(fold_value(dom[i])).second) {
        out.push_back({at + "[" + std::to_string(i) + "]", "duplicate value '" + dom[i] + "'"});
      }
    }
  }
  if (!(std::isfinite(schema.experience_max) && schema.experience_max > 0.0)) {
    out.push_back({path + ".experience_max", "must be > 0"});
  }
  return out;
}

ValidationReport validate_questionnaire(
  const Questionnaire & q, const FacultySchema & schema, const std::string & path)
{
  ValidationReport out;
  if (trim(q.expert_id).empty()) {
    out.push_back({path + ".expert_id", "empty"});
  }
  std::set<CourseId> covered;
  for (std::size_t i = 0; i < q.rows.size(); ++i) {
    const auto & row = q.rows[i];
    const std::string at = path + ".rows[" + std::to_string(i) + "]";
    if (!schema.has_course(row.course)) {
      out.push_back({at + ".course", "unknown course '" + row.course.str() + "'"});
    } else if (!covered.insert(row.course).second) {
      out.push_back({at + ".course", "duplicate row for course '" + row.course.str() + "'"});
    }
    for (Degree d : kDegrees) {
      const std::string field = at + "." + std::string(to_string(d)) + "_req";
      const auto & req = row.requirement(d);
      if (req.empty()) {
        out.push_back({field, "empty"});
      }
      for (const auto & v : req) {
        const auto & dom = schema.domain(d);
        if (std::find(dom.begin(), dom.end(), v) == dom.end()) {
          out.push_back(
            {field, "row " + row.course.str() + ": value '" + v + "' not in " +
                      std::string(to_string(d)) + "_domain"});
        }
      }
    }
    for (const auto & c : row.required_taught) {
      if (!schema.has_course(c)) {
        out.push_back({at + ".required_taught", "unknown course '" + c.str() + "'"});
      }
    }
    if (!finite_non_negative(row.min_experience)) {
      out.push_back({at + ".min_experience", "must be a non-negative number"});
    }
  }
  for (const auto & c : schema.courses) {
    if (!covered.count(c)) {
      out.push_back({path + ".rows", "missing row for course '" + c.str() + "'"});
    }
  }
  return out;
}

ValidationReport validate_expert_profile(
  const ExpertProfile & p, const FacultySchema & schema, const std::string & path)
{
  ValidationReport out;
  for (const auto & [course, years] : p.per_course_experience) {
    const std::string at = path + ".per_course_experience." + course.str();
    if (!schema.has_course(course)) {
      out.push_back({at, "unknown course"});
    }
    if (!finite_non_negative(years)) {
      out.push_back({at, "must be a non-negative number"});
    }
  }
  return out;
}

ValidationReport validate_candidate(
  const CandidateProfile & c, const FacultySchema & schema, const std::string & path)
{
  ValidationReport out;
  for (Degree d : kDegrees) {
    const auto v = c.degree(d);
    const std::string at = path + "." + std::string(to_string(d));
    if (!v) {
      if (d == Degree::bsc) {
        out.push_back({at, "value required"});
      }
      continue;
    }
    const auto & dom = schema.domain(d);
    if (std::find(dom.begin(), dom.end(), *v) == dom.end()) {
      out.push_back({at, "value '" + std::string(*v) + "' not in domain"});
    }
  }
  for (const auto & t : c.taught) {
    if (!schema.has_course(t)) {
      out.push_back({path + ".taught", "unknown course '" + t.str() + "'"});
    }
  }
  if (!finite_non_negative(c.experience)) {
    out.push_back({path + ".experience", "must be a non-negative number"});
  }
  return out;
}

}  // namespace facultas
