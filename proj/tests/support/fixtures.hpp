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
/// \brief Shared fixtures: the five-course computer engineering faculty and
/// its reference questionnaire.

#ifndef FACULTAS_TESTS__FIXTURES_HPP_
#define FACULTAS_TESTS__FIXTURES_HPP_

#include <string>
#include <vector>

#include "facultas/knowledge_base.hpp"

namespace facultas::testing
{

inline CourseId C(const char * id) { return CourseId(id); }

inline CourseSet courses(std::initializer_list<const char *> ids)
{
  CourseSet out;
  for (const char * id : ids) {
    out.insert(CourseId(id));
  }
  return out;
}

inline const std::string kSw = "Software";
inline const std::string kHw = "Hardware";
inline const std::string kAi = "Artificial Intelligence";
inline const std::string kCs = "Computer Structure";
inline const std::string kAd = "Algorithm Designing";

inline FacultySchema table_schema()
{
  FacultySchema s;
  s.faculty_name = "Computer Engineering";
  s.courses = {C("DB"), C("NS"), C("AI"), C("CN"), C("AD")};
  s.bsc_domain = {kSw, kHw};
  s.msc_domain = {kAi, kCs, kSw, kAd};
  s.phd_domain = {kAi, kCs, kSw};
  s.experience_unit = ExperienceUnit::semesters;
  s.experience_max = 40;
  return s;
}

inline QuestionnaireRow row(
  const char * course, ValueSet bsc, ValueSet msc, ValueSet phd, CourseSet taught, double min_exp)
{
  return QuestionnaireRow{C(course), std::move(bsc), std::move(msc), std::move(phd), std::move(taught), min_exp};
}

inline Questionnaire table_questionnaire(std::string expert_id = "e1")
{
  Questionnaire q;
  q.expert_id = std::move(expert_id);
  q.rows = {
    row("DB", {kSw}, {kSw}, {kSw}, courses({"DB"}), 3),
    row("NS", {kHw}, {kCs}, {kCs}, courses({"NS", "CN"}), 4),
    row("AI", {kSw}, {kAi}, {kAi}, courses({"AI", "AD"}), 5),
    row("CN", {kHw}, {kCs}, {kCs}, courses({"CN"}), 4),
    row("AD", {kSw}, {kAd, kAi}, {kAi}, courses({"AD"}), 3),
  };
  return q;
}

inline ExpertProfile uniform_profile(const std::string & expert_id, double experience)
{
  ExpertProfile p;
  p.expert_id = expert_id;
  for (const auto & c : table_schema().courses) {
    p.per_course_experience[c] = experience;
  }
  return p;
}

/// Single expert "e1" with 15 units of experience for every course.
inline KnowledgeBaseDoc table_kb(std::size_t experts = 1)
{
  KnowledgeBaseDoc kb;
  kb.schema = table_schema();
  for (std::size_t i = 0; i < experts; ++i) {
    const std::string id = "e" + std::to_string(i + 1);
    kb.experts.push_back({table_questionnaire(id), uniform_profile(id, 15)});
  }
  return kb;
}

inline CandidateProfile candidate(
  std::string id, std::string bsc, std::optional<std::string> msc, std::optional<std::string> phd,
  CourseSet taught, double experience)
{
  return CandidateProfile{std::move(id), std::move(bsc), std::move(msc), std::move(phd), std::move(taught), experience};
}

/// The worked query: Software / AI / AI, taught {AI, DB, AD}, experience 4.
inline CandidateProfile query_candidate()
{
  return candidate("F_query", kSw, kAi, kAi, courses({"AI", "DB", "AD"}), 4);
}

}  // namespace facultas::testing

#endif  // FACULTAS_TESTS__FIXTURES_HPP_
