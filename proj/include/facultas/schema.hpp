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
/// \brief Faculty schema, expert questionnaires, expert and candidate profiles.
///
/// Everything here is a plain value type. Nominal values are stored in the
/// spelling used by the schema's answer domain; `FacultySchema::match_value`
/// maps hand-entered text (any case, stray whitespace) onto that spelling.

#ifndef FACULTAS__SCHEMA_HPP_
#define FACULTAS__SCHEMA_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facultas/core.hpp"

namespace facultas
{

enum class ExperienceUnit { years, semesters };

std::string_view to_string(ExperienceUnit u) noexcept;

/// Answer domains and course catalog of one faculty.
///
/// The order of `courses` is the catalog order used by every deterministic
/// tie-break in the engine.
struct FacultySchema
{
  std::string faculty_name;
  std::vector<CourseId> courses;
  std::vector<std::string> bsc_domain;
  std::vector<std::string> msc_domain;
  std::vector<std::string> phd_domain;
  ExperienceUnit experience_unit = ExperienceUnit::semesters;
  double experience_max = 0.0;

  const std::vector<std::string> & domain(Degree d) const noexcept;

  bool has_course(const CourseId & c) const noexcept { return course_rank(c).has_value(); }

  /// Position of `c` in the catalog.
  std::optional<std::size_t> course_rank(const CourseId & c) const noexcept;

  /// Domain spelling of `raw` after trimming and case folding.
  std::optional<std::string> match_value(Degree d, std::string_view raw) const;

  /// Catalog spelling of a course token after trimming and case folding.
  std::optional<CourseId> match_course(std::string_view raw) const;

  friend bool operator==(const FacultySchema &, const FacultySchema &) = default;
};

/// One expert's requirements for one course. Degree requirements are
/// disjunctions, `required_taught` is a conjunction.
struct QuestionnaireRow
{
  CourseId course;
  ValueSet bsc_req;
  ValueSet msc_req;
  ValueSet phd_req;
  CourseSet required_taught;
  double min_experience = 0.0;

  const ValueSet & requirement(Degree d) const noexcept;
  ValueSet & requirement(Degree d) noexcept;

  friend bool operator==(const QuestionnaireRow &, const QuestionnaireRow &) = default;
};

struct Questionnaire
{
  std::string expert_id;
  std::vector<QuestionnaireRow> rows;

  const QuestionnaireRow * row_for(const CourseId & c) const noexcept;

  friend bool operator==(const Questionnaire &, const Questionnaire &) = default;
};

/// Teaching experience of an expert per course; a missing course means 0.
struct ExpertProfile
{
  std::string expert_id;
  std::map<CourseId, double> per_course_experience;

  double experience_for(const CourseId & c) const noexcept;

  friend bool operator==(const ExpertProfile &, const ExpertProfile &) = default;
};

/// Feature vector of an applicant: degrees, taught courses and experience.
/// M.Sc. and PhD may be absent.
struct CandidateProfile
{
  std::string candidate_id;
  std::string bsc;
  std::optional<std::string> msc;
  std::optional<std::string> phd;
  CourseSet taught;
  double experience = 0.0;

  /// Degree value, or nullopt when the candidate does not hold it.
  std::optional<std::string_view> degree(Degree d) const noexcept;

  friend bool operator==(const CandidateProfile &, const CandidateProfile &) = default;
};

/// Candidate record as read from a file, before schema normalization.
struct RawCandidate
{
  std::string candidate_id;
  std::string bsc;
  std::optional<std::string> msc;
  std::optional<std::string> phd;
  std::vector<std::string> taught;
  double experience = 0.0;
};

/// Normalizes degree values and course tokens against `schema`.
/// Throws ValidationError on an unknown course, a degree value outside its
/// domain, a missing B.Sc. or a negative / non-finite experience.
CandidateProfile parse_candidate(const RawCandidate & raw, const FacultySchema & schema);

/// One invariant violation, located by a dotted path into the document.
struct Violation
{
  std::string path;
  std::string message;

  std::string str() const { return path.empty() ? message : path + ": " + message; }
  friend bool operator==(const Violation &, const Violation &) = default;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate_schema(const FacultySchema & schema, const std::string & path = "schema");

ValidationReport validate_questionnaire(
  const Questionnaire & q, const FacultySchema & schema, const std::string & path);

ValidationReport validate_expert_profile(
  const ExpertProfile & p, const FacultySchema & schema, const std::string & path);

/// Checks a constructed candidate (e.g. one built in code rather than parsed).
ValidationReport validate_candidate(
  const CandidateProfile & c, const FacultySchema & schema, const std::string & path = "candidate");

}  // namespace facultas

#endif  // FACULTAS__SCHEMA_HPP_
