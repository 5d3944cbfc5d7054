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

#include <gtest/gtest.h>

#include "facultas/knowledge_base.hpp"
#include "fixtures.hpp"

namespace facultas
{
namespace
{

using namespace facultas::testing;

bool mentions(const ValidationReport & r, const std::string & needle)
{
  for (const auto & v : r) {
    if (v.str().find(needle) != std::string::npos) {
      return true;
    }
  }
  return false;
}

TEST(Schema, ReferenceQuestionnaireIsValid)
{
  EXPECT_TRUE(validate_schema(table_schema()).empty());
  EXPECT_TRUE(validate_kb(table_kb()).empty());
}

TEST(Schema, SchemaInvariants)
{
  auto s = table_schema();
  s.courses.push_back(C("DB"));
  EXPECT_TRUE(mentions(validate_schema(s), "duplicate course 'DB'"));

  s = table_schema();
  s.courses.clear();
  EXPECT_TRUE(mentions(validate_schema(s), "schema.courses: empty"));

  s = table_schema();
  s.phd_domain.clear();
  EXPECT_TRUE(mentions(validate_schema(s), "schema.phd_domain: empty"));

  s = table_schema();
  s.msc_domain.push_back(kAi);
  EXPECT_TRUE(mentions(validate_schema(s), "duplicate value"));

  s = table_schema();
  s.experience_max = 0;
  EXPECT_TRUE(mentions(validate_schema(s), "experience_max"));
}

TEST(Schema, EmptyExpertListIsReported)
{
  auto kb = table_kb();
  kb.experts.clear();
  const auto report = validate_kb(kb);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0].str(), "experts: empty");
}

TEST(Schema, OutOfDomainValueNamesRowAndValue)
{
  auto kb = table_kb();
  kb.experts[0].questionnaire.rows[2].msc_req = {"Physics"};
  const auto report = validate_kb(kb);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_NE(report[0].path.find("rows[2].msc_req"), std::string::npos);
  EXPECT_NE(report[0].message.find("Physics"), std::string::npos);
  EXPECT_NE(report[0].message.find("AI"), std::string::npos);
}

TEST(Schema, QuestionnaireInvariants)
{
  const auto schema = table_schema();
  auto q = table_questionnaire();
  q.rows.pop_back();
  EXPECT_TRUE(mentions(validate_questionnaire(q, schema, "q"), "missing row for course 'AD'"));

  q = table_questionnaire();
  q.rows.push_back(q.rows[0]);
  EXPECT_TRUE(mentions(validate_questionnaire(q, schema, "q"), "duplicate row"));

  q = table_questionnaire();
  q.rows[1].bsc_req.clear();
  EXPECT_TRUE(mentions(validate_questionnaire(q, schema, "q"), "q.rows[1].bsc_req: empty"));

  q = table_questionnaire();
  q.rows[0].required_taught.insert(C("XX"));
  EXPECT_TRUE(mentions(validate_questionnaire(q, schema, "q"), "unknown course 'XX'"));

  q = table_questionnaire();
  q.rows[0].min_experience = -1;
  EXPECT_TRUE(mentions(validate_questionnaire(q, schema, "q"), "min_experience"));
}

TEST(Schema, ExpertPairingAndUniqueness)
{
  auto kb = table_kb(2);
  kb.experts[1].questionnaire.expert_id = "e1";
  kb.experts[1].profile.expert_id = "e1";
  EXPECT_TRUE(mentions(validate_kb(kb), "duplicate expert 'e1'"));

  kb = table_kb(2);
  kb.experts[1].profile.expert_id = "someone";
  EXPECT_FALSE(validate_kb(kb).empty());

  kb = table_kb();
  kb.experts[0].profile.per_course_experience[C("XX")] = 3;
  EXPECT_TRUE(mentions(validate_kb(kb), "unknown course"));
}

TEST(Schema, MissingProfileCourseMeansZero)
{
  ExpertProfile p;
  p.per_course_experience[C("AI")] = 7;
  EXPECT_EQ(p.experience_for(C("AI")), 7);
  EXPECT_EQ(p.experience_for(C("DB")), 0);
}

TEST(Schema, ParseCandidateNormalizesValues)
{
  RawCandidate raw{"F_query", "  software", " artificial INTELLIGENCE ", "Artificial Intelligence", {"ai", "DB ", "AD"}, 4};
  const auto c = parse_candidate(raw, table_schema());
  EXPECT_EQ(c, query_candidate());
}

TEST(Schema, ParseCandidateKeepsAbsentDegree)
{
  RawCandidate raw{"F3", "Software", kAi, std::nullopt, {"AI"}, 3};
  const auto c = parse_candidate(raw, table_schema());
  EXPECT_FALSE(c.phd.has_value());
  EXPECT_FALSE(c.degree(Degree::phd).has_value());
  EXPECT_EQ(c.degree(Degree::msc), std::optional<std::string_view>(kAi));
}

TEST(Schema, ParseCandidateRejectsBadInput)
{
  const auto schema = table_schema();
  RawCandidate unknown{"x", kSw, std::nullopt, std::nullopt, {"XX"}, 1};
  try {
    parse_candidate(unknown, schema);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError & e) {
    EXPECT_NE(std::string(e.what()).find("unknown course"), std::string::npos);
  }
  RawCandidate domain{"x", kSw, "Physics", std::nullopt, {}, 1};
  EXPECT_THROW(parse_candidate(domain, schema), ValidationError);
  RawCandidate negative{"x", kSw, std::nullopt, std::nullopt, {}, -2};
  EXPECT_THROW(parse_candidate(negative, schema), ValidationError);
  RawCandidate no_bsc{"x", "", std::nullopt, std::nullopt, {}, 1};
  EXPECT_THROW(parse_candidate(no_bsc, schema), ValidationError);
}

TEST(Schema, ValidateConstructedCandidate)
{
  const auto schema = table_schema();
  EXPECT_TRUE(validate_candidate(query_candidate(), schema).empty());
  auto c = query_candidate();
  c.phd = "Physics";
  EXPECT_TRUE(mentions(validate_candidate(c, schema), "candidate.phd"));
}

TEST(Schema, CanonicalizeRewritesSpelling)
{
  auto kb = table_kb();
  kb.experts[0].questionnaire.rows[0].bsc_req = {" software"};
  kb.experts[0].questionnaire.rows[0].required_taught = courses({"db"});
  canonicalize(kb);
  EXPECT_EQ(kb, table_kb());
}

}  // namespace
}  // namespace facultas
