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
/// \brief JSON and CSV formats for knowledge bases, candidates, datasets and
/// engine results.
///
/// Readers throw FormatError carrying a path like `experts[0].questionnaire.rows[2].msc_req`.
/// Writers emit keys in a fixed order so output is byte-stable.

#ifndef FACULTAS__JSON_IO_HPP_
#define FACULTAS__JSON_IO_HPP_

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "facultas/aggregation.hpp"
#include "facultas/evaluation.hpp"
#include "facultas/knowledge_base.hpp"

namespace facultas
{

using Json = nlohmann::ordered_json;

Json to_json(const FacultySchema & s);
Json to_json(const Questionnaire & q);
Json to_json(const ExpertProfile & p);
Json to_json(const WeightFunctionConfig & c);
Json to_json(const Predicate & p);
Json to_json(const DecisionTree & t);
Json to_json(const RuleSet & r);
Json to_json(const KnowledgeBaseDoc & kb);
Json to_json(const CandidateProfile & c);
Json to_json(const FiringReport & r);
Json to_json(const ExpertVote & v);
Json to_json(const FinalRecommendation & r);
Json to_json(const CourseAssignment & a);
Json to_json(const EvalReport & r);
Json to_json(const LabeledDataset & d);
Json to_json(const ValidationReport & r);

FacultySchema schema_from_json(const Json & j, const std::string & path = "schema");
Questionnaire questionnaire_from_json(const Json & j, const std::string & path);
ExpertProfile profile_from_json(const Json & j, const std::string & path);
WeightFunctionConfig weight_config_from_json(const Json & j, const std::string & path = "weight_config");
Predicate predicate_from_json(const Json & j, const std::string & path);
DecisionTree tree_from_json(const Json & j, const std::string & path);
RuleSet rule_set_from_json(const Json & j, const std::string & path);

/// Parses and canonicalizes a KB document. A missing `weight_config` takes
/// `fallback_weights`. Invariants are not checked; see validate_kb.
KnowledgeBaseDoc kb_from_json(const Json & j, const WeightFunctionConfig & fallback_weights = {});

/// Total over any JSON value: structural problems and invariant violations
/// are both returned as violations.
ValidationReport validate_kb_json(const Json & j, const WeightFunctionConfig & fallback_weights = {});

RawCandidate raw_candidate_from_json(const Json & j, const std::string & path);

std::string read_text_file(const std::filesystem::path & p);
void write_text_file(const std::filesystem::path & p, const std::string & text);

Json parse_json_text(const std::string & text, const std::string & what);

KnowledgeBaseDoc load_kb(const std::filesystem::path & p, const WeightFunctionConfig & fallback_weights = {});
void save_kb(const std::filesystem::path & p, const KnowledgeBaseDoc & kb);

/// Schema from a schema file or from the `schema` key of a KB file.
FacultySchema load_schema(const std::filesystem::path & p);

/// Splits one CSV line, honoring double-quoted fields.
std::vector<std::string> split_csv_line(const std::string & line);

/// Candidate records from JSON (array of objects) or CSV with header
/// `candidate_id,bsc,msc,phd,taught,experience`.
std::vector<RawCandidate> read_raw_candidates(const std::string & text);

std::vector<CandidateProfile> read_candidates(const std::string & text, const FacultySchema & schema);

/// Same formats as candidates plus a `course` column / key.
LabeledDataset read_dataset(const std::string & text, const FacultySchema & schema);

std::string write_candidates_csv(const std::vector<CandidateProfile> & candidates);
std::string write_dataset_csv(const LabeledDataset & data);

}  // namespace facultas

#endif  // FACULTAS__JSON_IO_HPP_
