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
/// \brief The persisted knowledge base: schema, experts and compiled rules.

#ifndef FACULTAS__KNOWLEDGE_BASE_HPP_
#define FACULTAS__KNOWLEDGE_BASE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facultas/id3.hpp"
#include "facultas/rules.hpp"
#include "facultas/schema.hpp"
#include "facultas/weighting.hpp"

namespace facultas
{

/// How rules are produced from a questionnaire: one rule per row, or one
/// rule per leaf of the expert's ID-3 tree.
enum class RuleMode { direct, tree };

std::string_view to_string(RuleMode m) noexcept;
std::optional<RuleMode> rule_mode_from_string(std::string_view s) noexcept;

struct ExpertEntry
{
  Questionnaire questionnaire;
  ExpertProfile profile;

  friend bool operator==(const ExpertEntry &, const ExpertEntry &) = default;
};

struct CompiledExpert
{
  std::string expert_id;
  std::optional<DecisionTree> tree;  // tree mode only
  RuleSet rules;

  friend bool operator==(const CompiledExpert &, const CompiledExpert &) = default;
};

/// Cache written by `facultas build`.
struct CompiledKb
{
  RuleMode mode = RuleMode::direct;
  SplitCriterion criterion = SplitCriterion::information_gain;
  std::vector<CompiledExpert> experts;

  friend bool operator==(const CompiledKb &, const CompiledKb &) = default;
};

struct KnowledgeBaseDoc
{
  FacultySchema schema;
  std::vector<ExpertEntry> experts;
  WeightFunctionConfig weight_config;
  RuleMode rule_mode = RuleMode::direct;
  std::optional<CompiledKb> compiled;

  friend bool operator==(const KnowledgeBaseDoc &, const KnowledgeBaseDoc &) = default;
};

/// Every invariant violation in the document. An empty report means valid.
ValidationReport validate_kb(const KnowledgeBaseDoc & doc);

/// Rewrites nominal values and course tokens to the schema's spelling.
/// Values that match nothing are left as they are for validate_kb to report.
void canonicalize(KnowledgeBaseDoc & doc);

CompiledKb compile_kb(const KnowledgeBaseDoc & doc, RuleMode mode, Id3Options options = {});

/// One rule set per expert in document order, following `rule_mode`.
/// Uses the compiled cache when it was built for that mode.
std::vector<RuleSet> rule_sets(const KnowledgeBaseDoc & doc);

}  // namespace facultas

#endif  // FACULTAS__KNOWLEDGE_BASE_HPP_
