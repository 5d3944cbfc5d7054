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
/// \brief ID-3 induction over questionnaire rows.
///
/// Each questionnaire row is one training sample whose label is the row's
/// course. Nominal attributes split multi-way on the distinct requirement sets
/// seen in the partition (a disjunctive answer such as "AD or AI" is one
/// outcome). `taught` and `experience` split binary: set containment and
/// `>=` a midpoint threshold.

#ifndef FACULTAS__ID3_HPP_
#define FACULTAS__ID3_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "facultas/core.hpp"
#include "facultas/predicate.hpp"
#include "facultas/schema.hpp"

namespace facultas
{

struct TrainingSample
{
  ValueSet bsc;
  ValueSet msc;
  ValueSet phd;
  CourseSet taught;
  double experience = 0.0;
  CourseId label;

  const ValueSet & nominal(Attribute a) const noexcept;

  friend bool operator==(const TrainingSample &, const TrainingSample &) = default;
};

std::vector<TrainingSample> samples_from(const Questionnaire & q);

/// Training-side semantics of a test: nominal tests match a sample whose
/// requirement set equals the tested set; containment and threshold tests
/// read the sample's required courses and minimum experience.
bool routes(const Predicate & p, const TrainingSample & s);

/// Node test. Nominal attributes have no predicate (multi-way); binary
/// attributes carry the positive predicate of the true branch.
struct SplitTest
{
  Attribute attribute = Attribute::bsc;
  std::optional<Predicate> binary;

  static SplitTest nominal(Attribute a);
  static SplitTest binary_test(Predicate p);

  std::string describe() const;

  friend bool operator==(const SplitTest &, const SplitTest &) = default;
};

/// Outcome predicates of a split and the sample indices routed to each.
/// Outcomes with no members are dropped.
struct Partition
{
  std::vector<Predicate> outcomes;
  std::vector<std::vector<std::size_t>> members;
};

Partition partition(
  std::span<const TrainingSample> samples, std::span<const std::size_t> indices,
  const SplitTest & split);

/// Shannon entropy in bits. Throws std::invalid_argument on an empty input.
double entropy(std::span<const CourseId> labels);

/// Parent entropy minus the size-weighted entropy of the split's parts.
/// A nominal split with a single outcome gains 0; a binary test that leaves
/// one side empty throws std::invalid_argument.
double information_gain(std::span<const TrainingSample> samples, const SplitTest & split);

/// Information gain divided by the split's intrinsic information.
double gain_ratio(std::span<const TrainingSample> samples, const SplitTest & split);

enum class SplitCriterion { information_gain, gain_ratio };

std::string_view to_string(SplitCriterion c) noexcept;

struct Id3Options
{
  SplitCriterion criterion = SplitCriterion::information_gain;
};

struct Branch
{
  Predicate test;
  std::size_t child = 0;

  friend bool operator==(const Branch &, const Branch &) = default;
};

/// Leaves have no branches. Internal nodes keep the majority label of the
/// samples that reached them as the classification fallback.
struct DecisionNode
{
  CourseId label;
  std::size_t sample_count = 0;
  std::optional<SplitTest> split;
  std::vector<Branch> branches;

  bool is_leaf() const noexcept { return branches.empty(); }

  friend bool operator==(const DecisionNode &, const DecisionNode &) = default;
};

/// Nodes in preorder, root first.
struct DecisionTree
{
  std::string expert_id;
  std::vector<DecisionNode> nodes;

  const DecisionNode & root() const { return nodes.front(); }
  std::size_t leaf_count() const noexcept;
  std::size_t depth() const;

  friend bool operator==(const DecisionTree &, const DecisionTree &) = default;
};

/// Structural checks for trees read back from a file.
ValidationReport validate_tree(
  const DecisionTree & tree, const FacultySchema & schema, const std::string & path);

/// Builds the tree top-down, choosing the best-scoring non-degenerate split
/// at each node. Stops on pure partitions or when no split separates the
/// samples. Ties in score go to attribute order, then test description.
DecisionTree build_id3(
  std::span<const TrainingSample> samples, const FacultySchema & schema,
  std::string expert_id = {}, Id3Options options = {});

DecisionTree build_id3(
  const Questionnaire & q, const FacultySchema & schema, Id3Options options = {});

struct ClassifyStep
{
  std::size_t node = 0;
  std::optional<std::size_t> branch;  // nullopt: majority fallback at this node
  std::string note;
};

struct Classification
{
  CourseId course;
  std::vector<ClassifyStep> trace;

  bool used_fallback() const noexcept;
};

/// Routes an applicant down the tree. At a nominal node the most specific
/// branch containing the applicant's value wins; an absent degree or no
/// matching branch stops at that node's majority label.
Classification classify(const DecisionTree & tree, const CandidateProfile & candidate);

CourseId classify(const DecisionTree & tree, const TrainingSample & sample);

}  // namespace facultas

#endif  // FACULTAS__ID3_HPP_
