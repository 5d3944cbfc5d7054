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

#include "facultas/id3.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace facultas
{

const ValueSet & TrainingSample::nominal(Attribute a) const noexcept
{
  switch (a) {
    case Attribute::msc:
      return msc;
    case Attribute::phd:
      return phd;
    default:
      return bsc;
  }
}

std::vector<TrainingSample> samples_from(const Questionnaire & q)
{
  std::vector<TrainingSample> out;
  out.reserve(q.rows.size());
  for (const auto & row : q.rows) {
    out.push_back(
      {row.bsc_req, row.msc_req, row.phd_req, row.required_taught, row.min_experience, row.course});
  }
  return out;
}

bool routes(const Predicate & p, const TrainingSample & s)
{
  bool positive = false;
  if (const auto * in = std::get_if<NominalIn>(&p.test)) {
    positive = s.nominal(p.attribute) == in->values;
  } else if (const auto * all = std::get_if<SetContainsAll>(&p.test)) {
    positive = std::includes(s.taught.begin(), s.taught.end(), all->courses.begin(), all->courses.end());
  } else {
    positive = s.experience >= std::get<NumericGE>(p.test).threshold;
  }
  return positive != p.negated;
}

SplitTest SplitTest::nominal(Attribute a)
{
  return SplitTest{a, std::nullopt};
}

SplitTest SplitTest::binary_test(Predicate p)
{
  const Attribute a = p.attribute;
  return SplitTest{a, std::move(p)};
}

std::string SplitTest::describe() const
{
  return binary ? binary->describe() : std::string(to_string(attribute));
}

std::string_view to_string(SplitCriterion c) noexcept
{
  return c == SplitCriterion::gain_ratio ? "gain_ratio" : "information_gain";
}

Partition partition(
  std::span<const TrainingSample> samples, std::span<const std::size_t> indices,
  const SplitTest & split)
{
  Partition out;
  if (!split.binary) {
    if (kind_of(split.attribute) != AttributeKind::nominal) {
      throw std::invalid_argument("multi-way split on non-nominal attribute");
    }
    std::map<ValueSet, std::vector<std::size_t>> groups;
    for (std::size_t i : indices) {
      groups[samples[i].nominal(split.attribute)].push_back(i);
    }
    for (auto & [values, members] : groups) {
      out.outcomes.push_back(Predicate::nominal_in(split.attribute, values));
      out.members.push_back(std::move(members));
    }
    return out;
  }
  std::vector<std::size_t> yes;
  std::vector<std::size_t> no;
  for (std::size_t i : indices) {
    (routes(*split.binary, samples[i]) ? yes : no).push_back(i);
  }
  if (!yes.empty()) {
    out.outcomes.push_back(*split.binary);
    out.members.push_back(std::move(yes));
  }
  if (!no.empty()) {
    out.outcomes.push_back(split.binary->negation());
    out.members.push_back(std::move(no));
  }
  return out;
}

double entropy(std::span<const CourseId> labels)
{
  if (labels.empty()) {
    throw std::invalid_argument("entropy of an empty label multiset");
  }
  std::map<CourseId, std::size_t> counts;
  for (const auto & l : labels) {
    ++counts[l];
  }
  const double n = static_cast<double>(labels.size());
  double h = 0.0;
  for (const auto & [label, count] : counts) {
    const double p = static_cast<double>(count) / n;
    h -= p * std::log2(p);
  }
  return std::max(0.0, h);
}

namespace
{

double entropy_of(std::span<const TrainingSample> samples, std::span<const std::size_t> indices)
{
  std::vector<CourseId> labels;
  labels.reserve(indices.size());
  for (std::size_t i : indices) {
    labels.push_back(samples[i].label);
  }
  return entropy(labels);
}

struct SplitScore
{
  double gain = 0.0;
  double intrinsic = 0.0;
  std::size_t parts = 0;
};

SplitScore score_split(
  std::span<const TrainingSample> samples, std::span<const std::size_t> indices,
  const SplitTest & split)
{
  const Partition parts = partition(samples, indices, split);
  const double n = static_cast<double>(indices.size());
  double remainder = 0.0;
  double intrinsic = 0.0;
  for (const auto & members : parts.members) {
    const double w = static_cast<double>(members.size()) / n;
    remainder += w * entropy_of(samples, members);
    intrinsic -= w * std::log2(w);
  }
  return {std::max(0.0, entropy_of(samples, indices) - remainder), std::max(0.0, intrinsic),
          parts.members.size()};
}

std::vector<std::size_t> all_indices(std::size_t n)
{
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

SplitScore checked_score(std::span<const TrainingSample> samples, const SplitTest & split)
{
  if (samples.empty()) {
    throw std::invalid_argument("information gain over no samples");
  }
  const auto idx = all_indices(samples.size());
  const SplitScore s = score_split(samples, idx, split);
  if (split.binary && s.parts < 2) {
    throw std::invalid_argument("degenerate split: '" + split.describe() + "' leaves one side empty");
  }
  return s;
}

}  // namespace

double information_gain(std::span<const TrainingSample> samples, const SplitTest & split)
{
  return checked_score(samples, split).gain;
}

double gain_ratio(std::span<const TrainingSample> samples, const SplitTest & split)
{
  const SplitScore s = checked_score(samples, split);
  return s.intrinsic > 0.0 ? s.gain / s.intrinsic : 0.0;
}

std::size_t DecisionTree::leaf_count() const noexcept
{
  return static_cast<std::size_t>(
    std::count_if(nodes.begin(), nodes.end(), [](const DecisionNode & n) { return n.is_leaf(); }));
}

std::size_t DecisionTree::depth() const
{
  if (nodes.empty()) {
    return 0;
  }
  std::function<std::size_t(std::size_t)> walk = [&](std::size_t id) -> std::size_t {
    std::size_t best = 0;
    for (const auto & b : nodes[id].branches) {
      best = std::max(best, 1 + walk(b.child));
    }
    return best;
  };
  return walk(0);
}

ValidationReport validate_tree(
  const DecisionTree & tree, const FacultySchema & schema, const std::string & path)
{
  ValidationReport out;
  if (tree.nodes.empty()) {
    out.push_back({path + ".nodes", "empty"});
    return out;
  }
  std::vector<int> parents(tree.nodes.size(), 0);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto & node = tree.nodes[i];
    const std::string at = path + ".nodes[" + std::to_string(i) + "]";
    if (!schema.has_course(node.label)) {
      out.push_back({at + ".label", "unknown course '" + node.label.str() + "'"});
    }
    if (node.is_leaf()) {
      continue;
    }
    if (!node.split) {
      out.push_back({at + ".split", "internal node without split"});
    }
    for (std::size_t b = 0; b < node.branches.size(); ++b) {
      const auto & br = node.branches[b];
      const std::string bat = at + ".branches[" + std::to_string(b) + "]";
      if (br.child <= i || br.child >= tree.nodes.size()) {
        out.push_back({bat + ".child", "child index out of preorder range"});
        continue;
      }
      ++parents[br.child];
      try {
        check_well_formed(br.test);
      } catch (const ValidationError & e) {
        out.push_back({bat + ".test", e.what()});
      }
      if (node.split && br.test.attribute != node.split->attribute) {
        out.push_back({bat + ".test", "branch tests a different attribute than its split"});
      }
    }
  }
  for (std::size_t i = 1; i < parents.size(); ++i) {
    if (parents[i] != 1) {
      out.push_back({path + ".nodes[" + std::to_string(i) + "]", "node must have exactly one parent"});
    }
  }
  if (!out.empty()) {
    return out;
  }
  // nominal attributes at most once per root-to-leaf path
  std::function<void(std::size_t, std::set<Attribute>)> walk = [&](std::size_t id, std::set<Attribute> used) {
    const auto & node = tree.nodes[id];
    if (node.split && !node.split->binary) {
      if (!used.insert(node.split->attribute).second) {
        out.push_back(
          {path + ".nodes[" + std::to_string(id) + "]",
           "nominal attribute " + std::string(to_string(node.split->attribute)) + " repeated on a path"});
      }
    }
    for (const auto & b : node.branches) {
      walk(b.child, used);
    }
  };
  walk(0, {});
  return out;
}

namespace
{

class Builder
{
public:
  Builder(std::span<const TrainingSample> samples, const FacultySchema & schema, Id3Options options)
  : samples_(samples), schema_(schema), options_(options)
  {
  }

  std::vector<DecisionNode> run()
  {
    grow(all_indices(samples_.size()), {});
    return std::move(nodes_);
  }

private:
  struct Candidate
  {
    SplitTest split;
    double score = 0.0;
  };

  std::size_t rank(const CourseId & c) const
  {
    return schema_.course_rank(c).value_or(std::numeric_limits<std::size_t>::max());
  }

  CourseId majority(const std::vector<std::size_t> & idx) const
  {
    std::map<CourseId, std::size_t> counts;
    for (std::size_t i : idx) {
      ++counts[samples_[i].label];
    }
    const CourseId * best = nullptr;
    std::size_t best_count = 0;
    for (const auto & [label, count] : counts) {
      if (
        best == nullptr || count > best_count ||
        (count == best_count && rank(label) < rank(*best))) {
        best = &label;
        best_count = count;
      }
    }
    return *best;
  }

  std::vector<SplitTest> candidate_splits(
    const std::vector<std::size_t> & idx, const std::set<Attribute> & used) const
  {
    std::vector<SplitTest> out;
    for (Degree d : kDegrees) {
      const Attribute a = attribute_of(d);
      if (!used.count(a)) {
        out.push_back(SplitTest::nominal(a));
      }
    }
    std::set<CourseSet> course_sets;
    for (std::size_t i : idx) {
      const auto & taught = samples_[i].taught;
      if (!taught.empty()) {
        course_sets.insert(taught);
      }
      for (const auto & c : taught) {
        course_sets.insert(CourseSet{c});
      }
    }
    for (const auto & s : course_sets) {
      out.push_back(SplitTest::binary_test(Predicate::contains_all(s)));
    }
    std::set<double> values;
    for (std::size_t i : idx) {
      values.insert(samples_[i].experience);
    }
    for (auto it = values.begin(); it != values.end() && std::next(it) != values.end(); ++it) {
      out.push_back(SplitTest::binary_test(Predicate::at_least((*it + *std::next(it)) / 2.0)));
    }
    return out;
  }

  static bool better(const Candidate & a, const Candidate & b)
  {
    constexpr double kTie = 1e-12;
    if (a.score > b.score + kTie) {
      return true;
    }
    if (b.score > a.score + kTie) {
      return false;
    }
    if (a.split.attribute != b.split.attribute) {
      return a.split.attribute < b.split.attribute;
    }
    return a.split.describe() < b.split.describe();
  }

  std::optional<Candidate> choose(
    const std::vector<std::size_t> & idx, const std::set<Attribute> & used) const
  {
    std::optional<Candidate> best;
    for (auto & split : candidate_splits(idx, used)) {
      const SplitScore s = score_split(samples_, idx, split);
      if (s.parts < 2) {
        continue;
      }
      double score = s.gain;
      if (options_.criterion == SplitCriterion::gain_ratio) {
        score = s.intrinsic > 0.0 ? s.gain / s.intrinsic : 0.0;
      }
      Candidate c{std::move(split), score};
      if (!best || better(c, *best)) {
        best = std::move(c);
      }
    }
    return best;
  }

  std::size_t grow(const std::vector<std::size_t> & idx, std::set<Attribute> used)
  {
    const std::size_t id = nodes_.size();
    nodes_.push_back(DecisionNode{majority(idx), idx.size(), std::nullopt, {}});
    const bool pure = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) {
      return samples_[i].label == samples_[idx.front()].label;
    });
    if (pure) {
      return id;
    }
    auto best = choose(idx, used);
    if (!best) {
      return id;
    }
    Partition parts = partition(samples_, idx, best->split);
    if (!best->split.binary) {
      used.insert(best->split.attribute);
    }
    nodes_[id].split = best->split;
    for (std::size_t k = 0; k < parts.outcomes.size(); ++k) {
      const std::size_t child = grow(parts.members[k], used);
      nodes_[id].branches.push_back(Branch{std::move(parts.outcomes[k]), child});
    }
    return id;
  }

  std::span<const TrainingSample> samples_;
  const FacultySchema & schema_;
  Id3Options options_;
  std::vector<DecisionNode> nodes_;
};

std::size_t set_size(const Predicate & p)
{
  if (const auto * in = std::get_if<NominalIn>(&p.test)) {
    return in->values.size();
  }
  return 0;
}

}  // namespace

DecisionTree build_id3(
  std::span<const TrainingSample> samples, const FacultySchema & schema, std::string expert_id,
  Id3Options options)
{
  if (samples.empty()) {
    throw std::invalid_argument("build_id3: no training samples");
  }
  for (const auto & s : samples) {
    if (s.label.empty()) {
      throw std::invalid_argument("build_id3: unlabeled sample");
    }
  }
  return DecisionTree{std::move(expert_id), Builder(samples, schema, options).run()};
}

DecisionTree build_id3(const Questionnaire & q, const FacultySchema & schema, Id3Options options)
{
  const auto samples = samples_from(q);
  return build_id3(samples, schema, q.expert_id, options);
}

bool Classification::used_fallback() const noexcept
{
  return std::any_of(trace.begin(), trace.end(), [](const ClassifyStep & s) {
    return !s.branch.has_value() && !s.note.empty();
  });
}

Classification classify(const DecisionTree & tree, const CandidateProfile & candidate)
{
  Classification out;
  std::size_t id = 0;
  while (true) {
    const auto & node = tree.nodes.at(id);
    if (node.is_leaf()) {
      out.trace.push_back({id, std::nullopt, {}});
      out.course = node.label;
      return out;
    }
    std::optional<std::size_t> pick;
    for (std::size_t b = 0; b < node.branches.size(); ++b) {
      if (!node.branches[b].test.holds(candidate)) {
        continue;
      }
      if (!pick || set_size(node.branches[b].test) < set_size(node.branches[*pick].test)) {
        pick = b;
      }
    }
    if (!pick) {
      std::string note = "no branch matches";
      if (node.split && kind_of(node.split->attribute) == AttributeKind::nominal &&
          !candidate.degree(degree_of(node.split->attribute))) {
        note = std::string(to_string(node.split->attribute)) + " absent";
      }
      out.trace.push_back({id, std::nullopt, note + "; majority fallback " + node.label.str()});
      out.course = node.label;
      return out;
    }
    out.trace.push_back({id, pick, node.branches[*pick].test.describe()});
    id = node.branches[*pick].child;
  }
}

CourseId classify(const DecisionTree & tree, const TrainingSample & sample)
{
  std::size_t id = 0;
  while (true) {
    const auto & node = tree.nodes.at(id);
    const auto it = std::find_if(node.branches.begin(), node.branches.end(), [&](const Branch & b) {
      return routes(b.test, sample);
    });
    if (it == node.branches.end()) {
      return node.label;
    }
    id = it->child;
  }
}

}  // namespace facultas
