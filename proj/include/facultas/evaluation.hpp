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
/// \brief Accuracy reporting and the synthetic faculty generator.

#ifndef FACULTAS__EVALUATION_HPP_
#define FACULTAS__EVALUATION_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "facultas/aggregation.hpp"
#include "facultas/knowledge_base.hpp"

namespace facultas
{

/// A percentage held in hundredths, truncated toward zero.
class Percent
{
public:
  constexpr Percent() = default;
  static constexpr Percent from_hundredths(std::int64_t h) { return Percent(h); }

  constexpr std::int64_t hundredths() const noexcept { return hundredths_; }
  double value() const noexcept { return static_cast<double>(hundredths_) / 100.0; }

  /// Two-decimal form, e.g. "86.66".
  std::string str() const;

  friend constexpr auto operator<=>(const Percent &, const Percent &) = default;

private:
  constexpr explicit Percent(std::int64_t h) : hundredths_(h) {}
  std::int64_t hundredths_ = 0;
};

/// 100 * correct / total, truncated to two decimals.
/// Throws std::invalid_argument when total is 0 or correct > total.
Percent accuracy(std::size_t correct, std::size_t total);

struct LabeledSample
{
  CandidateProfile candidate;
  CourseId true_course;

  friend bool operator==(const LabeledSample &, const LabeledSample &) = default;
};

struct LabeledDataset
{
  FacultySchema schema;
  std::vector<LabeledSample> samples;

  friend bool operator==(const LabeledDataset &, const LabeledDataset &) = default;
};

inline constexpr const char * kNoneLabel = "none";

struct FacultyResult
{
  std::string faculty;
  std::size_t correct = 0;
  std::size_t total = 0;
  Percent accuracy;
  /// true course -> predicted course (or "none") -> count
  std::map<CourseId, std::map<std::string, std::size_t>> confusion;
};

struct EvalReport
{
  std::vector<FacultyResult> faculties;
  Percent average;  // mean of the reported faculty accuracies, truncated
};

/// Resubstitution accuracy of the full pipeline on every sample.
/// Throws ValidationError when the dataset schema differs from the KB's.
FacultyResult evaluate_faculty(
  const KnowledgeBaseDoc & kb, const LabeledDataset & data, const RecommendOptions & options = {});

EvalReport evaluate(
  const KnowledgeBaseDoc & kb, const LabeledDataset & data, const RecommendOptions & options = {});

EvalReport summarize(std::vector<FacultyResult> faculties);

/// Rows per faculty followed by an Average row.
std::string format_table(const EvalReport & report);

struct SynthResult
{
  LabeledDataset dataset;
  Questionnaire questionnaire;  // hidden ground truth the candidates were drawn from
};

/// Draws a ground-truth questionnaire for `schema`, then `n` candidates each
/// meeting its labeled course's row. With probability `noise` a candidate is
/// perturbed: a degree flipped, experience dropped below the threshold, or a
/// required course removed. Deterministic in `seed`.
SynthResult synth_generate(const FacultySchema & schema, std::size_t n, double noise, std::uint64_t seed);

/// KB with `experts` copies of the questionnaire. Each expert has the same
/// experience for every course (different across experts), so weighting
/// never changes an expert's choice.
KnowledgeBaseDoc synth_knowledge_base(
  const FacultySchema & schema, const Questionnaire & questionnaire, std::size_t experts,
  const WeightFunctionConfig & weights = {});

}  // namespace facultas

#endif  // FACULTAS__EVALUATION_HPP_
