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

#include "facultas/evaluation.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace facultas
{

std::string Percent::str() const
{
  const std::int64_t h = hundredths_ < 0 ? -hundredths_ : hundredths_;
  std::ostringstream os;
  os << (hundredths_ < 0 ? "-" : "") << h / 100 << '.' << std::setw(2) << std::setfill('0') << h % 100;
  return os.str();
}

Percent accuracy(std::size_t correct, std::size_t total)
{
  if (total == 0) {
    throw std::invalid_argument("accuracy: N_total must be > 0");
  }
  if (correct > total) {
    throw std::invalid_argument("accuracy: N_r exceeds N_total");
  }
  const auto h = static_cast<std::int64_t>((static_cast<std::uint64_t>(correct) * 10000U) / total);
  return Percent::from_hundredths(h);
}

FacultyResult evaluate_faculty(
  const KnowledgeBaseDoc & kb, const LabeledDataset & data, const RecommendOptions & options)
{
  if (!(data.schema == kb.schema)) {
    throw ValidationError("dataset schema does not match the knowledge base schema");
  }
  if (data.samples.empty()) {
    throw std::invalid_argument("evaluate: empty dataset");
  }
  const auto rules = rule_sets(kb);
  FacultyResult out;
  out.faculty = kb.schema.faculty_name;
  out.total = data.samples.size();
  for (const auto & s : data.samples) {
    const auto rec = recommend_candidate(kb, rules, s.candidate, options);
    const std::string predicted = rec.final ? rec.final->str() : kNoneLabel;
    ++out.confusion[s.true_course][predicted];
    if (rec.final == s.true_course) {
      ++out.correct;
    }
  }
  out.accuracy = accuracy(out.correct, out.total);
  return out;
}

EvalReport evaluate(const KnowledgeBaseDoc & kb, const LabeledDataset & data, const RecommendOptions & options)
{
  return summarize({evaluate_faculty(kb, data, options)});
}

EvalReport summarize(std::vector<FacultyResult> faculties)
{
  EvalReport out;
  out.faculties = std::move(faculties);
  if (!out.faculties.empty()) {
    std::int64_t sum = 0;
    for (const auto & f : out.faculties) {
      sum += f.accuracy.hundredths();
    }
    out.average = Percent::from_hundredths(sum / static_cast<std::int64_t>(out.faculties.size()));
  }
  return out;
}

std::string format_table(const EvalReport & report)
{
  std::size_t width = 7;
  for (const auto & f : report.faculties) {
    width = std::max(width, f.faculty.size());
  }
  width += 2;
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "Faculty" << std::right << std::setw(6) << "N_r"
     << std::setw(9) << "N_total" << std::setw(10) << "Accuracy" << '\n';
  for (const auto & f : report.faculties) {
    os << std::left << std::setw(static_cast<int>(width)) << f.faculty << std::right << std::setw(6)
       << f.correct << std::setw(9) << f.total << std::setw(10) << f.accuracy.str() << '\n';
  }
  os << std::left << std::setw(static_cast<int>(width)) << "Average" << std::right << std::setw(6) << ""
     << std::setw(9) << "" << std::setw(10) << report.average.str() << '\n';
  return os.str();
}

namespace
{

// Raw engine output only: std:: distributions are not portable across
// standard libraries, mt19937_64 itself is.
class Draws
{
public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }

  template <typename T>
  std::vector<T> pick_distinct(const std::vector<T> & pool, std::size_t k)
  {
    std::vector<T> rest = pool;
    std::vector<T> out;
    while (out.size() < k && !rest.empty()) {
      const std::size_t i = below(rest.size());
      out.push_back(rest[i]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return out;
  }

private:
  std::mt19937_64 engine_;
};

template <typename Set>
const typename Set::value_type & nth(const Set & s, std::size_t i)
{
  return *std::next(s.begin(), static_cast<std::ptrdiff_t>(i));
}

Questionnaire draw_questionnaire(const FacultySchema & schema, Draws & rng)
{
  Questionnaire q{"ground-truth", {}};
  const double max_threshold = std::max(1.0, std::floor(schema.experience_max / 3.0));
  for (const auto & course : schema.courses) {
    QuestionnaireRow row;
    row.course = course;
    for (Degree d : kDegrees) {
      const auto & dom = schema.domain(d);
      const std::size_t k = (dom.size() > 1 && rng.unit() < 0.25) ? 2 : 1;
      for (auto & v : rng.pick_distinct(dom, k)) {
        row.requirement(d).insert(v);
      }
    }
    row.required_taught.insert(course);
    if (schema.courses.size() > 1 && rng.unit() < 0.3) {
      const auto & other = schema.courses[rng.below(schema.courses.size())];
      row.required_taught.insert(other);
    }
    row.min_experience = static_cast<double>(rng.below(static_cast<std::size_t>(max_threshold) + 1));
    q.rows.push_back(std::move(row));
  }
  return q;
}

CandidateProfile draw_candidate(
  const FacultySchema & schema, const QuestionnaireRow & row, Draws & rng)
{
  CandidateProfile c;
  c.bsc = nth(row.bsc_req, rng.below(row.bsc_req.size()));
  c.msc = nth(row.msc_req, rng.below(row.msc_req.size()));
  c.phd = nth(row.phd_req, rng.below(row.phd_req.size()));
  c.taught = row.required_taught;
  for (const auto & course : schema.courses) {
    if (rng.unit() < 0.2) {
      c.taught.insert(course);
    }
  }
  c.experience = std::min(schema.experience_max, row.min_experience + static_cast<double>(rng.below(6)));
  c.experience = std::max(c.experience, row.min_experience);
  return c;
}

struct Perturbation
{
  double u = 1.0;
  std::size_t kind = 0;
  std::uint64_t pick = 0;
  double fraction = 0.0;
};

void perturb(
  CandidateProfile & c, const FacultySchema & schema, const QuestionnaireRow & row, const Perturbation & p)
{
  std::size_t kind = p.kind;
  if (kind == 0) {
    const Degree d = kDegrees[p.pick % 3];
    std::vector<std::string> outside;
    for (const auto & v : schema.domain(d)) {
      if (!row.requirement(d).count(v)) {
        outside.push_back(v);
      }
    }
    if (!outside.empty()) {
      const std::string v = outside[(p.pick / 3) % outside.size()];
      if (d == Degree::bsc) {
        c.bsc = v;
      } else if (d == Degree::msc) {
        c.msc = v;
      } else {
        c.phd = v;
      }
      return;
    }
    if (d != Degree::bsc) {
      (d == Degree::msc ? c.msc : c.phd).reset();
      return;
    }
    kind = 1;
  }
  if (kind == 1) {
    if (row.min_experience > 0.0) {
      c.experience = std::floor(row.min_experience * p.fraction);
      return;
    }
    kind = 2;
  }
  c.taught.erase(row.course);
}

}  // namespace

SynthResult synth_generate(const FacultySchema & schema, std::size_t n, double noise, std::uint64_t seed)
{
  if (n == 0) {
    throw std::invalid_argument("synth_generate: n must be >= 1");
  }
  if (!(noise >= 0.0 && noise <= 1.0)) {
    throw std::invalid_argument("synth_generate: noise must be in [0, 1]");
  }
  if (!validate_schema(schema).empty()) {
    throw ValidationError("synth_generate: invalid schema");
  }
  Draws rng(seed);
  SynthResult out;
  out.questionnaire = draw_questionnaire(schema, rng);
  out.dataset.schema = schema;
  const RuleSet rules = rules_from_questionnaire(out.questionnaire);

  const int digits = static_cast<int>(std::to_string(n).size());
  for (std::size_t i = 0; i < n; ++i) {
    const CourseId label = schema.courses[rng.below(schema.courses.size())];
    const QuestionnaireRow & row = *out.questionnaire.row_for(label);

    // Redraw until the noise-free candidate is unambiguously its own course.
    CandidateProfile c;
    for (int attempt = 0; attempt < 64; ++attempt) {
      c = draw_candidate(schema, row, rng);
      if (recommend_unweighted(rules, c, schema).course == label) {
        break;
      }
    }
    // Always consumed so the perturbed subsets are nested in `noise`.
    Perturbation p;
    p.u = rng.unit();
    p.kind = rng.below(3);
    p.pick = rng.raw();
    p.fraction = rng.unit();
    if (p.u < noise) {
      perturb(c, schema, row, p);
    }

    std::ostringstream id;
    id << 'c' << std::setw(digits) << std::setfill('0') << (i + 1);
    c.candidate_id = id.str();
    out.dataset.samples.push_back({std::move(c), label});
  }
  return out;
}

KnowledgeBaseDoc synth_knowledge_base(
  const FacultySchema & schema, const Questionnaire & questionnaire, std::size_t experts,
  const WeightFunctionConfig & weights)
{
  KnowledgeBaseDoc kb;
  kb.schema = schema;
  kb.weight_config = weights;
  for (std::size_t k = 0; k < experts; ++k) {
    ExpertEntry e;
    e.questionnaire = questionnaire;
    e.questionnaire.expert_id = "e" + std::to_string(k + 1);
    e.profile.expert_id = e.questionnaire.expert_id;
    const double years = 3.0 + 6.0 * static_cast<double>(k % 5);
    for (const auto & c : schema.courses) {
      e.profile.per_course_experience[c] = years;
    }
    kb.experts.push_back(std::move(e));
  }
  return kb;
}

}  // namespace facultas
