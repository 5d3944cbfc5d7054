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
/// \brief Attribute tests shared by decision-tree splits and rule antecedents.

#ifndef FACULTAS__PREDICATE_HPP_
#define FACULTAS__PREDICATE_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "facultas/core.hpp"
#include "facultas/schema.hpp"

namespace facultas
{

/// The five candidate features. Declaration order is the split tie-break order.
enum class Attribute { bsc, msc, phd, taught, experience };

enum class AttributeKind { nominal, course_set, numeric };

struct AttributeSpec
{
  Attribute attribute;
  std::string_view name;
  AttributeKind kind;
};

inline constexpr std::array<AttributeSpec, 5> kAttributes{{
  {Attribute::bsc, "bsc", AttributeKind::nominal},
  {Attribute::msc, "msc", AttributeKind::nominal},
  {Attribute::phd, "phd", AttributeKind::nominal},
  {Attribute::taught, "taught", AttributeKind::course_set},
  {Attribute::experience, "experience", AttributeKind::numeric},
}};

std::string_view to_string(Attribute a) noexcept;
std::optional<Attribute> attribute_from_string(std::string_view name) noexcept;
AttributeKind kind_of(Attribute a) noexcept;

/// Degree tested by a nominal attribute. Precondition: kind_of(a) == nominal.
Degree degree_of(Attribute a) noexcept;
Attribute attribute_of(Degree d) noexcept;

/// Value is one of a set of nominal values.
struct NominalIn
{
  ValueSet values;
  friend bool operator==(const NominalIn &, const NominalIn &) = default;
};

/// Candidate has taught every listed course.
struct SetContainsAll
{
  CourseSet courses;
  friend bool operator==(const SetContainsAll &, const SetContainsAll &) = default;
};

/// Experience is at least `threshold`.
struct NumericGE
{
  double threshold = 0.0;
  friend bool operator==(const NumericGE &, const NumericGE &) = default;
};

using Test = std::variant<NominalIn, SetContainsAll, NumericGE>;

/// A single-attribute condition.
///
/// `negated` is only used on the false branch of binary tree splits
/// (taught / experience); nominal tests are never negated.
struct Predicate
{
  Attribute attribute = Attribute::bsc;
  Test test;
  bool negated = false;

  static Predicate nominal_in(Attribute a, ValueSet values);
  static Predicate contains_all(CourseSet courses);
  static Predicate at_least(double threshold);

  Predicate negation() const;

  /// Evaluates against an applicant. An absent degree fails every nominal test.
  bool holds(const CandidateProfile & c) const;

  /// Human-readable form, e.g. "msc in {Algorithm Designing, Artificial Intelligence}".
  std::string describe() const;

  friend bool operator==(const Predicate &, const Predicate &) = default;
};

/// Throws ValidationError when the test kind does not fit the attribute or a
/// value set is empty.
void check_well_formed(const Predicate & p);

}  // namespace facultas

#endif  // FACULTAS__PREDICATE_HPP_
