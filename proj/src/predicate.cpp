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

#include "facultas/predicate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace facultas
{

std::string_view to_string(Attribute a) noexcept
{
  return kAttributes[static_cast<std::size_t>(a)].name;
}

std::optional<Attribute> attribute_from_string(std::string_view name) noexcept
{
  for (const auto & spec : kAttributes) {
    if (spec.name == name) {
      return spec.attribute;
    }
  }
  return std::nullopt;
}

AttributeKind kind_of(Attribute a) noexcept
{
  return kAttributes[static_cast<std::size_t>(a)].kind;
}

Degree degree_of(Attribute a) noexcept
{
  switch (a) {
    case Attribute::msc:
      return Degree::msc;
    case Attribute::phd:
      return Degree::phd;
    default:
      return Degree::bsc;
  }
}

Attribute attribute_of(Degree d) noexcept
{
  switch (d) {
    case Degree::msc:
      return Attribute::msc;
    case Degree::phd:
      return Attribute::phd;
    case Degree::bsc:
      break;
  }
  return Attribute::bsc;
}

Predicate Predicate::nominal_in(Attribute a, ValueSet values)
{
  return Predicate{a, NominalIn{std::move(values)}, false};
}

Predicate Predicate::contains_all(CourseSet courses)
{
  return Predicate{Attribute::taught, SetContainsAll{std::move(courses)}, false};
}

Predicate Predicate::at_least(double threshold)
{
  return Predicate{Attribute::experience, NumericGE{threshold}, false};
}

Predicate Predicate::negation() const
{
  Predicate p = *this;
  p.negated = !negated;
  return p;
}

bool Predicate::holds(const CandidateProfile & c) const
{
  bool positive = false;
  if (const auto * in = std::get_if<NominalIn>(&test)) {
    const auto v = c.degree(degree_of(attribute));
    positive = v && in->values.count(std::string(*v)) > 0;
  } else if (const auto * all = std::get_if<SetContainsAll>(&test)) {
    positive = std::includes(c.taught.begin(), c.taught.end(), all->courses.begin(), all->courses.end());
  } else {
    positive = c.experience >= std::get<NumericGE>(test).threshold;
  }
  return positive != negated;
}

namespace
{

template <typename Range, typename Fn>
std::string join_braced(const Range & r, Fn && str)
{
  std::string out = "{";
  bool first = true;
  for (const auto & x : r) {
    if (!first) {
      out += ", ";
    }
    out += str(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string Predicate::describe() const
{
  std::string out(to_string(attribute));
  if (const auto * in = std::get_if<NominalIn>(&test)) {
    out += " in " + join_braced(in->values, [](const std::string & s) { return s; });
  } else if (const auto * all = std::get_if<SetContainsAll>(&test)) {
    out += negated ? " lacks " : " contains ";
    out += join_braced(all->courses, [](const CourseId & c) { return c.str(); });
  } else {
    out += negated ? " < " : " >= ";
    out += format_number(std::get<NumericGE>(test).threshold);
  }
  return out;
}

void check_well_formed(const Predicate & p)
{
  const auto kind = kind_of(p.attribute);
  if (const auto * in = std::get_if<NominalIn>(&p.test)) {
    if (kind != AttributeKind::nominal) {
      throw ValidationError("predicate: 'in' test on non-nominal attribute " + std::string(to_string(p.attribute)));
    }
    if (in->values.empty()) {
      throw ValidationError("predicate: empty value set");
    }
    if (p.negated) {
      throw ValidationError("predicate: nominal tests cannot be negated");
    }
  } else if (const auto * all = std::get_if<SetContainsAll>(&p.test)) {
    if (kind != AttributeKind::course_set) {
      throw ValidationError("predicate: containment test on " + std::string(to_string(p.attribute)));
    }
    if (all->courses.empty()) {
      throw ValidationError("predicate: empty course set");
    }
  } else {
    if (kind != AttributeKind::numeric) {
      throw ValidationError("predicate: threshold test on " + std::string(to_string(p.attribute)));
    }
    if (!std::isfinite(std::get<NumericGE>(p.test).threshold)) {
      throw ValidationError("predicate: threshold must be finite");
    }
  }
}

}  // namespace facultas
