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
/// \brief Vocabulary types shared by every facultas module.

#ifndef FACULTAS__CORE_HPP_
#define FACULTAS__CORE_HPP_

#include <compare>
#include <functional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace facultas
{

/// Short course token from the faculty catalog, e.g. "AI" or "DB".
class CourseId
{
public:
  CourseId() = default;
  explicit CourseId(std::string id) : id_(std::move(id)) {}

  const std::string & str() const noexcept { return id_; }
  bool empty() const noexcept { return id_.empty(); }

  friend auto operator<=>(const CourseId &, const CourseId &) = default;
  friend bool operator==(const CourseId &, const CourseId &) = default;

private:
  std::string id_;
};

inline std::ostream & operator<<(std::ostream & os, const CourseId & c) { return os << c.str(); }

using ValueSet = std::set<std::string>;
using CourseSet = std::set<CourseId>;

/// The three nominal education questions.
enum class Degree { bsc, msc, phd };

inline constexpr Degree kDegrees[] = {Degree::bsc, Degree::msc, Degree::phd};

std::string_view to_string(Degree d) noexcept;

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a schema or type invariant.
class ValidationError : public Error
{
public:
  using Error::Error;
};

/// Malformed external document (JSON / CSV) with a path to the offending field.
class FormatError : public Error
{
public:
  FormatError(std::string path, const std::string & what)
  : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)), message_(what)
  {
  }
  const std::string & path() const noexcept { return path_; }
  const std::string & message() const noexcept { return message_; }

private:
  std::string path_;
  std::string message_;
};

std::string trim(std::string_view s);

/// Trimmed, ASCII lower-cased form used to match hand-entered values.
std::string fold_value(std::string_view s);

/// Relative comparison for accumulated floating point scores.
bool nearly_equal(double a, double b) noexcept;

/// Formats a double the same way everywhere (shortest round-trip, no trailing zeros).
std::string format_number(double v);

}  // namespace facultas

template <>
struct std::hash<facultas::CourseId>
{
  std::size_t operator()(const facultas::CourseId & c) const noexcept
  {
    return std::hash<std::string>{}(c.str());
  }
};

#endif  // FACULTAS__CORE_HPP_
