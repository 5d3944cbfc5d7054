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

#include "facultas/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace facultas
{

namespace
{

std::string key_path(const std::string & base, std::string_view key)
{
  return base.empty() ? std::string(key) : base + "." + std::string(key);
}

std::string index_path(const std::string & base, std::size_t i)
{
  return base + "[" + std::to_string(i) + "]";
}

void expect_object(const Json & j, const std::string & path)
{
  if (!j.is_object()) {
    throw FormatError(path, "expected an object");
  }
}

const Json & field(const Json & j, std::string_view key, const std::string & path)
{
  expect_object(j, path);
  const auto it = j.find(std::string(key));
  if (it == j.end()) {
    throw FormatError(key_path(path, key), "missing");
  }
  return *it;
}

const Json * optional_field(const Json & j, std::string_view key, const std::string & path)
{
  expect_object(j, path);
  const auto it = j.find(std::string(key));
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string as_string(const Json & j, const std::string & path)
{
  if (!j.is_string()) {
    throw FormatError(path, "expected a string");
  }
  return j.get<std::string>();
}

double as_number(const Json & j, const std::string & path)
{
  if (!j.is_number()) {
    throw FormatError(path, "expected a number");
  }
  return j.get<double>();
}

std::size_t as_index(const Json & j, const std::string & path)
{
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw FormatError(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

const Json & as_array(const Json & j, const std::string & path)
{
  if (!j.is_array()) {
    throw FormatError(path, "expected an array");
  }
  return j;
}

std::vector<std::string> string_list(const Json & j, const std::string & path)
{
  std::vector<std::string> out;
  const auto & arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_string(arr[i], index_path(path, i)));
  }
  return out;
}

ValueSet value_set(const Json & j, const std::string & path)
{
  const auto list = string_list(j, path);
  return ValueSet(list.begin(), list.end());
}

CourseSet course_set(const Json & j, const std::string & path)
{
  CourseSet out;
  for (auto & s : string_list(j, path)) {
    out.insert(CourseId(std::move(s)));
  }
  return out;
}

Json string_array(const ValueSet & s)
{
  Json out = Json::array();
  for (const auto & v : s) {
    out.push_back(v);
  }
  return out;
}

Json string_array(const CourseSet & s)
{
  Json out = Json::array();
  for (const auto & v : s) {
    out.push_back(v.str());
  }
  return out;
}

Json course_or_null(const std::optional<CourseId> & c)
{
  return c ? Json(c->str()) : Json(nullptr);
}

}  // namespace

// ---------------------------------------------------------------- writers

Json to_json(const FacultySchema & s)
{
  Json j;
  j["faculty_name"] = s.faculty_name;
  Json courses = Json::array();
  for (const auto & c : s.courses) {
    courses.push_back(c.str());
  }
  j["courses"] = courses;
  j["bsc_domain"] = s.bsc_domain;
  j["msc_domain"] = s.msc_domain;
  j["phd_domain"] = s.phd_domain;
  j["experience_unit"] = std::string(to_string(s.experience_unit));
  j["experience_max"] = s.experience_max;
  return j;
}

Json to_json(const Questionnaire & q)
{
  Json rows = Json::array();
  for (const auto & r : q.rows) {
    Json row;
    row["course"] = r.course.str();
    row["bsc_req"] = string_array(r.bsc_req);
    row["msc_req"] = string_array(r.msc_req);
    row["phd_req"] = string_array(r.phd_req);
    row["required_taught"] = string_array(r.required_taught);
    row["min_experience"] = r.min_experience;
    rows.push_back(std::move(row));
  }
  Json j;
  j["expert_id"] = q.expert_id;
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const ExpertProfile & p)
{
  Json exp = Json::object();
  for (const auto & [c, years] : p.per_course_experience) {
    exp[c.str()] = years;
  }
  Json j;
  j["expert_id"] = p.expert_id;
  j["per_course_experience"] = std::move(exp);
  return j;
}

Json to_json(const WeightFunctionConfig & c)
{
  Json j;
  j["threshold"] = c.threshold;
  j["floor"] = c.floor;
  j["peak"] = c.peak;
  j["spread"] = c.spread;
  return j;
}

Json to_json(const Predicate & p)
{
  Json j;
  j["attribute"] = std::string(to_string(p.attribute));
  if (const auto * in = std::get_if<NominalIn>(&p.test)) {
    j["op"] = "in";
    j["values"] = string_array(in->values);
    return j;
  }
  if (const auto * all = std::get_if<SetContainsAll>(&p.test)) {
    j["op"] = "contains_all";
    j["courses"] = string_array(all->courses);
  } else {
    j["op"] = "ge";
    j["threshold"] = std::get<NumericGE>(p.test).threshold;
  }
  j["negated"] = p.negated;
  return j;
}

Json to_json(const DecisionTree & t)
{
  Json nodes = Json::array();
  for (const auto & n : t.nodes) {
    Json node;
    node["label"] = n.label.str();
    node["samples"] = n.sample_count;
    if (n.split) {
      Json split;
      split["attribute"] = std::string(to_string(n.split->attribute));
      if (n.split->binary) {
        split["test"] = to_json(*n.split->binary);
      }
      node["split"] = std::move(split);
    } else {
      node["split"] = nullptr;
    }
    Json branches = Json::array();
    for (const auto & b : n.branches) {
      Json br;
      br["test"] = to_json(b.test);
      br["child"] = b.child;
      branches.push_back(std::move(br));
    }
    node["branches"] = std::move(branches);
    nodes.push_back(std::move(node));
  }
  Json j;
  j["expert_id"] = t.expert_id;
  j["nodes"] = std::move(nodes);
  return j;
}

Json to_json(const RuleSet & r)
{
  Json rules = Json::array();
  for (const auto & rule : r.rules) {
    Json ants = Json::array();
    for (const auto & p : rule.antecedents) {
      ants.push_back(to_json(p));
    }
    Json jr;
    jr["rule_id"] = rule.rule_id;
    jr["expert_id"] = rule.expert_id;
    jr["antecedents"] = std::move(ants);
    jr["consequent"] = rule.consequent.str();
    jr["text"] = rule.describe();
    rules.push_back(std::move(jr));
  }
  Json j;
  j["expert_id"] = r.expert_id;
  j["rules"] = std::move(rules);
  return j;
}

Json to_json(const KnowledgeBaseDoc & kb)
{
  Json experts = Json::array();
  for (const auto & e : kb.experts) {
    Json je;
    je["questionnaire"] = to_json(e.questionnaire);
    je["profile"] = to_json(e.profile);
    experts.push_back(std::move(je));
  }
  Json j;
  j["schema"] = to_json(kb.schema);
  j["experts"] = std::move(experts);
  j["weight_config"] = to_json(kb.weight_config);
  j["rule_mode"] = std::string(to_string(kb.rule_mode));
  if (kb.compiled) {
    Json compiled;
    compiled["mode"] = std::string(to_string(kb.compiled->mode));
    compiled["criterion"] = std::string(to_string(kb.compiled->criterion));
    Json ce = Json::array();
    for (const auto & e : kb.compiled->experts) {
      Json x;
      x["expert_id"] = e.expert_id;
      if (e.tree) {
        x["tree"] = to_json(*e.tree);
      }
      x["rules"] = to_json(e.rules);
      ce.push_back(std::move(x));
    }
    compiled["experts"] = std::move(ce);
    j["compiled"] = std::move(compiled);
  }
  return j;
}

Json to_json(const CandidateProfile & c)
{
  Json j;
  j["candidate_id"] = c.candidate_id;
  j["bsc"] = c.bsc;
  j["msc"] = c.msc ? Json(*c.msc) : Json(nullptr);
  j["phd"] = c.phd ? Json(*c.phd) : Json(nullptr);
  j["taught"] = string_array(c.taught);
  j["experience"] = c.experience;
  return j;
}

Json to_json(const FiringReport & r)
{
  Json rules = Json::array();
  for (const auto & f : r.rules) {
    Json ants = Json::array();
    for (std::size_t i = 0; i < f.satisfied.size(); ++i) {
      Json a;
      a["test"] = i < f.tests.size() ? f.tests[i] : std::string();
      a["satisfied"] = static_cast<bool>(f.satisfied[i]);
      ants.push_back(std::move(a));
    }
    Json jr;
    jr["rule_id"] = f.rule_id;
    jr["consequent"] = f.consequent.str();
    jr["score"] = f.score;
    jr["antecedents"] = std::move(ants);
    rules.push_back(std::move(jr));
  }
  Json courses = Json::array();
  for (const auto & c : r.courses) {
    Json jc;
    jc["course"] = c.course.str();
    jc["score"] = c.score;
    jc["fraction"] = c.fraction;
    jc["best_rule"] = c.best_rule ? Json(*c.best_rule) : Json(nullptr);
    courses.push_back(std::move(jc));
  }
  Json j;
  j["rules"] = std::move(rules);
  j["courses"] = std::move(courses);
  return j;
}

Json to_json(const ExpertVote & v)
{
  Json scores = Json::array();
  for (const auto & s : v.scores) {
    Json js;
    js["course"] = s.course.str();
    js["score"] = s.score;
    js["fraction"] = s.fraction;
    js["weight"] = s.weight;
    js["weighted"] = s.weighted;
    scores.push_back(std::move(js));
  }
  Json j;
  j["expert_id"] = v.expert_id;
  j["recommended"] = course_or_null(v.recommended);
  j["scores"] = std::move(scores);
  j["trace"] = to_json(v.trace);
  return j;
}

Json to_json(const FinalRecommendation & r)
{
  Json tally = Json::array();
  for (const auto & t : r.tally) {
    Json jt;
    jt["course"] = t.course.str();
    jt["votes"] = t.votes;
    jt["weighted_sum"] = t.weighted_sum;
    tally.push_back(std::move(jt));
  }
  Json votes = Json::array();
  for (const auto & v : r.votes) {
    votes.push_back(to_json(v));
  }
  Json j;
  j["candidate_id"] = r.candidate_id;
  j["final"] = course_or_null(r.final);
  j["tally"] = std::move(tally);
  j["tie_break"] = r.tie_break;
  j["votes"] = std::move(votes);
  return j;
}

Json to_json(const CourseAssignment & a)
{
  Json tallies = Json::array();
  for (const auto & t : a.tallies) {
    Json jt;
    jt["candidate_id"] = t.candidate_id;
    jt["votes"] = t.votes;
    jt["weighted_sum"] = t.weighted_sum;
    tallies.push_back(std::move(jt));
  }
  Json j;
  j["course"] = a.course.str();
  j["selected"] = a.selected ? Json(*a.selected) : Json(nullptr);
  j["tallies"] = std::move(tallies);
  return j;
}

Json to_json(const EvalReport & r)
{
  Json faculties = Json::array();
  for (const auto & f : r.faculties) {
    Json confusion = Json::object();
    for (const auto & [truth, row] : f.confusion) {
      Json jr = Json::object();
      for (const auto & [pred, n] : row) {
        jr[pred] = n;
      }
      confusion[truth.str()] = std::move(jr);
    }
    Json jf;
    jf["faculty"] = f.faculty;
    jf["correct"] = f.correct;
    jf["total"] = f.total;
    jf["accuracy"] = f.accuracy.str();
    jf["confusion"] = std::move(confusion);
    faculties.push_back(std::move(jf));
  }
  Json j;
  j["faculties"] = std::move(faculties);
  j["average"] = r.average.str();
  return j;
}

Json to_json(const LabeledDataset & d)
{
  Json samples = Json::array();
  for (const auto & s : d.samples) {
    Json js = to_json(s.candidate);
    js["course"] = s.true_course.str();
    samples.push_back(std::move(js));
  }
  Json j;
  j["schema"] = to_json(d.schema);
  j["samples"] = std::move(samples);
  return j;
}

Json to_json(const ValidationReport & r)
{
  Json violations = Json::array();
  for (const auto & v : r) {
    Json jv;
    jv["path"] = v.path;
    jv["message"] = v.message;
    violations.push_back(std::move(jv));
  }
  Json j;
  j["valid"] = r.empty();
  j["violations"] = std::move(violations);
  return j;
}

// ---------------------------------------------------------------- readers

FacultySchema schema_from_json(const Json & j, const std::string & path)
{
  FacultySchema s;
  if (const auto * name = optional_field(j, "faculty_name", path)) {
    s.faculty_name = as_string(*name, key_path(path, "faculty_name"));
  }
  for (auto & c : string_list(field(j, "courses", path), key_path(path, "courses"))) {
    s.courses.emplace_back(std::move(c));
  }
  s.bsc_domain = string_list(field(j, "bsc_domain", path), key_path(path, "bsc_domain"));
  s.msc_domain = string_list(field(j, "msc_domain", path), key_path(path, "msc_domain"));
  s.phd_domain = string_list(field(j, "phd_domain", path), key_path(path, "phd_domain"));
  if (const auto * unit = optional_field(j, "experience_unit", path)) {
    const std::string u = as_string(*unit, key_path(path, "experience_unit"));
    if (u == "years") {
      s.experience_unit = ExperienceUnit::years;
    } else if (u == "semesters") {
      s.experience_unit = ExperienceUnit::semesters;
    } else {
      throw FormatError(key_path(path, "experience_unit"), "expected 'years' or 'semesters'");
    }
  }
  s.experience_max = as_number(field(j, "experience_max", path), key_path(path, "experience_max"));
  return s;
}

Questionnaire questionnaire_from_json(const Json & j, const std::string & path)
{
  Questionnaire q;
  q.expert_id = as_string(field(j, "expert_id", path), key_path(path, "expert_id"));
  const std::string rows_path = key_path(path, "rows");
  const auto & rows = as_array(field(j, "rows", path), rows_path);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string at = index_path(rows_path, i);
    const auto & jr = rows[i];
    QuestionnaireRow r;
    r.course = CourseId(as_string(field(jr, "course", at), key_path(at, "course")));
    r.bsc_req = value_set(field(jr, "bsc_req", at), key_path(at, "bsc_req"));
    r.msc_req = value_set(field(jr, "msc_req", at), key_path(at, "msc_req"));
    r.phd_req = value_set(field(jr, "phd_req", at), key_path(at, "phd_req"));
    if (const auto * t = optional_field(jr, "required_taught", at)) {
      r.required_taught = course_set(*t, key_path(at, "required_taught"));
    }
    r.min_experience = as_number(field(jr, "min_experience", at), key_path(at, "min_experience"));
    q.rows.push_back(std::move(r));
  }
  return q;
}

ExpertProfile profile_from_json(const Json & j, const std::string & path)
{
  ExpertProfile p;
  p.expert_id = as_string(field(j, "expert_id", path), key_path(path, "expert_id"));
  if (const auto * exp = optional_field(j, "per_course_experience", path)) {
    const std::string at = key_path(path, "per_course_experience");
    expect_object(*exp, at);
    for (const auto & [course, years] : exp->items()) {
      p.per_course_experience[CourseId(course)] = as_number(years, key_path(at, course));
    }
  }
  return p;
}

WeightFunctionConfig weight_config_from_json(const Json & j, const std::string & path)
{
  WeightFunctionConfig c;
  const auto read = [&](std::string_view key, double & out) {
    if (const auto * v = optional_field(j, key, path)) {
      out = as_number(*v, key_path(path, key));
    }
  };
  read("threshold", c.threshold);
  read("floor", c.floor);
  read("peak", c.peak);
  read("spread", c.spread);
  return c;
}

Predicate predicate_from_json(const Json & j, const std::string & path)
{
  const std::string attr_name = as_string(field(j, "attribute", path), key_path(path, "attribute"));
  const auto attr = attribute_from_string(attr_name);
  if (!attr) {
    throw FormatError(key_path(path, "attribute"), "unknown attribute '" + attr_name + "'");
  }
  const std::string op = as_string(field(j, "op", path), key_path(path, "op"));
  Predicate p;
  if (op == "in") {
    p = Predicate::nominal_in(*attr, value_set(field(j, "values", path), key_path(path, "values")));
  } else if (op == "contains_all") {
    p = Predicate::contains_all(course_set(field(j, "courses", path), key_path(path, "courses")));
  } else if (op == "ge") {
    p = Predicate::at_least(as_number(field(j, "threshold", path), key_path(path, "threshold")));
  } else {
    throw FormatError(key_path(path, "op"), "unknown op '" + op + "'");
  }
  p.attribute = *attr;
  if (const auto * neg = optional_field(j, "negated", path)) {
    if (!neg->is_boolean()) {
      throw FormatError(key_path(path, "negated"), "expected a boolean");
    }
    p.negated = neg->get<bool>();
  }
  try {
    check_well_formed(p);
  } catch (const ValidationError & e) {
    throw FormatError(path, e.what());
  }
  return p;
}

DecisionTree tree_from_json(const Json & j, const std::string & path)
{
  DecisionTree t;
  t.expert_id = as_string(field(j, "expert_id", path), key_path(path, "expert_id"));
  const std::string nodes_path = key_path(path, "nodes");
  const auto & nodes = as_array(field(j, "nodes", path), nodes_path);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string at = index_path(nodes_path, i);
    const auto & jn = nodes[i];
    DecisionNode n;
    n.label = CourseId(as_string(field(jn, "label", at), key_path(at, "label")));
    if (const auto * samples = optional_field(jn, "samples", at)) {
      n.sample_count = as_index(*samples, key_path(at, "samples"));
    }
    if (const auto * split = optional_field(jn, "split", at)) {
      const std::string sp = key_path(at, "split");
      const std::string name = as_string(field(*split, "attribute", sp), key_path(sp, "attribute"));
      const auto attr = attribute_from_string(name);
      if (!attr) {
        throw FormatError(key_path(sp, "attribute"), "unknown attribute '" + name + "'");
      }
      if (const auto * test = optional_field(*split, "test", sp)) {
        n.split = SplitTest::binary_test(predicate_from_json(*test, key_path(sp, "test")));
      } else {
        n.split = SplitTest::nominal(*attr);
      }
    }
    const std::string bp = key_path(at, "branches");
    if (const auto * branches = optional_field(jn, "branches", at)) {
      as_array(*branches, bp);
      for (std::size_t b = 0; b < branches->size(); ++b) {
        const std::string bat = index_path(bp, b);
        const auto & jb = (*branches)[b];
        n.branches.push_back(
          {predicate_from_json(field(jb, "test", bat), key_path(bat, "test")),
           as_index(field(jb, "child", bat), key_path(bat, "child"))});
      }
    }
    t.nodes.push_back(std::move(n));
  }
  return t;
}

RuleSet rule_set_from_json(const Json & j, const std::string & path)
{
  RuleSet r;
  r.expert_id = as_string(field(j, "expert_id", path), key_path(path, "expert_id"));
  const std::string rules_path = key_path(path, "rules");
  const auto & rules = as_array(field(j, "rules", path), rules_path);
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const std::string at = index_path(rules_path, i);
    const auto & jr = rules[i];
    Rule rule;
    rule.rule_id = as_string(field(jr, "rule_id", at), key_path(at, "rule_id"));
    rule.expert_id = r.expert_id;
    if (const auto * e = optional_field(jr, "expert_id", at)) {
      rule.expert_id = as_string(*e, key_path(at, "expert_id"));
    }
    rule.consequent = CourseId(as_string(field(jr, "consequent", at), key_path(at, "consequent")));
    const std::string ap = key_path(at, "antecedents");
    const auto & ants = as_array(field(jr, "antecedents", at), ap);
    for (std::size_t a = 0; a < ants.size(); ++a) {
      rule.antecedents.push_back(predicate_from_json(ants[a], index_path(ap, a)));
    }
    r.rules.push_back(std::move(rule));
  }
  return r;
}

namespace
{

SplitCriterion criterion_from_json(const Json & j, const std::string & path)
{
  const std::string s = as_string(j, path);
  if (s == "information_gain") {
    return SplitCriterion::information_gain;
  }
  if (s == "gain_ratio") {
    return SplitCriterion::gain_ratio;
  }
  throw FormatError(path, "expected 'information_gain' or 'gain_ratio'");
}

RuleMode mode_from_json(const Json & j, const std::string & path)
{
  const auto m = rule_mode_from_string(as_string(j, path));
  if (!m) {
    throw FormatError(path, "expected 'direct' or 'tree'");
  }
  return *m;
}

}  // namespace

KnowledgeBaseDoc kb_from_json(const Json & j, const WeightFunctionConfig & fallback_weights)
{
  KnowledgeBaseDoc kb;
  kb.schema = schema_from_json(field(j, "schema", ""), "schema");
  const auto & experts = as_array(field(j, "experts", ""), "experts");
  for (std::size_t i = 0; i < experts.size(); ++i) {
    const std::string at = index_path("experts", i);
    ExpertEntry e;
    e.questionnaire = questionnaire_from_json(field(experts[i], "questionnaire", at), key_path(at, "questionnaire"));
    if (const auto * p = optional_field(experts[i], "profile", at)) {
      e.profile = profile_from_json(*p, key_path(at, "profile"));
    } else {
      e.profile.expert_id = e.questionnaire.expert_id;
    }
    kb.experts.push_back(std::move(e));
  }
  kb.weight_config = fallback_weights;
  if (const auto * w = optional_field(j, "weight_config", "")) {
    kb.weight_config = weight_config_from_json(*w);
  }
  if (const auto * m = optional_field(j, "rule_mode", "")) {
    kb.rule_mode = mode_from_json(*m, "rule_mode");
  }
  if (const auto * c = optional_field(j, "compiled", "")) {
    CompiledKb cache;
    cache.mode = mode_from_json(field(*c, "mode", "compiled"), "compiled.mode");
    if (const auto * crit = optional_field(*c, "criterion", "compiled")) {
      cache.criterion = criterion_from_json(*crit, "compiled.criterion");
    }
    const auto & ce = as_array(field(*c, "experts", "compiled"), "compiled.experts");
    for (std::size_t i = 0; i < ce.size(); ++i) {
      const std::string at = index_path("compiled.experts", i);
      CompiledExpert x;
      x.expert_id = as_string(field(ce[i], "expert_id", at), key_path(at, "expert_id"));
      if (const auto * t = optional_field(ce[i], "tree", at)) {
        x.tree = tree_from_json(*t, key_path(at, "tree"));
      }
      x.rules = rule_set_from_json(field(ce[i], "rules", at), key_path(at, "rules"));
      cache.experts.push_back(std::move(x));
    }
    kb.compiled = std::move(cache);
  }
  canonicalize(kb);
  return kb;
}

ValidationReport validate_kb_json(const Json & j, const WeightFunctionConfig & fallback_weights)
{
  try {
    return validate_kb(kb_from_json(j, fallback_weights));
  } catch (const FormatError & e) {
    return {{e.path(), e.message()}};
  } catch (const std::exception & e) {
    return {{"", e.what()}};
  }
}

RawCandidate raw_candidate_from_json(const Json & j, const std::string & path)
{
  RawCandidate c;
  if (const auto * id = optional_field(j, "candidate_id", path)) {
    c.candidate_id = as_string(*id, key_path(path, "candidate_id"));
  }
  c.bsc = as_string(field(j, "bsc", path), key_path(path, "bsc"));
  if (const auto * m = optional_field(j, "msc", path)) {
    c.msc = as_string(*m, key_path(path, "msc"));
  }
  if (const auto * p = optional_field(j, "phd", path)) {
    c.phd = as_string(*p, key_path(path, "phd"));
  }
  if (const auto * t = optional_field(j, "taught", path)) {
    if (t->is_string()) {
      std::stringstream ss(t->get<std::string>());
      for (std::string item; std::getline(ss, item, ';');) {
        c.taught.push_back(item);
      }
    } else {
      c.taught = string_list(*t, key_path(path, "taught"));
    }
  }
  c.experience = as_number(field(j, "experience", path), key_path(path, "experience"));
  return c;
}

// ---------------------------------------------------------------- files

std::string read_text_file(const std::filesystem::path & p)
{
  std::ifstream in(p, std::ios::binary);
  if (!in) {
    throw Error("cannot open '" + p.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path & p, const std::string & text)
{
  const auto tmp = std::filesystem::path(p.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot write '" + tmp.string() + "'");
    }
    out << text;
    if (!out.flush()) {
      throw Error("short write to '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, p);
}

Json parse_json_text(const std::string & text, const std::string & what)
{
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error & e) {
    throw FormatError(what, std::string("invalid JSON: ") + e.what());
  }
}

KnowledgeBaseDoc load_kb(const std::filesystem::path & p, const WeightFunctionConfig & fallback_weights)
{
  return kb_from_json(parse_json_text(read_text_file(p), p.string()), fallback_weights);
}

void save_kb(const std::filesystem::path & p, const KnowledgeBaseDoc & kb)
{
  write_text_file(p, to_json(kb).dump(2) + "\n");
}

FacultySchema load_schema(const std::filesystem::path & p)
{
  const Json j = parse_json_text(read_text_file(p), p.string());
  if (j.is_object() && j.contains("schema")) {
    return schema_from_json(j.at("schema"), "schema");
  }
  return schema_from_json(j, "");
}

// ---------------------------------------------------------------- CSV

std::vector<std::string> split_csv_line(const std::string & line)
{
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

namespace
{

struct CsvRecord
{
  std::size_t line = 0;
  RawCandidate raw;
  std::optional<std::string> course;
};

double parse_number(const std::string & s, const std::string & path)
{
  const std::string t = trim(s);
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw FormatError(path, "expected a number, got '" + t + "'");
  }
  return v;
}

bool looks_like_json(const std::string & text)
{
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      return ch == '[' || ch == '{';
    }
  }
  return false;
}

std::vector<CsvRecord> read_csv_records(const std::string & text, bool want_course)
{
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::map<std::string, std::size_t> cols;
  std::vector<CsvRecord> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) {
      continue;
    }
    auto cells = split_csv_line(line);
    if (cols.empty()) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        cols[fold_value(cells[i])] = i;
      }
      std::vector<std::string> required = {"candidate_id", "bsc", "msc", "phd", "taught", "experience"};
      if (want_course) {
        required.push_back("course");
      }
      for (const auto & r : required) {
        if (!cols.count(r)) {
          throw FormatError("line " + std::to_string(lineno), "header is missing column '" + r + "'");
        }
      }
      continue;
    }
    const std::string at = "line " + std::to_string(lineno);
    const auto cell = [&](const std::string & name) -> std::string {
      const std::size_t i = cols.at(name);
      if (i >= cells.size()) {
        throw FormatError(at, "missing column '" + name + "'");
      }
      return trim(cells[i]);
    };
    CsvRecord rec;
    rec.line = lineno;
    rec.raw.candidate_id = cell("candidate_id");
    rec.raw.bsc = cell("bsc");
    if (auto m = cell("msc"); !m.empty()) {
      rec.raw.msc = m;
    }
    if (auto p = cell("phd"); !p.empty()) {
      rec.raw.phd = p;
    }
    std::stringstream taught(cell("taught"));
    for (std::string item; std::getline(taught, item, ';');) {
      if (!trim(item).empty()) {
        rec.raw.taught.push_back(trim(item));
      }
    }
    rec.raw.experience = parse_number(cell("experience"), at + ".experience");
    if (want_course) {
      rec.course = cell("course");
    }
    out.push_back(std::move(rec));
  }
  if (cols.empty()) {
    throw FormatError("", "empty CSV input");
  }
  return out;
}

CandidateProfile checked_candidate(const RawCandidate & raw, const FacultySchema & schema, const std::string & at)
{
  try {
    return parse_candidate(raw, schema);
  } catch (const ValidationError & e) {
    throw FormatError(at, e.what());
  }
}

std::string csv_cell(const std::string & s)
{
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  }
  return out + "\"";
}

std::string csv_row(const CandidateProfile & c)
{
  std::string taught;
  for (const auto & t : c.taught) {
    taught += (taught.empty() ? "" : ";") + t.str();
  }
  return csv_cell(c.candidate_id) + "," + csv_cell(c.bsc) + "," + csv_cell(c.msc.value_or("")) + "," +
         csv_cell(c.phd.value_or("")) + "," + csv_cell(taught) + "," + format_number(c.experience);
}

}  // namespace

std::vector<RawCandidate> read_raw_candidates(const std::string & text)
{
  std::vector<RawCandidate> out;
  if (looks_like_json(text)) {
    const Json j = parse_json_text(text, "candidates");
    if (j.is_object()) {
      out.push_back(raw_candidate_from_json(j, ""));
      return out;
    }
    const auto & arr = as_array(j, "");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back(raw_candidate_from_json(arr[i], index_path("", i)));
    }
    return out;
  }
  for (auto & rec : read_csv_records(text, false)) {
    out.push_back(std::move(rec.raw));
  }
  return out;
}

std::vector<CandidateProfile> read_candidates(const std::string & text, const FacultySchema & schema)
{
  std::vector<CandidateProfile> out;
  const auto raws = read_raw_candidates(text);
  for (std::size_t i = 0; i < raws.size(); ++i) {
    const std::string at = "candidate " + (raws[i].candidate_id.empty() ? std::to_string(i) : raws[i].candidate_id);
    out.push_back(checked_candidate(raws[i], schema, at));
  }
  return out;
}

LabeledDataset read_dataset(const std::string & text, const FacultySchema & schema)
{
  LabeledDataset out;
  out.schema = schema;
  const auto label = [&](const std::string & raw, const std::string & at) {
    auto c = schema.match_course(raw);
    if (!c) {
      throw FormatError(at, "unknown course '" + trim(raw) + "'");
    }
    return *c;
  };
  if (looks_like_json(text)) {
    const Json j = parse_json_text(text, "dataset");
    const Json & arr = j.is_object() ? field(j, "samples", "") : j;
    as_array(arr, "samples");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = index_path("samples", i);
      const auto raw = raw_candidate_from_json(arr[i], at);
      out.samples.push_back(
        {checked_candidate(raw, schema, at),
         label(as_string(field(arr[i], "course", at), key_path(at, "course")), key_path(at, "course"))});
    }
    return out;
  }
  for (const auto & rec : read_csv_records(text, true)) {
    const std::string at = "line " + std::to_string(rec.line);
    out.samples.push_back({checked_candidate(rec.raw, schema, at), label(*rec.course, at + ".course")});
  }
  return out;
}

std::string write_candidates_csv(const std::vector<CandidateProfile> & candidates)
{
  std::string out = "candidate_id,bsc,msc,phd,taught,experience\n";
  for (const auto & c : candidates) {
    out += csv_row(c) + "\n";
  }
  return out;
}

std::string write_dataset_csv(const LabeledDataset & data)
{
  std::string out = "candidate_id,bsc,msc,phd,taught,experience,course\n";
  for (const auto & s : data.samples) {
    out += csv_row(s.candidate) + "," + csv_cell(s.true_course.str()) + "\n";
  }
  return out;
}

}  // namespace facultas
