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

#include "facultas/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "facultas/json_io.hpp"
#include "facultas/service.hpp"

namespace facultas::cli
{

namespace
{

/// Weight config named by FACULTAS_CONFIG, or the defaults.
WeightFunctionConfig fallback_weights()
{
  const char * env = std::getenv("FACULTAS_CONFIG");
  if (env == nullptr || *env == '\0') {
    return {};
  }
  const Json j = parse_json_text(read_text_file(env), env);
  if (j.is_object() && j.contains("weight_config")) {
    return weight_config_from_json(j.at("weight_config"));
  }
  return weight_config_from_json(j);
}

void print_report(std::ostream & os, const ValidationReport & report)
{
  for (const auto & v : report) {
    os << "  " << v.str() << "\n";
  }
}

/// Loads a KB and rejects it when invalid. Returns nullopt after printing.
std::optional<KnowledgeBaseDoc> load_valid_kb(const std::string & path, std::ostream & err)
{
  auto kb = load_kb(path, fallback_weights());
  const auto report = validate_kb(kb);
  if (!report.empty()) {
    err << path << ": invalid knowledge base\n";
    print_report(err, report);
    return std::nullopt;
  }
  return kb;
}

std::string pad(std::string s, std::size_t width)
{
  if (s.size() < width) {
    s.append(width - s.size(), ' ');
  }
  return s;
}

std::string course_or_none(const std::optional<CourseId> & c)
{
  return c ? c->str() : std::string(kNoneLabel);
}

void print_trace(std::ostream & os, const ExpertVote & vote)
{
  os << "  expert " << vote.expert_id << ": " << course_or_none(vote.recommended) << "\n";
  for (const auto & f : vote.trace.rules) {
    os << "    " << pad(f.rule_id, 16) << pad(f.consequent.str(), 8) << f.score << "/"
       << f.antecedent_count() << "\n";
    for (std::size_t i = 0; i < f.tests.size(); ++i) {
      os << "      [" << (f.satisfied[i] ? 'x' : ' ') << "] " << f.tests[i] << "\n";
    }
  }
  os << "    " << pad("course", 10) << pad("score", 8) << pad("weight", 12) << "weighted\n";
  for (const auto & s : vote.scores) {
    os << "    " << pad(s.course.str(), 10) << pad(std::to_string(s.score), 8)
       << pad(format_number(s.weight), 12) << format_number(s.weighted) << "\n";
  }
}

void print_recommendation(std::ostream & os, const FinalRecommendation & r, bool explain)
{
  os << r.candidate_id << ": " << course_or_none(r.final);
  if (!r.tie_break.empty()) {
    os << " (" << r.tie_break << ")";
  }
  os << "\n";
  if (!explain) {
    return;
  }
  for (const auto & v : r.votes) {
    print_trace(os, v);
  }
  for (const auto & t : r.tally) {
    os << "  votes " << pad(t.course.str(), 8) << t.votes << "  sum " << format_number(t.weighted_sum) << "\n";
  }
}

struct Args
{
  std::string kb;
  std::string input;
  std::string mode = "direct";
  std::string criterion = "information_gain";
  std::string output;
  std::string weights = "on";
  std::string course;
  std::string addr = "127.0.0.1:8080";
  std::string kb_out;
  std::size_t n = 120;
  double noise = 0.0;
  std::uint64_t seed = 1;
  std::size_t experts = 5;
  bool explain = false;
  bool json = false;
};

int cmd_validate(const Args & a, std::ostream & out)
{
  const WeightFunctionConfig weights = fallback_weights();
  ValidationReport report;
  try {
    report = validate_kb_json(parse_json_text(read_text_file(a.kb), a.kb), weights);
  } catch (const FormatError & e) {
    report = {{e.path(), e.message()}};
  }
  if (a.json) {
    out << to_json(report).dump(2) << "\n";
  } else if (report.empty()) {
    const auto kb = load_kb(a.kb, weights);
    std::size_t rules = 0;
    for (const auto & r : rule_sets(kb)) {
      rules += r.rules.size();
    }
    out << a.kb << ": valid (" << kb.experts.size() << " experts, " << rules << " rules, mode "
        << to_string(kb.rule_mode) << ")\n";
  } else {
    out << a.kb << ": invalid (" << report.size() << " violations)\n";
    print_report(out, report);
  }
  return report.empty() ? kExitOk : kExitInvalid;
}

int cmd_build(const Args & a, std::ostream & out, std::ostream & err)
{
  auto kb = load_valid_kb(a.kb, err);
  if (!kb) {
    return kExitInvalid;
  }
  const RuleMode mode = *rule_mode_from_string(a.mode);
  Id3Options options;
  options.criterion =
    a.criterion == "gain_ratio" ? SplitCriterion::gain_ratio : SplitCriterion::information_gain;
  kb->rule_mode = mode;
  kb->compiled = compile_kb(*kb, mode, options);
  const std::string target = a.output.empty() ? a.kb : a.output;
  save_kb(target, *kb);

  Json summary;
  summary["mode"] = std::string(to_string(mode));
  summary["criterion"] = std::string(to_string(options.criterion));
  Json experts = Json::array();
  for (const auto & e : kb->compiled->experts) {
    Json je;
    je["expert_id"] = e.expert_id;
    je["rules"] = e.rules.rules.size();
    if (e.tree) {
      je["leaves"] = e.tree->leaf_count();
      je["depth"] = e.tree->depth();
    }
    experts.push_back(std::move(je));
  }
  summary["experts"] = std::move(experts);
  summary["output"] = target;
  if (a.json) {
    out << summary.dump(2) << "\n";
    return kExitOk;
  }
  out << "built " << to_string(mode) << " rules into " << target << "\n";
  for (const auto & e : kb->compiled->experts) {
    out << "  " << pad(e.expert_id, 12) << e.rules.rules.size() << " rules";
    if (e.tree) {
      out << ", depth " << e.tree->depth();
    }
    out << "\n";
    for (const auto & r : e.rules.rules) {
      out << "    " << r.rule_id << ": " << r.describe() << "\n";
    }
  }
  return kExitOk;
}

int cmd_recommend(const Args & a, std::ostream & out, std::ostream & err)
{
  const auto kb = load_valid_kb(a.kb, err);
  if (!kb) {
    return kExitInvalid;
  }
  const auto candidates = read_candidates(read_text_file(a.input), kb->schema);
  const auto rules = rule_sets(*kb);
  RecommendOptions options;
  options.weighted = a.weights == "on";
  Json all = Json::array();
  for (const auto & c : candidates) {
    const auto r = recommend_candidate(*kb, rules, c, options);
    if (a.json) {
      all.push_back(to_json(r));
    } else {
      print_recommendation(out, r, a.explain);
    }
  }
  if (a.json) {
    out << all.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_assign(const Args & a, std::ostream & out, std::ostream & err)
{
  const auto kb = load_valid_kb(a.kb, err);
  if (!kb) {
    return kExitInvalid;
  }
  const auto course = kb->schema.match_course(a.course);
  if (!course) {
    err << "unknown course '" << a.course << "'\n";
    return kExitInvalid;
  }
  const auto candidates = read_candidates(read_text_file(a.input), kb->schema);
  RecommendOptions options;
  options.weighted = a.weights == "on";
  const auto result = select_instructor_for_course(*kb, *course, candidates, options);
  if (a.json) {
    out << to_json(result).dump(2) << "\n";
    return kExitOk;
  }
  out << result.course << ": " << result.selected.value_or(kNoneLabel) << "\n";
  out << "  " << pad("candidate", 16) << pad("votes", 8) << "weighted_sum\n";
  for (const auto & t : result.tallies) {
    out << "  " << pad(t.candidate_id, 16) << pad(std::to_string(t.votes), 8)
        << format_number(t.weighted_sum) << "\n";
  }
  return kExitOk;
}

int cmd_evaluate(const Args & a, std::ostream & out, std::ostream & err)
{
  const auto kb = load_valid_kb(a.kb, err);
  if (!kb) {
    return kExitInvalid;
  }
  const auto data = read_dataset(read_text_file(a.input), kb->schema);
  RecommendOptions options;
  options.weighted = a.weights == "on";
  const auto report = evaluate(*kb, data, options);
  out << (a.json ? to_json(report).dump(2) + "\n" : format_table(report));
  return kExitOk;
}

int cmd_synth(const Args & a, std::ostream & out, std::ostream & err)
{
  const auto schema = load_schema(a.kb);
  const auto schema_report = validate_schema(schema);
  if (!schema_report.empty()) {
    err << a.kb << ": invalid schema\n";
    print_report(err, schema_report);
    return kExitInvalid;
  }
  const auto result = synth_generate(schema, a.n, a.noise, a.seed);
  if (!a.kb_out.empty()) {
    save_kb(a.kb_out, synth_knowledge_base(schema, result.questionnaire, a.experts, fallback_weights()));
  }
  out << (a.json ? to_json(result.dataset).dump(2) + "\n" : write_dataset_csv(result.dataset));
  return kExitOk;
}

int cmd_serve(const Args & a, std::ostream & out, std::ostream & err)
{
  auto kb = load_valid_kb(a.kb, err);
  if (!kb) {
    return kExitInvalid;
  }
  const auto colon = a.addr.rfind(':');
  if (colon == std::string::npos) {
    err << "--addr must be host:port\n";
    return kExitUsage;
  }
  const std::string host = a.addr.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(a.addr.substr(colon + 1));
  } catch (const std::exception &) {
    err << "--addr must be host:port\n";
    return kExitUsage;
  }
  ApiService service(std::move(*kb), std::filesystem::path(a.kb));
  HttpServer server(service);
  const int bound = server.bind(host, port);
  if (bound < 0) {
    err << "cannot bind " << a.addr << "\n";
    return kExitInvalid;
  }
  out << "listening on http://" << host << ":" << bound << std::endl;
  return server.listen() ? kExitOk : kExitInvalid;
}

}  // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Course instructor recommendation from weighted expert rules", "facultas"};
  app.require_subcommand(1);
  Args a;

  auto * validate = app.add_subcommand("validate", "Check a knowledge base");
  validate->add_option("kb", a.kb, "Knowledge base JSON")->required();
  validate->add_flag("--json", a.json, "Machine-readable output");

  auto * build = app.add_subcommand("build", "Compile and cache rules into the knowledge base");
  build->add_option("kb", a.kb, "Knowledge base JSON")->required();
  build->add_option("--mode", a.mode, "Rule mode")->check(CLI::IsMember({"direct", "tree"}));
  build->add_option("--criterion", a.criterion, "Split criterion for tree mode")
    ->check(CLI::IsMember({"information_gain", "gain_ratio"}));
  build->add_option("-o,--output", a.output, "Write here instead of overwriting the input");
  build->add_flag("--json", a.json, "Machine-readable output");

  auto * recommend = app.add_subcommand("recommend", "Recommend a course for each candidate");
  recommend->add_option("kb", a.kb, "Knowledge base JSON")->required();
  recommend->add_option("candidates", a.input, "Candidates CSV or JSON")->required();
  recommend->add_flag("--explain", a.explain, "Print rule traces");
  recommend->add_option("--weights", a.weights, "Expert weighting")->check(CLI::IsMember({"on", "off"}));
  recommend->add_flag("--json", a.json, "Machine-readable output");

  auto * assign = app.add_subcommand("assign", "Select the instructor for one course");
  assign->add_option("kb", a.kb, "Knowledge base JSON")->required();
  assign->add_option("candidates", a.input, "Candidates CSV or JSON")->required();
  assign->add_option("--course", a.course, "Course id")->required();
  assign->add_option("--weights", a.weights, "Expert weighting")->check(CLI::IsMember({"on", "off"}));
  assign->add_flag("--json", a.json, "Machine-readable output");

  auto * eval = app.add_subcommand("evaluate", "Accuracy on a labeled dataset");
  eval->add_option("kb", a.kb, "Knowledge base JSON")->required();
  eval->add_option("dataset", a.input, "Labeled dataset CSV or JSON")->required();
  eval->add_option("--weights", a.weights, "Expert weighting")->check(CLI::IsMember({"on", "off"}));
  eval->add_flag("--json", a.json, "Machine-readable output");

  auto * synth = app.add_subcommand("synth", "Generate a synthetic labeled dataset");
  synth->add_option("schema", a.kb, "Schema JSON or knowledge base JSON")->required();
  synth->add_option("-n", a.n, "Number of candidates")->required()->check(CLI::PositiveNumber);
  synth->add_option("--noise", a.noise, "Perturbation probability")->required()->check(CLI::Range(0.0, 1.0));
  synth->add_option("--seed", a.seed, "Random seed")->required();
  synth->add_option("--experts", a.experts, "Experts in the --kb-out knowledge base")->check(CLI::PositiveNumber);
  synth->add_option("--kb-out", a.kb_out, "Also write a knowledge base built from the ground truth");
  synth->add_flag("--json", a.json, "Machine-readable output");

  auto * serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("kb", a.kb, "Knowledge base JSON")->required();
  serve->add_option("--addr", a.addr, "host:port to listen on");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError & e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (*validate) {
      return cmd_validate(a, out);
    }
    if (*build) {
      return cmd_build(a, out, err);
    }
    if (*recommend) {
      return cmd_recommend(a, out, err);
    }
    if (*assign) {
      return cmd_assign(a, out, err);
    }
    if (*eval) {
      return cmd_evaluate(a, out, err);
    }
    if (*synth) {
      return cmd_synth(a, out, err);
    }
    return cmd_serve(a, out, err);
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace facultas::cli
