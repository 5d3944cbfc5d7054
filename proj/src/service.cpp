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

#include "facultas/service.hpp"

#include <algorithm>
#include <cctype>

#include "httplib.h"

#include "facultas/aggregation.hpp"
#include "facultas/json_io.hpp"

namespace facultas
{

namespace
{

HttpResponse json_response(int status, const Json & body)
{
  HttpResponse r;
  r.status = status;
  r.body = body.dump(2) + "\n";
  r.headers["Content-Type"] = "application/json";
  return r;
}

HttpResponse error_response(int status, const std::string & message)
{
  Json body;
  body["error"] = message;
  return json_response(status, body);
}

HttpResponse report_response(const ValidationReport & report)
{
  return json_response(400, to_json(report));
}

std::optional<std::string> header(const std::map<std::string, std::string> & headers, std::string_view name)
{
  for (const auto & [k, v] : headers) {
    if (fold_value(k) == fold_value(name)) {
      return v;
    }
  }
  return std::nullopt;
}

std::string etag(std::uint64_t revision)
{
  return "\"" + std::to_string(revision) + "\"";
}

std::optional<std::uint64_t> parse_revision(std::string s)
{
  s = trim(s);
  if (s.rfind("W/", 0) == 0) {
    s = s.substr(2);
  }
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  return std::stoull(s);
}

CandidateProfile candidate_from(const Json & j, const FacultySchema & schema, const std::string & path)
{
  try {
    return parse_candidate(raw_candidate_from_json(j, path), schema);
  } catch (const ValidationError & e) {
    throw FormatError(path, e.what());
  }
}

}  // namespace

ApiService::ApiService(KnowledgeBaseDoc kb, std::optional<std::filesystem::path> kb_path)
: kb_path_(std::move(kb_path))
{
  const auto report = validate_kb(kb);
  if (!report.empty()) {
    throw ValidationError("knowledge base is invalid: " + report.front().str());
  }
  auto snap = std::make_shared<Snapshot>();
  snap->rules = rule_sets(kb);
  snap->kb = std::move(kb);
  snap->revision = 1;
  snapshot_ = std::move(snap);
}

std::shared_ptr<const ApiService::Snapshot> ApiService::current() const
{
  std::lock_guard<std::mutex> lock(snapshot_mutex_);
  return snapshot_;
}

std::uint64_t ApiService::revision() const
{
  return current()->revision;
}

HttpResponse ApiService::handle(
  std::string_view method, std::string_view path, std::string_view body,
  const std::map<std::string, std::string> & headers)
{
  try {
    if (path == "/health") {
      if (method != "GET") {
        return error_response(405, "method not allowed");
      }
      Json j;
      j["status"] = "ok";
      j["revision"] = revision();
      return json_response(200, j);
    }
    if (path == "/schema") {
      if (method != "GET") {
        return error_response(405, "method not allowed");
      }
      return json_response(200, to_json(current()->kb.schema));
    }
    if (path == "/kb") {
      if (method == "GET") {
        return get_kb();
      }
      if (method == "PUT") {
        return put_kb(body, headers);
      }
      return error_response(405, "method not allowed");
    }
    if (path == "/recommend" || path == "/recommend/whatif") {
      if (method != "POST") {
        return error_response(405, "method not allowed");
      }
      return recommend(body, path == "/recommend/whatif");
    }
    if (path == "/assign") {
      if (method != "POST") {
        return error_response(405, "method not allowed");
      }
      return assign(body);
    }
    return error_response(404, "no route for " + std::string(path));
  } catch (const FormatError & e) {
    return report_response({{e.path(), e.message()}});
  } catch (const ValidationError & e) {
    return report_response({{"", e.what()}});
  } catch (const std::invalid_argument & e) {
    return report_response({{"", e.what()}});
  } catch (const std::exception & e) {
    return error_response(500, e.what());
  }
}

HttpResponse ApiService::get_kb() const
{
  const auto snap = current();
  auto r = json_response(200, to_json(snap->kb));
  r.headers["ETag"] = etag(snap->revision);
  return r;
}

HttpResponse ApiService::put_kb(std::string_view body, const std::map<std::string, std::string> & headers)
{
  const auto if_match = header(headers, "If-Match");
  if (!if_match) {
    return error_response(400, "If-Match header with the current revision is required");
  }
  const auto expected = parse_revision(*if_match);
  if (!expected) {
    return error_response(400, "malformed If-Match revision");
  }
  const Json j = parse_json_text(std::string(body), "body");
  const auto report = validate_kb_json(j);
  if (!report.empty()) {
    return report_response(report);
  }
  auto kb = kb_from_json(j);

  std::lock_guard<std::mutex> write_lock(write_mutex_);
  const auto before = current();
  if (*expected != before->revision) {
    auto r = error_response(409, "stale revision " + std::to_string(*expected) + ", current is " +
                                   std::to_string(before->revision));
    r.headers["ETag"] = etag(before->revision);
    return r;
  }
  auto next = std::make_shared<Snapshot>();
  next->rules = rule_sets(kb);
  next->kb = std::move(kb);
  next->revision = before->revision + 1;
  if (kb_path_) {
    save_kb(*kb_path_, next->kb);
  }
  {
    std::lock_guard<std::mutex> lock(snapshot_mutex_);
    snapshot_ = next;
  }
  Json out;
  out["revision"] = next->revision;
  auto r = json_response(200, out);
  r.headers["ETag"] = etag(next->revision);
  return r;
}

HttpResponse ApiService::recommend(std::string_view body, bool whatif) const
{
  const auto snap = current();
  const Json j = parse_json_text(std::string(body), "body");
  RecommendOptions options;
  const Json * candidate = &j;
  if (j.is_object() && j.contains("candidate")) {
    candidate = &j.at("candidate");
    if (j.contains("weights")) {
      const auto & w = j.at("weights");
      if (!w.is_string() || (w != "on" && w != "off")) {
        throw FormatError("weights", "expected 'on' or 'off'");
      }
      options.weighted = w == "on";
    }
  }
  if (whatif) {
    if (!j.is_object() || !j.contains("weight_config")) {
      throw FormatError("weight_config", "missing");
    }
    const auto cfg = weight_config_from_json(j.at("weight_config"));
    const auto report = validate_weight_config(cfg);
    if (!report.empty()) {
      return report_response(report);
    }
    options.weight_override = cfg;
  }
  const auto c = candidate_from(*candidate, snap->kb.schema, whatif || candidate != &j ? "candidate" : "");
  return json_response(200, to_json(recommend_candidate(snap->kb, snap->rules, c, options)));
}

HttpResponse ApiService::assign(std::string_view body) const
{
  const auto snap = current();
  const Json j = parse_json_text(std::string(body), "body");
  if (!j.is_object()) {
    throw FormatError("", "expected an object");
  }
  if (!j.contains("course") || !j.at("course").is_string()) {
    throw FormatError("course", "expected a string");
  }
  const auto course = snap->kb.schema.match_course(j.at("course").get<std::string>());
  if (!course) {
    throw FormatError("course", "unknown course '" + j.at("course").get<std::string>() + "'");
  }
  if (!j.contains("candidates") || !j.at("candidates").is_array()) {
    throw FormatError("candidates", "expected an array");
  }
  std::vector<CandidateProfile> candidates;
  const auto & arr = j.at("candidates");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    candidates.push_back(candidate_from(arr[i], snap->kb.schema, "candidates[" + std::to_string(i) + "]"));
  }
  return json_response(200, to_json(select_instructor_for_course(snap->kb, *course, candidates)));
}

struct HttpServer::Impl
{
  explicit Impl(ApiService & s) : service(s) {}
  ApiService & service;
  httplib::Server server;
};

HttpServer::HttpServer(ApiService & service) : impl_(std::make_unique<Impl>(service))
{
  const auto handler = [this](const httplib::Request & req, httplib::Response & res) {
    std::map<std::string, std::string> headers;
    for (const auto & [k, v] : req.headers) {
      headers.emplace(k, v);
    }
    const auto r = impl_->service.handle(req.method, req.path, req.body, headers);
    res.status = r.status;
    for (const auto & [k, v] : r.headers) {
      if (k != "Content-Type") {
        res.set_header(k, v);
      }
    }
    res.set_content(r.body, "application/json");
  };
  auto & s = impl_->server;
  s.Get(".*", handler);
  s.Post(".*", handler);
  s.Put(".*", handler);
  s.Delete(".*", handler);
  s.Patch(".*", handler);
}

HttpServer::~HttpServer()
{
  stop();
}

int HttpServer::bind(const std::string & host, int port)
{
  if (port == 0) {
    return impl_->server.bind_to_any_port(host);
  }
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen()
{
  return impl_->server.listen_after_bind();
}

void HttpServer::stop()
{
  impl_->server.stop();
}

}  // namespace facultas
