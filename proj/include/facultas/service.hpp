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
/// \brief HTTP/JSON facade over a loaded knowledge base.
///
/// Reads run against an immutable snapshot; a successful PUT /kb swaps in a
/// new snapshot and bumps the revision by one.

#ifndef FACULTAS__SERVICE_HPP_
#define FACULTAS__SERVICE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facultas/knowledge_base.hpp"

namespace facultas
{

struct HttpResponse
{
  int status = 200;
  std::string body;
  std::map<std::string, std::string> headers;
};

class ApiService
{
public:
  /// When `kb_path` is set, successful PUTs rewrite that file.
  explicit ApiService(KnowledgeBaseDoc kb, std::optional<std::filesystem::path> kb_path = std::nullopt);

  /// Header names are matched case-insensitively.
  HttpResponse handle(
    std::string_view method, std::string_view path, std::string_view body,
    const std::map<std::string, std::string> & headers = {});

  std::uint64_t revision() const;

private:
  struct Snapshot
  {
    KnowledgeBaseDoc kb;
    std::vector<RuleSet> rules;
    std::uint64_t revision = 0;
  };

  std::shared_ptr<const Snapshot> current() const;

  HttpResponse get_kb() const;
  HttpResponse put_kb(std::string_view body, const std::map<std::string, std::string> & headers);
  HttpResponse recommend(std::string_view body, bool whatif) const;
  HttpResponse assign(std::string_view body) const;

  mutable std::mutex snapshot_mutex_;
  std::mutex write_mutex_;
  std::shared_ptr<const Snapshot> snapshot_;
  std::optional<std::filesystem::path> kb_path_;
};

/// Binds an ApiService to a socket.
class HttpServer
{
public:
  explicit HttpServer(ApiService & service);
  ~HttpServer();
  HttpServer(const HttpServer &) = delete;
  HttpServer & operator=(const HttpServer &) = delete;

  /// Binds `host:port`; port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string & host, int port);

  /// Serves until stop(). Requires a successful bind().
  bool listen();

  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace facultas

#endif  // FACULTAS__SERVICE_HPP_
