// Copyright 2026 The langsketch Authors.
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

#include "langsketch/service/http_client.h"

#include <chrono>
#include <cstdlib>
#include <stdexcept>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace langsketch::service {

using nlohmann::json;

std::pair<std::string, std::string> SplitEndpoint(const std::string& url) {
  const std::size_t scheme = url.find("://");
  if (scheme == std::string::npos ||
      (url.compare(0, scheme, "http") != 0 &&
       url.compare(0, scheme, "https") != 0)) {
    throw std::invalid_argument("endpoint must be an http(s) URL: " + url);
  }
  const std::size_t path = url.find('/', scheme + 3);
  if (path == scheme + 3) throw std::invalid_argument("endpoint has no host");
  if (path == std::string::npos) return {url, "/"};
  return {url.substr(0, path), url.substr(path)};
}

namespace {

// Incremental parser for "data: ..." event-stream lines.
class EventStream {
 public:
  explicit EventStream(const llm::ChunkSink& sink) : sink_(sink) {}

  void Feed(const char* data, std::size_t size) {
    pending_.append(data, size);
    std::size_t pos;
    while ((pos = pending_.find('\n')) != std::string::npos) {
      std::string line = pending_.substr(0, pos);
      pending_.erase(0, pos + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      Line(line);
    }
  }

  void Finish() {
    if (!pending_.empty()) Line(pending_);
    pending_.clear();
  }

 private:
  void Line(const std::string& line) {
    if (line.rfind("data:", 0) != 0) return;
    std::string payload = line.substr(5);
    if (!payload.empty() && payload.front() == ' ') payload.erase(0, 1);
    if (payload == "[DONE]") return;
    json event = json::parse(payload, nullptr, false);
    if (event.is_discarded()) {
      throw llm::LlmError(llm::LlmErrorCode::kTransport,
                          "malformed event-stream payload");
    }
    const json* content = nullptr;
    if (event.contains("choices") && event["choices"].is_array() &&
        !event["choices"].empty()) {
      const json& choice = event["choices"][0];
      if (choice.contains("delta") && choice["delta"].contains("content")) {
        content = &choice["delta"]["content"];
      }
    }
    if (content && content->is_string() && !content->get_ref<const std::string&>().empty()) {
      sink_(content->get_ref<const std::string&>());
    }
  }

  const llm::ChunkSink& sink_;
  std::string pending_;
};

}  // namespace

HttpLlmClient::HttpLlmClient(llm::ClientConfig config)
    : config_(std::move(config)) {
  SplitEndpoint(config_.endpoint);
}

void HttpLlmClient::Complete(std::string_view prompt,
                             const llm::ChunkSink& sink,
                             const std::atomic<bool>* cancel) {
  const auto [host, path] = SplitEndpoint(config_.endpoint);
  httplib::Client client(host);
  const auto timeout = std::chrono::seconds(config_.timeout_seconds);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);

  httplib::Request req;
  req.method = "POST";
  req.path = path;
  req.set_header("Content-Type", "application/json");
  req.set_header("Accept", "text/event-stream, application/json");
  if (const char* key = std::getenv(llm::kApiKeyEnv); key && *key) {
    req.set_header("Authorization", std::string("Bearer ") + key);
  }
  req.body = json{{"model", config_.model},
                  {"messages", {{{"role", "user"}, {"content", prompt}}}},
                  {"stream", true}}
                 .dump();

  EventStream stream(sink);
  bool event_stream = false;
  int status = 0;
  std::string body;
  std::string failure;
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  req.response_handler = [&](const httplib::Response& res) {
    status = res.status;
    event_stream =
        res.get_header_value("Content-Type").find("text/event-stream") !=
        std::string::npos;
    return true;
  };
  req.content_receiver = [&](const char* data, std::size_t size, std::uint64_t,
                             std::uint64_t) {
    if (cancel && cancel->load()) return false;
    if (std::chrono::steady_clock::now() > deadline) {
      failure = "timeout";
      return false;
    }
    if (status / 100 != 2 || !event_stream) {
      body.append(data, size);
      return true;
    }
    try {
      stream.Feed(data, size);
    } catch (const llm::LlmError& e) {
      failure = e.what();
      return false;
    }
    return true;
  };

  httplib::Response res;
  httplib::Error err = httplib::Error::Success;
  const bool ok = client.send(req, res, err);
  if (cancel && cancel->load()) {
    throw llm::LlmError(llm::LlmErrorCode::kCancelled, "generation cancelled");
  }
  if (failure == "timeout" || err == httplib::Error::ConnectionTimeout ||
      (!ok && std::chrono::steady_clock::now() >= deadline)) {
    throw llm::LlmError(llm::LlmErrorCode::kTimeout,
                        "no complete response within " +
                            std::to_string(config_.timeout_seconds) + " s");
  }
  if (!failure.empty()) {
    throw llm::LlmError(llm::LlmErrorCode::kTransport, failure);
  }
  if (!ok) {
    throw llm::LlmError(llm::LlmErrorCode::kTransport,
                        "request failed: " + httplib::to_string(err));
  }
  if (status / 100 != 2) {
    throw llm::LlmError(llm::LlmErrorCode::kTransport,
                        "endpoint answered HTTP " + std::to_string(status));
  }
  if (event_stream) {
    stream.Finish();
    return;
  }
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.contains("choices") ||
      !doc["choices"].is_array() || doc["choices"].empty() ||
      !doc["choices"][0].contains("message") ||
      !doc["choices"][0]["message"].contains("content") ||
      !doc["choices"][0]["message"]["content"].is_string()) {
    throw llm::LlmError(llm::LlmErrorCode::kTransport,
                        "response has no choices[0].message.content");
  }
  sink(doc["choices"][0]["message"]["content"].get_ref<const std::string&>());
}

}  // namespace langsketch::service
