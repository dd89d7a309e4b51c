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

#ifndef LANGSKETCH_SERVICE_SERVICE_H_
#define LANGSKETCH_SERVICE_SERVICE_H_

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include <boost/asio/thread_pool.hpp>
#include <nlohmann/json.hpp>

#include "langsketch/llm/client.h"
#include "langsketch/service/protocol.h"
#include "langsketch/session/session.h"

namespace langsketch::service {

// Delivers one outgoing message. Called from worker threads; transports
// make it safe to call concurrently.
using Sender = std::function<void(const nlohmann::json& message)>;

struct ServiceConfig {
  session::SessionConfig session = session::DefaultSessionConfig();
  // Makes a client per generation. Empty disables generate.
  std::function<std::unique_ptr<llm::LlmClient>()> llm;
  std::size_t worker_threads = 4;
};

// Transport-agnostic dispatcher. Messages for one session run in arrival
// order on a worker thread; different sessions run in parallel. A prompt
// update followed in the queue by another prompt update for the same
// session is answered with a "superseded" error instead of a batch.
class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Parses and dispatches one message. Schema errors are answered at once
  // on the calling thread.
  void HandleLine(std::string_view line, const Sender& send);
  void Handle(const nlohmann::json& message, const Sender& send);

  // Blocks until no message or generation is pending.
  void WaitIdle();

  std::size_t session_count() const;

 private:
  struct Job {
    Request request;
    Sender send;
  };
  struct Slot {
    explicit Slot(session::Session s) : session(std::move(s)) {}
    session::Session session;
    // Last prompt revision the session answers.
    std::uint64_t revision = 0;
    std::deque<Job> queue;
    bool running = false;
    bool closed = false;
    std::shared_ptr<std::atomic<bool>> generation_cancel;
    std::uint64_t generation = 0;
  };

  void Dispatch(Request request, const Sender& send);
  void Drain(std::shared_ptr<Slot> slot);
  void Process(Slot& slot, const Job& job, bool superseded);
  void StartGeneration(Slot& slot, const Job& job);

  void BeginTask();
  void EndTask();

  ServiceConfig config_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::mutex idle_mu_;
  std::condition_variable idle_cv_;
  std::size_t pending_ = 0;
  boost::asio::thread_pool pool_;
};

}  // namespace langsketch::service

#endif  // LANGSKETCH_SERVICE_SERVICE_H_
