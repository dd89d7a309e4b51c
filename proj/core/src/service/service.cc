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

#include "langsketch/service/service.h"

#include <chrono>

#include <boost/asio/post.hpp>

#include "langsketch/errors.h"
#include "langsketch/llm/generate.h"

namespace langsketch::service {

using nlohmann::json;

Service::Service(ServiceConfig config)
    : config_(std::move(config)),
      pool_(config_.worker_threads == 0 ? 1 : config_.worker_threads) {}

Service::~Service() {
  {
    std::lock_guard lock(mu_);
    for (auto& [_, slot] : sessions_) {
      if (slot->generation_cancel) slot->generation_cancel->store(true);
    }
  }
  pool_.join();
}

std::size_t Service::session_count() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

void Service::BeginTask() {
  std::lock_guard lock(idle_mu_);
  ++pending_;
}

void Service::EndTask() {
  std::lock_guard lock(idle_mu_);
  if (--pending_ == 0) idle_cv_.notify_all();
}

void Service::WaitIdle() {
  std::unique_lock lock(idle_mu_);
  idle_cv_.wait(lock, [this] { return pending_ == 0; });
}

void Service::HandleLine(std::string_view line, const Sender& send) {
  json message = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (message.is_discarded()) {
    send(ErrorMessage(errc::kSchema, "message is not valid JSON"));
    return;
  }
  Handle(message, send);
}

void Service::Handle(const json& message, const Sender& send) {
  Request request;
  try {
    request = ParseRequest(message);
  } catch (const ProtocolError& e) {
    json id;
    if (message.is_object() && message.contains("id")) id = message["id"];
    send(ErrorMessage(e.code(), e.what(), id));
    return;
  }
  Dispatch(std::move(request), send);
}

void Service::Dispatch(Request request, const Sender& send) {
  if (request.type == RequestType::kCreateSession) {
    auto slot = std::make_shared<Slot>(session::Session(
        session::NewSessionId(), config_.session, request.code));
    const std::string id = slot->session.id();
    {
      std::lock_guard lock(mu_);
      sessions_.emplace(id, slot);
    }
    json out = Envelope("session_created", request.id);
    out["session"] = id;
    out["revision"] = 0;
    send(out);
    return;
  }
  std::shared_ptr<Slot> slot;
  bool start = false;
  {
    std::lock_guard lock(mu_);
    auto it = sessions_.find(request.session);
    if (it == sessions_.end()) {
      json out = ErrorMessage(errc::kUnknownSession,
                              "no session '" + request.session + "'",
                              request.id);
      out["session"] = request.session;
      send(out);
      return;
    }
    slot = it->second;
    if (request.type == RequestType::kCloseSession) {
      sessions_.erase(it);
      slot->closed = true;
    }
    slot->queue.push_back({std::move(request), send});
    if (!slot->running) {
      slot->running = true;
      start = true;
    }
  }
  if (start) {
    BeginTask();
    boost::asio::post(pool_, [this, slot] {
      Drain(slot);
      EndTask();
    });
  }
}

void Service::Drain(std::shared_ptr<Slot> slot) {
  for (;;) {
    Job job;
    bool superseded = false;
    {
      std::lock_guard lock(mu_);
      if (slot->queue.empty()) {
        slot->running = false;
        return;
      }
      job = std::move(slot->queue.front());
      slot->queue.pop_front();
      superseded = job.request.type == RequestType::kPromptUpdate &&
                   !slot->queue.empty() &&
                   slot->queue.front().request.type ==
                       RequestType::kPromptUpdate;
    }
    try {
      Process(*slot, job, superseded);
    } catch (const std::exception& e) {
      json out = ErrorMessage(errc::kInternal, e.what(), job.request.id);
      out["session"] = slot->session.id();
      job.send(out);
    }
  }
}

void Service::Process(Slot& slot, const Job& job, bool superseded) {
  const Request& r = job.request;
  session::Session& s = slot.session;
  auto reply = [&](std::string_view type) {
    json out = Envelope(type, r.id);
    out["session"] = s.id();
    return out;
  };
  auto error = [&](std::string_view code, const std::string& message) {
    json out = ErrorMessage(code, message, r.id);
    out["session"] = s.id();
    out["revision"] = slot.revision;
    return out;
  };
  switch (r.type) {
    case RequestType::kCreateSession:
      break;
    case RequestType::kPromptUpdate: {
      const std::uint64_t revision = r.revision.value_or(slot.revision + 1);
      if (superseded || revision <= slot.revision) {
        json out = error(errc::kSuperseded, "prompt update superseded");
        out["revision"] = revision;
        job.send(out);
        return;
      }
      const auto t0 = std::chrono::steady_clock::now();
      const auto& suggestions =
          s.UpdatePrompt(r.text, r.cursor.value_or(r.text.size()));
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
      slot.revision = revision;
      const std::string sketch_text = s.SketchText();
      json out = reply("suggestion_batch");
      out["revision"] = revision;
      out["latency_ms"] = ms;
      json list = json::array();
      for (const auto& sug : suggestions) {
        list.push_back(SuggestionToJson(sug, sketch_text));
      }
      out["suggestions"] = std::move(list);
      job.send(out);
      return;
    }
    case RequestType::kAccept: {
      session::SessionDelta delta;
      try {
        delta = s.Accept(r.key);
      } catch (const StaleSuggestion& e) {
        job.send(error(errc::kStaleSuggestion, e.what()));
        return;
      }
      slot.revision += 1;
      json out = reply("accepted");
      out["revision"] = slot.revision;
      out["prompt"] = delta.prompt_text;
      out["cursor"] = delta.cursor;
      out["sketch_text"] = delta.sketch_text;
      out["association"] = AssociationToJson(delta.association);
      out["ast_rate"] = s.AstRate();
      job.send(out);
      return;
    }
    case RequestType::kUpdateCode: {
      s.UpdateCode(r.code);
      json out = reply("code_updated");
      out["revision"] = slot.revision;
      out["identifiers"] = s.index().identifiers.size();
      job.send(out);
      return;
    }
    case RequestType::kGenerate:
      StartGeneration(slot, job);
      return;
    case RequestType::kCloseSession: {
      {
        std::lock_guard lock(mu_);
        if (slot.generation_cancel) slot.generation_cancel->store(true);
      }
      json out = reply("session_closed");
      out["revision"] = slot.revision;
      job.send(out);
      return;
    }
  }
}

void Service::StartGeneration(Slot& slot, const Job& job) {
  const Request& r = job.request;
  if (!config_.llm) {
    json out = ErrorMessage(errc::kNoLlm, "no LLM client configured", r.id);
    out["session"] = slot.session.id();
    out["revision"] = slot.revision;
    job.send(out);
    return;
  }
  auto cancel = std::make_shared<std::atomic<bool>>(false);
  {
    std::lock_guard lock(mu_);
    if (slot.generation_cancel) slot.generation_cancel->store(true);
    slot.generation_cancel = cancel;
  }
  const std::uint64_t generation = ++slot.generation;
  // Snapshot at submission; the session keeps changing meanwhile.
  std::string description = slot.session.prompt();
  std::string sketch_text = slot.session.SketchText();
  const std::string session_id = slot.session.id();
  const std::uint64_t revision = slot.revision;
  std::shared_ptr<llm::LlmClient> client = config_.llm();
  BeginTask();
  boost::asio::post(pool_, [=, this, send = job.send, id = r.id] {
    llm::Generate(
        description, sketch_text, *client,
        [&](const llm::StreamEvent& event) {
          json out = Envelope("stream_event", id);
          out["session"] = session_id;
          out["revision"] = revision;
          out["generation"] = generation;
          json body = llm::StreamEventToJson(event);
          out["kind"] = body["kind"];
          out["payload"] = body["payload"];
          send(out);
        },
        cancel.get());
    EndTask();
  });
}

}  // namespace langsketch::service
