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

// langsketch command-line front end.
//
// Exit codes: 0 success, 1 input error, 2 internal error.

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <pthread.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "langsketch/errors.h"
#include "langsketch/llm/client.h"
#include "langsketch/nlp/analysis.h"
#include "langsketch/service/config.h"
#include "langsketch/service/corpus.h"
#include "langsketch/service/http_client.h"
#include "langsketch/service/service.h"
#include "langsketch/service/stdio.h"
#include "langsketch/service/websocket.h"
#include "langsketch/session/script.h"
#include "langsketch/sketch/schema.h"

namespace {

using namespace langsketch;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInternalError = 2;

// Thrown for anything the user can fix: bad paths, malformed files.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineFlags {
  std::string config;
  std::string catalog;
  std::string rules;
};

void AddEngineFlags(CLI::App* app, EngineFlags& flags) {
  app->add_option("--config", flags.config, "JSON config file");
  app->add_option("--catalog", flags.catalog, "Snippet catalog JSON");
  app->add_option("--rules", flags.rules, "Assembly rule JSON");
}

service::FileConfig ResolveFileConfig(const EngineFlags& flags) {
  service::FileConfig file;
  if (!flags.config.empty()) {
    try {
      file = service::LoadFileConfig(flags.config);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (!flags.catalog.empty()) file.catalog = flags.catalog;
  if (!flags.rules.empty()) file.rules = flags.rules;
  return file;
}

session::SessionConfig LoadEngine(const service::FileConfig& file) {
  try {
    return service::MakeSessionConfig(file.catalog, file.rules);
  } catch (const SchemaError& e) {
    throw InputError(e.what());
  } catch (const TemplateError& e) {
    throw InputError(e.what());
  } catch (const RuleError& e) {
    throw InputError(e.what());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int Replay(const EngineFlags& flags, const std::string& script_path,
           const std::string& code_path) {
  session::SessionConfig config = LoadEngine(ResolveFileConfig(flags));
  std::vector<session::ScriptRecord> records;
  try {
    records = session::ParseScriptText(ReadFile(script_path));
  } catch (const ScriptError& e) {
    std::cerr << script_path << ": " << e.what() << "\n";
    return kInputError;
  }
  if (records.empty()) return kOk;
  const std::string code = code_path.empty() ? "" : ReadFile(code_path);
  session::ScriptRun run;
  try {
    run = session::RunScript(records, config, code);
  } catch (const ScriptError& e) {
    std::cerr << script_path << ": " << e.what() << "\n";
    return kInputError;
  }
  std::cout << run.sketch_text;
  if (!run.sketch_text.empty() && run.sketch_text.back() != '\n') {
    std::cout << '\n';
  }
  std::cout << "### Event Log\n";
  for (const auto& event : run.events) {
    std::cout << session::EventToJson(event).dump() << '\n';
  }
  return kOk;
}

int Corpus(const EngineFlags& flags, const std::string& dir,
           const std::string& out_path) {
  session::SessionConfig config = LoadEngine(ResolveFileConfig(flags));
  if (!std::filesystem::is_directory(dir)) {
    throw InputError(dir + " is not a directory");
  }
  const std::string report =
      service::CorpusReportToJson(service::RunCorpus(dir, config)).dump(2) +
      "\n";
  if (out_path.empty()) {
    std::cout << report;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << report;
  return kOk;
}

int Analyze(const std::vector<std::string>& words, bool show_deps) {
  std::string sentence;
  for (const std::string& w : words) {
    if (!sentence.empty()) sentence += ' ';
    sentence += w;
  }
  std::cout << nlp::FormatAnalysis(nlp::Analyze(sentence, sentence.size()),
                                   show_deps);
  return kOk;
}

struct ServeFlags {
  EngineFlags engine;
  std::string address;
  int port = -1;
  std::string mock_llm;
  bool stdio = false;
  std::size_t threads = 4;
};

int Serve(const ServeFlags& flags) {
  service::FileConfig file = ResolveFileConfig(flags.engine);
  if (!flags.mock_llm.empty()) file.mock_llm = flags.mock_llm;
  service::ServiceConfig config;
  config.session = LoadEngine(file);
  config.worker_threads = flags.threads;
  if (file.mock_llm) {
    llm::MockScript script;
    try {
      script = llm::LoadMockScript(*file.mock_llm);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    config.llm = [script] {
      return std::make_unique<llm::MockLlmClient>(script);
    };
  } else if (file.llm) {
    llm::ClientConfig client = *file.llm;
    try {
      service::SplitEndpoint(client.endpoint);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    config.llm = [client] {
      return std::make_unique<service::HttpLlmClient>(client);
    };
  }

  if (flags.stdio) {
    service::Service svc(std::move(config));
    service::ServeStdio(svc, std::cin, std::cout);
    return kOk;
  }

  const std::string address =
      !flags.address.empty() ? flags.address : file.address.value_or("127.0.0.1");
  const int port = flags.port >= 0 ? flags.port : file.port.value_or(8765);
  if (port > 65535) throw InputError("port out of range");

  // Block the stop signals before any thread starts so that only sigwait
  // below sees them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  service::Service svc(std::move(config));
  std::unique_ptr<service::WebSocketServer> server;
  try {
    server = std::make_unique<service::WebSocketServer>(
        svc, address, static_cast<std::uint16_t>(port));
  } catch (const std::exception& e) {
    std::cerr << "cannot listen on " << address << ":" << port << ": "
              << e.what() << "\n";
    return kInputError;
  }
  server->Start(2);
  std::cerr << "listening on ws://" << address << ":" << server->port()
            << std::endl;
  int sig = 0;
  sigwait(&signals, &sig);
  server->Stop();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interactive code sketching engine"};
  app.require_subcommand(1);

  ServeFlags serve;
  CLI::App* serve_cmd = app.add_subcommand("serve", "Run the wire service");
  AddEngineFlags(serve_cmd, serve.engine);
  serve_cmd->add_option("--port", serve.port, "TCP port (0 picks one)");
  serve_cmd->add_option("--address", serve.address, "Bind address");
  serve_cmd->add_option("--mock-llm", serve.mock_llm, "Mock LLM script");
  serve_cmd->add_option("--threads", serve.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  serve_cmd->add_flag("--stdio", serve.stdio,
                      "Speak NDJSON on stdin/stdout instead of WebSocket");

  EngineFlags replay_flags;
  std::string script_path;
  std::string code_path;
  CLI::App* replay_cmd =
      app.add_subcommand("replay", "Run a replay script, print sketch and log");
  AddEngineFlags(replay_cmd, replay_flags);
  replay_cmd->add_option("script", script_path, "Replay script JSON")
      ->required();
  replay_cmd->add_option("--code", code_path, "Existing code buffer");

  EngineFlags corpus_flags;
  std::string corpus_dir;
  std::string corpus_out;
  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "Run a directory of replay scripts");
  AddEngineFlags(corpus_cmd, corpus_flags);
  corpus_cmd->add_option("dir", corpus_dir, "Directory of scripts")
      ->required();
  corpus_cmd->add_option("--out", corpus_out, "Report path (default stdout)");

  std::vector<std::string> words;
  bool show_deps = false;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Dump tokens, tags, phrases and arcs");
  analyze_cmd->add_option("sentence", words, "Prompt text");
  analyze_cmd->add_flag("--show-deps", show_deps, "Print dependency arcs");

  app.add_subcommand("schema", "Print the sketch slot schema as Markdown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*serve_cmd) return Serve(serve);
    if (*replay_cmd) return Replay(replay_flags, script_path, code_path);
    if (*corpus_cmd) return Corpus(corpus_flags, corpus_dir, corpus_out);
    if (*analyze_cmd) return Analyze(words, show_deps);
    std::cout << sketch::SchemaMarkdown();
    return kOk;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
