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

#include "langsketch/service/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "langsketch/session/script.h"

namespace langsketch::service {

double Percentile(std::vector<double> values, double p) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double rank = std::ceil(p / 100.0 * static_cast<double>(values.size()));
  const std::size_t i = rank < 1 ? 0 : static_cast<std::size_t>(rank) - 1;
  return values[std::min(i, values.size() - 1)];
}

CorpusReport RunCorpus(const std::filesystem::path& dir,
                       const session::SessionConfig& config) {
  std::vector<std::filesystem::path> scripts;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      scripts.push_back(entry.path());
    }
  }
  std::sort(scripts.begin(), scripts.end());
  CorpusReport report;
  std::size_t ran = 0;
  for (const auto& path : scripts) {
    CorpusRecord rec;
    rec.prompt_id = path.stem().string();
    try {
      std::string code;
      std::filesystem::path code_path = path;
      code_path.replace_extension(".py");
      if (std::filesystem::exists(code_path)) {
        std::ifstream in(code_path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        code = ss.str();
      }
      session::ScriptRun run = session::RunScript(
          session::LoadScriptFile(path.string()), config, code);
      rec.prompt = run.prompt;
      rec.ast_rate = run.ast_rate;
      rec.suggestion_count = run.suggestion_count;
      rec.acceptance_count = run.acceptance_count;
      rec.p50_ms = Percentile(run.latencies_ms, 50);
      rec.p95_ms = Percentile(run.latencies_ms, 95);
      report.mean_ast_rate += rec.ast_rate;
      report.mean_p50_ms += rec.p50_ms;
      report.mean_p95_ms += rec.p95_ms;
      ++ran;
    } catch (const std::exception& e) {
      rec.error = e.what();
      ++report.failed;
    }
    report.records.push_back(std::move(rec));
  }
  if (ran > 0) {
    report.mean_ast_rate /= static_cast<double>(ran);
    report.mean_p50_ms /= static_cast<double>(ran);
    report.mean_p95_ms /= static_cast<double>(ran);
  }
  return report;
}

nlohmann::json CorpusReportToJson(const CorpusReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const CorpusRecord& r : report.records) {
    nlohmann::json j = {{"prompt_id", r.prompt_id},
                        {"prompt", r.prompt},
                        {"ast_rate", r.ast_rate},
                        {"suggestion_count", r.suggestion_count},
                        {"acceptance_count", r.acceptance_count},
                        {"p50_ms", r.p50_ms},
                        {"p95_ms", r.p95_ms}};
    if (!r.error.empty()) j["error"] = r.error;
    records.push_back(std::move(j));
  }
  return {{"records", records},
          {"aggregate",
           {{"prompts", report.records.size()},
            {"failed", report.failed},
            {"mean_ast_rate", report.mean_ast_rate},
            {"mean_p50_ms", report.mean_p50_ms},
            {"mean_p95_ms", report.mean_p95_ms}}}};
}

}  // namespace langsketch::service
