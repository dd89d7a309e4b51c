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

#ifndef LANGSKETCH_SERVICE_CORPUS_H_
#define LANGSKETCH_SERVICE_CORPUS_H_

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "langsketch/session/session.h"

namespace langsketch::service {

struct CorpusRecord {
  // Script file stem.
  std::string prompt_id;
  std::string prompt;
  double ast_rate = 0.0;
  std::size_t suggestion_count = 0;
  std::size_t acceptance_count = 0;
  double p50_ms = 0.0;
  double p95_ms = 0.0;
  // Non-empty when the script failed; the other fields are then zero.
  std::string error;
};

struct CorpusReport {
  std::vector<CorpusRecord> records;
  std::size_t failed = 0;
  // Means over the scripts that ran.
  double mean_ast_rate = 0.0;
  double mean_p50_ms = 0.0;
  double mean_p95_ms = 0.0;
};

// Nearest-rank percentile, p in (0, 100]. 0 for an empty sample.
double Percentile(std::vector<double> values, double p);

// Runs every *.json replay script in `dir`, in file-name order. A script
// named x.json runs against the code buffer x.py when one exists. Failures
// are recorded and the run continues.
CorpusReport RunCorpus(const std::filesystem::path& dir,
                       const session::SessionConfig& config);

nlohmann::json CorpusReportToJson(const CorpusReport& report);

}  // namespace langsketch::service

#endif  // LANGSKETCH_SERVICE_CORPUS_H_
