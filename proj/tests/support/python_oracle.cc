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

#include "support/python_oracle.h"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <unistd.h>

namespace langsketch::testing {

nlohmann::json RunPythonOracle(const std::string& script,
                               const nlohmann::json& input) {
  namespace fs = std::filesystem;
  static std::atomic<int> counter{0};
  const fs::path dir = fs::temp_directory_path();
  const std::string stem = "langsketch_oracle_" + std::to_string(::getpid()) +
                           "_" + std::to_string(counter++);
  const fs::path in = dir / (stem + ".in.json");
  const fs::path out = dir / (stem + ".out.json");
  {
    std::ofstream f(in, std::ios::binary);
    f << input.dump();
  }
  const std::string cmd = std::string(LANGSKETCH_PYTHON) + " " +
                          LANGSKETCH_ORACLES_DIR + "/" + script + " < " +
                          in.string() + " > " + out.string();
  const int rc = std::system(cmd.c_str());
  fs::remove(in);
  if (rc != 0) {
    fs::remove(out);
    throw std::runtime_error("python oracle failed: " + cmd);
  }
  std::ifstream f(out, std::ios::binary);
  nlohmann::json result = nlohmann::json::parse(f);
  f.close();
  fs::remove(out);
  return result;
}

std::vector<std::optional<std::string>> CompileWithPython(
    const std::vector<std::string>& sources) {
  const nlohmann::json result =
      RunPythonOracle("py_compile_oracle.py", nlohmann::json(sources));
  std::vector<std::optional<std::string>> verdicts;
  for (const auto& v : result) {
    if (v.is_null()) {
      verdicts.emplace_back(std::nullopt);
    } else {
      verdicts.emplace_back(v.get<std::string>());
    }
  }
  return verdicts;
}

}  // namespace langsketch::testing
