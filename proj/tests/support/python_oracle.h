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

#ifndef LANGSKETCH_TESTS_SUPPORT_PYTHON_ORACLE_H_
#define LANGSKETCH_TESTS_SUPPORT_PYTHON_ORACLE_H_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace langsketch::testing {

// Runs tests/oracles/<script> with the input as JSON on stdin and parses
// its stdout. Throws std::runtime_error when the script fails.
nlohmann::json RunPythonOracle(const std::string& script,
                               const nlohmann::json& input);

// Compiles every source with the system CPython in one batch. Returns one
// entry per source: nullopt when it compiles, else the syntax error.
std::vector<std::optional<std::string>> CompileWithPython(
    const std::vector<std::string>& sources);

}  // namespace langsketch::testing

#endif  // LANGSKETCH_TESTS_SUPPORT_PYTHON_ORACLE_H_
