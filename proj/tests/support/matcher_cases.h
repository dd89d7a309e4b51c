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

#ifndef LANGSKETCH_TESTS_SUPPORT_MATCHER_CASES_H_
#define LANGSKETCH_TESTS_SUPPORT_MATCHER_CASES_H_

#include <nlohmann/json.hpp>

namespace langsketch::testing {

// Ranks one matcher_cases.json entry with the library, in the oracle's
// output shape: [[key, display, score], ...].
nlohmann::json RankCase(const nlohmann::json& matcher_case);

}  // namespace langsketch::testing

#endif  // LANGSKETCH_TESTS_SUPPORT_MATCHER_CASES_H_
