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

#ifndef LANGSKETCH_INTERNAL_EMBEDDED_DATA_H_
#define LANGSKETCH_INTERNAL_EMBEDDED_DATA_H_

#include <string_view>

// Data files compiled into the library at configure time from core/data/.
namespace langsketch::internal {

std::string_view EmbeddedLexicon();
std::string_view EmbeddedStarterCatalog();
std::string_view EmbeddedRules();

}  // namespace langsketch::internal

#endif  // LANGSKETCH_INTERNAL_EMBEDDED_DATA_H_
