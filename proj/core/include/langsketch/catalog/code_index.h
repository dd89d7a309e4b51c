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

#ifndef LANGSKETCH_CATALOG_CODE_INDEX_H_
#define LANGSKETCH_CATALOG_CODE_INDEX_H_

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "langsketch/sketch/identifiers.h"

namespace langsketch::catalog {

// Identifiers of the user's code buffer. Immutable once built; sessions
// swap in a new index per buffer change.
struct CodeIndex {
  std::vector<sketch::Identifier> identifiers;
  std::uint64_t revision = 0;
};

// Scans the buffer; revisions increase across all calls in the process.
std::shared_ptr<const CodeIndex> RefreshIndex(std::string_view code_text);

}  // namespace langsketch::catalog

#endif  // LANGSKETCH_CATALOG_CODE_INDEX_H_
