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

#include "langsketch/catalog/code_index.h"

#include <atomic>

namespace langsketch::catalog {

std::shared_ptr<const CodeIndex> RefreshIndex(std::string_view code_text) {
  static std::atomic<std::uint64_t> next_revision{1};
  auto index = std::make_shared<CodeIndex>();
  index->identifiers = sketch::ExtractIdentifiers(code_text);
  index->revision = next_revision.fetch_add(1);
  return index;
}

}  // namespace langsketch::catalog
