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

#include "langsketch/llm/diff.h"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace langsketch::llm {

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kKeep:
      return "keep";
    case EditKind::kInsert:
      return "insert";
    case EditKind::kDelete:
      return "delete";
  }
  return "keep";
}

std::optional<EditKind> ParseEditKind(std::string_view name) {
  for (EditKind k : {EditKind::kKeep, EditKind::kInsert, EditKind::kDelete}) {
    if (EditKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      out.emplace_back(text.substr(pos));
      break;
    }
    out.emplace_back(text.substr(pos, end + 1 - pos));
    pos = end + 1;
  }
  return out;
}

EditScript DiffLines(std::string_view old_text, std::string_view new_text) {
  const std::vector<std::string> a = SplitLines(old_text);
  const std::vector<std::string> b = SplitLines(new_text);
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  const int max = n + m;
  const int offset = max + 1;
  std::vector<int> v(2 * max + 3, 0);
  // trace[d] is v before round d.
  std::vector<std::vector<int>> trace;
  int found = -1;
  for (int d = 0; d <= max && found < 0; ++d) {
    trace.push_back(v);
    for (int k = -d; k <= d; k += 2) {
      int x;
      if (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1])) {
        x = v[offset + k + 1];
      } else {
        x = v[offset + k - 1] + 1;
      }
      int y = x - k;
      while (x < n && y < m && a[x] == b[y]) {
        ++x;
        ++y;
      }
      v[offset + k] = x;
      if (x >= n && y >= m) {
        found = d;
        break;
      }
    }
  }
  // Walk back from (n, m), collecting ops in reverse.
  EditScript reversed;
  int x = n;
  int y = m;
  for (int d = found; d > 0; --d) {
    const std::vector<int>& pv = trace[d];
    const int k = x - y;
    int prev_k;
    if (k == -d || (k != d && pv[offset + k - 1] < pv[offset + k + 1])) {
      prev_k = k + 1;
    } else {
      prev_k = k - 1;
    }
    const int prev_x = pv[offset + prev_k];
    const int prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      reversed.push_back({EditKind::kKeep, a[x - 1]});
      --x;
      --y;
    }
    if (x == prev_x) {
      reversed.push_back({EditKind::kInsert, b[y - 1]});
      --y;
    } else {
      reversed.push_back({EditKind::kDelete, a[x - 1]});
      --x;
    }
  }
  while (x > 0 && y > 0) {
    reversed.push_back({EditKind::kKeep, a[x - 1]});
    --x;
    --y;
  }
  EditScript out(reversed.rbegin(), reversed.rend());
  // Put deletions ahead of insertions inside each changed run.
  std::size_t i = 0;
  while (i < out.size()) {
    if (out[i].kind == EditKind::kKeep) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < out.size() && out[j].kind != EditKind::kKeep) ++j;
    std::stable_partition(out.begin() + static_cast<std::ptrdiff_t>(i),
                          out.begin() + static_cast<std::ptrdiff_t>(j),
                          [](const EditOp& op) {
                            return op.kind == EditKind::kDelete;
                          });
    i = j;
  }
  return out;
}

std::string ApplyEdits(const EditScript& script) {
  std::string out;
  for (const EditOp& op : script) {
    if (op.kind != EditKind::kDelete) out += op.line;
  }
  return out;
}

std::string OldText(const EditScript& script) {
  std::string out;
  for (const EditOp& op : script) {
    if (op.kind != EditKind::kInsert) out += op.line;
  }
  return out;
}

nlohmann::json EditScriptToJson(const EditScript& script) {
  nlohmann::json out = nlohmann::json::array();
  for (const EditOp& op : script) {
    out.push_back({{"op", EditKindName(op.kind)}, {"line", op.line}});
  }
  return out;
}

EditScript EditScriptFromJson(const nlohmann::json& value) {
  if (!value.is_array()) throw std::invalid_argument("edit script must be an array");
  EditScript out;
  for (const auto& op : value) {
    if (!op.is_object() || !op.contains("op") || !op.contains("line") ||
        !op["op"].is_string() || !op["line"].is_string()) {
      throw std::invalid_argument("edit op needs string op and line");
    }
    auto kind = ParseEditKind(op["op"].get<std::string>());
    if (!kind) throw std::invalid_argument("unknown edit op");
    out.push_back({*kind, op["line"].get<std::string>()});
  }
  return out;
}

}  // namespace langsketch::llm
