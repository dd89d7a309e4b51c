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

#include "langsketch/mapping/similarity.h"

#include <algorithm>
#include <vector>

#include "langsketch/catalog/catalog.h"

namespace langsketch::mapping {

std::string NormalizeForMatch(std::string_view text) {
  return catalog::NormalizeAlias(text);
}

std::size_t EditDistance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

double EditSimilarity(std::string_view a, std::string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(EditDistance(a, b)) /
                   static_cast<double>(longest);
}

double InitialsScore(std::string_view query, std::string_view target) {
  std::string q;
  for (char c : query) {
    if (c != ' ') q += c;
  }
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < target.size()) {
    std::size_t end = target.find(' ', pos);
    if (end == std::string_view::npos) end = target.size();
    if (end > pos) words.push_back(target.substr(pos, end - pos));
    pos = end + 1;
  }
  const std::size_t n = words.size();
  if (q.empty() || n < 2) return 0.0;
  // best[i][j]: most words used consuming q[i..] with words j.., -1 if none.
  const std::size_t m = q.size();
  std::vector<std::vector<int>> best(m + 1, std::vector<int>(n + 1, -1));
  for (std::size_t j = 0; j <= n; ++j) best[m][j] = 0;
  for (std::size_t j = n; j-- > 0;) {
    for (std::size_t i = m; i-- > 0;) {
      int value = best[i][j + 1];
      const std::string_view w = words[j];
      for (std::size_t k = 1; k <= std::min(m - i, w.size()); ++k) {
        if (q[i + k - 1] != w[k - 1]) break;
        if (best[i + k][j + 1] >= 0) {
          value = std::max(value, 1 + best[i + k][j + 1]);
        }
      }
      best[i][j] = value;
    }
  }
  const int used = best[0][0];
  if (used < 2) return 0.0;
  return 0.9 * static_cast<double>(used) / static_cast<double>(n);
}

double Similarity(std::string_view a, std::string_view b) {
  const std::string na = NormalizeForMatch(a);
  const std::string nb = NormalizeForMatch(b);
  return std::max({EditSimilarity(na, nb), InitialsScore(na, nb),
                   InitialsScore(nb, na)});
}

}  // namespace langsketch::mapping
