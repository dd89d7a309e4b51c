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

#include "langsketch/nlp/parser.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "langsketch/nlp/tagger.h"

namespace langsketch::nlp {
namespace {

constexpr std::int32_t kUnset = -2;

bool IsNominal(PosTag t) {
  return t == PosTag::kNoun || t == PosTag::kPropn || t == PosTag::kAdj ||
         t == PosTag::kNum;
}

bool IsVerbalPreposition(std::string_view w) {
  return w == "to" || w == "into" || w == "from" || w == "onto" || w == "by" ||
         w == "via" || w == "using";
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

struct Chunk {
  std::int32_t start;
  std::int32_t end;  // exclusive
  std::int32_t head;
};

class SentenceParser {
 public:
  SentenceParser(std::span<const Token> tokens, std::span<const PosTag> tags)
      : tags_(tags),
        m_(static_cast<std::int32_t>(tokens.size())),
        head_(tokens.size(), kUnset),
        label_(tokens.size(), DepLabel::kOther),
        fallback_(tokens.size(), false),
        chunk_at_(tokens.size(), -1),
        chunk_of_(tokens.size(), -1),
        aux_target_(tokens.size(), -1),
        is_verb_(tokens.size(), false),
        copula_(tokens.size(), false) {
    for (const Token& t : tokens) lower_.push_back(Lower(t.text));
  }

  DependencyTree Run() {
    BuildChunks();
    FindVerbs();
    AssignVerbRoles();
    AttachObjects();
    AttachPrepositions();
    AttachNominalConjunctions();
    ChooseRootIfMissing();
    AttachRemaining();
    return Finish();
  }

 private:
  bool Unset(std::int32_t t) const { return head_[t] == kUnset; }

  void Set(std::int32_t dep, std::int32_t head, DepLabel label) {
    if (dep < 0 || dep >= m_ || !Unset(dep)) return;
    head_[dep] = head;
    label_[dep] = label;
  }

  bool IsRelativePronoun(std::int32_t i) const {
    if (tags_[i] != PosTag::kPron) return false;
    const std::string& w = lower_[i];
    if (w != "that" && w != "which" && w != "who") return false;
    std::int32_t k = i + 1;
    while (k < m_ && IsAuxiliary(lower_[k])) ++k;
    return k < m_ && tags_[k] == PosTag::kVerb;
  }

  bool IsChunkHead(std::int32_t i) const {
    return i >= 0 && chunk_of_[i] >= 0 && chunks_[chunk_of_[i]].head == i;
  }

  const Chunk* ChunkStartingAt(std::int32_t i) const {
    if (i < 0 || i >= m_ || chunk_at_[i] < 0) return nullptr;
    return &chunks_[chunk_at_[i]];
  }

  void AddChunk(std::int32_t start, std::int32_t end) {
    std::int32_t head = -1;
    for (std::int32_t k = start; k < end; ++k) {
      if (tags_[k] == PosTag::kNoun || tags_[k] == PosTag::kPropn ||
          tags_[k] == PosTag::kPron) {
        head = k;
      }
    }
    if (head < 0) head = end - 1;
    if (tags_[head] == PosTag::kDet) return;  // bare determiner
    const auto index = static_cast<std::int32_t>(chunks_.size());
    chunks_.push_back({start, end, head});
    chunk_at_[start] = index;
    for (std::int32_t k = start; k < end; ++k) {
      chunk_of_[k] = index;
      if (k == head) continue;
      if (k > head) {
        Set(k, head, DepLabel::kOther);
      } else if (tags_[k] == PosTag::kDet) {
        Set(k, head, DepLabel::kDet);
      } else if (tags_[k] == PosTag::kAdj || tags_[k] == PosTag::kNum) {
        Set(k, head, DepLabel::kAmod);
      } else {
        Set(k, head, DepLabel::kCompound);
      }
    }
  }

  // Noun chunks: optional determiner, then a run of ADJ/NUM/NOUN/PROPN;
  // a non-relative pronoun is a chunk on its own.
  void BuildChunks() {
    std::int32_t i = 0;
    while (i < m_) {
      if (tags_[i] == PosTag::kDet || IsNominal(tags_[i])) {
        std::int32_t j = i + 1;
        while (j < m_ && IsNominal(tags_[j])) ++j;
        if (tags_[i] != PosTag::kDet || j > i + 1) AddChunk(i, j);
        i = j;
      } else if (tags_[i] == PosTag::kPron && !IsRelativePronoun(i)) {
        AddChunk(i, i + 1);
        ++i;
      } else {
        ++i;
      }
    }
  }

  void FindVerbs() {
    for (std::int32_t i = 0; i < m_; ++i) {
      if (tags_[i] == PosTag::kVerb) is_verb_[i] = true;
    }
    for (std::int32_t i = 0; i < m_; ++i) {
      if (tags_[i] != PosTag::kOther || !IsAuxiliary(lower_[i])) continue;
      std::int32_t k = i + 1;
      while (k < m_ && tags_[k] == PosTag::kOther && IsAuxiliary(lower_[k])) {
        ++k;
      }
      if (k < m_ && tags_[k] == PosTag::kVerb) {
        aux_target_[i] = k;
        Set(i, k, DepLabel::kOther);
      } else if (IsCopula(lower_[i])) {
        // A copula without a following verb is the clause predicate.
        is_verb_[i] = true;
        copula_[i] = true;
      }
    }
    for (std::int32_t i = 0; i < m_; ++i) {
      if (is_verb_[i]) verbs_.push_back(i);
    }
  }

  // Position before `v`, skipping auxiliaries that modify it.
  std::int32_t Before(std::int32_t v) const {
    std::int32_t p = v - 1;
    while (p >= 0 && aux_target_[p] == v) --p;
    return p;
  }

  std::optional<std::int32_t> PrecedingVerb(std::int32_t before) const {
    for (auto it = verbs_.rbegin(); it != verbs_.rend(); ++it) {
      if (*it < before) return *it;
    }
    return std::nullopt;
  }

  std::optional<std::int32_t> PrecedingChunkHead(std::int32_t before) const {
    for (auto it = chunks_.rbegin(); it != chunks_.rend(); ++it) {
      if (it->end <= before) return it->head;
    }
    return std::nullopt;
  }

  std::int32_t FirstConjunct(std::int32_t t) const {
    while (!Unset(t) && label_[t] == DepLabel::kConj && head_[t] >= 0) {
      t = head_[t];
    }
    return t;
  }

  void AssignVerbRoles() {
    for (std::int32_t v : verbs_) {
      const std::int32_t p = Before(v);
      if (p >= 0 && lower_[p] == "to" && tags_[p] == PosTag::kAdp &&
          Unset(p)) {
        Set(p, v, DepLabel::kOther);
        if (IsChunkHead(p - 1)) {
          Set(v, p - 1, DepLabel::kRelcl);
        } else if (auto u = PrecedingVerb(p)) {
          Set(v, *u, DepLabel::kOther);
        }
        continue;
      }
      if (p >= 0 && IsRelativePronoun(p)) {
        Set(p, v, DepLabel::kNsubj);
        std::optional<std::int32_t> antecedent;
        if (IsChunkHead(p - 1)) {
          antecedent = p - 1;
        } else {
          antecedent = PrecedingChunkHead(p);
        }
        if (antecedent) Set(v, *antecedent, DepLabel::kRelcl);
        continue;
      }
      if (p >= 0 && tags_[p] == PosTag::kConj) {
        if (auto u = PrecedingVerb(p)) {
          const std::int32_t first = FirstConjunct(*u);
          Set(p, first, DepLabel::kCc);
          Set(v, first, DepLabel::kConj);
          continue;
        }
      }
      if (p >= 0 && tags_[p] == PosTag::kAdp) {
        Set(v, p, DepLabel::kPobj);
        continue;
      }
      if (root_ < 0) {
        root_ = v;
        head_[v] = kRootHead;
        label_[v] = DepLabel::kRoot;
        if (IsChunkHead(p)) Set(p, v, DepLabel::kNsubj);
      }
    }
  }

  void AttachObjects() {
    for (std::int32_t v : verbs_) {
      if (Unset(v)) continue;
      const Chunk* first = ChunkStartingAt(v + 1);
      if (first == nullptr) continue;
      if (copula_[v]) {
        Set(first->head, v, DepLabel::kAttr);
        continue;
      }
      const Chunk* second = ChunkStartingAt(first->end);
      if (second != nullptr && tags_[first->head] != PosTag::kPron) {
        Set(first->head, v, DepLabel::kDative);
        Set(second->head, v, DepLabel::kDobj);
      } else {
        Set(first->head, v, DepLabel::kDobj);
      }
    }
  }

  void AttachPrepositions() {
    for (std::int32_t i = 0; i < m_; ++i) {
      if (tags_[i] != PosTag::kAdp || !Unset(i)) continue;
      std::optional<std::int32_t> target;
      if (IsVerbalPreposition(lower_[i])) {
        target = PrecedingVerb(i);
        if (!target) target = PrecedingChunkHead(i);
      } else {
        target = PrecedingChunkHead(i);
        if (!target) target = PrecedingVerb(i);
      }
      if (target) Set(i, *target, DepLabel::kPrep);
      if (const Chunk* obj = ChunkStartingAt(i + 1)) {
        Set(obj->head, i, DepLabel::kPobj);
      }
    }
  }

  void AttachNominalConjunctions() {
    for (std::int32_t c = 1; c < m_; ++c) {
      if (tags_[c] != PosTag::kConj || !Unset(c)) continue;
      const std::int32_t left = chunk_of_[c - 1];
      const Chunk* right = ChunkStartingAt(c + 1);
      if (left < 0 || right == nullptr || chunks_[left].end != c) continue;
      const std::int32_t first = FirstConjunct(chunks_[left].head);
      Set(c, first, DepLabel::kCc);
      Set(right->head, first, DepLabel::kConj);
    }
  }

  void ChooseRootIfMissing() {
    if (root_ >= 0) return;
    if (!chunks_.empty()) {
      root_ = chunks_.front().head;
    } else {
      root_ = 0;
      for (std::int32_t i = 0; i < m_; ++i) {
        if (tags_[i] != PosTag::kPunct) {
          root_ = i;
          break;
        }
      }
    }
    // The chosen root may already hang off something inside its chunk.
    head_[root_] = kRootHead;
    label_[root_] = DepLabel::kRoot;
  }

  bool IsDescendant(std::int32_t node, std::int32_t ancestor) const {
    std::int32_t cur = node;
    for (std::int32_t steps = 0; steps <= m_; ++steps) {
      if (cur == ancestor) return true;
      if (cur < 0 || Unset(cur)) return false;
      cur = head_[cur];
    }
    return true;
  }

  void AttachRemaining() {
    for (std::int32_t t = 0; t < m_; ++t) {
      if (!Unset(t)) continue;
      if (tags_[t] == PosTag::kPunct) {
        Set(t, root_, DepLabel::kOther);
        continue;
      }
      std::int32_t target = root_;
      for (std::int32_t j = t - 1; j >= 0; --j) {
        if (!IsDescendant(j, t)) {
          target = j;
          break;
        }
      }
      Set(t, target, DepLabel::kOther);
      fallback_[t] = true;
    }
  }

  DependencyTree Finish() const {
    DependencyTree tree;
    tree.arcs.resize(m_);
    for (std::int32_t i = 0; i < m_; ++i) {
      tree.arcs[i] = {head_[i], i, label_[i], fallback_[i]};
      if (fallback_[i]) tree.low_confidence = true;
    }
    if (!CheckTree(tree).empty()) {
      // Defensive: flatten rather than return an invalid tree.
      for (std::int32_t i = 0; i < m_; ++i) {
        if (i == root_) continue;
        tree.arcs[i] = {root_, i, DepLabel::kOther, true};
      }
      tree.arcs[root_] = {kRootHead, root_, DepLabel::kRoot, false};
      tree.low_confidence = true;
    }
    return tree;
  }

  std::span<const PosTag> tags_;
  std::int32_t m_;
  std::vector<std::string> lower_;
  std::vector<std::int32_t> head_;
  std::vector<DepLabel> label_;
  std::vector<bool> fallback_;
  std::vector<Chunk> chunks_;
  std::vector<std::int32_t> chunk_at_;
  std::vector<std::int32_t> chunk_of_;
  std::vector<std::int32_t> aux_target_;
  std::vector<bool> is_verb_;
  std::vector<bool> copula_;
  std::vector<std::int32_t> verbs_;
  std::int32_t root_ = -1;
};

}  // namespace

DependencyTree RuleBasedParser::ParseSentence(
    std::span<const Token> tokens, std::span<const PosTag> tags) const {
  if (tokens.empty()) return {};
  return SentenceParser(tokens, tags).Run();
}

const ParserBackend& DefaultParser() {
  static const RuleBasedParser parser;
  return parser;
}

DependencyTree ParseDependencies(std::span<const Token> tokens,
                                 std::span<const PosTag> tags,
                                 const ParserBackend& backend) {
  DependencyTree tree;
  tree.arcs.reserve(tokens.size());
  std::int32_t first_root = kRootHead;
  for (const Sentence& s : SplitSentences(tokens, tags)) {
    const std::size_t len = s.last_token - s.first_token;
    DependencyTree part = backend.ParseSentence(
        tokens.subspan(s.first_token, len), tags.subspan(s.first_token, len));
    const auto offset = static_cast<std::int32_t>(s.first_token);
    for (Arc arc : part.arcs) {
      arc.dependent += offset;
      if (arc.head == kRootHead) {
        if (first_root == kRootHead) {
          first_root = arc.dependent;
        } else {
          arc.head = first_root;
          arc.label = DepLabel::kOther;
        }
      } else {
        arc.head += offset;
      }
      tree.arcs.push_back(arc);
    }
    tree.low_confidence = tree.low_confidence || part.low_confidence;
  }
  return tree;
}

std::vector<GoldRecord> ParseGoldFixture(std::string_view content) {
  std::vector<GoldRecord> out;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_no = 0;
  GoldRecord* current = nullptr;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("gold fixture line " +
                                std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("# text: ", 0) == 0) {
      out.push_back({line.substr(8), {}});
      current = &out.back();
      continue;
    }
    if (line.empty() || line[0] == '#') {
      if (line.empty()) current = nullptr;
      continue;
    }
    if (current == nullptr) fail("arc outside a record");
    std::istringstream fields(line);
    std::string dep, head, label;
    if (!std::getline(fields, dep, '\t') || !std::getline(fields, head, '\t') ||
        !std::getline(fields, label, '\t')) {
      fail("expected three tab-separated fields");
    }
    Arc arc;
    auto parse_int = [&](const std::string& s, std::int32_t& v) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        fail("bad index '" + s + "'");
      }
    };
    parse_int(dep, arc.dependent);
    if (head == "ROOT") {
      arc.head = kRootHead;
    } else {
      parse_int(head, arc.head);
    }
    auto l = ParseDepLabel(label);
    if (!l) fail("unknown label '" + label + "'");
    arc.label = *l;
    current->arcs.push_back(arc);
  }
  return out;
}

std::string FormatArcs(const DependencyTree& tree) {
  std::string out;
  for (const Arc& arc : tree.arcs) {
    out += std::to_string(arc.dependent);
    out += '\t';
    out += arc.head == kRootHead ? std::string("ROOT")
                                 : std::to_string(arc.head);
    out += '\t';
    out += DepLabelName(arc.label);
    out += '\n';
  }
  return out;
}

}  // namespace langsketch::nlp
