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

#ifndef LANGSKETCH_ERRORS_H_
#define LANGSKETCH_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace langsketch {

// Malformed catalog document; `entry` is the index in the snippets array,
// or npos for document-level problems.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::size_t entry, const std::string& reason)
      : std::runtime_error(entry == npos ? "catalog: " + reason
                                         : "catalog entry " +
                                               std::to_string(entry) + ": " +
                                               reason),
        entry_(entry) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t entry() const { return entry_; }

 private:
  std::size_t entry_;
};

// A snippet template that does not parse into a sketch fragment.
class TemplateError : public std::runtime_error {
 public:
  TemplateError(const std::string& snippet, const std::string& reason)
      : std::runtime_error("template '" + snippet + "': " + reason),
        snippet_(snippet) {}
  const std::string& snippet() const { return snippet_; }

 private:
  std::string snippet_;
};

// A rule file that does not load (unknown label, bad action, ...).
class RuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A replay script record that cannot be executed. `record` is 1-based.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(std::size_t record, const std::string& reason)
      : std::runtime_error("record " + std::to_string(record) + ": " + reason),
        record_(record) {}
  std::size_t record() const { return record_; }

 private:
  std::size_t record_;
};

// Accept was called with a key that is not pending for the current revision.
class StaleSuggestion : public std::runtime_error {
 public:
  explicit StaleSuggestion(const std::string& key)
      : std::runtime_error("stale suggestion key " + key) {}
};

}  // namespace langsketch

#endif  // LANGSKETCH_ERRORS_H_
