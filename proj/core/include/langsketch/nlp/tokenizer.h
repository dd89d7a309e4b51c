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

#ifndef LANGSKETCH_NLP_TOKENIZER_H_
#define LANGSKETCH_NLP_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "langsketch/nlp/types.h"

namespace langsketch::nlp {

// Splits on whitespace, then peels punctuation off both ends of each chunk
// into single-character tokens. Symbols inside a chunk stay put, so
// identifiers such as "train.csv" or "load_img" survive as one token.
std::vector<Token> Tokenize(std::string_view prompt_text);

// Rebuilds the prompt from the tokens and the whitespace between them.
std::string Reconstruct(std::string_view prompt_text,
                        const std::vector<Token>& tokens);

bool IsEdgePunctuation(char c);

}  // namespace langsketch::nlp

#endif  // LANGSKETCH_NLP_TOKENIZER_H_
