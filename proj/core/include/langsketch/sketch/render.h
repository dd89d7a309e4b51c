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

#ifndef LANGSKETCH_SKETCH_RENDER_H_
#define LANGSKETCH_SKETCH_RENDER_H_

#include <string>
#include <string_view>
#include <vector>

#include "langsketch/sketch/sketch.h"

namespace langsketch::sketch {

// Python text of a valid sketch: 4-space indentation, one "\n" per line,
// "..." for holes with their labels in a trailing "# a, b" comment, and a
// single "..." line for an empty body. Throws std::invalid_argument when the
// sketch does not validate.
std::string Render(const Sketch& sketch);

// Renders an expression subtree on one line, without hole comments.
std::string RenderExpression(const Sketch& sketch, NodeId id);

// Python string literal for the text.
std::string QuoteString(std::string_view text);

}  // namespace langsketch::sketch

#endif  // LANGSKETCH_SKETCH_RENDER_H_
