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

#ifndef LANGSKETCH_SERVICE_STDIO_H_
#define LANGSKETCH_SERVICE_STDIO_H_

#include <istream>
#include <ostream>

#include "langsketch/service/service.h"

namespace langsketch::service {

// NDJSON transport: one request per input line, one response per output
// line. Blank lines are skipped. Returns after end of input once every
// pending reply has been written.
void ServeStdio(Service& service, std::istream& in, std::ostream& out);

}  // namespace langsketch::service

#endif  // LANGSKETCH_SERVICE_STDIO_H_
