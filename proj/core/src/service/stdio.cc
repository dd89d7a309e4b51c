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

#include "langsketch/service/stdio.h"

#include <mutex>
#include <string>

namespace langsketch::service {

void ServeStdio(Service& service, std::istream& in, std::ostream& out) {
  std::mutex out_mu;
  Sender send = [&](const nlohmann::json& message) {
    std::string line = message.dump();
    std::lock_guard lock(out_mu);
    out << line << '\n';
    out.flush();
  };
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    service.HandleLine(line, send);
  }
  service.WaitIdle();
}

}  // namespace langsketch::service
