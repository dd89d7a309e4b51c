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

#ifndef LANGSKETCH_SERVICE_HTTP_CLIENT_H_
#define LANGSKETCH_SERVICE_HTTP_CLIENT_H_

#include <string>

#include "langsketch/llm/client.h"

namespace langsketch::service {

// Chat-completion client. POSTs {"model", "messages": [{"role": "user",
// "content": prompt}], "stream": true} to the endpoint URL and reads either
// an event stream of "data: {...}" lines with choices[0].delta.content, or
// a plain JSON body with choices[0].message.content. Sends
// "Authorization: Bearer $SKETCH_LLM_API_KEY" when the variable is set.
class HttpLlmClient : public llm::LlmClient {
 public:
  explicit HttpLlmClient(llm::ClientConfig config);
  void Complete(std::string_view prompt, const llm::ChunkSink& sink,
                const std::atomic<bool>* cancel) override;

 private:
  llm::ClientConfig config_;
};

// Splits "scheme://host[:port]/path" into ("scheme://host[:port]", "/path").
// Throws std::invalid_argument for anything else.
std::pair<std::string, std::string> SplitEndpoint(const std::string& url);

}  // namespace langsketch::service

#endif  // LANGSKETCH_SERVICE_HTTP_CLIENT_H_
