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

#ifndef LANGSKETCH_SERVICE_WEBSOCKET_H_
#define LANGSKETCH_SERVICE_WEBSOCKET_H_

#include <cstdint>
#include <memory>
#include <string>

#include "langsketch/service/service.h"

namespace langsketch::service {

// WebSocket transport. Each text frame holds one message, or several
// separated by newlines; every reply goes out as its own text frame.
class WebSocketServer {
 public:
  // Binds immediately; port 0 picks a free port. Throws
  // boost::system::system_error when the address cannot be bound.
  WebSocketServer(Service& service, const std::string& address,
                  std::uint16_t port);
  ~WebSocketServer();

  std::uint16_t port() const;

  // Serves on `threads` threads until Stop().
  void Run(std::size_t threads = 2);
  // Serves in the background and returns.
  void Start(std::size_t threads = 2);
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace langsketch::service

#endif  // LANGSKETCH_SERVICE_WEBSOCKET_H_
