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

#include "langsketch/service/websocket.h"

#include <deque>
#include <mutex>
#include <thread>
#include <vector>

#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

namespace langsketch::service {

namespace beast = boost::beast;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

namespace {

class Connection : public std::enable_shared_from_this<Connection> {
 public:
  Connection(tcp::socket socket, Service& service)
      : ws_(std::move(socket)), service_(service) {}

  void Start() {
    net::dispatch(ws_.get_executor(),
                  [self = shared_from_this()] { self->Accept(); });
  }

 private:
  void Accept() {
    ws_.set_option(
        websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept([self = shared_from_this()](beast::error_code ec) {
      if (!ec) self->Read();
    });
  }

  void Read() {
    ws_.async_read(buffer_, [self = shared_from_this()](
                                beast::error_code ec, std::size_t) {
      if (ec) {
        self->closed_ = true;
        return;
      }
      self->OnMessage();
    });
  }

  void OnMessage() {
    std::string text = beast::buffers_to_string(buffer_.data());
    buffer_.consume(buffer_.size());
    std::weak_ptr<Connection> weak = shared_from_this();
    Sender send = [weak](const nlohmann::json& message) {
      if (auto self = weak.lock()) self->Send(message.dump());
    };
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      std::string_view line(text.data() + pos, end - pos);
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
        service_.HandleLine(line, send);
      }
      pos = end + 1;
    }
    Read();
  }

  void Send(std::string message) {
    net::post(ws_.get_executor(), [self = shared_from_this(),
                                   m = std::move(message)]() mutable {
      if (self->closed_) return;
      self->outbox_.push_back(std::move(m));
      if (self->outbox_.size() == 1) self->Write();
    });
  }

  void Write() {
    ws_.text(true);
    ws_.async_write(net::buffer(outbox_.front()),
                    [self = shared_from_this()](beast::error_code ec,
                                                std::size_t) {
                      if (ec) {
                        self->closed_ = true;
                        self->outbox_.clear();
                        return;
                      }
                      self->outbox_.pop_front();
                      if (!self->outbox_.empty()) self->Write();
                    });
  }

  websocket::stream<beast::tcp_stream> ws_;
  Service& service_;
  beast::flat_buffer buffer_;
  std::deque<std::string> outbox_;
  bool closed_ = false;
};

}  // namespace

struct WebSocketServer::Impl {
  Impl(Service& s, const std::string& address, std::uint16_t port)
      : service(s), acceptor(ioc) {
    tcp::endpoint endpoint(net::ip::make_address(address), port);
    acceptor.open(endpoint.protocol());
    acceptor.set_option(net::socket_base::reuse_address(true));
    acceptor.bind(endpoint);
    acceptor.listen(net::socket_base::max_listen_connections);
  }

  void AcceptLoop() {
    acceptor.async_accept(net::make_strand(ioc), [this](beast::error_code ec,
                                                        tcp::socket socket) {
      if (ec) return;
      std::make_shared<Connection>(std::move(socket), service)->Start();
      AcceptLoop();
    });
  }

  Service& service;
  net::io_context ioc;
  tcp::acceptor acceptor;
  std::mutex mu;
  std::vector<std::thread> threads;
};

WebSocketServer::WebSocketServer(Service& service, const std::string& address,
                                 std::uint16_t port)
    : impl_(std::make_unique<Impl>(service, address, port)) {}

WebSocketServer::~WebSocketServer() { Stop(); }

std::uint16_t WebSocketServer::port() const {
  return impl_->acceptor.local_endpoint().port();
}

void WebSocketServer::Start(std::size_t threads) {
  impl_->AcceptLoop();
  std::lock_guard lock(impl_->mu);
  for (std::size_t i = 0; i < std::max<std::size_t>(threads, 1); ++i) {
    impl_->threads.emplace_back([this] { impl_->ioc.run(); });
  }
}

void WebSocketServer::Run(std::size_t threads) {
  Start(threads > 1 ? threads - 1 : 1);
  impl_->ioc.run();
  Stop();
}

void WebSocketServer::Stop() {
  impl_->ioc.stop();
  std::lock_guard lock(impl_->mu);
  for (auto& t : impl_->threads) {
    if (t.joinable() && t.get_id() != std::this_thread::get_id()) t.join();
  }
  impl_->threads.clear();
}

}  // namespace langsketch::service
