// Copyright 2026 The lweid Authors.
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

#ifndef LWEID_NET_HPP
#define LWEID_NET_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace lweid {

class NetError : public std::runtime_error {
 public:
  enum class Kind { Transport, Timeout };
  NetError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Blocking TCP stream with a receive timeout. Move-only; closes on
/// destruction.
class TcpStream {
 public:
  TcpStream() = default;
  explicit TcpStream(int fd) : fd_(fd) {}
  ~TcpStream();
  TcpStream(TcpStream&& other) noexcept;
  TcpStream& operator=(TcpStream&& other) noexcept;
  TcpStream(const TcpStream&) = delete;
  TcpStream& operator=(const TcpStream&) = delete;

  static TcpStream connect(const std::string& host, uint16_t port);

  void set_recv_timeout(std::chrono::milliseconds timeout);
  void send_all(std::span<const uint8_t> data);
  /// Fills the whole buffer; NetError(Timeout) on recv timeout,
  /// NetError(Transport) on EOF or socket error.
  void recv_exact(std::span<uint8_t> data);

  bool valid() const { return fd_ >= 0; }

 private:
  int fd_ = -1;
};

class TcpListener {
 public:
  TcpListener() = default;
  ~TcpListener();
  TcpListener(TcpListener&& other) noexcept;
  TcpListener& operator=(TcpListener&& other) noexcept;
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  /// Binds and listens; port 0 picks an ephemeral port (see port()).
  static TcpListener bind(const std::string& host, uint16_t port);

  uint16_t port() const { return port_; }
  TcpStream accept();

 private:
  int fd_ = -1;
  uint16_t port_ = 0;
};

/// "host:port" split; nullopt when the port is missing or not numeric.
std::optional<std::pair<std::string, uint16_t>> parse_hostport(const std::string& text);

}  // namespace lweid

#endif  // LWEID_NET_HPP
