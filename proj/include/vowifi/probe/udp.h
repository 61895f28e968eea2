// Copyright 2026 The vowifi-audit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VOWIFI_PROBE_UDP_H_
#define VOWIFI_PROBE_UDP_H_

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "vowifi/core/bytes.h"

namespace vowifi::probe {

// Connected IPv4 UDP socket. Socket-level failures throw
// ProbeError(kNetworkError).
class UdpSocket {
 public:
  static UdpSocket Connect(const std::string& address, std::uint16_t port);

  UdpSocket(UdpSocket&& other) noexcept;
  UdpSocket& operator=(UdpSocket&& other) noexcept;
  UdpSocket(const UdpSocket&) = delete;
  UdpSocket& operator=(const UdpSocket&) = delete;
  ~UdpSocket();

  void Send(ByteView data);
  // nullopt when nothing arrives before the timeout.
  std::optional<Bytes> Receive(std::chrono::milliseconds timeout);

  const std::string& peer_address() const { return peer_address_; }
  std::uint16_t peer_port() const { return peer_port_; }
  const std::string& local_address() const { return local_address_; }
  std::uint16_t local_port() const { return local_port_; }

 private:
  UdpSocket(int fd, std::string peer, std::uint16_t peer_port);

  int fd_ = -1;
  std::string peer_address_;
  std::uint16_t peer_port_ = 0;
  std::string local_address_;
  std::uint16_t local_port_ = 0;
};

// Dotted-quad to network-order octets; nullopt for anything else.
std::optional<std::array<std::uint8_t, 4>> ParseIpv4(const std::string& address);

}  // namespace vowifi::probe

#endif  // VOWIFI_PROBE_UDP_H_
