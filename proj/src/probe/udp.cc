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

#include "vowifi/probe/udp.h"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "vowifi/probe/errors.h"

namespace vowifi::probe {
namespace {

constexpr std::size_t kMaxDatagram = 65535;

[[noreturn]] void Fail(const std::string& what) {
  throw ProbeError(ProbeErrc::kNetworkError, what + ": " + std::strerror(errno));
}

}  // namespace

std::optional<std::array<std::uint8_t, 4>> ParseIpv4(const std::string& address) {
  in_addr addr{};
  if (inet_pton(AF_INET, address.c_str(), &addr) != 1) return std::nullopt;
  std::array<std::uint8_t, 4> out;
  std::memcpy(out.data(), &addr.s_addr, 4);
  return out;
}

UdpSocket UdpSocket::Connect(const std::string& address, std::uint16_t port) {
  sockaddr_in peer{};
  peer.sin_family = AF_INET;
  peer.sin_port = htons(port);
  if (inet_pton(AF_INET, address.c_str(), &peer.sin_addr) != 1) {
    throw ProbeError(ProbeErrc::kNetworkError, "not an IPv4 address: " + address);
  }
  const int fd = socket(AF_INET, SOCK_DGRAM | SOCK_CLOEXEC, 0);
  if (fd < 0) Fail("socket");
  UdpSocket sock(fd, address, port);
  if (connect(fd, reinterpret_cast<const sockaddr*>(&peer), sizeof(peer)) != 0) {
    Fail("connect " + address);
  }
  sockaddr_in local{};
  socklen_t len = sizeof(local);
  if (getsockname(fd, reinterpret_cast<sockaddr*>(&local), &len) != 0) Fail("getsockname");
  char text[INET_ADDRSTRLEN];
  inet_ntop(AF_INET, &local.sin_addr, text, sizeof(text));
  sock.local_address_ = text;
  sock.local_port_ = ntohs(local.sin_port);
  return sock;
}

UdpSocket::UdpSocket(int fd, std::string peer, std::uint16_t peer_port)
    : fd_(fd), peer_address_(std::move(peer)), peer_port_(peer_port) {}

UdpSocket::UdpSocket(UdpSocket&& other) noexcept
    : fd_(other.fd_),
      peer_address_(std::move(other.peer_address_)),
      peer_port_(other.peer_port_),
      local_address_(std::move(other.local_address_)),
      local_port_(other.local_port_) {
  other.fd_ = -1;
}

UdpSocket& UdpSocket::operator=(UdpSocket&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) close(fd_);
    fd_ = other.fd_;
    other.fd_ = -1;
    peer_address_ = std::move(other.peer_address_);
    peer_port_ = other.peer_port_;
    local_address_ = std::move(other.local_address_);
    local_port_ = other.local_port_;
  }
  return *this;
}

UdpSocket::~UdpSocket() {
  if (fd_ >= 0) close(fd_);
}

void UdpSocket::Send(ByteView data) {
  const ssize_t n = send(fd_, data.data(), data.size(), 0);
  if (n < 0) Fail("send to " + peer_address_);
  if (static_cast<std::size_t>(n) != data.size()) {
    throw ProbeError(ProbeErrc::kNetworkError, "short send to " + peer_address_);
  }
}

std::optional<Bytes> UdpSocket::Receive(std::chrono::milliseconds timeout) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  Bytes buf(kMaxDatagram);
  for (;;) {
    const auto left =
        std::chrono::ceil<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) return std::nullopt;
    pollfd pfd{fd_, POLLIN, 0};
    const int rc = poll(&pfd, 1, static_cast<int>(left.count()));
    if (rc < 0) {
      if (errno == EINTR) continue;
      Fail("poll");
    }
    if (rc == 0) return std::nullopt;
    const ssize_t n = recv(fd_, buf.data(), buf.size(), 0);
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      Fail("recv from " + peer_address_);
    }
    buf.resize(static_cast<std::size_t>(n));
    return buf;
  }
}

}  // namespace vowifi::probe
