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

#include "vowifi/sim/server.h"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace vowifi::sim {
namespace {

constexpr std::uint8_t kNonEspMarker[4] = {0, 0, 0, 0};

int BindUdp(const std::string& address, std::uint16_t port, std::uint16_t* bound_port) {
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (inet_pton(AF_INET, address.c_str(), &addr.sin_addr) != 1) {
    throw SimError(SimErrc::kBindFailure, "not an IPv4 address: " + address);
  }
  const int fd = socket(AF_INET, SOCK_DGRAM | SOCK_CLOEXEC, 0);
  if (fd < 0) throw SimError(SimErrc::kBindFailure, std::string("socket: ") + std::strerror(errno));
  const int on = 1;
  setsockopt(fd, IPPROTO_IP, IP_PKTINFO, &on, sizeof(on));
  if (bind(fd, reinterpret_cast<const sockaddr*>(&addr), sizeof(addr)) != 0) {
    const std::string err = std::strerror(errno);
    close(fd);
    throw SimError(SimErrc::kBindFailure,
                   "bind " + address + ":" + std::to_string(port) + ": " + err);
  }
  socklen_t len = sizeof(addr);
  getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  *bound_port = ntohs(addr.sin_port);
  return fd;
}

}  // namespace

SimServer::SimServer(EpdgPolicy policy, crypto::RandomSource* rng)
    : responder_(std::move(policy), rng) {}

std::unique_ptr<SimServer> SimServer::Serve(EpdgPolicy policy, const ServerOptions& options,
                                            crypto::RandomSource* rng) {
  std::unique_ptr<SimServer> server(new SimServer(std::move(policy), rng));
  server->address_ = options.bind_address;
  server->ike_fd_ = BindUdp(options.bind_address, options.ike_port, &server->ike_port_);
  if (options.enable_natt) {
    server->natt_fd_ = BindUdp(options.bind_address, options.natt_port, &server->natt_port_);
  }
  if (pipe2(server->wake_, O_CLOEXEC) != 0) {
    throw SimError(SimErrc::kBindFailure, std::string("pipe: ") + std::strerror(errno));
  }
  server->thread_ = std::thread([s = server.get()] { s->Run(); });
  return server;
}

SimServer::~SimServer() {
  Shutdown();
  for (int fd : {ike_fd_, natt_fd_, wake_[0], wake_[1]}) {
    if (fd >= 0) close(fd);
  }
}

void SimServer::Shutdown() {
  if (stopping_.exchange(true)) return;
  if (wake_[1] >= 0) {
    const char byte = 0;
    [[maybe_unused]] const ssize_t n = write(wake_[1], &byte, 1);
  }
  if (thread_.joinable()) thread_.join();
  for (int* fd : {&ike_fd_, &natt_fd_}) {
    if (*fd >= 0) {
      close(*fd);
      *fd = -1;
    }
  }
}

void SimServer::Run() {
  for (;;) {
    pollfd fds[3];
    nfds_t n = 0;
    fds[n++] = {wake_[0], POLLIN, 0};
    fds[n++] = {ike_fd_, POLLIN, 0};
    if (natt_fd_ >= 0) fds[n++] = {natt_fd_, POLLIN, 0};
    if (poll(fds, n, -1) < 0) {
      if (errno == EINTR) continue;
      return;
    }
    if (fds[0].revents != 0 || stopping_.load()) return;
    if (fds[1].revents & POLLIN) ServeOne(ike_fd_, false);
    if (n > 2 && (fds[2].revents & POLLIN)) ServeOne(natt_fd_, true);
  }
}

void SimServer::ServeOne(int fd, bool natt) {
  Bytes buf(65535);
  sockaddr_in peer{};
  iovec iov{buf.data(), buf.size()};
  alignas(cmsghdr) char control[CMSG_SPACE(sizeof(in_pktinfo))];
  msghdr msg{};
  msg.msg_name = &peer;
  msg.msg_namelen = sizeof(peer);
  msg.msg_iov = &iov;
  msg.msg_iovlen = 1;
  msg.msg_control = control;
  msg.msg_controllen = sizeof(control);
  const ssize_t got = recvmsg(fd, &msg, MSG_DONTWAIT);
  if (got < 0) return;
  buf.resize(static_cast<std::size_t>(got));

  PeerInfo info;
  char text[INET_ADDRSTRLEN];
  inet_ntop(AF_INET, &peer.sin_addr, text, sizeof(text));
  info.address = text;
  info.port = ntohs(peer.sin_port);
  info.local_address = address_;
  info.local_port = natt ? natt_port_ : ike_port_;
  for (cmsghdr* c = CMSG_FIRSTHDR(&msg); c != nullptr; c = CMSG_NXTHDR(&msg, c)) {
    if (c->cmsg_level == IPPROTO_IP && c->cmsg_type == IP_PKTINFO) {
      in_pktinfo pi;
      std::memcpy(&pi, CMSG_DATA(c), sizeof(pi));
      inet_ntop(AF_INET, &pi.ipi_addr, text, sizeof(text));
      info.local_address = text;
    }
  }

  ByteView body(buf);
  if (natt) {
    if (body.size() < 4 || std::memcmp(body.data(), kNonEspMarker, 4) != 0) return;  // ESP
    body = body.subspan(4);
  }
  std::optional<Bytes> reply = responder_.HandleDatagram(body, info);
  if (!reply) return;
  Bytes wire;
  if (natt) Append(wire, kNonEspMarker);
  Append(wire, *reply);
  sendto(fd, wire.data(), wire.size(), 0, reinterpret_cast<const sockaddr*>(&peer), sizeof(peer));
}

}  // namespace vowifi::sim
