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

#ifndef VOWIFI_SIM_SERVER_H_
#define VOWIFI_SIM_SERVER_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <thread>

#include "vowifi/sim/responder.h"

namespace vowifi::sim {

struct ServerOptions {
  std::string bind_address = "127.0.0.1";
  std::uint16_t ike_port = 0;  // 0 picks an ephemeral port
  std::uint16_t natt_port = 0;
  bool enable_natt = true;
};

// UDP front end for a Responder: one receive thread serving the IKE port
// and, optionally, the NAT-T port (non-ESP marker framing).
class SimServer {
 public:
  // Throws SimError(kBindFailure) or SimError(kInvalidPolicy).
  static std::unique_ptr<SimServer> Serve(EpdgPolicy policy, const ServerOptions& options = {},
                                          crypto::RandomSource* rng = nullptr);

  ~SimServer();
  SimServer(const SimServer&) = delete;
  SimServer& operator=(const SimServer&) = delete;

  // Stops the receive thread and closes the sockets. Idempotent.
  void Shutdown();

  const std::string& address() const { return address_; }
  std::uint16_t ike_port() const { return ike_port_; }
  std::uint16_t natt_port() const { return natt_port_; }
  Responder& responder() { return responder_; }

 private:
  SimServer(EpdgPolicy policy, crypto::RandomSource* rng);
  void Run();
  void ServeOne(int fd, bool natt);

  Responder responder_;
  std::string address_;
  std::uint16_t ike_port_ = 0;
  std::uint16_t natt_port_ = 0;
  int ike_fd_ = -1;
  int natt_fd_ = -1;
  int wake_[2] = {-1, -1};
  std::atomic<bool> stopping_{false};
  std::thread thread_;
};

}  // namespace vowifi::sim

#endif  // VOWIFI_SIM_SERVER_H_
