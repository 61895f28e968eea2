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

#ifndef VOWIFI_SRC_PROBE_HANDSHAKE_H_
#define VOWIFI_SRC_PROBE_HANDSHAKE_H_

#include <optional>
#include <string>
#include <vector>

#include "vowifi/probe/prober.h"
#include "vowifi/probe/udp.h"

namespace vowifi::probe::internal {

// One request/response exchange path with retransmission. On the NAT-T
// port every datagram carries the four-octet non-ESP marker.
class Channel {
 public:
  Channel(UdpSocket socket, bool natt, const ProbeOptions& opts, std::vector<Datagram>* transcript);

  // Returns the first datagram answering (spi_i, message_id), or nullopt
  // once the retransmission budget is spent.
  std::optional<Bytes> RoundTrip(ByteView request, const ike::Spi& spi_i,
                                 std::uint32_t message_id);

  double last_rtt_ms() const { return last_rtt_ms_; }
  const UdpSocket& socket() const { return socket_; }

 private:
  void Record(bool sent, ByteView data);

  UdpSocket socket_;
  bool natt_;
  const ProbeOptions& opts_;
  std::vector<Datagram>* transcript_;
  double last_rtt_ms_ = 0;
};

struct SaInitResult {
  Verdict verdict;
  std::optional<IkeSaState> sa;
};

SaInitResult RunSaInit(Channel& channel, const ike::Suite& suite, const ProbeOptions& opts,
                       crypto::RandomSource& rng);

}  // namespace vowifi::probe::internal

#endif  // VOWIFI_SRC_PROBE_HANDSHAKE_H_
