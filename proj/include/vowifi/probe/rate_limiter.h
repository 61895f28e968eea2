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

#ifndef VOWIFI_PROBE_RATE_LIMITER_H_
#define VOWIFI_PROBE_RATE_LIMITER_H_

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace vowifi::probe {

// Per-host packet pacing: consecutive Acquire() calls for the same host
// return at least 1/rate seconds apart, measured from the moment the
// previous call returned. Callers for one host are serialized; hosts are
// independent. A rate of zero or less disables pacing.
class RateLimiter {
 public:
  using Clock = std::chrono::steady_clock;

  explicit RateLimiter(double packets_per_second);

  void Acquire(const std::string& host);
  double rate() const { return rate_; }
  Clock::duration spacing() const { return spacing_; }

 private:
  double rate_;
  Clock::duration spacing_{};
  struct Host {
    std::mutex mu;
    std::optional<Clock::time_point> last;
  };

  std::mutex mu_;
  std::map<std::string, std::unique_ptr<Host>> hosts_;
};

}  // namespace vowifi::probe

#endif  // VOWIFI_PROBE_RATE_LIMITER_H_
