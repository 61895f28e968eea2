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

#include "vowifi/probe/rate_limiter.h"

#include <thread>

namespace vowifi::probe {

RateLimiter::RateLimiter(double packets_per_second) : rate_(packets_per_second) {
  if (rate_ > 0) {
    spacing_ = std::chrono::duration_cast<Clock::duration>(
        std::chrono::duration<double>(1.0 / rate_));
  }
}

void RateLimiter::Acquire(const std::string& host) {
  if (rate_ <= 0) return;
  Host* h;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = hosts_[host];
    if (!slot) slot = std::make_unique<Host>();
    h = slot.get();
  }
  std::lock_guard<std::mutex> lock(h->mu);
  if (h->last) std::this_thread::sleep_until(*h->last + spacing_);
  h->last = Clock::now();
}

}  // namespace vowifi::probe
