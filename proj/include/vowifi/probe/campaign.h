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

#ifndef VOWIFI_PROBE_CAMPAIGN_H_
#define VOWIFI_PROBE_CAMPAIGN_H_

#include <atomic>
#include <fstream>
#include <mutex>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "vowifi/probe/classify.h"
#include "vowifi/probe/identity.h"
#include "vowifi/probe/matrix.h"
#include "vowifi/probe/prober.h"
#include "vowifi/probe/resolver.h"

namespace vowifi::probe {

// Receives findings from concurrent workers. Implementations must be
// thread-safe; a ProbeError(kSinkError) aborts the campaign.
class FindingSink {
 public:
  virtual ~FindingSink() = default;
  virtual void Write(const EndpointFinding& finding) = 0;
};

class JsonlSink final : public FindingSink {
 public:
  explicit JsonlSink(std::ostream& out) : out_(out) {}
  void Write(const EndpointFinding& finding) override;

 private:
  std::mutex mu_;
  std::ostream& out_;
};

class CollectingSink final : public FindingSink {
 public:
  void Write(const EndpointFinding& finding) override;
  std::vector<EndpointFinding> findings() const;

 private:
  mutable std::mutex mu_;
  std::vector<EndpointFinding> findings_;
};

// Completed fqdns, one per line. Without a path the journal lives in
// memory only.
class Journal {
 public:
  Journal() = default;
  explicit Journal(const std::string& path);

  bool Contains(const std::string& fqdn) const;
  void Record(const std::string& fqdn);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::set<std::string> done_;
  std::ofstream out_;
};

struct CampaignPlan {
  std::vector<OperatorIdentity> operators;
  ProbeMatrix matrix = ProbeMatrix::Default();
  std::size_t concurrency = 8;
  double per_host_rate = 10;  // packets per second, <= 0 disables pacing
  ProbeOptions probe;
  Resolver* resolver = nullptr;
  FindingSink* sink = nullptr;
  std::string journal_path;  // empty: no resume support
  bool probe_all_addresses = false;
  std::string imsi_template{kDefaultImsi};
  // Checked between endpoints; set to stop handing out new work.
  const std::atomic<bool>* stop = nullptr;
};

struct CampaignResult {
  std::size_t operators = 0;
  std::size_t skipped = 0;  // already in the journal
  std::size_t completed = 0;
  bool stopped = false;
  std::vector<EndpointFinding> findings;  // completion order
};

// Throws ProbeError(kInvalidPlan) before any probing, and
// ProbeError(kSinkError) when the sink fails. Failures of individual
// endpoints are recorded in their findings.
CampaignResult RunCampaign(const CampaignPlan& plan);

// Full matrix against one address: every L1 combo, then every L2 combo on
// top of the first accepted L1 combo.
EndpointFinding ProbeEndpoint(const std::string& address, const ProbeMatrix& matrix,
                              const std::string& nai, const ProbeOptions& opts);

}  // namespace vowifi::probe

#endif  // VOWIFI_PROBE_CAMPAIGN_H_
