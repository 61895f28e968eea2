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

#include "vowifi/probe/campaign.h"

#include <exception>
#include <optional>
#include <thread>

#include "vowifi/crypto/dh.h"
#include "vowifi/crypto/primitives.h"
#include "vowifi/probe/errors.h"
#include "vowifi/probe/finding_json.h"

namespace vowifi::probe {
namespace {

bool UsableForL2(const ProbeCombo& combo) {
  const auto encr = combo.suite.Get(ike::TransformType::kEncr);
  if (!encr) return false;
  if (encr->id == ike::encr::kDes || encr->id == ike::encr::k3Des) {
    return crypto::AuditCiphersEnabled();
  }
  return true;
}

void ValidatePlan(const CampaignPlan& plan) {
  if (plan.resolver == nullptr) throw ProbeError(ProbeErrc::kInvalidPlan, "no resolver");
  if (plan.sink == nullptr) throw ProbeError(ProbeErrc::kInvalidPlan, "no sink");
  if (plan.matrix.l1.empty()) throw ProbeError(ProbeErrc::kInvalidPlan, "empty L1 matrix");
  if (plan.concurrency == 0) throw ProbeError(ProbeErrc::kInvalidPlan, "concurrency must be >= 1");
  for (const auto& op : plan.operators) {
    try {
      ValidateIdentity(op);
      BuildNai(plan.imsi_template, op);
    } catch (const ProbeError& e) {
      throw ProbeError(ProbeErrc::kInvalidPlan, e.what());
    }
  }
}

}  // namespace

void JsonlSink::Write(const EndpointFinding& finding) {
  const std::string line = SerializeFinding(finding);
  std::lock_guard<std::mutex> lock(mu_);
  out_ << line << '\n';
  out_.flush();
  if (!out_) throw ProbeError(ProbeErrc::kSinkError, "output stream failed");
}

void CollectingSink::Write(const EndpointFinding& finding) {
  std::lock_guard<std::mutex> lock(mu_);
  findings_.push_back(finding);
}

std::vector<EndpointFinding> CollectingSink::findings() const {
  std::lock_guard<std::mutex> lock(mu_);
  return findings_;
}

Journal::Journal(const std::string& path) {
  {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) done_.insert(line);
    }
  }
  out_.open(path, std::ios::app);
  if (!out_) throw ProbeError(ProbeErrc::kSinkError, "cannot open journal " + path);
}

bool Journal::Contains(const std::string& fqdn) const {
  std::lock_guard<std::mutex> lock(mu_);
  return done_.count(fqdn) != 0;
}

void Journal::Record(const std::string& fqdn) {
  std::lock_guard<std::mutex> lock(mu_);
  done_.insert(fqdn);
  if (out_.is_open()) {
    out_ << fqdn << '\n';
    out_.flush();
    if (!out_) throw ProbeError(ProbeErrc::kSinkError, "journal write failed");
  }
}

std::size_t Journal::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return done_.size();
}

EndpointFinding ProbeEndpoint(const std::string& address, const ProbeMatrix& matrix,
                              const std::string& nai, const ProbeOptions& opts) {
  std::vector<ProbeOutcome> outcomes;
  std::optional<ProbeOutcome> anchor;
  auto consider = [&](ProbeOutcome o) {
    if (!anchor && o.verdict.kind == VerdictKind::kAccepted && UsableForL2(o.combo)) anchor = o;
    outcomes.push_back(std::move(o));
  };
  for (const ProbeCombo& combo : matrix.l1) {
    ProbeOutcome o = ProbeL1(address, combo, opts);
    const bool fallback = matrix.group_fallback && o.verdict.kind == VerdictKind::kGroupMismatch &&
                          crypto::IsSupportedGroup(o.verdict.group) &&
                          combo.suite.Get(ike::TransformType::kDh)->id != o.verdict.group;
    const std::uint16_t suggested = o.verdict.group;
    consider(std::move(o));
    if (fallback) {
      ProbeCombo alt = combo;
      alt.suite.Set({ike::TransformType::kDh, suggested, 0});
      consider(ProbeL1(address, alt, opts));
    }
  }
  if (anchor) {
    for (const ProbeCombo& esp : matrix.l2) outcomes.push_back(ProbeL2(address, *anchor, esp, nai, opts));
  }
  return ClassifyEndpoint(outcomes, "", {address});
}

CampaignResult RunCampaign(const CampaignPlan& plan) {
  ValidatePlan(plan);
  CampaignResult result;
  result.operators = plan.operators.size();

  std::optional<Journal> journal;
  if (plan.journal_path.empty()) {
    journal.emplace();
  } else {
    journal.emplace(plan.journal_path);
  }
  RateLimiter limiter(plan.per_host_rate);
  ProbeOptions opts = plan.probe;
  if (opts.rate_limiter == nullptr) opts.rate_limiter = &limiter;

  // One job per distinct fqdn, first operator wins.
  std::vector<std::pair<OperatorIdentity, std::string>> jobs;
  std::set<std::string> seen;
  for (const auto& op : plan.operators) {
    std::string fqdn = GenerateEpdgFqdn(op);
    if (seen.insert(fqdn).second) jobs.emplace_back(op, std::move(fqdn));
  }

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr sink_error;

  auto worker = [&] {
    for (;;) {
      if (abort.load() || (plan.stop != nullptr && plan.stop->load())) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const auto& [op, fqdn] = jobs[i];
      if (journal->Contains(fqdn)) {
        std::lock_guard<std::mutex> lock(mu);
        ++result.skipped;
        continue;
      }
      std::vector<EndpointFinding> findings;
      std::vector<std::string> addresses;
      std::string error;
      try {
        addresses = ResolveEndpoints(fqdn, *plan.resolver);
        if (addresses.empty()) error = "NXDOMAIN";
      } catch (const ProbeError& e) {
        error = e.what();
      }
      if (!error.empty()) {
        EndpointFinding f;
        f.fqdn = fqdn;
        f.error = error;
        findings.push_back(std::move(f));
      } else {
        const std::string nai = BuildNai(plan.imsi_template, op);
        const std::size_t n = plan.probe_all_addresses ? addresses.size() : 1;
        for (std::size_t a = 0; a < n; ++a) {
          EndpointFinding f = ProbeEndpoint(addresses[a], plan.matrix, nai, opts);
          f.fqdn = fqdn;
          f.addresses = addresses;
          findings.push_back(std::move(f));
        }
      }
      try {
        for (auto& f : findings) {
          f.op = op;
          plan.sink->Write(f);
        }
        journal->Record(fqdn);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!sink_error) sink_error = std::current_exception();
        abort.store(true);
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      ++result.completed;
      for (auto& f : findings) result.findings.push_back(std::move(f));
    }
  };

  const std::size_t threads = std::min(plan.concurrency, std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (sink_error) {
    try {
      std::rethrow_exception(sink_error);
    } catch (const ProbeError& e) {
      if (e.code() == ProbeErrc::kSinkError) throw;
      throw ProbeError(ProbeErrc::kSinkError, e.what());
    } catch (const std::exception& e) {
      throw ProbeError(ProbeErrc::kSinkError, e.what());
    }
  }
  result.stopped = plan.stop != nullptr && plan.stop->load() &&
                   result.completed + result.skipped < jobs.size();
  return result;
}

}  // namespace vowifi::probe
