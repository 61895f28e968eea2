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

#ifndef VOWIFI_PROBE_RESOLVER_H_
#define VOWIFI_PROBE_RESOLVER_H_

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace vowifi::probe {

class Resolver {
 public:
  virtual ~Resolver() = default;
  // IPv4 addresses in resolver order; empty when the name does not exist.
  // Throws ProbeError(kResolverTimeout) on transient failures.
  virtual std::vector<std::string> Lookup(const std::string& fqdn) = 0;
};

class SystemResolver final : public Resolver {
 public:
  std::vector<std::string> Lookup(const std::string& fqdn) override;
};

// Fixed host table for tests and offline replays.
class StaticResolver final : public Resolver {
 public:
  StaticResolver() = default;
  explicit StaticResolver(std::map<std::string, std::vector<std::string>> hosts)
      : hosts_(std::move(hosts)) {}

  void Add(const std::string& fqdn, std::vector<std::string> addresses);
  // Names listed here fail with kResolverTimeout.
  void AddTimeout(const std::string& fqdn);
  std::vector<std::string> Lookup(const std::string& fqdn) override;

 private:
  std::mutex mu_;
  std::map<std::string, std::vector<std::string>> hosts_;
  std::map<std::string, bool> timeouts_;
};

// Hosts-file style table: "<address> <fqdn> [<fqdn>...]" per line.
std::map<std::string, std::vector<std::string>> LoadHostsFile(const std::string& path);

bool IsValidFqdn(const std::string& fqdn);

// Validates the name, queries the resolver and removes duplicate
// addresses while keeping first-seen order.
std::vector<std::string> ResolveEndpoints(const std::string& fqdn, Resolver& resolver);

}  // namespace vowifi::probe

#endif  // VOWIFI_PROBE_RESOLVER_H_
