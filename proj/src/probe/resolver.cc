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

#include "vowifi/probe/resolver.h"

#include <arpa/inet.h>
#include <netdb.h>
#include <sys/socket.h>

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "vowifi/probe/errors.h"

namespace vowifi::probe {

std::vector<std::string> SystemResolver::Lookup(const std::string& fqdn) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_DGRAM;
  addrinfo* raw = nullptr;
  const int rc = getaddrinfo(fqdn.c_str(), nullptr, &hints, &raw);
  std::unique_ptr<addrinfo, decltype(&freeaddrinfo)> list(raw, &freeaddrinfo);
  switch (rc) {
    case 0: break;
    case EAI_NONAME:
#ifdef EAI_NODATA
    case EAI_NODATA:
#endif
      return {};
    case EAI_AGAIN: throw ProbeError(ProbeErrc::kResolverTimeout, fqdn);
    default: throw ProbeError(ProbeErrc::kResolverFailure, fqdn + ": " + gai_strerror(rc));
  }
  std::vector<std::string> out;
  for (const addrinfo* ai = list.get(); ai != nullptr; ai = ai->ai_next) {
    char text[INET_ADDRSTRLEN];
    const auto* sin = reinterpret_cast<const sockaddr_in*>(ai->ai_addr);
    if (inet_ntop(AF_INET, &sin->sin_addr, text, sizeof(text)) != nullptr) out.emplace_back(text);
  }
  return out;
}

void StaticResolver::Add(const std::string& fqdn, std::vector<std::string> addresses) {
  std::lock_guard<std::mutex> lock(mu_);
  auto& entry = hosts_[fqdn];
  entry.insert(entry.end(), addresses.begin(), addresses.end());
}

void StaticResolver::AddTimeout(const std::string& fqdn) {
  std::lock_guard<std::mutex> lock(mu_);
  timeouts_[fqdn] = true;
}

std::vector<std::string> StaticResolver::Lookup(const std::string& fqdn) {
  std::lock_guard<std::mutex> lock(mu_);
  if (timeouts_.count(fqdn)) throw ProbeError(ProbeErrc::kResolverTimeout, fqdn);
  auto it = hosts_.find(fqdn);
  return it == hosts_.end() ? std::vector<std::string>{} : it->second;
}

std::map<std::string, std::vector<std::string>> LoadHostsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProbeError(ProbeErrc::kInvalidPlan, "cannot open hosts file " + path);
  std::map<std::string, std::vector<std::string>> hosts;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string address, name;
    if (!(fields >> address)) continue;
    while (fields >> name) hosts[name].push_back(address);
  }
  return hosts;
}

bool IsValidFqdn(const std::string& fqdn) {
  if (fqdn.empty() || fqdn.size() > 253) return false;
  std::size_t start = 0;
  while (start <= fqdn.size()) {
    std::size_t dot = fqdn.find('.', start);
    if (dot == std::string::npos) dot = fqdn.size();
    const std::size_t len = dot - start;
    if (len == 0 || len > 63) return false;
    if (fqdn[start] == '-' || fqdn[dot - 1] == '-') return false;
    for (std::size_t i = start; i < dot; ++i) {
      const char c = fqdn[i];
      const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c == '-';
      if (!ok) return false;
    }
    start = dot + 1;
    if (dot == fqdn.size()) break;
  }
  return true;
}

std::vector<std::string> ResolveEndpoints(const std::string& fqdn, Resolver& resolver) {
  if (!IsValidFqdn(fqdn)) throw ProbeError(ProbeErrc::kInvalidFqdn, "'" + fqdn + "'");
  std::vector<std::string> out;
  for (auto& addr : resolver.Lookup(fqdn)) {
    if (std::find(out.begin(), out.end(), addr) == out.end()) out.push_back(std::move(addr));
  }
  return out;
}

}  // namespace vowifi::probe
