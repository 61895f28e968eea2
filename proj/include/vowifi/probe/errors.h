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

#ifndef VOWIFI_PROBE_ERRORS_H_
#define VOWIFI_PROBE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vowifi::probe {

enum class ProbeErrc {
  kMalformedIdentity,
  kInvalidFqdn,
  kResolverTimeout,
  kResolverFailure,
  kPrerequisiteMissing,
  kNetworkError,
  kSinkError,
  kInvalidPlan,
  kSchemaError,
};

constexpr std::string_view ProbeErrcName(ProbeErrc code) {
  switch (code) {
    case ProbeErrc::kMalformedIdentity: return "MalformedIdentity";
    case ProbeErrc::kInvalidFqdn: return "InvalidFqdn";
    case ProbeErrc::kResolverTimeout: return "ResolverTimeout";
    case ProbeErrc::kResolverFailure: return "ResolverFailure";
    case ProbeErrc::kPrerequisiteMissing: return "PrerequisiteMissing";
    case ProbeErrc::kNetworkError: return "NetworkError";
    case ProbeErrc::kSinkError: return "SinkError";
    case ProbeErrc::kInvalidPlan: return "InvalidPlan";
    case ProbeErrc::kSchemaError: return "SchemaError";
  }
  return "Unknown";
}

class ProbeError : public std::runtime_error {
 public:
  ProbeError(ProbeErrc code, const std::string& what)
      : std::runtime_error(std::string(ProbeErrcName(code)) + ": " + what), code_(code) {}
  ProbeErrc code() const { return code_; }

 private:
  ProbeErrc code_;
};

}  // namespace vowifi::probe

#endif  // VOWIFI_PROBE_ERRORS_H_
