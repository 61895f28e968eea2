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


// vowifi-audit: scan ePDGs, run the simulated ePDG, audit carrier
// configuration containers and aggregate findings.
//
// Exit status: 0 ran clean, 2 ran and found insecure settings, 1 error.

#include <signal.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>

#include "vowifi/mbn/client_policy.h"
#include "vowifi/mbn/document.h"
#include "vowifi/probe/campaign.h"
#include "vowifi/probe/finding_json.h"
#include "vowifi/report/aggregate.h"
#include "vowifi/report/emit.h"
#include "vowifi/sim/server.h"

namespace {

using namespace vowifi;
namespace fs = std::filesystem;

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitFindings = 2;

std::atomic<bool> g_stop{false};

extern "C" void OnInterrupt(int) { g_stop.store(true); }

std::string ReadFile(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// stdout for "-" or empty, otherwise the named file.
class Output {
 public:
  Output(const std::string& path, bool append) {
    if (path.empty() || path == "-") return;
    file_.open(path, append ? std::ios::app : std::ios::trunc);
    if (!file_) throw std::runtime_error("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

bool AnyTrue(const probe::EndpointFinding& f) {
  return f.l1_null == probe::Tri::kTrue || f.l2_null == probe::Tri::kTrue ||
         f.l1_des == probe::Tri::kTrue || f.l2_des == probe::Tri::kTrue;
}

// --- scan ------------------------------------------------------------------

struct ScanArgs {
  std::string operators;
  std::string out = "-";
  std::string journal;
  std::string hosts;
  std::string matrix;
  std::string imsi{probe::kDefaultImsi};
  std::size_t concurrency = 8;
  double rate = 10;
  int timeout_ms = 5000;
  int retries = 2;
  std::uint16_t ike_port = 500;
  std::uint16_t natt_port = 4500;
  bool all_addresses = false;
};

int RunScan(const ScanArgs& a) {
  std::istringstream csv(ReadFile(a.operators));
  probe::CampaignPlan plan;
  plan.operators = probe::ParseOperatorsCsv(csv);
  if (!a.matrix.empty()) plan.matrix = probe::ParseMatrix(ReadFile(a.matrix));
  plan.concurrency = a.concurrency;
  plan.per_host_rate = a.rate;
  plan.probe.timeout = std::chrono::milliseconds(a.timeout_ms);
  plan.probe.retries = a.retries;
  plan.probe.ike_port = a.ike_port;
  plan.probe.natt_port = a.natt_port;
  plan.journal_path = a.journal;
  plan.probe_all_addresses = a.all_addresses;
  plan.imsi_template = a.imsi;
  plan.stop = &g_stop;

  std::unique_ptr<probe::Resolver> resolver;
  if (a.hosts.empty()) {
    resolver = std::make_unique<probe::SystemResolver>();
  } else {
    resolver = std::make_unique<probe::StaticResolver>(probe::LoadHostsFile(a.hosts));
  }
  plan.resolver = resolver.get();

  Output out(a.out, !a.journal.empty());
  probe::JsonlSink sink(out.stream());
  plan.sink = &sink;

  signal(SIGINT, OnInterrupt);
  signal(SIGTERM, OnInterrupt);
  const probe::CampaignResult result = probe::RunCampaign(plan);
  std::cerr << "scan: " << result.completed << " probed, " << result.skipped
            << " skipped (journal), " << result.operators << " operators"
            << (result.stopped ? ", interrupted" : "") << "\n";
  if (result.stopped) return kExitError;
  const bool insecure = std::any_of(result.findings.begin(), result.findings.end(), AnyTrue);
  return insecure ? kExitFindings : kExitClean;
}

// --- sim -------------------------------------------------------------------

struct SimArgs {
  std::string policy;
  std::string bind = "127.0.0.1";
  std::uint16_t ike_port = 500;
  std::uint16_t natt_port = 4500;
  bool no_natt = false;
};

int RunSim(const SimArgs& a) {
  const sim::EpdgPolicy policy = sim::EpdgPolicy::Parse(ReadFile(a.policy));
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  sim::ServerOptions opts;
  opts.bind_address = a.bind;
  opts.ike_port = a.ike_port;
  opts.natt_port = a.natt_port;
  opts.enable_natt = !a.no_natt;
  auto server = sim::SimServer::Serve(policy, opts);
  std::cout << "listening " << server->address() << " ike=" << server->ike_port();
  if (opts.enable_natt) std::cout << " natt=" << server->natt_port();
  std::cout << std::endl;

  int sig = 0;
  sigwait(&signals, &sig);
  server->Shutdown();
  std::cerr << "sim: " << server->responder().Sessions().size() << " sessions, "
            << server->responder().Log().size() << " datagrams\n";
  return kExitClean;
}

// --- parse-mbn ---------------------------------------------------------------

nlohmann::ordered_json DescribeItem(const mbn::McfgItem& item) {
  nlohmann::ordered_json j;
  j["offset"] = item.offset;
  j["length"] = item.length;
  j["attributes"] = item.attributes;
  if (const auto* nv = std::get_if<mbn::NvItem>(&item.kind)) {
    j["kind"] = "nv";
    j["id"] = nv->id;
    j["data"] = ToHex(nv->data);
  } else if (const auto* efs = std::get_if<mbn::EfsFile>(&item.kind)) {
    j["kind"] = "efs";
    j["path"] = efs->path;
    j["size"] = efs->content.size();
  } else {
    const auto& u = std::get<mbn::UnknownItem>(item.kind);
    j["kind"] = "unknown";
    j["type"] = u.type;
    j["raw"] = ToHex(u.raw);
  }
  return j;
}

int RunParseMbn(const std::string& path) {
  const std::string data = ReadFile(path);
  const auto doc = mbn::ParseMbn(ByteView(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
  nlohmann::ordered_json j;
  j["file"] = path;
  j["container"] = doc.container_kind == mbn::ContainerKind::kRawMcfg ? "raw"
                   : doc.elf64                                       ? "elf64"
                                                                     : "elf32";
  j["format_version"] = doc.format_version;
  j["config_type"] = doc.config_type;
  j["version"] = doc.version;
  j["item_count"] = doc.item_count;
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& item : doc.items) j["items"].push_back(DescribeItem(item));
  j["trailer"]["carrier_name"] = doc.trailer.carrier_name;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : mbn::MetadataPairs(doc.trailer)) meta[k] = v;
  j["trailer"]["metadata"] = meta;
  std::cout << j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) << "\n";
  return kExitClean;
}

// --- audit-mbn ---------------------------------------------------------------

struct AuditArgs {
  std::string rules;
  std::string out = "-";
  std::vector<std::string> inputs;
};

std::vector<std::string> CollectFiles(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<std::string> found;
      for (const auto& e : fs::recursive_directory_iterator(in)) {
        if (e.is_regular_file()) found.push_back(e.path().string());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(in);
    }
  }
  return files;
}

int RunAuditMbn(const AuditArgs& a) {
  const mbn::RuleSet rules = a.rules.empty() ? mbn::RuleSet::Default()
                                             : mbn::RuleSet::Parse(ReadFile(a.rules));
  Output out(a.out, false);
  bool insecure = false;
  std::size_t audited = 0, skipped = 0;
  for (const auto& path : CollectFiles(a.inputs)) {
    const std::string data = ReadFile(path);
    mbn::McfgDocument doc;
    try {
      doc = mbn::ParseMbn(ByteView(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
    } catch (const mbn::McfgError& e) {
      std::cerr << path << ": " << e.what() << "\n";
      ++skipped;
      continue;
    }
    const auto record = mbn::AuditContainer(path, doc, rules);
    out.stream() << mbn::SerializeClientRecord(record) << "\n";
    insecure |= record.finding.l1_null || record.finding.l2_null || record.finding.uses_des;
    ++audited;
  }
  out.stream().flush();
  std::cerr << "audit-mbn: " << audited << " audited, " << skipped << " not MCFG\n";
  return insecure ? kExitFindings : kExitClean;
}

// --- report ------------------------------------------------------------------

struct ReportArgs {
  std::string regions;
  std::string format = "text";
  std::string out = "-";
  std::vector<std::string> inputs{"-"};
};

int RunReport(const ReportArgs& a) {
  const auto format = report::ParseFormat(a.format);
  if (!format) throw std::runtime_error("unknown format " + a.format);
  const report::RegionMap regions =
      a.regions.empty() ? report::RegionMap::Default() : report::RegionMap::Parse(ReadFile(a.regions));
  report::Aggregator agg(&regions);
  for (const auto& input : a.inputs) {
    std::istringstream in(ReadFile(input));
    try {
      agg.AddStream(in);
    } catch (const report::ReportError& e) {
      throw std::runtime_error(input + ": " + e.what());
    }
  }
  const auto rows = agg.Rows();
  Output out(a.out, false);
  out.stream() << report::EmitReport(rows, *format);
  const bool any = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.total > 0; });
  return any ? kExitFindings : kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VoWiFi ePDG and client configuration audit toolkit"};
  app.require_subcommand(1);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Probe operator ePDGs and write findings as JSONL");
  scan_cmd->add_option("--operators", scan.operators, "CSV: mcc,mnc,label,region")->required();
  scan_cmd->add_option("-o,--out", scan.out, "Findings JSONL (default stdout)");
  scan_cmd->add_option("--journal", scan.journal, "Resume journal; output is appended");
  scan_cmd->add_option("--hosts", scan.hosts, "Static name table instead of DNS");
  scan_cmd->add_option("--matrix", scan.matrix, "Probe matrix file");
  scan_cmd->add_option("--imsi", scan.imsi, "IMSI template for the IKE_AUTH identity");
  scan_cmd->add_option("-j,--concurrency", scan.concurrency)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--rate", scan.rate, "Packets per second per host, 0 disables");
  scan_cmd->add_option("--timeout-ms", scan.timeout_ms)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--retries", scan.retries)->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--ike-port", scan.ike_port);
  scan_cmd->add_option("--natt-port", scan.natt_port);
  scan_cmd->add_flag("--all-addresses", scan.all_addresses, "Probe every resolved address");

  SimArgs simargs;
  auto* sim_cmd = app.add_subcommand("sim", "Serve the simulated ePDG until interrupted");
  sim_cmd->add_option("--policy", simargs.policy, "Policy file")->required();
  sim_cmd->add_option("--bind", simargs.bind);
  sim_cmd->add_option("--ike-port", simargs.ike_port, "0 picks a free port");
  sim_cmd->add_option("--natt-port", simargs.natt_port, "0 picks a free port");
  sim_cmd->add_flag("--no-natt", simargs.no_natt);

  std::string mbn_file;
  auto* parse_cmd = app.add_subcommand("parse-mbn", "Dump the structure of an MCFG container");
  parse_cmd->add_option("file", mbn_file)->required();

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit-mbn", "Extract client policies and flag insecure ones");
  audit_cmd->add_option("--rules", audit.rules, "Rule file (default: built-in rules)");
  audit_cmd->add_option("-o,--out", audit.out, "Client findings JSONL (default stdout)");
  audit_cmd->add_option("inputs", audit.inputs, "Files or directories")->required();

  ReportArgs rep;
  auto* report_cmd = app.add_subcommand("report", "Aggregate findings per region and layer");
  report_cmd->add_option("--regions", rep.regions, "mcc,region map (default: built-in)");
  report_cmd->add_option("--format", rep.format)->check(CLI::IsMember({"text", "csv", "json"}));
  report_cmd->add_option("-o,--out", rep.out);
  report_cmd->add_option("inputs", rep.inputs, "Finding JSONL files, '-' for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitClean : kExitError;
  }

  try {
    if (*scan_cmd) return RunScan(scan);
    if (*sim_cmd) return RunSim(simargs);
    if (*parse_cmd) return RunParseMbn(mbn_file);
    if (*audit_cmd) return RunAuditMbn(audit);
    if (*report_cmd) return RunReport(rep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
