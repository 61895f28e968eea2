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


#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/mbn_gen.h"
#include "vowifi/mbn/client_policy.h"
#include "vowifi/mbn/document.h"
#include "vowifi/mbn/fixture.h"
#include "vowifi/mbn/rules.h"

namespace vowifi::mbn {
namespace {

using Files = std::vector<std::pair<std::string, Bytes>>;

McfgErrc CodeOf(ByteView data) {
  try {
    ParseMbn(data);
  } catch (const McfgError& e) {
    return e.code();
  }
  ADD_FAILURE() << "parse unexpectedly succeeded";
  return McfgErrc::kSpecInvalid;
}

McfgLayout SmallLayout() {
  McfgLayout l;
  l.format_version = 3;
  l.config_type = 1;
  l.version = 0x01020304;
  l.items.push_back({NvItem{0x1234, {0xaa, 0xbb}}, 0x0019});
  l.items.push_back({EfsFile{"/a/b", ToBytes("xyz")}, 0x0001});
  l.trailer = {"Op", ToBytes("mcc=310")};
  return l;
}

// SmallLayout() written out by hand from the documented layout.
Bytes SmallLayoutBytes() {
  return FromHex(
      "4d434647" "0300" "0100" "02000000" "04030201"
      "04000000" "0100" "1900" "3412" "aabb"
      "0a000000" "0200" "0100" "0500" "2f612f6200" "78797a"
      "4d4346475f54524c" "0200" "4f70" "0700" "6d63633d333130");
}

Files FilesOf(std::initializer_list<std::pair<const char*, const char*>> list) {
  Files out;
  for (const auto& [p, c] : list) out.emplace_back(p, ToBytes(c));
  return out;
}

RuleSet EpdgRules() {
  return RuleSet::Parse(
      "*epdg*config*  key:ike_encryption  l1_encr\n"
      "*epdg*config*  key:esp_encryption  l2_encr\n");
}

TEST(McfgParseTest, HandEncodedLayout) {
  EXPECT_EQ(BuildMbnFixture(SmallLayout()), SmallLayoutBytes());
  const McfgDocument doc = ParseMbn(SmallLayoutBytes());
  EXPECT_EQ(doc.container_kind, ContainerKind::kRawMcfg);
  EXPECT_EQ(doc.version, 0x01020304u);
  ASSERT_EQ(doc.item_count, 2u);
  ASSERT_EQ(doc.items.size(), 2u);
  EXPECT_EQ(doc.items[0].offset, 16u);
  EXPECT_EQ(doc.items[0].length, 4u);
  EXPECT_EQ(std::get<NvItem>(doc.items[0].kind), (NvItem{0x1234, {0xaa, 0xbb}}));
  EXPECT_EQ(doc.items[1].offset, 28u);
  EXPECT_EQ(doc.items[1].length, 10u);
  EXPECT_EQ(std::get<EfsFile>(doc.items[1].kind).path, "/a/b");
  EXPECT_EQ(doc.trailer.carrier_name, "Op");
  EXPECT_EQ(Project(doc), SmallLayout());
}

TEST(McfgParseTest, MinimalSpecHasEmptyDocumentAndTrailer) {
  McfgLayout l;
  l.trailer.carrier_name = "none";
  const auto doc = ParseMbn(BuildMbnFixture(l));
  EXPECT_TRUE(doc.items.empty());
  EXPECT_EQ(doc.item_count, 0u);
  EXPECT_EQ(doc.trailer.carrier_name, "none");
}

TEST(McfgParseTest, ElfWrappedRoundTrip) {
  for (bool elf64 : {false, true}) {
    McfgLayout l = SmallLayout();
    l.container_kind = ContainerKind::kElfWrapped;
    l.elf64 = elf64;
    const Bytes data = BuildMbnFixture(l);
    EXPECT_EQ(data[4], elf64 ? 2 : 1);
    const auto doc = ParseMbn(data);
    EXPECT_EQ(Project(doc), l);
    const auto offsets = ItemOffsets(l);
    ASSERT_EQ(offsets.size(), 2u);
    EXPECT_EQ(doc.items[0].offset, offsets[0]);
    EXPECT_EQ(offsets[1] - offsets[0], 12u);
    // The MCFG image sits unchanged inside the wrapper.
    const Bytes image = SmallLayoutBytes();
    EXPECT_TRUE(std::search(data.begin(), data.end(), image.begin(), image.end()) != data.end());
  }
}

TEST(McfgParseTest, BadMagicIsNotMcfg) {
  for (auto kind : {ContainerKind::kRawMcfg, ContainerKind::kElfWrapped}) {
    FixtureSpec spec{SmallLayout(), std::nullopt, true};
    spec.layout.container_kind = kind;
    EXPECT_EQ(CodeOf(BuildMbnFixture(spec)), McfgErrc::kNotMcfg);
  }
}

TEST(McfgParseTest, RandomBytesAreNotMcfg) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Bytes b(rng() % 64);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    if (!b.empty() && (b[0] == 0x7f || b[0] == 'M')) b[0] = 0;
    EXPECT_EQ(CodeOf(b), McfgErrc::kNotMcfg);
  }
}

TEST(McfgParseTest, TruncatedMidItemReportsItemOffset) {
  EXPECT_EQ(CodeOf(BuildMbnFixture(FixtureSpec{SmallLayout(), 30, false})), McfgErrc::kTruncated);
  try {
    ParseMbn(BuildMbnFixture(FixtureSpec{SmallLayout(), 30, false}));
  } catch (const McfgError& e) {
    EXPECT_EQ(e.offset(), 28u);
  }
  try {
    ParseMbn(BuildMbnFixture(FixtureSpec{SmallLayout(), 20, false}));
  } catch (const McfgError& e) {
    EXPECT_EQ(e.code(), McfgErrc::kTruncated);
    EXPECT_EQ(e.offset(), 16u);
  }
}

TEST(McfgParseTest, EveryTruncationIsAStructuredError) {
  testing::LayoutGenerator gen(11);
  for (int i = 0; i < 40; ++i) {
    const McfgLayout l = gen.Next();
    const Bytes full = BuildMbnFixture(l);
    const auto offsets = ItemOffsets(l);
    for (std::size_t cut = 0; cut < full.size(); ++cut) {
      const ByteView part(full.data(), cut);
      try {
        ParseMbn(part);
        FAIL() << "cut " << cut;
      } catch (const McfgError& e) {
        if (l.container_kind == ContainerKind::kRawMcfg && cut >= 4) {
          ASSERT_EQ(e.code(), McfgErrc::kTruncated) << e.what();
          // A cut inside an item names that item's header.
          for (std::size_t k = 0; k < offsets.size(); ++k) {
            const std::size_t end = k + 1 < offsets.size() ? offsets[k + 1] : SIZE_MAX;
            if (cut > offsets[k] && cut < end && e.offset() < offsets[k] + 8 &&
                e.offset() >= offsets[k]) {
              EXPECT_EQ(e.offset(), offsets[k]);
            }
          }
        }
      }
    }
  }
}

TEST(McfgParseTest, CountMismatchAndStrayBytesAreBadTrailer) {
  Bytes data = SmallLayoutBytes();
  data[8] = 1;
  EXPECT_EQ(CodeOf(data), McfgErrc::kBadTrailer);
  data = SmallLayoutBytes();
  data.push_back(0);
  EXPECT_EQ(CodeOf(data), McfgErrc::kBadTrailer);
  data = SmallLayoutBytes();
  data[46 + 7] = 'X';
  EXPECT_EQ(CodeOf(data), McfgErrc::kBadTrailer);
}

TEST(McfgParseTest, OffShapeKnownItemsBecomeUnknownRecords) {
  // NV item with a one-byte payload; EFS item whose path lacks its NUL.
  Bytes data = FromHex(
      "4d434647" "0300" "0100" "02000000" "00000000"
      "01000000" "0100" "0000" "ff"
      "05000000" "0200" "0000" "0300" "2f6162"
      "4d4346475f54524c" "0000" "0000");
  const auto doc = ParseMbn(data);
  ASSERT_EQ(doc.items.size(), 2u);
  EXPECT_EQ(std::get<UnknownItem>(doc.items[0].kind), (UnknownItem{1, {0xff}}));
  EXPECT_EQ(std::get<UnknownItem>(doc.items[1].kind).type, 2);
}

TEST(McfgParseTest, GeneratedLayoutsRoundTripWithInvariants) {
  testing::LayoutGenerator gen(3);
  for (int i = 0; i < 300; ++i) {
    const McfgLayout l = gen.Next();
    const Bytes data = BuildMbnFixture(l);
    const McfgDocument doc = ParseMbn(data);
    ASSERT_EQ(Project(doc), l);
    EXPECT_EQ(doc.item_count, doc.items.size());
    std::size_t prev = 0;
    for (const auto& item : doc.items) {
      EXPECT_GT(item.offset, prev);
      EXPECT_LE(item.offset + kItemHeaderSize + item.length, data.size());
      prev = item.offset;
    }
  }
}

TEST(McfgParseTest, MutationFuzzOnlyRaisesMcfgError) {
  testing::LayoutGenerator gen(5);
  for (int i = 0; i < 3000; ++i) {
    Bytes data = BuildMbnFixture(gen.Next());
    const auto flips = 1 + gen.Below(6);
    for (std::size_t f = 0; f < flips; ++f) {
      data[gen.Below(data.size())] = static_cast<std::uint8_t>(gen.rng()());
    }
    try {
      ParseMbn(data);
    } catch (const McfgError&) {
    }
  }
}

TEST(McfgFixtureTest, InvalidSpecs) {
  auto code = [](const FixtureSpec& s) {
    try {
      BuildMbnFixture(s);
    } catch (const McfgError& e) {
      return e.code();
    }
    return McfgErrc::kNotMcfg;
  };
  FixtureSpec s{SmallLayout(), std::nullopt, false};
  s.layout.items.push_back({EfsFile{"", {}}, 0});
  EXPECT_EQ(code(s), McfgErrc::kSpecInvalid);
  s.layout = SmallLayout();
  s.layout.items.push_back({UnknownItem{kItemTypeNv, {}}, 0});
  EXPECT_EQ(code(s), McfgErrc::kSpecInvalid);
  s.layout = SmallLayout();
  s.layout.elf64 = true;
  EXPECT_EQ(code(s), McfgErrc::kSpecInvalid);
  s.layout = SmallLayout();
  s.truncate_at = 1000;
  EXPECT_EQ(code(s), McfgErrc::kSpecInvalid);
}

TEST(ExtractEmbeddedFilesTest, OrderAndDuplicatesKept) {
  McfgLayout l;
  l.items.push_back({EfsFile{"/x", ToBytes("1")}, 0});
  l.items.push_back({NvItem{5, {}}, 0});
  l.items.push_back({EfsFile{"/y", ToBytes("2")}, 0});
  auto files = ExtractEmbeddedFiles(ParseMbn(BuildMbnFixture(l)));
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0].first, "/x");
  EXPECT_EQ(files[1].first, "/y");

  l.items.push_back({EfsFile{"/x", ToBytes("3")}, 0});
  files = ExtractEmbeddedFiles(ParseMbn(BuildMbnFixture(l)));
  ASSERT_EQ(files.size(), 3u);
  EXPECT_EQ(files[2], (std::pair<std::string, Bytes>{"/x", ToBytes("3")}));

  McfgLayout nv_only;
  nv_only.items.push_back({NvItem{1, {1}}, 0});
  EXPECT_TRUE(ExtractEmbeddedFiles(ParseMbn(BuildMbnFixture(nv_only))).empty());
}

TEST(MetadataTest, KeyValuePairs) {
  const Trailer t{"x", ToBytes("mcc=310; mnc = 260\nregion=NorthAmerica;junk")};
  const auto pairs = MetadataPairs(t);
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(pairs[1], (std::pair<std::string, std::string>{"mnc", "260"}));
}

TEST(RulesTest, GlobSemantics) {
  EXPECT_TRUE(GlobMatch("*epdg*config*", "/nv/item_files/ims/epdg_config.xml"));
  EXPECT_TRUE(GlobMatch("/a/?.txt", "/a/b.txt"));
  EXPECT_FALSE(GlobMatch("/a/?.txt", "/a/bc.txt"));
  EXPECT_TRUE(GlobMatch("*", ""));
  EXPECT_FALSE(GlobMatch("*epdg*", "/nv/wlan.conf"));
  EXPECT_TRUE(GlobMatch("a*b*c", "axxbyyc"));
  EXPECT_FALSE(GlobMatch("a*b*c", "axxbyy"));
}

TEST(RulesTest, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      RuleSet::Parse(text);
    } catch (const McfgError& e) {
      EXPECT_EQ(e.code(), McfgErrc::kRuleParseError);
      return e.offset();
    }
    return 999;
  };
  EXPECT_EQ(line_of("# c\n* key:a l1_encr\n* key:b nonsense\n"), 3u);
  EXPECT_EQ(line_of("* bogus:a l1_encr\n"), 1u);
  EXPECT_EQ(line_of("\n* regex:([ l2_encr\n"), 2u);
  EXPECT_EQ(line_of("* key:a\n"), 1u);
  EXPECT_EQ(line_of("# nothing\n"), 0u);
  EXPECT_FALSE(RuleSet::Default().empty());
}

TEST(RulesTest, KeyMatcherFormats) {
  const RuleSet r = RuleSet::Parse("* key:ike_encryption l1_encr\n");
  EXPECT_EQ(r.Match(0, "ike_encryption = null, aes-cbc-256\n"),
            std::vector<std::string>{"null, aes-cbc-256"});
  EXPECT_EQ(r.Match(0, "  \"IKE_Encryption\": \"aes256\",\n"), std::vector<std::string>{"aes256\","});
  EXPECT_EQ(r.Match(0, "<cfg><ike_encryption>3des</ike_encryption></cfg>"),
            std::vector<std::string>{"3des"});
  EXPECT_TRUE(r.Match(0, "ike_encryption_mode = strict\n").empty());
}

TEST(RulesTest, RegexMatcherCollectsGroups) {
  const RuleSet r = RuleSet::Parse("* regex:esp=([a-z0-9]+)- l2_encr\n");
  EXPECT_EQ(r.Match(0, "esp=null-sha1 esp=aes128-sha1\nESP=des-md5"),
            (std::vector<std::string>{"null", "aes128", "des"}));
}

TEST(RulesTest, Normalization) {
  EXPECT_EQ(NormalizeAlgorithm("ENCR_NULL"), "null");
  EXPECT_EQ(NormalizeAlgorithm(" 3DES-CBC "), "3des");
  EXPECT_EQ(NormalizeAlgorithm("AES256"), "aes-cbc-256");
  EXPECT_EQ(NormalizeAlgorithm("hmac-sha1-96"), "hmac-sha1-96");
}

TEST(ClientPolicyTest, EpdgConfigExample) {
  const auto files =
      FilesOf({{"/nv/item_files/ims/epdg_config.txt", "ike_encryption = null, aes-cbc-256\n"}});
  const ClientPolicy p = ExtractClientPolicy(files, EpdgRules());
  EXPECT_EQ(p.l1_encr, (std::vector<std::string>{"null", "aes-cbc-256"}));
  EXPECT_TRUE(p.l2_encr.empty());
  EXPECT_EQ(p.sources, std::vector<std::string>{"/nv/item_files/ims/epdg_config.txt"});
}

TEST(ClientPolicyTest, NoMatchingFileGivesEmptyPolicy) {
  const auto p = ExtractClientPolicy(FilesOf({{"/nv/other.txt", "ike_encryption = null"}}), EpdgRules());
  EXPECT_EQ(p, ClientPolicy{});
  EXPECT_EQ(ClassifyClientPolicy(p), ClientFinding{});
}

TEST(ClientPolicyTest, LaterFileWinsBothInEvidence) {
  const auto files = FilesOf({{"/a/epdg_config", "ike_encryption = null"},
                              {"/b/epdg_config", "ike_encryption = aes-cbc-128"}});
  const auto p = ExtractClientPolicy(files, EpdgRules());
  EXPECT_EQ(p.l1_encr, std::vector<std::string>{"aes-cbc-128"});
  ASSERT_EQ(p.evidence.size(), 2u);
  EXPECT_EQ(p.evidence[0].path, "/a/epdg_config");
  EXPECT_EQ(p.evidence[1].path, "/b/epdg_config");
  EXPECT_FALSE(ClassifyClientPolicy(p).l1_null);
}

TEST(ClassifyClientTest, NullAtBothLayers) {
  const auto files = FilesOf({{"/nv/epdg_config", "ike_encryption = null, aes-cbc-128\n"
                                                  "esp_encryption = null\n"}});
  const auto f = ClassifyClientPolicy(ExtractClientPolicy(files, EpdgRules()));
  EXPECT_TRUE(f.l1_null);
  EXPECT_TRUE(f.l2_null);
  EXPECT_FALSE(f.uses_des);
  ASSERT_EQ(f.evidence.size(), 2u);
  EXPECT_EQ(f.evidence[0].second, "null, aes-cbc-128");
}

TEST(ClassifyClientTest, AesOnlyAndDes) {
  ClientPolicy p;
  p.l1_encr = {"aes-cbc-128", "aes-cbc-256"};
  p.l2_encr = {"aes-cbc-128"};
  EXPECT_EQ(ClassifyClientPolicy(p), ClientFinding{});

  const auto files = FilesOf({{"/nv/epdg_config", "esp_encryption = aes128, des"}});
  const auto f = ClassifyClientPolicy(ExtractClientPolicy(files, EpdgRules()));
  EXPECT_TRUE(f.uses_des);
  EXPECT_FALSE(f.l2_null);
  ASSERT_EQ(f.evidence.size(), 1u);
  EXPECT_EQ(f.evidence[0].first, "/nv/epdg_config");
}

// Random rule hits over a small vocabulary.
Files RandomFiles(std::mt19937& rng, bool distinct_fields) {
  static const char* kKeys[] = {"ike_encryption", "esp_encryption"};
  static const char* kAlgs[] = {"null", "des", "3des", "aes128", "aes-cbc-256"};
  Files files;
  const int n = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) {
    std::string body;
    const int key = distinct_fields ? i % 2 : static_cast<int>(rng() % 2);
    if (distinct_fields && i >= 2) break;
    body += std::string(kKeys[key]) + " = ";
    const int m = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < m; ++k) body += std::string(k ? ", " : "") + kAlgs[rng() % 5];
    files.emplace_back("/nv/" + std::to_string(i) + "/epdg_config", ToBytes(body + "\n"));
  }
  return files;
}

TEST(ClassifyClientTest, EveryRaisedFlagHasEvidence) {
  std::mt19937 rng(17);
  const RuleSet rules = EpdgRules();
  for (int i = 0; i < 500; ++i) {
    const auto p = ExtractClientPolicy(RandomFiles(rng, false), rules);
    const auto f = ClassifyClientPolicy(p);
    EXPECT_EQ(f, ClassifyClientPolicy(p));
    if (f.l1_null || f.l2_null || f.uses_des) {
      EXPECT_FALSE(f.evidence.empty());
    }
    EXPECT_EQ(f.l1_null, std::count(p.l1_encr.begin(), p.l1_encr.end(), "null") > 0);
    for (const auto& [path, entry] : f.evidence) {
      EXPECT_TRUE(std::any_of(p.evidence.begin(), p.evidence.end(), [&](const Evidence& e) {
        return e.path == path && e.entry == entry;
      }));
    }
  }
}

TEST(ClientPolicyTest, PermutingNonConflictingFilesOnlyReordersEvidence) {
  std::mt19937 rng(23);
  const RuleSet rules = EpdgRules();
  for (int i = 0; i < 200; ++i) {
    Files files = RandomFiles(rng, true);
    auto a = ExtractClientPolicy(files, rules);
    std::reverse(files.begin(), files.end());
    auto b = ExtractClientPolicy(files, rules);
    EXPECT_EQ(a.l1_encr, b.l1_encr);
    EXPECT_EQ(a.l2_encr, b.l2_encr);
    auto key = [](const Evidence& e) { return std::tie(e.path, e.entry, e.field); };
    auto by_key = [&](const Evidence& x, const Evidence& y) { return key(x) < key(y); };
    std::sort(a.evidence.begin(), a.evidence.end(), by_key);
    std::sort(b.evidence.begin(), b.evidence.end(), by_key);
    ASSERT_EQ(a.evidence.size(), b.evidence.size());
    for (std::size_t k = 0; k < a.evidence.size(); ++k) EXPECT_EQ(key(a.evidence[k]), key(b.evidence[k]));
  }
}

TEST(AuditContainerTest, DefaultRulesOnIwlanXml) {
  McfgLayout l;
  l.items.push_back({EfsFile{"/nv/item_files/data/iwlan_s2b_config.xml",
                             ToBytes("<iwlan>\n<IKEEncryptionAlgo>ENCR_NULL,ENCR_AES_CBC</IKEEncryptionAlgo>\n"
                                     "<ESPEncryptionAlgo>ENCR_NULL</ESPEncryptionAlgo>\n</iwlan>\n")},
                     0});
  l.trailer = {"Carrier-X", ToBytes("mcc=310;mnc=260;region=NorthAmerica")};
  const auto rec = AuditContainer("x.mbn", ParseMbn(BuildMbnFixture(l)), RuleSet::Default());
  EXPECT_EQ(rec.label, "Carrier-X");
  EXPECT_EQ(rec.mcc, "310");
  EXPECT_EQ(rec.region, "NorthAmerica");
  EXPECT_EQ(rec.policy.l1_encr, (std::vector<std::string>{"null", "encr-aes-cbc"}));
  EXPECT_TRUE(rec.finding.l1_null);
  EXPECT_TRUE(rec.finding.l2_null);
  const std::string line = SerializeClientRecord(rec);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_NE(line.find("\"kind\":\"client\""), std::string::npos);
  EXPECT_NE(line.find("\"l1_null\":true"), std::string::npos);
}

}  // namespace
}  // namespace vowifi::mbn
