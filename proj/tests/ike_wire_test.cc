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
#include <set>

#include "support/message_gen.h"
#include "support/seeded_random.h"
#include "vowifi/crypto/primitives.h"
#include "vowifi/crypto/seal.h"
#include "vowifi/ike/proposals.h"
#include "vowifi/ike/wire.h"

namespace vowifi::ike {
namespace {

using crypto::Role;
using crypto::SealContext;
using testing::MessageGenerator;
using testing::SeededRandom;

Algorithm Encr(std::uint16_t id, std::uint16_t bits = 0) {
  return {TransformType::kEncr, id, bits};
}
Algorithm PrfAlg(std::uint16_t id) { return {TransformType::kPrf, id, 0}; }
Algorithm IntegAlg(std::uint16_t id) { return {TransformType::kInteg, id, 0}; }
Algorithm DhAlg(std::uint16_t id) { return {TransformType::kDh, id, 0}; }

Suite IkeSuite(Algorithm encr, std::uint16_t prf_id = prf::kHmacSha1,
               std::uint16_t dh_id = dh::kModp2048) {
  return Suite({encr, PrfAlg(prf_id), IntegAlg(integ::kHmacSha1_96), DhAlg(dh_id)});
}

WireErrc DecodeError(ByteView data, const SealContext* ctx = nullptr) {
  try {
    DecodeMessage(data, ctx);
  } catch (const WireError& e) {
    return e.code();
  }
  ADD_FAILURE() << "decode succeeded";
  return WireErrc::kMalformed;
}

WireErrc EncodeError(const IkeMessage& msg, const SealContext* ctx = nullptr) {
  try {
    EncodeMessage(msg, ctx);
  } catch (const WireError& e) {
    return e.code();
  }
  ADD_FAILURE() << "encode succeeded";
  return WireErrc::kMalformed;
}

SealContext MakeContext(SeededRandom& rng, Algorithm encr, std::uint16_t integ_id) {
  return SealContext(encr, rng.Generate(crypto::EncrKeyLength(encr.id, encr.key_bits)), integ_id,
                     rng.Generate(crypto::IntegKeyLength(integ_id)), Role::kInitiator, &rng);
}

// Hand-assembled IKE_SA_INIT request, written octet by octet from the
// RFC 7296 layouts without touching the encoder.
Bytes HandEncodedSaInit() {
  Bytes b = {
      1, 2, 3, 4, 5, 6, 7, 8,  // SPIi
      0, 0, 0, 0, 0, 0, 0, 0,  // SPIr
      33, 0x20, 34, 0x08,      // next=SA, v2.0, IKE_SA_INIT, I
      0, 0, 0, 0,              // message id
      0, 0, 0, 108,            // length
      // SA
      34, 0, 0, 48,
      0, 0, 0, 44, 1, 1, 0, 4,                           // last proposal #1, IKE, 4 transforms
      3, 0, 0, 12, 1, 0, 0, 12, 0x80, 0x0e, 0x00, 0x80,  // ENCR AES_CBC keylen 128
      3, 0, 0, 8, 2, 0, 0, 2,                            // PRF HMAC_SHA1
      3, 0, 0, 8, 3, 0, 0, 2,                            // INTEG HMAC_SHA1_96
      0, 0, 0, 8, 4, 0, 0, 14,                           // DH 14
      // KE
      40, 0, 0, 12, 0, 14, 0, 0, 0xaa, 0xbb, 0xcc, 0xdd,
      // Nonce
      0, 0, 0, 20};
  b.insert(b.end(), 16, 0x11);
  return b;
}

IkeMessage SaInitMessage() {
  IkeMessage m;
  m.header.initiator_spi = {1, 2, 3, 4, 5, 6, 7, 8};
  m.header.flags = kFlagInitiator;
  m.payloads.push_back(BuildSaPayload({ProposalSpec::FromSuite(
      ProtocolId::kIke, IkeSuite(Encr(encr::kAesCbc, 128)))}));
  m.payloads.push_back(KePayload{dh::kModp2048, {0xaa, 0xbb, 0xcc, 0xdd}});
  m.payloads.push_back(NoncePayload{Bytes(16, 0x11)});
  return m;
}

TEST(WireEncodeTest, MatchesHandEncodedSaInit) {
  EXPECT_EQ(ToHex(EncodeMessage(SaInitMessage())), ToHex(HandEncodedSaInit()));
}

TEST(WireDecodeTest, ParsesHandEncodedSaInit) {
  const IkeMessage m = DecodeMessage(HandEncodedSaInit());
  EXPECT_EQ(m, SaInitMessage());
  const auto* sa = m.Find<SaPayload>();
  ASSERT_NE(sa, nullptr);
  EXPECT_EQ(sa->proposals[0].transforms[0].key_bits(), 128);
}

TEST(WireEncodeTest, EmptyMessageIsBareHeader) {
  IkeMessage m;
  m.header.message_id = 7;
  const Bytes wire = EncodeMessage(m);
  ASSERT_EQ(wire.size(), kHeaderSize);
  EXPECT_EQ(wire[16], 0);  // next payload
  EXPECT_EQ(wire[17], 0x20);
  EXPECT_EQ(wire[27], kHeaderSize);
  EXPECT_EQ(DecodeMessage(wire), m);
}

TEST(WireEncodeTest, SkWithoutContextIsRejected) {
  IkeMessage m;
  m.header.exchange_type = ExchangeType::kIkeAuth;
  m.payloads.push_back(EncryptedPayload{});
  EXPECT_EQ(EncodeError(m), WireErrc::kMissingSealContext);
}

TEST(WireEncodeTest, InvariantViolations) {
  IkeMessage bad_nonce;
  bad_nonce.payloads.push_back(NoncePayload{Bytes(15, 1)});
  EXPECT_EQ(EncodeError(bad_nonce), WireErrc::kInvariantViolation);

  IkeMessage big_nonce;
  big_nonce.payloads.push_back(NoncePayload{Bytes(257, 1)});
  EXPECT_EQ(EncodeError(big_nonce), WireErrc::kInvariantViolation);

  IkeMessage order = SaInitMessage();
  SaPayload sa = *order.payloads[0].As<SaPayload>();
  sa.proposals.push_back(sa.proposals[0]);  // duplicate number 1
  order.payloads[0] = sa;
  EXPECT_EQ(EncodeError(order), WireErrc::kInvariantViolation);

  IkeMessage version;
  version.header.major_version = 1;
  EXPECT_EQ(EncodeError(version), WireErrc::kInvariantViolation);

  IkeMessage empty_ts;
  empty_ts.payloads.push_back(TsPayload{});
  EXPECT_EQ(EncodeError(empty_ts), WireErrc::kInvariantViolation);

  SeededRandom rng(1);
  const SealContext ctx = MakeContext(rng, Encr(encr::kAesCbc, 128), integ::kHmacSha1_96);
  IkeMessage sk_not_last;
  sk_not_last.payloads.push_back(EncryptedPayload{});
  sk_not_last.payloads.push_back(NoncePayload{Bytes(16, 1)});
  EXPECT_EQ(EncodeError(sk_not_last, &ctx), WireErrc::kInvariantViolation);
}

TEST(WireDecodeTest, ShortAndInconsistentLengths) {
  const Bytes good = HandEncodedSaInit();
  EXPECT_EQ(DecodeError(ByteView(good).first(27)), WireErrc::kTruncated);
  EXPECT_EQ(DecodeError(ByteView(good).first(100)), WireErrc::kTruncated);

  Bytes padded = good;
  padded.push_back(0);
  EXPECT_EQ(DecodeError(padded), WireErrc::kMalformed);

  Bytes short_len = good;
  short_len[27] = 20;
  EXPECT_EQ(DecodeError(short_len), WireErrc::kMalformed);

  // Nonce payload claims more bytes than remain.
  Bytes overrun = good;
  overrun[88 + 3] = 40;
  EXPECT_EQ(DecodeError(overrun), WireErrc::kTruncated);
}

TEST(WireDecodeTest, RejectsOtherMajorVersions) {
  Bytes wire = HandEncodedSaInit();
  wire[17] = 0x10;
  EXPECT_EQ(DecodeError(wire), WireErrc::kBadVersion);
  wire[17] = 0x30;
  EXPECT_EQ(DecodeError(wire), WireErrc::kBadVersion);
  wire[17] = 0x21;  // minor versions are tolerated
  EXPECT_NO_THROW(DecodeMessage(wire));
}

TEST(WireDecodeTest, UnknownCriticalPayload) {
  IkeMessage m;
  m.payloads.push_back(OpaquePayload{200, false, {1, 2, 3}});
  Bytes wire = EncodeMessage(m);
  EXPECT_EQ(DecodeMessage(wire), m);
  wire[kHeaderSize + 1] = 0x80;
  EXPECT_EQ(DecodeError(wire), WireErrc::kUnknownCriticalPayload);
}

TEST(WireDecodeTest, SealedMessageRoundTrip) {
  SeededRandom rng(2);
  const SealContext ctx = MakeContext(rng, Encr(encr::kAesCbc, 256), integ::kHmacSha2_256_128);
  IkeMessage m;
  m.header.exchange_type = ExchangeType::kIkeAuth;
  m.header.message_id = 1;
  EncryptedPayload sk;
  sk.inner.push_back(IdPayload{Side::kInitiator, id_type::kRfc822Addr, ToBytes("user@example")});
  sk.inner.push_back(TsPayload{Side::kInitiator, {TrafficSelector::WildcardIpv4()}});
  m.payloads.push_back(NoncePayload{Bytes(32, 7)});
  m.payloads.push_back(sk);
  const Bytes wire = EncodeMessage(m, &ctx);
  EXPECT_EQ(DecodeMessage(wire, &ctx), m);

  // Without a context the SK body is kept opaque.
  const IkeMessage opaque = DecodeMessage(wire);
  const auto* raw = opaque.payloads.back().As<EncryptedPayload>();
  ASSERT_NE(raw, nullptr);
  EXPECT_TRUE(raw->inner.empty());
  EXPECT_FALSE(raw->sealed.empty());
}

TEST(WireDecodeTest, AnyFlippedBitInSealedMessageFailsIntegrity) {
  SeededRandom rng(3);
  const SealContext ctx = MakeContext(rng, Encr(encr::kAesCbc, 128), integ::kHmacSha1_96);
  IkeMessage m;
  m.header.exchange_type = ExchangeType::kIkeAuth;
  m.header.message_id = 1;
  EncryptedPayload sk;
  sk.inner.push_back(EapPayload{Bytes(20, 3)});
  m.payloads.push_back(sk);
  const Bytes wire = EncodeMessage(m, &ctx);
  // Bytes 20..27 are message id and length; the SK header follows at 28.
  for (std::size_t i = 20; i < wire.size(); ++i) {
    if (i >= 24 && i < 28) continue;  // length field: framing error instead
    if (i == kHeaderSize + 1) continue;  // critical bit of a known payload
    if (i == kHeaderSize + 2 || i == kHeaderSize + 3) continue;  // SK length
    Bytes tampered = wire;
    tampered[i] ^= 0x01;
    EXPECT_EQ(DecodeError(tampered, &ctx), WireErrc::kIntegrityFailure) << "byte " << i;
  }
}

TEST(WireDecodeTest, FixtureRoundTripsAreByteExact) {
  const Bytes wire = HandEncodedSaInit();
  EXPECT_EQ(EncodeMessage(DecodeMessage(wire)), wire);
}

TEST(WirePropertyTest, RandomPlainMessagesRoundTrip) {
  MessageGenerator gen(0x5eed);
  for (int i = 0; i < 500; ++i) {
    const IkeMessage m = gen.Next(false);
    const Bytes wire = EncodeMessage(m);
    ASSERT_GE(wire.size(), kHeaderSize);
    const std::uint32_t length = (std::uint32_t{wire[24]} << 24) | (std::uint32_t{wire[25]} << 16) |
                                 (std::uint32_t{wire[26]} << 8) | wire[27];
    ASSERT_EQ(length, wire.size());
    ASSERT_EQ(DecodeMessage(wire), m) << "iteration " << i;
    ASSERT_EQ(EncodeMessage(m), wire) << "encoding must be deterministic";
  }
}

TEST(WirePropertyTest, RandomSealedMessagesRoundTripForEveryCipher) {
  MessageGenerator gen(0xc1f3);
  std::vector<Algorithm> ciphers = {Encr(encr::kNull), Encr(encr::kAesCbc, 128),
                                    Encr(encr::kAesCbc, 256)};
  if (crypto::AuditCiphersEnabled()) {
    ciphers.push_back(Encr(encr::kDes));
    ciphers.push_back(Encr(encr::k3Des));
  }
  for (const auto& c : ciphers) {
    for (std::uint16_t integ_id : {integ::kHmacSha1_96, integ::kHmacSha2_256_128}) {
      const SealContext ctx = MakeContext(gen.rng(), c, integ_id);
      for (int i = 0; i < 40; ++i) {
        const IkeMessage m = gen.Next(true);
        const Bytes wire = EncodeMessage(m, &ctx);
        ASSERT_EQ(DecodeMessage(wire, &ctx), m) << AlgorithmName(c);
      }
    }
  }
}

TEST(WirePropertyTest, MutatedInputsOnlyRaiseWireErrors) {
  MessageGenerator gen(0xf422);
  SeededRandom& rng = gen.rng();
  const SealContext ctx = MakeContext(rng, Encr(encr::kAesCbc, 128), integ::kHmacSha1_96);
  for (int i = 0; i < 3000; ++i) {
    Bytes wire = EncodeMessage(gen.Next(i % 2 == 0), &ctx);
    const int edits = 1 + static_cast<int>(rng.Next() % 4);
    for (int e = 0; e < edits; ++e) {
      switch (rng.Next() % 3) {
        case 0: wire[rng.Next() % wire.size()] = static_cast<std::uint8_t>(rng.Next()); break;
        case 1: wire.resize(rng.Next() % (wire.size() + 1)); break;
        default: wire.push_back(static_cast<std::uint8_t>(rng.Next())); break;
      }
      if (wire.empty()) break;
    }
    try {
      DecodeMessage(wire, i % 3 == 0 ? nullptr : &ctx);
    } catch (const WireError&) {
    } catch (const std::exception& e) {
      FAIL() << "unexpected exception: " << e.what();
    }
  }
}

TEST(NatDetectionTest, HashesSpisAddressAndPort) {
  const Spi i = {1, 2, 3, 4, 5, 6, 7, 8};
  const Spi r = {};
  const Bytes expected_input = {1, 2, 3, 4, 5, 6, 7, 8, 0, 0, 0,    0,   0, 0,
                                0, 0, 127, 0, 0, 1, 0x01, 0xf4};
  EXPECT_EQ(NatDetectionHash(i, r, {127, 0, 0, 1}, 500), crypto::Sha1(expected_input));
  EXPECT_NE(NatDetectionHash(i, r, {127, 0, 0, 1}, 4500), NatDetectionHash(i, r, {127, 0, 0, 1}, 500));
}

TEST(BuildSaPayloadTest, NumbersProposalsAndOrdersTransforms) {
  ProposalSpec spec;
  spec.algorithms = {DhAlg(dh::kModp2048), IntegAlg(integ::kHmacSha1_96),
                     Encr(encr::kAesCbc, 128), Encr(encr::k3Des), PrfAlg(prf::kHmacSha1)};
  ProposalSpec esp = ProposalSpec::FromSuite(
      ProtocolId::kEsp,
      Suite({Encr(encr::kNull), IntegAlg(integ::kHmacSha1_96),
             Algorithm{TransformType::kEsn, esn::kNoEsn, 0}}),
      {1, 2, 3, 4});
  const SaPayload sa = BuildSaPayload({spec, esp});
  ASSERT_EQ(sa.proposals.size(), 2u);
  EXPECT_EQ(sa.proposals[0].number, 1);
  EXPECT_EQ(sa.proposals[1].number, 2);
  EXPECT_EQ(sa.proposals[1].spi, (Bytes{1, 2, 3, 4}));
  std::vector<TransformType> types;
  for (const auto& t : sa.proposals[0].transforms) types.push_back(t.type);
  EXPECT_TRUE(std::is_sorted(types.begin(), types.end()));
  // Offer order within a type is preserved.
  EXPECT_EQ(sa.proposals[0].transforms[0].id, encr::kAesCbc);
  EXPECT_EQ(sa.proposals[0].transforms[1].id, encr::k3Des);
  EXPECT_TRUE(sa.proposals[0].transforms[1].attributes.empty());
}

TEST(BuildSaPayloadTest, RejectsIncompleteSpecs) {
  try {
    BuildSaPayload({});
    FAIL();
  } catch (const ProposalError& e) {
    EXPECT_EQ(e.code(), ProposalErrc::kEmptySpec);
  }
  ProposalSpec no_prf;
  no_prf.algorithms = {Encr(encr::kAesCbc, 128), IntegAlg(integ::kHmacSha1_96),
                       DhAlg(dh::kModp2048)};
  try {
    BuildSaPayload({no_prf});
    FAIL();
  } catch (const ProposalError& e) {
    EXPECT_EQ(e.code(), ProposalErrc::kMissingRequiredTransformType);
  }
  EXPECT_THROW(MakeTransform(Encr(encr::kAesCbc)), ProposalError);
  EXPECT_THROW(MakeTransform(Encr(encr::kDes, 64)), ProposalError);
}

TEST(SelectProposalTest, PicksFirstAcceptableProposal) {
  const Suite des = IkeSuite(Encr(encr::kDes));
  const Suite aes = IkeSuite(Encr(encr::kAesCbc, 128));
  TransformPolicy policy{ProtocolId::kIke, {aes}};
  const SaPayload offer = BuildSaPayload(
      {ProposalSpec::FromSuite(ProtocolId::kIke, des), ProposalSpec::FromSuite(ProtocolId::kIke, aes)});
  const auto chosen = SelectProposal(offer, policy);
  ASSERT_TRUE(chosen.has_value());
  EXPECT_EQ(chosen->number, 2);
  EXPECT_EQ(chosen->suite, aes);

  EXPECT_FALSE(SelectProposal(BuildSaPayload({ProposalSpec::FromSuite(ProtocolId::kIke, des)}),
                              policy).has_value());
}

TEST(SelectProposalTest, UsesPolicyPreferenceWithinAProposal) {
  ProposalSpec spec;
  spec.algorithms = {Encr(encr::kDes), Encr(encr::kAesCbc, 256), PrfAlg(prf::kHmacSha1),
                     PrfAlg(prf::kHmacSha2_256), IntegAlg(integ::kHmacSha1_96),
                     DhAlg(dh::kModp2048)};
  const TransformPolicy policy = TransformPolicy::FromPreferences(
      ProtocolId::kIke, {{TransformType::kEncr, {Encr(encr::kAesCbc, 256), Encr(encr::kDes)}},
                         {TransformType::kPrf, {PrfAlg(prf::kHmacSha2_256)}},
                         {TransformType::kInteg, {IntegAlg(integ::kHmacSha1_96)}},
                         {TransformType::kDh, {DhAlg(dh::kModp2048)}}});
  const auto chosen = SelectProposal(BuildSaPayload({spec}), policy);
  ASSERT_TRUE(chosen.has_value());
  EXPECT_EQ(chosen->suite, IkeSuite(Encr(encr::kAesCbc, 256), prf::kHmacSha2_256));
}

TEST(SelectProposalTest, KeyLengthMustMatch) {
  TransformPolicy policy{ProtocolId::kIke, {IkeSuite(Encr(encr::kAesCbc, 256))}};
  const SaPayload offer = BuildSaPayload(
      {ProposalSpec::FromSuite(ProtocolId::kIke, IkeSuite(Encr(encr::kAesCbc, 128)))});
  EXPECT_FALSE(SelectProposal(offer, policy).has_value());
}

TEST(SelectProposalTest, MissingRequiredTypeIsNeverSelected) {
  SaPayload offer;
  Proposal p;
  p.transforms = {MakeTransform(Encr(encr::kNull)), MakeTransform(PrfAlg(prf::kHmacSha1)),
                  MakeTransform(DhAlg(dh::kModp2048))};
  offer.proposals.push_back(p);
  const TransformPolicy policy{
      ProtocolId::kIke,
      {Suite({Encr(encr::kNull), PrfAlg(prf::kHmacSha1), DhAlg(dh::kModp2048)})}};
  EXPECT_FALSE(SelectProposal(offer, policy).has_value());
}

// Exhaustive check over every ordered pair of single-suite proposals and
// every acceptable set drawn from a small universe.
TEST(SelectProposalTest, AgreesWithFirstMatchOracleOnAllPairs) {
  const std::vector<Suite> universe = {
      IkeSuite(Encr(encr::kNull)), IkeSuite(Encr(encr::kDes)),
      IkeSuite(Encr(encr::kAesCbc, 128)), IkeSuite(Encr(encr::kAesCbc, 128), prf::kHmacSha2_256),
      IkeSuite(Encr(encr::kAesCbc, 256), prf::kHmacSha1, dh::kModp1024)};
  const std::size_t n = universe.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    TransformPolicy policy{ProtocolId::kIke, {}};
    std::set<Suite> acceptable;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (1u << k)) {
        policy.allowed.push_back(universe[k]);
        acceptable.insert(universe[k]);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const SaPayload offer =
            BuildSaPayload({ProposalSpec::FromSuite(ProtocolId::kIke, universe[a]),
                            ProposalSpec::FromSuite(ProtocolId::kIke, universe[b])});
        std::optional<std::pair<int, Suite>> expected;
        if (acceptable.count(universe[a])) {
          expected = {{1, universe[a]}};
        } else if (acceptable.count(universe[b])) {
          expected = {{2, universe[b]}};
        }
        const auto got = SelectProposal(offer, policy);
        ASSERT_EQ(got.has_value(), expected.has_value()) << mask << " " << a << " " << b;
        if (got) {
          EXPECT_EQ(got->number, expected->first);
          EXPECT_EQ(got->suite, expected->second);
        }
      }
    }
  }
}

TEST(SelectProposalTest, SelectedSaRoundTripsThroughReadSelection) {
  const Suite aes = IkeSuite(Encr(encr::kAesCbc, 128));
  const auto chosen = SelectProposal(
      BuildSaPayload({ProposalSpec::FromSuite(ProtocolId::kIke, aes)}),
      TransformPolicy{ProtocolId::kIke, {aes}});
  ASSERT_TRUE(chosen);
  const SaPayload reply = SelectedSa(*chosen, {});
  const auto read = ReadSelection(reply);
  ASSERT_TRUE(read);
  EXPECT_EQ(*read, *chosen);
}

}  // namespace
}  // namespace vowifi::ike
