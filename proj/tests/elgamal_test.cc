// Copyright 2026 The Private Web Search Authors
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

#include "pws/elgamal.h"

#include <vector>

#include "gtest/gtest.h"
#include "pws/bigint.h"
#include "test_util.h"

namespace pws {
namespace {

using ::pws::testing::CachedParams;
using ::pws::testing::DecryptWithAll;
using ::pws::testing::ToyGroup;

TEST(ElGamalTest, ToyKeyGenerationMatchesOracle) {
  const GroupParams& g = ToyGroup();
  KeyShare k1 = KeyShareFromSecret(g, 1, Exponent{3}, nullptr);
  KeyShare k2 = KeyShareFromSecret(g, 2, Exponent{5}, nullptr);
  EXPECT_EQ(k1.public_share.value, 18);
  EXPECT_EQ(k2.public_share.value, 12);
  std::vector<GroupElement> shares = {k1.public_share, k2.public_share};
  absl::StatusOr<PublicKey> pk = CombinePublicKeys(g, shares, nullptr);
  ASSERT_TRUE(pk.ok());
  EXPECT_EQ(pk->y.value, 9);
  EXPECT_EQ(g.PowG(Exponent{8}, nullptr).value, 9);
}

TEST(ElGamalTest, ToyEncryptDecryptMatchesOracle) {
  const GroupParams& g = ToyGroup();
  KeyShare k = KeyShareFromSecret(g, 1, Exponent{3}, nullptr);
  std::vector<GroupElement> y = {k.public_share};
  PublicKey pk = *CombinePublicKeys(g, y, nullptr);
  Ciphertext c = *Encrypt(g, pk, GroupElement{9}, Exponent{2}, nullptr);
  EXPECT_EQ(c.a.value, 16);
  EXPECT_EQ(c.b.value, 18);
  DecryptionShare d = TdShare(g, k, c, nullptr);
  EXPECT_EQ(d.d.value, 2);
  std::vector<DecryptionShare> ds = {d};
  EXPECT_EQ(CombineDecryption(g, c, ds, 1, nullptr)->value, 9);

  Ciphertext r = Rerandomize(g, pk, c, Exponent{1}, nullptr);
  EXPECT_EQ(r.a.value, 18);
  EXPECT_EQ(r.b.value, 2);
  std::vector<DecryptionShare> rs = {TdShare(g, k, r, nullptr)};
  EXPECT_EQ(CombineDecryption(g, r, rs, 1, nullptr)->value, 9);
}

TEST(ElGamalTest, SingleManagerKeyIsItsShare) {
  const GroupParams& g = CachedParams(64, 2).group;
  Drbg rng("single");
  KeyShare k = TkgContribute(g, 1, rng, nullptr);
  std::vector<GroupElement> y = {k.public_share};
  EXPECT_EQ(CombinePublicKeys(g, y, nullptr)->y, k.public_share);
  EXPECT_FALSE(CombinePublicKeys(g, {}, nullptr).ok());
}

class ElGamalPropertyTest : public ::testing::Test {
 protected:
  void SetUp() override {
    Drbg rng("keys");
    for (int j = 1; j <= 3; ++j) keys_.push_back(TkgContribute(g_, j, rng, nullptr));
    std::vector<GroupElement> ys;
    for (const KeyShare& k : keys_) ys.push_back(k.public_share);
    pk_ = *CombinePublicKeys(g_, ys, nullptr);
  }

  GroupElement RandomElement(Drbg& rng) {
    return g_.PowG(g_.RandomExponent(rng), nullptr);
  }

  const GroupParams& g_ = CachedParams(64, 10).group;
  std::vector<KeyShare> keys_;
  PublicKey pk_;
};

TEST_F(ElGamalPropertyTest, RoundTrip1000) {
  Drbg rng("roundtrip");
  for (int i = 0; i < 1000; ++i) {
    const GroupElement m = RandomElement(rng);
    const Ciphertext c = *Encrypt(g_, pk_, m, g_.RandomExponent(rng), nullptr);
    ASSERT_EQ(DecryptWithAll(g_, keys_, c), m) << i;
  }
}

TEST_F(ElGamalPropertyTest, HomomorphismAndRerandomization) {
  Drbg rng("homo");
  for (int i = 0; i < 200; ++i) {
    const GroupElement m1 = RandomElement(rng), m2 = RandomElement(rng);
    const Ciphertext c1 = *Encrypt(g_, pk_, m1, g_.RandomExponent(rng), nullptr);
    const Ciphertext c2 = *Encrypt(g_, pk_, m2, g_.RandomExponent(rng), nullptr);
    EXPECT_EQ(DecryptWithAll(g_, keys_, HomomorphicMul(g_, c1, c2, nullptr)),
              g_.Mul(m1, m2, nullptr));
    const Ciphertext r =
        Rerandomize(g_, pk_, c1, g_.RandomNonzeroExponent(rng), nullptr);
    EXPECT_NE(r, c1);
    EXPECT_EQ(DecryptWithAll(g_, keys_, r), m1);
  }
}

TEST_F(ElGamalPropertyTest, ZeroRerandomizationIsIdentity) {
  Drbg rng("zero");
  const Ciphertext c =
      *Encrypt(g_, pk_, RandomElement(rng), g_.RandomExponent(rng), nullptr);
  EXPECT_EQ(Rerandomize(g_, pk_, c, Exponent{0}, nullptr), c);
}

TEST_F(ElGamalPropertyTest, ThresholdNecessity) {
  ASSERT_GE(BitLength(g_.q()), 61u);
  Drbg rng("threshold");
  for (int i = 0; i < 1000; ++i) {
    const GroupElement m = RandomElement(rng);
    const Ciphertext c = *Encrypt(g_, pk_, m, g_.RandomNonzeroExponent(rng),
                                  nullptr);
    // Every proper subset of shares, combined as if complete, misses m.
    for (int mask = 0; mask < 7; ++mask) {
      GroupElement denom = g_.identity();
      for (int j = 0; j < 3; ++j) {
        if (mask & (1 << j)) {
          denom = g_.Mul(denom, TdShare(g_, keys_[j], c, nullptr).d, nullptr);
        }
      }
      const GroupElement guess = g_.Mul(c.b, g_.Inverse(denom, nullptr), nullptr);
      ASSERT_NE(guess, m) << "trial " << i << " mask " << mask;
    }
  }
}

TEST_F(ElGamalPropertyTest, CombineRejectsIncompleteShares) {
  Drbg rng("incomplete");
  const Ciphertext c =
      *Encrypt(g_, pk_, RandomElement(rng), g_.RandomExponent(rng), nullptr);
  std::vector<DecryptionShare> two = {TdShare(g_, keys_[0], c, nullptr),
                                      TdShare(g_, keys_[1], c, nullptr)};
  EXPECT_FALSE(CombineDecryption(g_, c, two, 3, nullptr).ok());
  std::vector<DecryptionShare> dup = {two[0], two[0], two[1]};
  EXPECT_FALSE(CombineDecryption(g_, c, dup, 3, nullptr).ok());
}

TEST_F(ElGamalPropertyTest, EncryptChecksInputs) {
  EXPECT_FALSE(Encrypt(g_, pk_, GroupElement{g_.p() - 1}, Exponent{1}, nullptr).ok());
  EXPECT_FALSE(Encrypt(g_, pk_, g_.identity(), Exponent{g_.q()}, nullptr).ok());
}

TEST_F(ElGamalPropertyTest, CostModel) {
  Drbg rng("cost");
  CostCounter enc, re, td;
  const Ciphertext c =
      *Encrypt(g_, pk_, RandomElement(rng), g_.RandomExponent(rng), &enc);
  Rerandomize(g_, pk_, c, g_.RandomExponent(rng), &re);
  TdShare(g_, keys_[0], c, &td);
  EXPECT_EQ(enc, (CostCounter{2, 1, 0, 0}));
  EXPECT_EQ(re, (CostCounter{2, 2, 0, 0}));
  EXPECT_EQ(td, (CostCounter{1, 0, 0, 0}));
}

TEST_F(ElGamalPropertyTest, SerializationRoundTrip) {
  Drbg rng("ser");
  const Ciphertext c =
      *Encrypt(g_, pk_, RandomElement(rng), g_.RandomExponent(rng), nullptr);
  const std::vector<uint8_t> bytes = SerializeCiphertext(g_, c);
  EXPECT_EQ(bytes.size(), 2 * g_.element_bytes());
  EXPECT_EQ(*ParseCiphertext(g_, bytes), c);
  EXPECT_FALSE(ParseCiphertext(g_, std::span(bytes).first(bytes.size() - 1)).ok());
}

}  // namespace
}  // namespace pws
