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

#include "pws/zkp.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "pws/testing/zkp_hooks.h"
#include "test_util.h"

namespace pws {
namespace {

using ::pws::testing::CachedParams;
using ::pws::testing::ToyGroup;

TEST(ZkpTest, SchnorrWorkedExample) {
  const GroupParams& g = ToyGroup();
  const GroupElement h{18};  // 4^3
  const DlogProof proof = ::pws::testing::ProveDlWithFixedChallenge(
      g, Exponent{3}, Exponent{5}, Exponent{7});
  EXPECT_EQ(proof.commitment.value, 12);
  EXPECT_EQ(proof.response.value, 4);
  EXPECT_TRUE(CheckDlEquation(g, h, proof, Exponent{7}));
  EXPECT_FALSE(CheckDlEquation(g, h, proof, Exponent{6}));
}

class ZkpPropertyTest : public ::testing::Test {
 protected:
  void SetUp() override {
    Drbg rng("zk-keys");
    x_ = g_.RandomNonzeroExponent(rng);
    pk_.y = g_.PowG(x_, nullptr);
  }

  Ciphertext RandomCiphertext(Drbg& rng, Exponent* r = nullptr) {
    const GroupElement m = g_.PowG(g_.RandomExponent(rng), nullptr);
    const Exponent rr = g_.RandomExponent(rng);
    if (r != nullptr) *r = rr;
    return *Encrypt(g_, pk_, m, rr, nullptr);
  }

  struct ShuffleInstance {
    std::vector<Ciphertext> input, output;
    std::vector<int> perm;
    std::vector<Exponent> gammas;
  };

  ShuffleInstance MakeShuffle(Drbg& rng, int n) {
    ShuffleInstance s;
    for (int i = 0; i < n; ++i) s.input.push_back(RandomCiphertext(rng));
    s.perm = rng.Permutation(n);
    s.output.resize(n);
    for (int i = 0; i < n; ++i) {
      s.gammas.push_back(g_.RandomExponent(rng));
      s.output[s.perm[i]] = Rerandomize(g_, pk_, s.input[i], s.gammas[i], nullptr);
    }
    return s;
  }

  const GroupParams& g_ = CachedParams(64, 5).group;
  Exponent x_;
  PublicKey pk_;
};

TEST_F(ZkpPropertyTest, DlCompleteness500) {
  Drbg rng("dl");
  for (int i = 0; i < 500; ++i) {
    const Exponent x = g_.RandomNonzeroExponent(rng);
    const GroupElement h = g_.PowG(x, nullptr);
    const DlogProof p = ProveDl(g_, h, x, rng, "PWS/DL:M1");
    ASSERT_TRUE(VerifyDl(g_, h, p, "PWS/DL:M1")) << i;
  }
}

TEST_F(ZkpPropertyTest, DlTamperingRejected) {
  Drbg rng("dl-tamper");
  for (int i = 0; i < 100; ++i) {
    const Exponent x = g_.RandomNonzeroExponent(rng);
    const GroupElement h = g_.PowG(x, nullptr);
    DlogProof p = ProveDl(g_, h, x, rng, "PWS/DL:M1");
    const GroupElement other = g_.Mul(h, g_.generator(), nullptr);
    EXPECT_FALSE(VerifyDl(g_, other, p, "PWS/DL:M1"));
    EXPECT_FALSE(VerifyDl(g_, h, p, "PWS/DL:M2"));
    p.response = g_.ReduceExponent(p.response.value + 1);
    EXPECT_FALSE(VerifyDl(g_, h, p, "PWS/DL:M1"));
  }
}

TEST_F(ZkpPropertyTest, DlWrongWitnessRejected) {
  Drbg rng("dl-wrong");
  const Exponent x = g_.RandomNonzeroExponent(rng);
  const GroupElement h = g_.PowG(x, nullptr);
  const DlogProof p =
      ProveDl(g_, h, g_.ReduceExponent(x.value + 1), rng, "PWS/DL:M1");
  EXPECT_FALSE(VerifyDl(g_, h, p, "PWS/DL:M1"));
}

TEST_F(ZkpPropertyTest, PlaintextCompleteness500) {
  Drbg rng("pk");
  for (int i = 0; i < 500; ++i) {
    Exponent r;
    const Ciphertext c = RandomCiphertext(rng, &r);
    const PlaintextProof p = ProvePk(g_, pk_, c, r, rng, "PWS/PK:U1:2");
    ASSERT_TRUE(VerifyPk(g_, pk_, c, p, "PWS/PK:U1:2")) << i;
  }
}

TEST_F(ZkpPropertyTest, PlaintextTamperingRejected) {
  Drbg rng("pk-tamper");
  for (int i = 0; i < 100; ++i) {
    Exponent r;
    const Ciphertext c = RandomCiphertext(rng, &r);
    PlaintextProof p = ProvePk(g_, pk_, c, r, rng, "PWS/PK:U1:2");
    // Same ciphertext claimed under another sender's context: replay.
    EXPECT_FALSE(VerifyPk(g_, pk_, c, p, "PWS/PK:U3:2"));
    Ciphertext other = c;
    other.a = g_.Mul(c.a, g_.generator(), nullptr);
    EXPECT_FALSE(VerifyPk(g_, pk_, other, p, "PWS/PK:U1:2"));
    other = c;
    other.b = g_.Mul(c.b, g_.generator(), nullptr);
    EXPECT_FALSE(VerifyPk(g_, pk_, other, p, "PWS/PK:U1:2"));
    p.dlog.response = g_.ReduceExponent(p.dlog.response.value + 1);
    EXPECT_FALSE(VerifyPk(g_, pk_, c, p, "PWS/PK:U1:2"));
  }
}

TEST_F(ZkpPropertyTest, ShuffleCompleteness500) {
  Drbg rng("cs");
  for (int i = 0; i < 500; ++i) {
    const ShuffleInstance s = MakeShuffle(rng, 5);
    absl::StatusOr<ShuffleProof> p = ProveShuffle(
        g_, pk_, s.input, s.output, s.perm, s.gammas, 40, rng, "PWS/CS:U1");
    ASSERT_TRUE(p.ok()) << p.status();
    ASSERT_TRUE(VerifyShuffle(g_, pk_, s.input, s.output, *p, "PWS/CS:U1"))
        << i;
  }
}

TEST_F(ZkpPropertyTest, ShuffleTamperingRejected) {
  Drbg rng("cs-tamper");
  for (int i = 0; i < 50; ++i) {
    const ShuffleInstance s = MakeShuffle(rng, 5);
    const ShuffleProof p = *ProveShuffle(g_, pk_, s.input, s.output, s.perm,
                                         s.gammas, 40, rng, "PWS/CS:U1");
    EXPECT_FALSE(VerifyShuffle(g_, pk_, s.input, s.output, p, "PWS/CS:U2"));
    std::vector<Ciphertext> out = s.output;
    out[0] = RandomCiphertext(rng);
    EXPECT_FALSE(VerifyShuffle(g_, pk_, s.input, out, p, "PWS/CS:U1"));
    std::vector<Ciphertext> in = s.input;
    std::swap(in[0], in[1]);
    EXPECT_FALSE(VerifyShuffle(g_, pk_, in, s.output, p, "PWS/CS:U1"));
    ShuffleProof bad = p;
    bad.repetitions[0].randomizers[0] =
        g_.ReduceExponent(bad.repetitions[0].randomizers[0].value + 1);
    EXPECT_FALSE(VerifyShuffle(g_, pk_, s.input, s.output, bad, "PWS/CS:U1"));
    bad = p;
    bad.repetitions[3].challenge = !bad.repetitions[3].challenge;
    EXPECT_FALSE(VerifyShuffle(g_, pk_, s.input, s.output, bad, "PWS/CS:U1"));
  }
}

TEST_F(ZkpPropertyTest, ShuffleProverChecksWitness) {
  Drbg rng("cs-witness");
  ShuffleInstance s = MakeShuffle(rng, 4);
  s.gammas[0] = g_.ReduceExponent(s.gammas[0].value + 1);
  EXPECT_EQ(ProveShuffle(g_, pk_, s.input, s.output, s.perm, s.gammas, 10, rng,
                         "PWS/CS:U1")
                .status()
                .code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST_F(ZkpPropertyTest, DegenerateShuffleIsIdentity) {
  Drbg rng("cs-identity");
  ShuffleInstance s;
  for (int i = 0; i < 4; ++i) s.input.push_back(RandomCiphertext(rng));
  s.perm = {0, 1, 2, 3};
  s.gammas.assign(4, Exponent{0});
  s.output = s.input;
  const ShuffleProof p = *ProveShuffle(g_, pk_, s.input, s.output, s.perm,
                                       s.gammas, 20, rng, "PWS/CS:U1");
  EXPECT_TRUE(VerifyShuffle(g_, pk_, s.input, s.output, p, "PWS/CS:U1"));
}

// A cheating prover whose output is not a shuffle commits to one side per
// repetition, guessing the challenge bit. It wins iff all k guesses match.
TEST_F(ZkpPropertyTest, ShuffleForgeryRateAtTenRepetitions) {
  constexpr int kTrials = 2000;
  constexpr int k = 10;
  constexpr int n = 4;
  Drbg rng("cs-forge");
  int accepted = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    ShuffleInstance s = MakeShuffle(rng, n);
    s.output[0] = RandomCiphertext(rng);  // no longer a shuffle
    ShuffleProof proof;
    std::vector<std::vector<Ciphertext>> commits(k);
    for (int t = 0; t < k; ++t) {
      ShuffleRepetition rep;
      rep.challenge = rng.UniformU64(2) == 1;
      rep.permutation = rng.Permutation(n);
      rep.commitment.resize(n);
      const std::vector<Ciphertext>& src = rep.challenge ? s.output : s.input;
      for (int i = 0; i < n; ++i) {
        rep.randomizers.push_back(g_.RandomExponent(rng));
        rep.commitment[rep.permutation[i]] =
            Rerandomize(g_, pk_, src[i], rep.randomizers[i], nullptr);
      }
      commits[t] = rep.commitment;
      proof.repetitions.push_back(std::move(rep));
    }
    const std::vector<bool> bits =
        ShuffleChallengeBits(g_, pk_, s.input, s.output, commits, "PWS/CS:U1");
    bool lucky = true;
    for (int t = 0; t < k; ++t) lucky = lucky && bits[t] == proof.repetitions[t].challenge;
    const bool ok = VerifyShuffle(g_, pk_, s.input, s.output, proof, "PWS/CS:U1");
    EXPECT_EQ(ok, lucky);
    accepted += ok;
  }
  const double p = std::ldexp(1.0, -k);
  const double mean = kTrials * p;
  const double sd = std::sqrt(kTrials * p * (1 - p));
  EXPECT_LE(std::abs(accepted - mean), 3 * sd) << "accepted " << accepted;
}

TEST(ZkpTranscriptTest, ChallengeDependsOnTagAndBlocks) {
  const GroupParams& g = ToyGroup();
  Transcript a("PWS/DL:M1", g), b("PWS/DL:M2", g), c("PWS/DL:M1", g);
  const std::vector<GroupElement> e1 = {GroupElement{4}, GroupElement{18}};
  const std::vector<GroupElement> e2 = {GroupElement{4}, GroupElement{12}};
  a.AppendBlock(e1);
  b.AppendBlock(e1);
  c.AppendBlock(e2);
  EXPECT_NE(a.bytes(), b.bytes());
  EXPECT_NE(a.bytes(), c.bytes());
  EXPECT_EQ(a.ChallengeBits(300).size(), 300u);
  Transcript a2("PWS/DL:M1", g);
  a2.AppendBlock(e1);
  EXPECT_EQ(a.ChallengeModQ(), a2.ChallengeModQ());
  EXPECT_EQ(a.ChallengeBits(300), a2.ChallengeBits(300));
}

}  // namespace
}  // namespace pws
