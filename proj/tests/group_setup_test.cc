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

#include "pws/group_setup.h"

#include <cmath>
#include <vector>

#include "absl/strings/str_cat.h"
#include "gtest/gtest.h"

namespace pws {
namespace {

BulletinBoard MakeBoard(int nu, const std::string& seed) {
  BulletinBoard board;
  Drbg rng(seed);
  for (int i = 0; i < nu; ++i) {
    EXPECT_TRUE(board.Register(absl::StrCat("u", i), absl::StrCat("10.0.0.", i),
                               rng)
                    .ok());
  }
  board.CloseRegistration();
  return board;
}

TEST(BulletinBoardTest, RegistrationAppends) {
  BulletinBoard board;
  Drbg rng("reg");
  absl::StatusOr<Registration> r = board.Register("alice", "1.2.3.4", rng);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(board.postings().size(), 1u);
  EXPECT_EQ(r->x.size(), 32u);
  EXPECT_EQ(r->r.size(), 32u);
  EXPECT_EQ(r->s.size(), 32u);
  EXPECT_EQ(board.Register("alice", "5.6.7.8", rng).status().code(),
            absl::StatusCode::kAlreadyExists);
  board.CloseRegistration();
  EXPECT_FALSE(board.Register("bob", "1.1.1.1", rng).ok());
  EXPECT_EQ(board.postings().size(), 1u);
}

TEST(BulletinBoardTest, DigestIsSensitiveToEveryInput) {
  const std::vector<uint8_t> r(32, 7), r2(32, 8);
  const std::vector<uint8_t> base = H1("1.2.3.4", "alice", r, 256);
  EXPECT_NE(base, H1("1.2.3.5", "alice", r, 256));
  EXPECT_NE(base, H1("1.2.3.4", "alicf", r, 256));
  EXPECT_NE(base, H1("1.2.3.4", "alice", r2, 256));
  EXPECT_EQ(base, H1("1.2.3.4", "alice", r, 256));
  // Field boundaries are length-prefixed.
  EXPECT_NE(H1("ab", "c", r, 256), H1("a", "bc", r, 256));
}

TEST(BulletinBoardTest, DigestWidthIsConfigurable) {
  const std::vector<uint8_t> r(32, 1);
  const std::vector<uint8_t> x = H1("ip", "id", r, 300);
  EXPECT_EQ(x.size(), 38u);
  EXPECT_EQ(x[0] >> 4, 0);  // 304 - 300 high bits clear
  BulletinBoard board(100);
  Drbg rng("w");
  EXPECT_EQ(board.Register("a", "b", rng)->x.size(), 13u);
}

TEST(BulletinBoardTest, FileRoundTrip) {
  const BulletinBoard board = MakeBoard(12, "file");
  const std::string text = board.Serialize();
  EXPECT_EQ(text.rfind("0,u0,10.0.0.0,", 0), 0u);
  absl::StatusOr<BulletinBoard> back = BulletinBoard::Parse(text);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(back->Serialize(), text);
  EXPECT_EQ(back->DeriveY(), board.DeriveY());
  EXPECT_EQ(AssignmentsCsv(*AssignGroups(*back, 4)),
            AssignmentsCsv(*AssignGroups(board, 4)));
  EXPECT_FALSE(BulletinBoard::Parse("1,u0,ip,00,00\n").ok());
  EXPECT_FALSE(BulletinBoard::Parse("0,u0,ip,zz,00\n").ok());
}

TEST(GroupAssignmentTest, SingleGroupWhenNuEqualsN) {
  const BulletinBoard board = MakeBoard(10, "single");
  absl::StatusOr<std::vector<GroupAssignment>> a = AssignGroups(board, 10);
  ASSERT_TRUE(a.ok());
  for (const GroupAssignment& g : *a) EXPECT_EQ(g.group, 0);
  EXPECT_FALSE(AssignGroups(MakeBoard(9, "few"), 10).ok());
}

TEST(GroupAssignmentTest, GroupsHaveExactlyNMembers) {
  const BulletinBoard board = MakeBoard(100, "cap");
  const std::vector<GroupAssignment> a = *AssignGroups(board, 10);
  std::vector<int> load(10, 0);
  for (const GroupAssignment& g : a) ++load[g.group];
  for (int l : load) EXPECT_EQ(l, 10);
  EXPECT_EQ(AssignmentsCsv(a).rfind("id,group\nu0,", 0), 0u);
}

TEST(GroupAssignmentTest, LeftoversSpreadOverGroups) {
  const BulletinBoard board = MakeBoard(47, "left");
  const std::vector<GroupAssignment> a = *AssignGroups(board, 10);
  std::vector<int> load(4, 0);
  for (const GroupAssignment& g : a) ++load[g.group];
  for (int l : load) {
    EXPECT_GE(l, 10);
    EXPECT_LE(l, 12);
  }
}

TEST(GroupAssignmentTest, PreferredGroupsLookUniform) {
  // Users on one board can share a y slice, so take one user per board.
  // chi-square over 1000 boards of 100 users into 10 groups (9 dof).
  std::vector<double> counts(10, 0);
  const int boards = 1000;
  for (int seed = 0; seed < boards; ++seed) {
    const std::vector<GroupAssignment> a =
        *AssignGroups(MakeBoard(100, absl::StrCat("chi", seed)), 10);
    ++counts[a[seed % 100].preferred];
  }
  const double expected = boards / 10.0;
  double chi2 = 0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // mean 9, sd sqrt(18)
  EXPECT_LT(std::abs(chi2 - 9), 3 * std::sqrt(18.0)) << chi2;
}

TEST(GroupAssignmentTest, ChangingOneRandomizerChangesAssignments) {
  const BulletinBoard board = MakeBoard(100, "aval");
  std::string text = board.Serialize();
  // Flip one hex digit of user 50's s.
  const size_t line = text.find("\n50,") + 1;
  const size_t s_start = text.find(',', text.find(',', text.find(',', line) + 1) + 1) + 1;
  text[s_start] = text[s_start] == '0' ? '1' : '0';
  const BulletinBoard changed = *BulletinBoard::Parse(text);
  const std::vector<GroupAssignment> a = *AssignGroups(board, 10);
  const std::vector<GroupAssignment> b = *AssignGroups(changed, 10);
  int moved = 0;
  for (size_t i = 0; i < a.size(); ++i) moved += a[i].preferred != b[i].preferred;
  EXPECT_GT(moved, 50);
}

TEST(LemmaTest, ExactMatchesOracle) {
  EXPECT_EQ(*MalGrpExact(4, 2, 2), mpq_class(1, 3));
  EXPECT_EQ(*MalGrpExact(100, 0, 10), 0);
  EXPECT_NEAR(MalGrpExact(100, 30, 10)->get_d(), 9.96372779e-03, 1e-11);
  EXPECT_FALSE(MalGrpExact(100, 30, 9).ok());
  EXPECT_FALSE(MalGrpExact(10, 30, 4).ok());
}

TEST(LemmaTest, BoundMatchesOracle) {
  EXPECT_EQ(mpf_class(*MalGrpBound(4, 2, 2)), 0.5);
  const mpf_class b = *MalGrpBound(1000000, 1000, 30);
  long e = 0;
  const double mant = mpf_get_d_2exp(&e, b.get_mpf_t());
  const double log10b = std::log10(mant) + e * std::log10(2.0);
  EXPECT_NEAR(log10b, -40.4985, 1e-4);
  EXPECT_GE(log10b, -41);
  EXPECT_LE(log10b, -39);
  EXPECT_FALSE(MalGrpBound(10, 0, 2).ok());
}

TEST(LemmaTest, ExactNeverExceedsBoundOnGrid) {
  for (int64_t nu : {100, 1000, 10000}) {
    for (double frac : {0.001, 0.01, 0.1}) {
      const int64_t t = std::max<int64_t>(1, std::llround(nu * frac));
      for (int n = 4; n <= 30; n += 2) {
        EXPECT_LE(mpf_class(*MalGrpExact(nu, t, n), 256),
                  *MalGrpBound(nu, t, n))
            << nu << " " << t << " " << n;
      }
    }
  }
}

TEST(LemmaTest, BoundIncreasesWithT) {
  for (int n : {4, 10, 30}) {
    mpf_class prev = 0;
    for (int64_t t = 10; t <= 1000; t += 10) {
      const mpf_class b = *MalGrpBound(10000, t, n);
      EXPECT_GT(b, prev) << n << " " << t;
      prev = b;
    }
  }
}

TEST(LemmaTest, MonteCarloSmallRun) {
  const int64_t trials = 100000;
  const MonteCarloResult r = *MalGrpMonteCarlo(100, 30, 10, trials, 7);
  const double p = MalGrpExact(100, 30, 10)->get_d();
  const double sd = std::sqrt(trials * p * (1 - p));
  EXPECT_LE(std::abs(r.hits - trials * p), 3 * sd) << r.hits;
}

TEST(LeaderTest, MinimumId) {
  EXPECT_EQ(*ElectLeader(std::vector<int>{7}), 7);
  EXPECT_EQ(*ElectLeader(std::vector<int>{9, 2, 5}), 2);
  EXPECT_EQ(*ElectLeader(std::vector<int>{5, 9, 2}), 2);
  EXPECT_FALSE(ElectLeader(std::vector<int>{}).ok());
}

}  // namespace
}  // namespace pws
