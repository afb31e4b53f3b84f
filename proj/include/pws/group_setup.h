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

#ifndef PWS_GROUP_SETUP_H_
#define PWS_GROUP_SETUP_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pws/drbg.h"

namespace pws {

struct Registration {
  std::string id;
  std::string ip;
  std::vector<uint8_t> r;  // private to the user; not posted
  std::vector<uint8_t> s;
  std::vector<uint8_t> x;  // H1(ip, id, r), digest_bits wide
};

// H1: tag "PWS/H1", output `bits` wide (big-endian, excess top bits clear).
std::vector<uint8_t> H1(std::string_view ip, std::string_view id,
                        std::span<const uint8_t> r, int bits);

// Append-only log of (s_i, x_i) postings.
class BulletinBoard {
 public:
  explicit BulletinBoard(int digest_bits = 256) : digest_bits_(digest_bits) {}

  absl::StatusOr<Registration> Register(std::string id, std::string ip,
                                        Drbg& rng);
  void CloseRegistration() { closed_ = true; }
  bool closed() const { return closed_; }

  const std::vector<Registration>& postings() const { return postings_; }
  int digest_bits() const { return digest_bits_; }

  // H2 over x_1 || ... || x_nu, expanded to nu * ceil(log nu) bits.
  std::vector<uint8_t> DeriveY() const;

  // One posting per line: idx,id,ip,s_hex,x_hex
  std::string Serialize() const;
  static absl::StatusOr<BulletinBoard> Parse(std::string_view text,
                                             int digest_bits = 256);

 private:
  int digest_bits_;
  bool closed_ = false;
  std::vector<Registration> postings_;
};

struct GroupAssignment {
  std::string id;
  int group = 0;      // after occupancy capping
  int preferred = 0;  // raw H3 output
};

// Groups of exactly n (n_g = floor(nu / n)); a user whose H3 group is full
// probes j+1, j+2, ... mod n_g. The nu mod n leftover users go last and
// probe with capacity raised to n + ceil(leftover / n_g).
absl::StatusOr<std::vector<GroupAssignment>> AssignGroups(
    const BulletinBoard& board, int n);

// id,group
std::string AssignmentsCsv(std::span<const GroupAssignment> assignments);

// (1/n_g) C(t, n/2) C(nu - t, n/2) / C(nu, n), exact.
absl::StatusOr<mpq_class> MalGrpExact(int64_t nu, int64_t t, int n);

// (2^n / n_g) ((nu - t) / t)^(n/2) (t / nu)^n.
absl::StatusOr<mpf_class> MalGrpBound(int64_t nu, int64_t t, int n);

struct MonteCarloResult {
  int64_t trials = 0;
  int64_t hits = 0;
  double rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(hits) / trials;
  }
};

// Draws group 0 as a uniform n-subset of nu users (t corrupted) and a
// uniform group index J; a hit is J = 0 with exactly n/2 corrupted members
// in group 0, the event whose probability MalGrpExact gives.
absl::StatusOr<MonteCarloResult> MalGrpMonteCarlo(int64_t nu, int64_t t, int n,
                                                  int64_t trials,
                                                  uint64_t seed);

absl::StatusOr<int> ElectLeader(std::span<const int> manager_ids);

}  // namespace pws

#endif  // PWS_GROUP_SETUP_H_
