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

#ifndef PWS_PROTOCOL_H_
#define PWS_PROTOCOL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pws/algebra.h"
#include "pws/drbg.h"
#include "pws/elgamal.h"
#include "pws/fault_plan.h"
#include "pws/messages.h"
#include "pws/metrics.h"
#include "pws/network.h"
#include "pws/shamir.h"

namespace pws {

enum class Mode { kSemiHonest, kMalicious };

std::string_view ModeName(Mode mode);
absl::StatusOr<Mode> ParseMode(std::string_view name);

struct ProtocolConfig {
  PublicParams params;
  int n = 0;
  int num_managers = 3;
  Mode mode = Mode::kSemiHonest;
  int shuffle_reps = 40;  // k, malicious mode only
  std::string seed;
};

absl::Status ValidateConfig(const ProtocolConfig& config,
                            const FaultPlan& faults = {});

// Reason codes used in abort reports.
inline constexpr std::string_view kReasonBadKeyProof = "BAD_KEY_PROOF";
inline constexpr std::string_view kReasonBadPlaintextProof =
    "BAD_PLAINTEXT_PROOF";
inline constexpr std::string_view kReasonBadShuffleProof = "BAD_SHUFFLE_PROOF";
inline constexpr std::string_view kReasonEquivocation = "EQUIVOCATION";
inline constexpr std::string_view kReasonReplay = "REPLAYED_CIPHERTEXT";
inline constexpr std::string_view kReasonMissing = "MISSING_MESSAGE";
inline constexpr std::string_view kReasonMalformed = "MALFORMED_MESSAGE";

struct AbortReport {
  RoundId round;
  PartyId culprit;
  std::string reason;
  PartyId detected_by;

  // ABORT,round,culprit,reason-code
  std::string ToLine() const;
};

struct UserState {
  explicit UserState(int i, QueryTerm q, Drbg r)
      : index(i), query(std::move(q)), rng(std::move(r)) {}

  int index;
  QueryTerm query;
  Drbg rng;
  uint64_t alpha = 0;
  SharePolynomial poly;
  std::vector<Ciphertext> sent;  // sent[j-1] encrypts the share for point j
  std::vector<Exponent> sent_randomness;
  std::vector<std::optional<Ciphertext>> column;  // column[l-1] from user l
  std::vector<int> permutation;
  std::vector<Exponent> gammas;
  std::vector<Ciphertext> shuffled;
  std::optional<std::string> answer;
};

struct ManagerState {
  explicit ManagerState(int i, Drbg r) : index(i), rng(std::move(r)) {}

  int index;
  Drbg rng;
  std::optional<KeyShare> key;
  // R1 ciphertexts by (from, to), needed for the shuffle statements.
  std::map<std::pair<int, int>, Ciphertext> cells;
  // Shuffled vectors by user, accepted after verification.
  std::vector<std::vector<Ciphertext>> vectors;
  std::vector<GroupElement> own_shares;
  QueryResultSet results;
};

struct RunDiagnostics {
  std::vector<uint64_t> paddings;    // alpha by user
  std::vector<QueryTerm> recovered;  // the leader's Q, in recovery order
  std::vector<DroppedBucket> dropped;
  int malformed = 0;
  int terms_lost = 0;  // n minus |Q|
};

struct RunOutcome {
  // Answer located by each user for its own term; nullopt if dropped.
  std::vector<std::optional<std::string>> user_answers;
  QueryResultSet result_set;
  CostMetrics metrics;
  std::vector<std::string> event_log;
  std::optional<AbortReport> abort;
  std::vector<std::string> warnings;
  RunDiagnostics diagnostics;
};

// One protocol execution. Setup takes two rounds (S1, S2); the protocol
// proper takes four. Copyable, so a run can be forked at a round boundary.
class Session {
 public:
  static absl::StatusOr<Session> Create(ProtocolConfig config,
                                        std::vector<QueryTerm> queries,
                                        FaultPlan faults = {});

  // Each returns false once the run has aborted.
  bool RunSetup();
  bool RunRound(int round);
  bool RunAll();

  bool aborted() const { return abort_.has_value(); }
  int rounds_completed() const { return network_.metrics().rounds; }
  RunOutcome Outcome() const;

  const ProtocolConfig& config() const { return config_; }
  const PublicKey& public_key() const { return pk_; }
  const UserState& user(int i) const { return users_.at(i - 1); }
  const ManagerState& manager(int j) const { return managers_.at(j - 1); }
  int leader() const { return leader_; }

 private:
  Session(ProtocolConfig config, std::vector<QueryTerm> queries,
          FaultPlan faults);

  const GroupParams& group() const { return config_.params.group; }
  bool malicious() const { return config_.mode == Mode::kMalicious; }
  std::optional<FaultKind> FaultFor(const PartyId& party) const;
  CostCounter* Online(const PartyId& party);
  CostCounter* Setup(const PartyId& party);
  void Abort(const PartyId& culprit, std::string_view reason,
             const PartyId& detector);
  bool Deliver();

  void SetupAnnounce(ManagerState& m);
  void SetupVerify(const PartyId& self,
                   const std::vector<ProtocolMessage>& inbox);
  void UserShare(UserState& u, const std::vector<ProtocolMessage>& inbox,
                 const std::vector<ProtocolMessage>& rushing);
  void UserShuffle(UserState& u, const std::vector<ProtocolMessage>& inbox);
  void ManagerAbsorb(ManagerState& m,
                     const std::vector<ProtocolMessage>& inbox);
  void ManagerDecrypt(ManagerState& m,
                      const std::vector<ProtocolMessage>& inbox);
  void LeaderSubmit(ManagerState& m, const std::vector<ProtocolMessage>& inbox);
  void UserCollect(UserState& u, const std::vector<ProtocolMessage>& inbox);

  ProtocolConfig config_;
  FaultPlan faults_;
  SimNetwork network_;
  std::vector<UserState> users_;
  std::vector<ManagerState> managers_;
  std::map<PartyId, std::vector<ProtocolMessage>> inboxes_;
  PublicKey pk_;
  int leader_ = 1;
  int next_round_ = 0;  // 0 = setup pending
  std::optional<AbortReport> abort_;
  std::vector<std::string> warnings_;
  RunDiagnostics diagnostics_;
};

absl::StatusOr<RunOutcome> Run(const ProtocolConfig& config,
                               std::vector<QueryTerm> queries,
                               const FaultPlan& faults = {});

}  // namespace pws

#endif  // PWS_PROTOCOL_H_
