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

#ifndef PWS_MESSAGES_H_
#define PWS_MESSAGES_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pws/algebra.h"
#include "pws/elgamal.h"
#include "pws/shamir.h"
#include "pws/zkp.h"

namespace pws {

enum class Role { kManager = 0, kUser = 1 };

// Managers sort before users; this is the canonical delivery order.
struct PartyId {
  Role role = Role::kUser;
  int index = 0;

  static PartyId Manager(int i) { return PartyId{Role::kManager, i}; }
  static PartyId User(int i) { return PartyId{Role::kUser, i}; }

  std::string ToString() const;  // "M3", "U7"
  friend auto operator<=>(const PartyId&, const PartyId&) = default;
};

// Setup rounds are "S1", "S2"; protocol rounds are "1".."4".
struct RoundId {
  bool setup = false;
  int index = 0;

  std::string ToString() const;
  friend auto operator<=>(const RoundId&, const RoundId&) = default;
};

struct KeyShareAnnouncement {
  int manager = 0;
  GroupElement y;
};

// Published by the leader at the end of setup.
struct RosterAnnouncement {
  GroupElement y;
  std::vector<int> roster;  // user labels 1..n
  int leader = 0;
};

struct EncryptedShareEntry {
  int from = 0;
  int to = 0;
  Ciphertext c;
};

struct EncryptedShareList {
  int user = 0;
  std::vector<EncryptedShareEntry> entries;
};

struct ShuffledVector {
  int user = 0;
  std::vector<Ciphertext> ciphertexts;
};

// Decryption shares for all n*n ciphertexts, row-major by (user, position).
struct DecryptionShareBatch {
  int manager = 0;
  std::vector<GroupElement> shares;
};

struct QueryResult {
  QueryTerm term;
  std::string answer;
};

struct QueryResultSet {
  std::vector<QueryResult> results;
};

// Proofs travel next to the message they support, in the same round.
// The shuffle statement needs the shuffler's whole input column, including
// the locally kept diagonal cell. In malicious mode that cell travels here,
// with its own plaintext proof, and is counted as proof traffic.
struct ShuffleAttachment {
  Ciphertext diagonal;
  PlaintextProof diagonal_proof;
  ShuffleProof proof;
};

struct ProofAttachment {
  std::variant<DlogProof, std::vector<PlaintextProof>, ShuffleAttachment> proof;
};

using Payload =
    std::variant<KeyShareAnnouncement, RosterAnnouncement, EncryptedShareList,
                 ShuffledVector, DecryptionShareBatch, QueryResultSet,
                 ProofAttachment>;

struct ProtocolMessage {
  PartyId sender;
  std::optional<PartyId> recipient;  // nullopt: broadcast
  RoundId round;
  Payload payload;
};

std::string_view PayloadType(const Payload& payload);

// Number of group elements the payload carries outside of proofs; the unit
// of the communication accounting.
int64_t GroupElementCount(const Payload& payload);

std::vector<uint8_t> SerializePayload(const GroupParams& group,
                                      const Payload& payload);

}  // namespace pws

#endif  // PWS_MESSAGES_H_
