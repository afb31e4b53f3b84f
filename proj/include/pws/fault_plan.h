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

#ifndef PWS_FAULT_PLAN_H_
#define PWS_FAULT_PLAN_H_

#include <optional>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "pws/messages.h"

namespace pws {

enum class FaultKind {
  kBadKeyProof,        // manager: key-share proof for a different secret
  kBadPlaintextProof,  // user: corrupted plaintext-knowledge proof
  kBadShuffleProof,    // user: output vector not matching its shuffle proof
  kEquivocateShare,    // user: two conflicting ciphertexts for one cell
  kReplayCiphertext,   // user: re-sends another user's ciphertext and proof
};

std::string_view FaultKindName(FaultKind kind);

struct Fault {
  PartyId party;
  RoundId round;  // the round in which the faulty message is sent
  FaultKind kind;
};

// Fills in the role and round implied by the kind.
Fault MakeFault(FaultKind kind, int party_index);

// "kind:party", e.g. "shuffle:3" or "bad-key-proof:2". Short kind names are
// key, plaintext, shuffle, equivocate, replay.
absl::StatusOr<Fault> ParseFault(std::string_view spec);

struct FaultPlan {
  std::vector<Fault> faults;

  std::optional<FaultKind> KindFor(const PartyId& party) const;
};

}  // namespace pws

#endif  // PWS_FAULT_PLAN_H_
