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

#include "pws/fault_plan.h"

#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace pws {

std::string_view FaultKindName(FaultKind kind) {
  switch (kind) {
    case FaultKind::kBadKeyProof:
      return "bad-key-proof";
    case FaultKind::kBadPlaintextProof:
      return "bad-plaintext-proof";
    case FaultKind::kBadShuffleProof:
      return "bad-shuffle-proof";
    case FaultKind::kEquivocateShare:
      return "equivocate-share";
    case FaultKind::kReplayCiphertext:
      return "replay-ciphertext";
  }
  return "unknown";
}

Fault MakeFault(FaultKind kind, int party_index) {
  switch (kind) {
    case FaultKind::kBadKeyProof:
      return Fault{PartyId::Manager(party_index), RoundId{true, 1}, kind};
    case FaultKind::kBadShuffleProof:
      return Fault{PartyId::User(party_index), RoundId{false, 2}, kind};
    default:
      return Fault{PartyId::User(party_index), RoundId{false, 1}, kind};
  }
}

absl::StatusOr<Fault> ParseFault(std::string_view spec) {
  std::pair<std::string, std::string> parts = absl::StrSplit(
      absl::string_view(spec.data(), spec.size()), absl::MaxSplits(':', 1));
  int party = 0;
  if (!absl::SimpleAtoi(parts.second, &party) || party < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("fault '", std::string(spec), "': expected kind:party"));
  }
  static constexpr std::pair<std::string_view, FaultKind> kNames[] = {
      {"key", FaultKind::kBadKeyProof},
      {"plaintext", FaultKind::kBadPlaintextProof},
      {"shuffle", FaultKind::kBadShuffleProof},
      {"equivocate", FaultKind::kEquivocateShare},
      {"replay", FaultKind::kReplayCiphertext},
  };
  for (const auto& [name, kind] : kNames) {
    if (parts.first == name || parts.first == FaultKindName(kind)) {
      return MakeFault(kind, party);
    }
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown fault kind '", parts.first, "'"));
}

std::optional<FaultKind> FaultPlan::KindFor(const PartyId& party) const {
  for (const Fault& f : faults) {
    if (f.party == party) return f.kind;
  }
  return std::nullopt;
}

}  // namespace pws
