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

#include "pws/network.h"

#include <algorithm>
#include <stdexcept>

#include "absl/strings/str_cat.h"
#include "pws/sha256.h"

namespace pws {

CostCounter CostMetrics::TotalOnline() const {
  CostCounter total;
  for (const auto& [id, m] : parties) total += m.online;
  return total;
}

int64_t CostMetrics::TotalBits() const {
  int64_t total = 0;
  for (const auto& [id, m] : parties) total += m.bits_sent;
  return total;
}

int64_t CostMetrics::BitsFor(Role role) const {
  int64_t total = 0;
  for (const auto& [id, m] : parties) {
    if (id.role == role) total += m.bits_sent;
  }
  return total;
}

std::string MetricsCsv(const CostMetrics& metrics) {
  std::string out = "party,exp,mul,bits_sent,rounds_seen\n";
  for (const auto& [id, m] : metrics.parties) {
    absl::StrAppend(&out, id.ToString(), ",", m.online.exp, ",", m.online.mul,
                    ",", m.bits_sent, ",", m.rounds_seen, "\n");
  }
  return out;
}

SimNetwork::SimNetwork(GroupParams group, std::vector<PartyId> parties)
    : group_(std::move(group)), parties_(std::move(parties)) {
  std::sort(parties_.begin(), parties_.end());
  for (const PartyId& p : parties_) metrics_.parties[p];
}

void SimNetwork::BeginRound(RoundId round) {
  if (!pending_.empty()) {
    throw std::logic_error("previous round was not delivered");
  }
  round_ = round;
}

void SimNetwork::Send(ProtocolMessage msg) {
  msg.round = round_;
  PartyMetrics& m = metrics_.parties.at(msg.sender);
  const int64_t element_bits = GroupElementCount(msg.payload) * group_.bits();
  if (round_.setup) {
    m.setup_bits += element_bits;
  } else {
    m.bits_sent += element_bits;
  }
  if (std::holds_alternative<ProofAttachment>(msg.payload)) {
    m.proof_bits +=
        static_cast<int64_t>(SerializePayload(group_, msg.payload).size()) * 8;
  }
  pending_.push_back(std::move(msg));
}

std::map<PartyId, std::vector<ProtocolMessage>> SimNetwork::EndRound() {
  std::stable_sort(pending_.begin(), pending_.end(),
                   [](const ProtocolMessage& a, const ProtocolMessage& b) {
                     return a.sender < b.sender;
                   });
  std::map<PartyId, std::vector<ProtocolMessage>> inboxes;
  std::set<PartyId> seen;
  for (const ProtocolMessage& msg : pending_) {
    const std::vector<uint8_t> bytes = SerializePayload(group_, msg.payload);
    event_log_.push_back(absl::StrCat(
        round_.ToString(), ",", msg.sender.ToString(), ",",
        msg.recipient ? msg.recipient->ToString() : "*", ",",
        std::string(PayloadType(msg.payload)), ",", HexEncode(Sha256Digest(bytes))));
    seen.insert(msg.sender);
    if (msg.recipient) {
      seen.insert(*msg.recipient);
      inboxes[*msg.recipient].push_back(msg);
    } else {
      for (const PartyId& p : parties_) {
        if (p == msg.sender) continue;
        seen.insert(p);
        inboxes[p].push_back(msg);
      }
    }
  }
  if (!round_.setup) {
    for (const PartyId& p : seen) ++metrics_.parties.at(p).rounds_seen;
  }
  pending_.clear();
  return inboxes;
}

void SimNetwork::DiscardRound() { pending_.clear(); }

}  // namespace pws
