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

#ifndef PWS_NETWORK_H_
#define PWS_NETWORK_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pws/algebra.h"
#include "pws/messages.h"
#include "pws/metrics.h"

namespace pws {

struct NetworkModel {
  // One broadcast reaches every party in a single round. Without it the
  // round accounting does not hold, and the simulator refuses to run.
  bool broadcast_available = true;
};

// Synchronous network with an ideal broadcast channel. Messages sent during
// a round are delivered when the round ends, in canonical sender order.
// Every message is appended to the event log as
//   round,sender,recipient|*,payload-type,sha256(payload-bytes)
class SimNetwork {
 public:
  SimNetwork(GroupParams group, std::vector<PartyId> parties);

  void BeginRound(RoundId round);
  void Send(ProtocolMessage msg);
  std::map<PartyId, std::vector<ProtocolMessage>> EndRound();
  // Drops the messages of the current round (the protocol terminated).
  void DiscardRound();

  const RoundId& round() const { return round_; }
  // Messages sent so far in the current round (what a rushing party sees).
  const std::vector<ProtocolMessage>& pending() const { return pending_; }
  const std::vector<std::string>& event_log() const { return event_log_; }
  void AppendLogLine(std::string line) { event_log_.push_back(std::move(line)); }
  CostMetrics& metrics() { return metrics_; }
  const CostMetrics& metrics() const { return metrics_; }

 private:
  GroupParams group_;
  std::vector<PartyId> parties_;
  RoundId round_;
  std::vector<ProtocolMessage> pending_;
  std::vector<std::string> event_log_;
  CostMetrics metrics_;
};

}  // namespace pws

#endif  // PWS_NETWORK_H_
