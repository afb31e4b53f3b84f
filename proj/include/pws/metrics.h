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

#ifndef PWS_METRICS_H_
#define PWS_METRICS_H_

#include <cstdint>
#include <map>
#include <string>

#include "pws/cost.h"
#include "pws/messages.h"

namespace pws {

struct PartyMetrics {
  CostCounter setup;   // key generation and setup-phase verification
  CostCounter online;  // rounds 1..4
  int64_t bits_sent = 0;    // group elements outside proofs, at ceil(log p)
  int64_t proof_bits = 0;   // serialized proof attachments
  int64_t setup_bits = 0;   // group elements sent during setup
  int rounds_seen = 0;      // protocol rounds with traffic to or from the party
};

struct CostMetrics {
  std::map<PartyId, PartyMetrics> parties;
  int rounds = 0;        // protocol rounds completed after setup
  int setup_rounds = 0;
  int terms_dropped = 0;
  int malformed_shares = 0;
  int aborts = 0;

  CostCounter TotalOnline() const;
  int64_t TotalBits() const;
  int64_t BitsFor(Role role) const;
};

// party,exp,mul,bits_sent,rounds_seen
std::string MetricsCsv(const CostMetrics& metrics);

}  // namespace pws

#endif  // PWS_METRICS_H_
