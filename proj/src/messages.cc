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

#include "pws/messages.h"

#include "absl/strings/str_cat.h"
#include "pws/bigint.h"

namespace pws {
namespace {

void PutU32(uint32_t v, std::vector<uint8_t>* out) {
  for (int s = 24; s >= 0; s -= 8) out->push_back(static_cast<uint8_t>(v >> s));
}

void PutString(std::string_view s, std::vector<uint8_t>* out) {
  PutU32(static_cast<uint32_t>(s.size()), out);
  out->insert(out->end(), s.begin(), s.end());
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string PartyId::ToString() const {
  return absl::StrCat(role == Role::kManager ? "M" : "U", index);
}

std::string RoundId::ToString() const {
  return setup ? absl::StrCat("S", index) : absl::StrCat(index);
}

std::string_view PayloadType(const Payload& payload) {
  return std::visit(
      Overloaded{
          [](const KeyShareAnnouncement&) { return "KeyShareAnnouncement"; },
          [](const RosterAnnouncement&) { return "RosterAnnouncement"; },
          [](const EncryptedShareList&) { return "EncryptedShareList"; },
          [](const ShuffledVector&) { return "ShuffledVector"; },
          [](const DecryptionShareBatch&) { return "DecryptionShareBatch"; },
          [](const QueryResultSet&) { return "QueryResultSet"; },
          [](const ProofAttachment&) { return "ProofAttachment"; },
      },
      payload);
}

int64_t GroupElementCount(const Payload& payload) {
  return std::visit(
      Overloaded{
          [](const KeyShareAnnouncement&) -> int64_t { return 1; },
          [](const RosterAnnouncement&) -> int64_t { return 1; },
          [](const EncryptedShareList& l) -> int64_t {
            return 2 * static_cast<int64_t>(l.entries.size());
          },
          [](const ShuffledVector& v) -> int64_t {
            return 2 * static_cast<int64_t>(v.ciphertexts.size());
          },
          [](const DecryptionShareBatch& b) -> int64_t {
            return static_cast<int64_t>(b.shares.size());
          },
          [](const QueryResultSet&) -> int64_t { return 0; },
          [](const ProofAttachment&) -> int64_t { return 0; },
      },
      payload);
}

std::vector<uint8_t> SerializePayload(const GroupParams& group,
                                      const Payload& payload) {
  std::vector<uint8_t> out;
  const size_t w = group.element_bytes();
  std::visit(
      Overloaded{
          [&](const KeyShareAnnouncement& k) {
            PutU32(k.manager, &out);
            AppendFixedBytes(k.y.value, w, &out);
          },
          [&](const RosterAnnouncement& r) {
            AppendFixedBytes(r.y.value, w, &out);
            PutU32(static_cast<uint32_t>(r.roster.size()), &out);
            for (int u : r.roster) PutU32(u, &out);
            PutU32(r.leader, &out);
          },
          [&](const EncryptedShareList& l) {
            PutU32(l.user, &out);
            PutU32(static_cast<uint32_t>(l.entries.size()), &out);
            for (const EncryptedShareEntry& e : l.entries) {
              PutU32(e.from, &out);
              PutU32(e.to, &out);
              AppendCiphertext(group, e.c, &out);
            }
          },
          [&](const ShuffledVector& v) {
            PutU32(v.user, &out);
            PutU32(static_cast<uint32_t>(v.ciphertexts.size()), &out);
            for (const Ciphertext& c : v.ciphertexts) {
              AppendCiphertext(group, c, &out);
            }
          },
          [&](const DecryptionShareBatch& b) {
            PutU32(b.manager, &out);
            PutU32(static_cast<uint32_t>(b.shares.size()), &out);
            for (const GroupElement& d : b.shares) {
              AppendFixedBytes(d.value, w, &out);
            }
          },
          [&](const QueryResultSet& r) {
            PutU32(static_cast<uint32_t>(r.results.size()), &out);
            for (const QueryResult& q : r.results) {
              PutString(q.term.value.get_str(16), &out);
              PutString(q.answer, &out);
            }
          },
          [&](const ProofAttachment& a) {
            std::visit(
                Overloaded{
                    [&](const DlogProof& p) { AppendDlogProof(group, p, &out); },
                    [&](const std::vector<PlaintextProof>& ps) {
                      PutU32(static_cast<uint32_t>(ps.size()), &out);
                      for (const PlaintextProof& p : ps) {
                        AppendDlogProof(group, p.dlog, &out);
                      }
                    },
                    [&](const ShuffleAttachment& s) {
                      AppendCiphertext(group, s.diagonal, &out);
                      AppendDlogProof(group, s.diagonal_proof.dlog, &out);
                      AppendShuffleProof(group, s.proof, &out);
                    },
                },
                a.proof);
          },
      },
      payload);
  return out;
}

}  // namespace pws
