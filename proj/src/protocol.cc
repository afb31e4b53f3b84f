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

#include "pws/protocol.h"

#include <algorithm>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "pws/bigint.h"
#include "pws/mock_engine.h"
#include "pws/status_macros.h"
#include "pws/zkp.h"

namespace pws {
namespace {

std::string DlTag(int manager) { return absl::StrCat(std::string(kTagDl), ":M", manager); }
std::string PkTag(int from, int to) {
  return absl::StrCat(std::string(kTagPk), ":U", from, ":", to);
}
std::string CsTag(int user) { return absl::StrCat(std::string(kTagCs), ":U", user); }

template <class T>
std::vector<const T*> PayloadsFrom(const std::vector<ProtocolMessage>& inbox,
                                   const PartyId& sender) {
  std::vector<const T*> out;
  for (const ProtocolMessage& msg : inbox) {
    if (msg.sender != sender) continue;
    if (const T* p = std::get_if<T>(&msg.payload)) out.push_back(p);
  }
  return out;
}

template <class T>
std::vector<const T*> ProofsFrom(const std::vector<ProtocolMessage>& inbox,
                                 const PartyId& sender) {
  std::vector<const T*> out;
  for (const ProofAttachment* a : PayloadsFrom<ProofAttachment>(inbox, sender)) {
    if (const T* p = std::get_if<T>(&a->proof)) out.push_back(p);
  }
  return out;
}

}  // namespace

std::string_view ModeName(Mode mode) {
  return mode == Mode::kMalicious ? "malicious" : "semi-honest";
}

absl::StatusOr<Mode> ParseMode(std::string_view name) {
  if (name == "semi-honest" || name == "semihonest") return Mode::kSemiHonest;
  if (name == "malicious") return Mode::kMalicious;
  return absl::InvalidArgumentError(absl::StrCat("unknown mode '", std::string(name), "'"));
}

absl::Status ValidateConfig(const ProtocolConfig& config,
                            const FaultPlan& faults) {
  if (config.n < 2) return absl::InvalidArgumentError("n must be at least 2");
  if (config.num_managers < 1) {
    return absl::InvalidArgumentError("N must be at least 1");
  }
  if (config.mode == Mode::kMalicious && config.shuffle_reps < 1) {
    return absl::InvalidArgumentError("k must be at least 1");
  }
  const SharingField& field = config.params.field;
  if (CeilLog2(static_cast<uint64_t>(config.n)) !=
      CeilLog2(static_cast<uint64_t>(field.n))) {
    return absl::InvalidArgumentError(absl::StrCat(
        "sharing field was sized for n=", field.n, ", not n=", config.n));
  }
  if (field.modulus <= config.n) {
    return absl::InvalidArgumentError("sharing field too small for n points");
  }
  PWS_RETURN_IF_ERROR(CheckFieldFits(config.params.group, field));
  std::set<PartyId> seen;
  for (const Fault& f : faults.faults) {
    const int limit =
        f.party.role == Role::kManager ? config.num_managers : config.n;
    if (f.party.index < 1 || f.party.index > limit) {
      return absl::InvalidArgumentError(
          absl::StrCat("fault names unknown party ", f.party.ToString()));
    }
    if (!seen.insert(f.party).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("more than one fault for ", f.party.ToString()));
    }
    if (config.mode == Mode::kSemiHonest &&
        f.kind != FaultKind::kEquivocateShare) {
      return absl::InvalidArgumentError(absl::StrCat(
          std::string(FaultKindName(f.kind)), " needs malicious mode (no proofs to break)"));
    }
  }
  return absl::OkStatus();
}

std::string AbortReport::ToLine() const {
  return absl::StrCat("ABORT,", round.ToString(), ",", culprit.ToString(), ",",
                      reason);
}

absl::StatusOr<Session> Session::Create(ProtocolConfig config,
                                        std::vector<QueryTerm> queries,
                                        FaultPlan faults) {
  PWS_RETURN_IF_ERROR(ValidateConfig(config, faults));
  if (static_cast<int>(queries.size()) != config.n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "expected ", config.n, " queries, got ", queries.size()));
  }
  for (const QueryTerm& q : queries) {
    if (q.value < 0 || q.value >= config.params.field.modulus) {
      return absl::OutOfRangeError("query term outside the sharing field");
    }
  }
  return Session(std::move(config), std::move(queries), std::move(faults));
}

namespace {

std::vector<PartyId> AllParties(int n, int num_managers) {
  std::vector<PartyId> out;
  for (int j = 1; j <= num_managers; ++j) out.push_back(PartyId::Manager(j));
  for (int i = 1; i <= n; ++i) out.push_back(PartyId::User(i));
  return out;
}

}  // namespace

Session::Session(ProtocolConfig config, std::vector<QueryTerm> queries,
                 FaultPlan faults)
    : config_(std::move(config)),
      faults_(std::move(faults)),
      network_(config_.params.group,
               AllParties(config_.n, config_.num_managers)) {
  const Drbg root(config_.seed);
  for (int j = 1; j <= config_.num_managers; ++j) {
    managers_.emplace_back(j, root.Fork(absl::StrCat("manager/", j)));
  }
  for (int i = 1; i <= config_.n; ++i) {
    users_.emplace_back(i, std::move(queries[i - 1]),
                        root.Fork(absl::StrCat("user/", i)));
  }
}

std::optional<FaultKind> Session::FaultFor(const PartyId& party) const {
  return faults_.KindFor(party);
}

CostCounter* Session::Online(const PartyId& party) {
  return &network_.metrics().parties.at(party).online;
}

CostCounter* Session::Setup(const PartyId& party) {
  return &network_.metrics().parties.at(party).setup;
}

void Session::Abort(const PartyId& culprit, std::string_view reason,
                    const PartyId& detector) {
  if (abort_) return;
  abort_ = AbortReport{network_.round(), culprit, std::string(reason),
                       detector};
  network_.DiscardRound();
  ++network_.metrics().aborts;
}

bool Session::Deliver() {
  if (abort_) return false;
  inboxes_ = network_.EndRound();
  if (network_.round().setup) {
    ++network_.metrics().setup_rounds;
  } else {
    ++network_.metrics().rounds;
  }
  return true;
}

bool Session::RunSetup() {
  if (abort_ || next_round_ != 0) return false;
  network_.BeginRound(RoundId{true, 1});
  for (ManagerState& m : managers_) SetupAnnounce(m);
  if (!Deliver()) return false;

  network_.BeginRound(RoundId{true, 2});
  for (const PartyId& p : AllParties(config_.n, config_.num_managers)) {
    SetupVerify(p, inboxes_[p]);
    if (abort_) return false;
  }
  // Every party combines the same contributions; one copy is kept.
  std::vector<GroupElement> contributions;
  for (const ManagerState& m : managers_) {
    contributions.push_back(m.key->public_share);
  }
  pk_ = *CombinePublicKeys(group(), contributions, nullptr);
  if (pk_.IsDegenerate()) {
    warnings_.push_back("combined public key is the identity element");
  }
  for (const GroupElement& y : contributions) {
    if (y == group().identity()) {
      warnings_.push_back("a key share is the identity (trivial statement)");
      break;
    }
  }
  // The leader publishes the roster.
  std::vector<int> roster;
  for (int i = 1; i <= config_.n; ++i) roster.push_back(i);
  network_.Send(ProtocolMessage{PartyId::Manager(leader_), std::nullopt, {},
                                RosterAnnouncement{pk_.y, roster, leader_}});
  if (!Deliver()) return false;
  next_round_ = 1;
  return true;
}

void Session::SetupAnnounce(ManagerState& m) {
  const PartyId self = PartyId::Manager(m.index);
  m.key = TkgContribute(group(), m.index, m.rng, Setup(self));
  network_.Send(ProtocolMessage{
      self, std::nullopt, {}, KeyShareAnnouncement{m.index, m.key->public_share}});
  if (!malicious()) return;
  Exponent witness = m.key->secret;
  if (FaultFor(self) == FaultKind::kBadKeyProof) {
    witness = group().ReduceExponent(witness.value + 1);
  }
  const DlogProof proof = ProveDl(group(), m.key->public_share, witness, m.rng,
                                  DlTag(m.index), Setup(self));
  network_.Send(
      ProtocolMessage{self, std::nullopt, {}, ProofAttachment{proof}});
}

void Session::SetupVerify(const PartyId& self,
                          const std::vector<ProtocolMessage>& inbox) {
  for (const ManagerState& m : managers_) {
    const PartyId sender = PartyId::Manager(m.index);
    if (sender == self) continue;  // own key share is known locally
    const auto keys = PayloadsFrom<KeyShareAnnouncement>(inbox, sender);
    if (keys.size() != 1) {
      Abort(sender, keys.empty() ? kReasonMissing : kReasonEquivocation, self);
      return;
    }
    if (!group().Contains(keys[0]->y) || keys[0]->manager != m.index) {
      Abort(sender, kReasonMalformed, self);
      return;
    }
    if (!malicious()) continue;
    const auto proofs = ProofsFrom<DlogProof>(inbox, sender);
    if (proofs.size() != 1) {
      Abort(sender, kReasonMissing, self);
      return;
    }
    if (!VerifyDl(group(), keys[0]->y, *proofs[0], DlTag(m.index),
                  Setup(self))) {
      Abort(sender, kReasonBadKeyProof, self);
      return;
    }
  }
}

bool Session::RunRound(int round) {
  if (abort_ || round != next_round_ || round < 1 || round > 4) return false;
  network_.BeginRound(RoundId{false, round});
  switch (round) {
    case 1: {
      // Honest users first; a faulty user may rush and see their messages.
      for (int pass = 0; pass < 2 && !abort_; ++pass) {
        for (UserState& u : users_) {
          const bool faulty = FaultFor(PartyId::User(u.index)).has_value();
          if (faulty != (pass == 1)) continue;
          UserShare(u, inboxes_[PartyId::User(u.index)], network_.pending());
          if (abort_) break;
        }
      }
      break;
    }
    case 2:
      for (ManagerState& m : managers_) {
        ManagerAbsorb(m, inboxes_[PartyId::Manager(m.index)]);
      }
      for (UserState& u : users_) {
        UserShuffle(u, inboxes_[PartyId::User(u.index)]);
        if (abort_) break;
      }
      break;
    case 3:
      for (ManagerState& m : managers_) {
        ManagerDecrypt(m, inboxes_[PartyId::Manager(m.index)]);
        if (abort_) break;
      }
      break;
    case 4:
      LeaderSubmit(managers_.at(leader_ - 1),
                   inboxes_[PartyId::Manager(leader_)]);
      break;
  }
  if (!Deliver()) return false;
  if (round == 4) {
    for (UserState& u : users_) {
      UserCollect(u, inboxes_[PartyId::User(u.index)]);
    }
  }
  next_round_ = round + 1;
  return true;
}

bool Session::RunAll() {
  if (!RunSetup()) return false;
  for (int r = 1; r <= 4; ++r) {
    if (!RunRound(r)) return false;
  }
  return true;
}

void Session::UserShare(UserState& u, const std::vector<ProtocolMessage>& inbox,
                        const std::vector<ProtocolMessage>& rushing) {
  const PartyId self = PartyId::User(u.index);
  const PartyId leader = PartyId::Manager(leader_);
  const auto roster = PayloadsFrom<RosterAnnouncement>(inbox, leader);
  if (roster.size() != 1) {
    Abort(leader, kReasonMissing, self);
    return;
  }
  if (roster[0]->y != pk_.y) {
    Abort(leader, kReasonMalformed, self);
    return;
  }
  const int n = config_.n;
  const SharingField& field = config_.params.field;
  CostCounter* cost = Online(self);

  u.poly = *MakeSharePolynomial(u.query, n, field, u.rng);
  const std::vector<SharePoint> points =
      EvaluateShares(u.poly, n, field, cost);
  u.alpha = RandomPadding(n, u.rng);
  const std::vector<PaddedShare> padded = *Pad(points, u.alpha, n);
  u.sent.clear();
  u.sent_randomness.clear();
  for (const PaddedShare& s : padded) {
    const GroupElement m = *EncodeToGroup(group(), s.Packed() + 1);
    const Exponent r = group().RandomExponent(u.rng);
    u.sent.push_back(*Encrypt(group(), pk_, m, r, cost));
    u.sent_randomness.push_back(r);
  }
  u.column.assign(n, std::nullopt);
  u.column[u.index - 1] = u.sent[u.index - 1];

  EncryptedShareList list{u.index, {}};
  std::vector<PlaintextProof> proofs;
  for (int j = 1; j <= n; ++j) {
    if (j == u.index) continue;
    list.entries.push_back(EncryptedShareEntry{u.index, j, u.sent[j - 1]});
    if (malicious()) {
      proofs.push_back(ProvePk(group(), pk_, u.sent[j - 1],
                               u.sent_randomness[j - 1], u.rng,
                               PkTag(u.index, j), cost));
    }
  }

  switch (FaultFor(self).value_or(FaultKind::kBadKeyProof)) {
    case FaultKind::kBadPlaintextProof:
      proofs[0].dlog.response =
          group().ReduceExponent(proofs[0].dlog.response.value + 1);
      break;
    case FaultKind::kEquivocateShare: {
      // A second, conflicting ciphertext for the first cell.
      const int j = list.entries[0].to;
      PaddedShare other = padded[j - 1];
      other.v = (other.v + 1) % field.modulus;
      const GroupElement m = *EncodeToGroup(group(), other.Packed() + 1);
      const Exponent r = group().RandomExponent(u.rng);
      const Ciphertext c = *Encrypt(group(), pk_, m, r, nullptr);
      list.entries.push_back(EncryptedShareEntry{u.index, j, c});
      if (malicious()) {
        proofs.push_back(
            ProvePk(group(), pk_, c, r, u.rng, PkTag(u.index, j), nullptr));
      }
      break;
    }
    case FaultKind::kReplayCiphertext: {
      // Copy an honest user's ciphertext and proof, seen this round, into
      // the first cell.
      const int j = list.entries[0].to;
      int h = 0;
      for (int cand = 1; cand <= n && h == 0; ++cand) {
        if (cand != u.index && cand != j) h = cand;
      }
      if (h == 0) h = j;
      const int target = h == j ? u.index : j;
      for (const ProtocolMessage& msg : rushing) {
        if (msg.sender != PartyId::User(h)) continue;
        if (const auto* l = std::get_if<EncryptedShareList>(&msg.payload)) {
          for (size_t e = 0; e < l->entries.size(); ++e) {
            if (l->entries[e].to != target) continue;
            list.entries[0].c = l->entries[e].c;
            for (const ProtocolMessage& pm : rushing) {
              if (pm.sender != msg.sender) continue;
              const auto* a = std::get_if<ProofAttachment>(&pm.payload);
              if (a == nullptr) continue;
              if (const auto* ps =
                      std::get_if<std::vector<PlaintextProof>>(&a->proof)) {
                proofs[0] = ps->at(e);
              }
            }
          }
        }
      }
      break;
    }
    default:
      break;
  }

  network_.Send(ProtocolMessage{self, std::nullopt, {}, std::move(list)});
  if (malicious()) {
    network_.Send(
        ProtocolMessage{self, std::nullopt, {}, ProofAttachment{proofs}});
  }
}

void Session::UserShuffle(UserState& u,
                          const std::vector<ProtocolMessage>& inbox) {
  const PartyId self = PartyId::User(u.index);
  const int n = config_.n;
  CostCounter* cost = Online(self);

  // Every list is checked for shape; only the cell addressed here is opened.
  std::vector<std::pair<int, std::vector<Ciphertext>>> all_cells;
  for (int s = 1; s <= n; ++s) {
    if (s == u.index) continue;
    const PartyId sender = PartyId::User(s);
    const auto lists = PayloadsFrom<EncryptedShareList>(inbox, sender);
    if (lists.empty()) return Abort(sender, kReasonMissing, self);
    if (lists.size() > 1) return Abort(sender, kReasonEquivocation, self);
    const EncryptedShareList& list = *lists[0];
    std::vector<int> count(n + 1, 0);
    int mine = -1;
    for (size_t e = 0; e < list.entries.size(); ++e) {
      const EncryptedShareEntry& entry = list.entries[e];
      if (list.user != s || entry.from != s || entry.to < 1 || entry.to > n ||
          entry.to == s || !IsValidCiphertext(group(), entry.c)) {
        return Abort(sender, kReasonMalformed, self);
      }
      ++count[entry.to];
      if (entry.to == u.index) mine = static_cast<int>(e);  // last one wins
    }
    for (int j = 1; j <= n; ++j) {
      if (j == s) continue;
      if (count[j] == 0) return Abort(sender, kReasonMalformed, self);
      if (count[j] > 1 && malicious()) {
        return Abort(sender, kReasonEquivocation, self);
      }
    }
    if (malicious()) {
      const auto proofs = ProofsFrom<std::vector<PlaintextProof>>(inbox, sender);
      if (proofs.size() != 1) return Abort(sender, kReasonMissing, self);
      if (proofs[0]->size() != list.entries.size()) {
        return Abort(sender, kReasonMalformed, self);
      }
      const Ciphertext& c = list.entries[mine].c;
      if (!VerifyPk(group(), pk_, c, (*proofs[0])[mine],
                    PkTag(s, u.index), cost)) {
        // A ciphertext that also sits in someone else's list is a replay.
        bool replay = std::find(u.sent.begin(), u.sent.end(), c) != u.sent.end();
        for (const ProtocolMessage& msg : inbox) {
          if (msg.sender == sender) continue;
          const auto* other = std::get_if<EncryptedShareList>(&msg.payload);
          if (other == nullptr) continue;
          for (const EncryptedShareEntry& e : other->entries) {
            if (e.c == c) replay = true;
          }
        }
        return Abort(sender,
                     replay ? kReasonReplay : kReasonBadPlaintextProof, self);
      }
    }
    u.column[s - 1] = list.entries[mine].c;
  }

  std::vector<Ciphertext> input;
  for (const auto& c : u.column) input.push_back(*c);
  u.permutation = u.rng.Permutation(n);
  u.gammas.clear();
  u.shuffled.assign(n, Ciphertext{});
  for (int l = 0; l < n; ++l) {
    u.gammas.push_back(group().RandomExponent(u.rng));
    u.shuffled[u.permutation[l]] =
        Rerandomize(group(), pk_, input[l], u.gammas[l], cost);
  }
  std::vector<Ciphertext> out = u.shuffled;
  std::optional<ShuffleAttachment> attachment;
  if (malicious()) {
    absl::StatusOr<ShuffleProof> proof = ProveShuffle(
        group(), pk_, input, u.shuffled, u.permutation, u.gammas,
        config_.shuffle_reps, u.rng, CsTag(u.index), cost);
    PlaintextProof diag = ProvePk(group(), pk_, input[u.index - 1],
                                  u.sent_randomness[u.index - 1], u.rng,
                                  PkTag(u.index, u.index), cost);
    attachment = ShuffleAttachment{input[u.index - 1], diag, *std::move(proof)};
    if (FaultFor(self) == FaultKind::kBadShuffleProof) {
      // Swap in an encryption of something else after proving.
      const Exponent r = group().RandomExponent(u.rng);
      out[0] = *Encrypt(group(), pk_, group().generator(), r, nullptr);
    }
  }
  network_.Send(ProtocolMessage{self, std::nullopt, {},
                                ShuffledVector{u.index, std::move(out)}});
  if (attachment) {
    network_.Send(ProtocolMessage{self, std::nullopt, {},
                                  ProofAttachment{*std::move(attachment)}});
  }
}

void Session::ManagerAbsorb(ManagerState& m,
                            const std::vector<ProtocolMessage>& inbox) {
  m.cells.clear();
  for (const ProtocolMessage& msg : inbox) {
    const auto* list = std::get_if<EncryptedShareList>(&msg.payload);
    if (list == nullptr || msg.sender.role != Role::kUser) continue;
    for (const EncryptedShareEntry& e : list->entries) {
      if (e.from == msg.sender.index) m.cells[{e.from, e.to}] = e.c;
    }
  }
}

void Session::ManagerDecrypt(ManagerState& m,
                             const std::vector<ProtocolMessage>& inbox) {
  const PartyId self = PartyId::Manager(m.index);
  const int n = config_.n;
  CostCounter* cost = Online(self);
  m.vectors.assign(n, {});
  for (int u = 1; u <= n; ++u) {
    const PartyId sender = PartyId::User(u);
    const auto vecs = PayloadsFrom<ShuffledVector>(inbox, sender);
    if (vecs.empty()) return Abort(sender, kReasonMissing, self);
    if (vecs.size() > 1) return Abort(sender, kReasonEquivocation, self);
    const ShuffledVector& v = *vecs[0];
    if (v.user != u || static_cast<int>(v.ciphertexts.size()) != n) {
      return Abort(sender, kReasonMalformed, self);
    }
    for (const Ciphertext& c : v.ciphertexts) {
      if (!IsValidCiphertext(group(), c)) {
        return Abort(sender, kReasonMalformed, self);
      }
    }
    if (malicious()) {
      const auto atts = ProofsFrom<ShuffleAttachment>(inbox, sender);
      if (atts.size() != 1) return Abort(sender, kReasonMissing, self);
      const ShuffleAttachment& att = *atts[0];
      if (!IsValidCiphertext(group(), att.diagonal)) {
        return Abort(sender, kReasonMalformed, self);
      }
      if (!VerifyPk(group(), pk_, att.diagonal, att.diagonal_proof,
                    PkTag(u, u), cost)) {
        return Abort(sender, kReasonBadPlaintextProof, self);
      }
      std::vector<Ciphertext> input;
      for (int l = 1; l <= n; ++l) {
        if (l == u) {
          input.push_back(att.diagonal);
          continue;
        }
        auto it = m.cells.find({l, u});
        if (it == m.cells.end()) {
          return Abort(PartyId::User(l), kReasonMissing, self);
        }
        input.push_back(it->second);
      }
      if (!VerifyShuffle(group(), pk_, input, v.ciphertexts, att.proof,
                         CsTag(u), cost)) {
        return Abort(sender, kReasonBadShuffleProof, self);
      }
    }
    m.vectors[u - 1] = v.ciphertexts;
  }
  // Row-major over the n x n matrix: row r, column u is vector u's entry r.
  m.own_shares.clear();
  for (int r = 0; r < n; ++r) {
    for (int u = 0; u < n; ++u) {
      m.own_shares.push_back(
          TdShare(group(), *m.key, m.vectors[u][r], cost).d);
    }
  }
  network_.Send(ProtocolMessage{self, std::nullopt, {},
                                DecryptionShareBatch{m.index, m.own_shares}});
}

void Session::LeaderSubmit(ManagerState& m,
                           const std::vector<ProtocolMessage>& inbox) {
  const PartyId self = PartyId::Manager(m.index);
  const int n = config_.n;
  const int num_managers = config_.num_managers;
  const SharingField& field = config_.params.field;
  CostCounter* cost = Online(self);

  std::vector<const std::vector<GroupElement>*> batches(num_managers);
  batches[m.index - 1] = &m.own_shares;
  for (int j = 1; j <= num_managers; ++j) {
    if (j == m.index) continue;
    const PartyId sender = PartyId::Manager(j);
    const auto got = PayloadsFrom<DecryptionShareBatch>(inbox, sender);
    if (got.empty()) return Abort(sender, kReasonMissing, self);
    if (got.size() > 1) return Abort(sender, kReasonEquivocation, self);
    if (got[0]->manager != j ||
        static_cast<int64_t>(got[0]->shares.size()) !=
            static_cast<int64_t>(n) * n) {
      return Abort(sender, kReasonMalformed, self);
    }
    batches[j - 1] = &got[0]->shares;
  }

  std::vector<MatrixEntry> entries;
  int undecodable = 0;
  for (int r = 0; r < n; ++r) {
    for (int u = 0; u < n; ++u) {
      const size_t cell = static_cast<size_t>(r) * n + u;
      std::vector<DecryptionShare> shares;
      for (int j = 0; j < num_managers; ++j) {
        shares.push_back(DecryptionShare{j + 1, (*batches[j])[cell]});
      }
      absl::StatusOr<GroupElement> plain = CombineDecryption(
          group(), m.vectors[u][r], shares, num_managers, cost);
      absl::StatusOr<mpz_class> decoded =
          plain.ok() ? DecodeFromGroup(group(), *plain)
                     : absl::StatusOr<mpz_class>(plain.status());
      if (!decoded.ok()) {
        ++undecodable;
        continue;
      }
      entries.push_back(MatrixEntry{u + 1, *decoded - 1});
    }
  }
  const GroupingResult grouped = GroupByPadding(entries, n, field);
  std::vector<QueryTerm> recovered;
  for (const ReconstructionBucket& b : grouped.buckets) {
    absl::StatusOr<QueryTerm> t = Reconstruct(b.points, field, cost);
    if (t.ok()) recovered.push_back(*std::move(t));
  }
  const MockEngine engine(field);
  const std::vector<std::string> answers = engine.Search(recovered);
  m.results.results.clear();
  for (size_t i = 0; i < recovered.size(); ++i) {
    m.results.results.push_back(QueryResult{recovered[i], answers[i]});
  }

  diagnostics_.recovered = recovered;
  diagnostics_.dropped = grouped.dropped;
  diagnostics_.malformed = grouped.malformed + undecodable;
  diagnostics_.terms_lost = n - static_cast<int>(recovered.size());
  network_.metrics().terms_dropped = diagnostics_.terms_lost;
  network_.metrics().malformed_shares = diagnostics_.malformed;

  network_.Send(ProtocolMessage{self, std::nullopt, {}, m.results});
}

void Session::UserCollect(UserState& u,
                          const std::vector<ProtocolMessage>& inbox) {
  u.answer.reset();
  const auto sets = PayloadsFrom<QueryResultSet>(inbox, PartyId::Manager(leader_));
  if (sets.size() != 1) return;
  for (const QueryResult& r : sets[0]->results) {
    if (r.term == u.query) {
      u.answer = r.answer;
      return;
    }
  }
}

RunOutcome Session::Outcome() const {
  RunOutcome out;
  for (const UserState& u : users_) out.user_answers.push_back(u.answer);
  out.result_set = managers_.at(leader_ - 1).results;
  out.metrics = network_.metrics();
  out.event_log = network_.event_log();
  out.abort = abort_;
  out.warnings = warnings_;
  out.diagnostics = diagnostics_;
  for (const UserState& u : users_) out.diagnostics.paddings.push_back(u.alpha);
  return out;
}

absl::StatusOr<RunOutcome> Run(const ProtocolConfig& config,
                               std::vector<QueryTerm> queries,
                               const FaultPlan& faults) {
  PWS_ASSIGN_OR_RETURN(Session session,
                       Session::Create(config, std::move(queries), faults));
  session.RunAll();
  return session.Outcome();
}

}  // namespace pws
