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

#include "pws/elgamal.h"

#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pws/bigint.h"

namespace pws {

KeyShare TkgContribute(const GroupParams& group, int index, Drbg& rng,
                       CostCounter* cost) {
  return KeyShareFromSecret(group, index, group.RandomNonzeroExponent(rng),
                            cost);
}

KeyShare KeyShareFromSecret(const GroupParams& group, int index,
                            const Exponent& secret, CostCounter* cost) {
  return KeyShare{index, secret, group.PowG(secret, cost)};
}

absl::StatusOr<PublicKey> CombinePublicKeys(
    const GroupParams& group, std::span<const GroupElement> shares,
    CostCounter* cost) {
  if (shares.empty()) {
    return absl::InvalidArgumentError("at least one key share is required");
  }
  PublicKey pk;
  pk.y = shares.front();
  for (size_t i = 1; i < shares.size(); ++i) {
    pk.y = group.Mul(pk.y, shares[i], cost);
  }
  pk.contributions.assign(shares.begin(), shares.end());
  return pk;
}

absl::StatusOr<Ciphertext> Encrypt(const GroupParams& group,
                                   const PublicKey& pk, const GroupElement& m,
                                   const Exponent& r, CostCounter* cost) {
  if (!group.Contains(m)) {
    return absl::InvalidArgumentError("plaintext is not in G_q");
  }
  if (r.value < 0 || r.value >= group.q()) {
    return absl::OutOfRangeError("randomizer must lie in [0, q-1]");
  }
  Ciphertext c;
  c.a = group.PowG(r, cost);
  c.b = group.Mul(m, group.Pow(pk.y, r, cost), cost);
  return c;
}

DecryptionShare TdShare(const GroupParams& group, const KeyShare& ks,
                        const Ciphertext& c, CostCounter* cost) {
  return DecryptionShare{ks.index, group.Pow(c.a, ks.secret, cost)};
}

absl::StatusOr<GroupElement> CombineDecryption(
    const GroupParams& group, const Ciphertext& c,
    std::span<const DecryptionShare> shares, int num_managers,
    CostCounter* cost) {
  std::set<int> seen;
  for (const DecryptionShare& s : shares) {
    if (s.index < 1 || s.index > num_managers) {
      return absl::InvalidArgumentError(
          absl::StrCat("decryption share index ", s.index, " out of range"));
    }
    if (!seen.insert(s.index).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate decryption share for manager ", s.index));
    }
  }
  for (int i = 1; i <= num_managers; ++i) {
    if (!seen.contains(i)) {
      return absl::InvalidArgumentError(
          absl::StrCat("missing decryption share for manager ", i));
    }
  }
  GroupElement prod = shares.front().d;
  for (size_t i = 1; i < shares.size(); ++i) {
    prod = group.Mul(prod, shares[i].d, cost);
  }
  return group.Mul(c.b, group.Inverse(prod, cost), cost);
}

Ciphertext Rerandomize(const GroupParams& group, const PublicKey& pk,
                       const Ciphertext& c, const Exponent& gamma,
                       CostCounter* cost) {
  Ciphertext out;
  out.a = group.Mul(c.a, group.PowG(gamma, cost), cost);
  out.b = group.Mul(c.b, group.Pow(pk.y, gamma, cost), cost);
  return out;
}

Ciphertext HomomorphicMul(const GroupParams& group, const Ciphertext& x,
                          const Ciphertext& y, CostCounter* cost) {
  return Ciphertext{group.Mul(x.a, y.a, cost), group.Mul(x.b, y.b, cost)};
}

bool IsValidCiphertext(const GroupParams& group, const Ciphertext& c) {
  return group.Contains(c.a) && group.Contains(c.b);
}

void AppendCiphertext(const GroupParams& group, const Ciphertext& c,
                      std::vector<uint8_t>* out) {
  AppendFixedBytes(c.a.value, group.element_bytes(), out);
  AppendFixedBytes(c.b.value, group.element_bytes(), out);
}

std::vector<uint8_t> SerializeCiphertext(const GroupParams& group,
                                         const Ciphertext& c) {
  std::vector<uint8_t> out;
  out.reserve(2 * group.element_bytes());
  AppendCiphertext(group, c, &out);
  return out;
}

absl::StatusOr<Ciphertext> ParseCiphertext(const GroupParams& group,
                                           std::span<const uint8_t> bytes) {
  const size_t w = group.element_bytes();
  if (bytes.size() != 2 * w) {
    return absl::InvalidArgumentError("ciphertext has the wrong length");
  }
  Ciphertext c{GroupElement{FromBytes(bytes.subspan(0, w))},
               GroupElement{FromBytes(bytes.subspan(w, w))}};
  if (!IsValidCiphertext(group, c)) {
    return absl::InvalidArgumentError("ciphertext component not in G_q");
  }
  return c;
}

}  // namespace pws
