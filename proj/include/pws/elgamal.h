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

#ifndef PWS_ELGAMAL_H_
#define PWS_ELGAMAL_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "pws/algebra.h"
#include "pws/cost.h"
#include "pws/drbg.h"

namespace pws {

// N-out-of-N threshold El Gamal over G_q. Each manager holds an additive
// share x_i of the secret key; decryption needs a share from every manager.

struct KeyShare {
  int index = 0;          // manager index in [1, N]
  Exponent secret;        // x_i
  GroupElement public_share;  // y_i = g^x_i
};

struct PublicKey {
  GroupElement y;
  std::vector<GroupElement> contributions;  // y_i in manager order

  // y = 1 makes every ciphertext leak its plaintext.
  bool IsDegenerate() const { return y.value == 1; }
};

struct Ciphertext {
  GroupElement a;  // g^r
  GroupElement b;  // m * y^r

  friend bool operator==(const Ciphertext& x, const Ciphertext& y) {
    return x.a == y.a && x.b == y.b;
  }
};

struct DecryptionShare {
  int index = 0;
  GroupElement d;  // a^x_i
};

// Draws x_i uniformly from [1, q-1]. One exponentiation.
KeyShare TkgContribute(const GroupParams& group, int index, Drbg& rng,
                       CostCounter* cost);
// Same, with a caller-chosen secret.
KeyShare KeyShareFromSecret(const GroupParams& group, int index,
                            const Exponent& secret, CostCounter* cost);

absl::StatusOr<PublicKey> CombinePublicKeys(
    const GroupParams& group, std::span<const GroupElement> shares,
    CostCounter* cost);

// (g^r, m * y^r). r = 0 is tolerated and yields a transparent ciphertext.
absl::StatusOr<Ciphertext> Encrypt(const GroupParams& group,
                                   const PublicKey& pk, const GroupElement& m,
                                   const Exponent& r, CostCounter* cost);

DecryptionShare TdShare(const GroupParams& group, const KeyShare& ks,
                        const Ciphertext& c, CostCounter* cost);

// b / prod(d_i). Requires exactly one share for every index 1..num_managers.
absl::StatusOr<GroupElement> CombineDecryption(
    const GroupParams& group, const Ciphertext& c,
    std::span<const DecryptionShare> shares, int num_managers,
    CostCounter* cost);

// c (x) E(1; gamma) = (a * g^gamma, b * y^gamma).
Ciphertext Rerandomize(const GroupParams& group, const PublicKey& pk,
                       const Ciphertext& c, const Exponent& gamma,
                       CostCounter* cost);

// Componentwise product; decrypts to the product of the plaintexts.
Ciphertext HomomorphicMul(const GroupParams& group, const Ciphertext& x,
                          const Ciphertext& y, CostCounter* cost);

bool IsValidCiphertext(const GroupParams& group, const Ciphertext& c);

// a then b, each big-endian in element_bytes() bytes.
void AppendCiphertext(const GroupParams& group, const Ciphertext& c,
                      std::vector<uint8_t>* out);
std::vector<uint8_t> SerializeCiphertext(const GroupParams& group,
                                         const Ciphertext& c);
absl::StatusOr<Ciphertext> ParseCiphertext(const GroupParams& group,
                                           std::span<const uint8_t> bytes);

}  // namespace pws

#endif  // PWS_ELGAMAL_H_
