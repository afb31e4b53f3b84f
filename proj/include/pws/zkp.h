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

#ifndef PWS_ZKP_H_
#define PWS_ZKP_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "pws/algebra.h"
#include "pws/cost.h"
#include "pws/drbg.h"
#include "pws/elgamal.h"

namespace pws {

// Domain-separation prefixes. Callers append a context suffix (":<party>...")
// so a proof cannot be replayed in another position.
inline constexpr std::string_view kTagDl = "PWS/DL";
inline constexpr std::string_view kTagPk = "PWS/PK";
inline constexpr std::string_view kTagCs = "PWS/CS";

// Fiat-Shamir transcript. Byte layout:
//   tag || for each block: BE32(count) || count fixed-width BE elements
// where the first block is the statement and later blocks are commitments.
class Transcript {
 public:
  Transcript(std::string_view tag, const GroupParams& group);

  void AppendBlock(std::span<const mpz_class> elements);
  void AppendBlock(std::span<const GroupElement> elements);

  const std::vector<uint8_t>& bytes() const { return bytes_; }

  // SHA-256(bytes) as a big-endian integer, reduced mod q.
  Exponent ChallengeModQ() const;
  // Bits of SHA-256(bytes), then SHA-256(bytes || BE32(t)) for t = 1, 2, ...
  // MSB first within each byte.
  std::vector<bool> ChallengeBits(size_t k) const;

 private:
  const GroupParams* group_;
  std::vector<uint8_t> bytes_;
};

// Schnorr proof of knowledge of x with h = g^x.
struct DlogProof {
  GroupElement commitment;  // g^w
  Exponent response;        // w + e x mod q
};

// Proof of plaintext knowledge for c = (g^r, m y^r): a Schnorr proof of r for
// the statement a = g^r, with pk and both ciphertext components bound into
// the transcript.
struct PlaintextProof {
  DlogProof dlog;
};

struct ShuffleRepetition {
  std::vector<Ciphertext> commitment;  // D_t
  bool challenge = false;
  // bit 0: D_t[perm[i]] = Re(input[i], rand[i])
  // bit 1: D_t[perm[j]] = Re(output[j], rand[j])
  std::vector<int> permutation;
  std::vector<Exponent> randomizers;
};

// k-fold cut-and-choose argument that output is a permuted re-randomization
// of input. Soundness error 2^-k.
struct ShuffleProof {
  std::vector<ShuffleRepetition> repetitions;
};

DlogProof ProveDl(const GroupParams& group, const GroupElement& h,
                  const Exponent& x, Drbg& rng, std::string_view tag,
                  CostCounter* cost = nullptr);
bool VerifyDl(const GroupParams& group, const GroupElement& h,
              const DlogProof& proof, std::string_view tag,
              CostCounter* cost = nullptr);
// g^z == a * h^e for an explicit challenge e.
bool CheckDlEquation(const GroupParams& group, const GroupElement& h,
                     const DlogProof& proof, const Exponent& e);
Exponent DlChallenge(const GroupParams& group, const GroupElement& h,
                     const GroupElement& commitment, std::string_view tag);

PlaintextProof ProvePk(const GroupParams& group, const PublicKey& pk,
                       const Ciphertext& c, const Exponent& r, Drbg& rng,
                       std::string_view tag, CostCounter* cost = nullptr);
bool VerifyPk(const GroupParams& group, const PublicKey& pk,
              const Ciphertext& c, const PlaintextProof& proof,
              std::string_view tag, CostCounter* cost = nullptr);

// Witness: output[perm[i]] = Re(input[i], gammas[i]). An inconsistent witness
// is rejected with FailedPrecondition.
absl::StatusOr<ShuffleProof> ProveShuffle(
    const GroupParams& group, const PublicKey& pk,
    std::span<const Ciphertext> input, std::span<const Ciphertext> output,
    std::span<const int> perm, std::span<const Exponent> gammas, int k,
    Drbg& rng, std::string_view tag, CostCounter* cost = nullptr);
bool VerifyShuffle(const GroupParams& group, const PublicKey& pk,
                   std::span<const Ciphertext> input,
                   std::span<const Ciphertext> output,
                   const ShuffleProof& proof, std::string_view tag,
                   CostCounter* cost = nullptr);
// The k challenge bits the verifier derives for the given commitments.
std::vector<bool> ShuffleChallengeBits(
    const GroupParams& group, const PublicKey& pk,
    std::span<const Ciphertext> input, std::span<const Ciphertext> output,
    std::span<const std::vector<Ciphertext>> commitments,
    std::string_view tag);

// Fixed-width serialization, fields in declaration order. Integers use
// element_bytes(); permutation entries BE32; challenge bits one byte.
void AppendDlogProof(const GroupParams& group, const DlogProof& proof,
                     std::vector<uint8_t>* out);
void AppendShuffleProof(const GroupParams& group, const ShuffleProof& proof,
                        std::vector<uint8_t>* out);

}  // namespace pws

#endif  // PWS_ZKP_H_
