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

#include "pws/zkp.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pws/bigint.h"
#include "pws/sha256.h"

namespace pws {
namespace {

void AppendU32(uint32_t v, std::vector<uint8_t>* out) {
  out->push_back(static_cast<uint8_t>(v >> 24));
  out->push_back(static_cast<uint8_t>(v >> 16));
  out->push_back(static_cast<uint8_t>(v >> 8));
  out->push_back(static_cast<uint8_t>(v));
}

std::vector<mpz_class> CiphertextComponents(std::span<const Ciphertext> v) {
  std::vector<mpz_class> out;
  out.reserve(2 * v.size());
  for (const Ciphertext& c : v) {
    out.push_back(c.a.value);
    out.push_back(c.b.value);
  }
  return out;
}

bool IsPermutation(std::span<const int> perm, size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || static_cast<size_t>(p) >= n || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

bool InExponentRange(const GroupParams& group, const Exponent& e) {
  return e.value >= 0 && e.value < group.q();
}

Transcript ShuffleTranscript(const GroupParams& group, const PublicKey& pk,
                             std::span<const Ciphertext> input,
                             std::span<const Ciphertext> output,
                             std::span<const std::vector<Ciphertext>> commits,
                             std::string_view tag) {
  Transcript t(tag, group);
  std::vector<mpz_class> statement = {group.g(), pk.y.value};
  for (const mpz_class& v : CiphertextComponents(input)) statement.push_back(v);
  for (const mpz_class& v : CiphertextComponents(output)) statement.push_back(v);
  t.AppendBlock(statement);
  std::vector<mpz_class> commitment;
  for (const auto& d : commits) {
    for (const mpz_class& v : CiphertextComponents(d)) commitment.push_back(v);
  }
  t.AppendBlock(commitment);
  return t;
}

Exponent PkChallenge(const GroupParams& group, const PublicKey& pk,
                     const Ciphertext& c, const GroupElement& commitment,
                     std::string_view tag) {
  Transcript t(tag, group);
  const mpz_class statement[] = {group.g(), pk.y.value, c.a.value, c.b.value};
  t.AppendBlock(statement);
  const mpz_class commit[] = {commitment.value};
  t.AppendBlock(commit);
  return t.ChallengeModQ();
}

}  // namespace

Transcript::Transcript(std::string_view tag, const GroupParams& group)
    : group_(&group), bytes_(tag.begin(), tag.end()) {}

void Transcript::AppendBlock(std::span<const mpz_class> elements) {
  AppendU32(static_cast<uint32_t>(elements.size()), &bytes_);
  for (const mpz_class& e : elements) {
    AppendFixedBytes(e, group_->element_bytes(), &bytes_);
  }
}

void Transcript::AppendBlock(std::span<const GroupElement> elements) {
  AppendU32(static_cast<uint32_t>(elements.size()), &bytes_);
  for (const GroupElement& e : elements) {
    AppendFixedBytes(e.value, group_->element_bytes(), &bytes_);
  }
}

Exponent Transcript::ChallengeModQ() const {
  Digest d = Sha256Digest(bytes_);
  return group_->ReduceExponent(FromBytes(d));
}

std::vector<bool> Transcript::ChallengeBits(size_t k) const {
  std::vector<bool> bits;
  bits.reserve(k);
  for (uint32_t block = 0; bits.size() < k; ++block) {
    Sha256 h;
    h.Update(bytes_);
    if (block > 0) h.UpdateU32(block);
    Digest d = h.Finish();
    for (uint8_t byte : d) {
      for (int b = 7; b >= 0 && bits.size() < k; --b) {
        bits.push_back(((byte >> b) & 1) != 0);
      }
    }
  }
  return bits;
}

Exponent DlChallenge(const GroupParams& group, const GroupElement& h,
                     const GroupElement& commitment, std::string_view tag) {
  Transcript t(tag, group);
  const mpz_class statement[] = {group.g(), h.value};
  t.AppendBlock(statement);
  const mpz_class commit[] = {commitment.value};
  t.AppendBlock(commit);
  return t.ChallengeModQ();
}

DlogProof ProveDl(const GroupParams& group, const GroupElement& h,
                  const Exponent& x, Drbg& rng, std::string_view tag,
                  CostCounter* cost) {
  ZkCostScope zk(cost);
  const Exponent w = group.RandomExponent(rng);
  DlogProof proof;
  proof.commitment = group.PowG(w, zk.counter());
  const Exponent e = DlChallenge(group, h, proof.commitment, tag);
  CountMul(zk.counter());
  proof.response = group.ReduceExponent(w.value + e.value * x.value);
  return proof;
}

bool CheckDlEquation(const GroupParams& group, const GroupElement& h,
                     const DlogProof& proof, const Exponent& e) {
  const GroupElement lhs = group.PowG(proof.response, nullptr);
  const GroupElement rhs =
      group.Mul(proof.commitment, group.Pow(h, e, nullptr), nullptr);
  return lhs == rhs;
}

bool VerifyDl(const GroupParams& group, const GroupElement& h,
              const DlogProof& proof, std::string_view tag,
              CostCounter* cost) {
  if (!group.Contains(h) || !group.Contains(proof.commitment) ||
      !InExponentRange(group, proof.response)) {
    return false;
  }
  ZkCostScope zk(cost);
  CountExp(zk.counter(), 2);
  CountMul(zk.counter());
  const Exponent e = DlChallenge(group, h, proof.commitment, tag);
  return CheckDlEquation(group, h, proof, e);
}

PlaintextProof ProvePk(const GroupParams& group, const PublicKey& pk,
                       const Ciphertext& c, const Exponent& r, Drbg& rng,
                       std::string_view tag, CostCounter* cost) {
  ZkCostScope zk(cost);
  const Exponent w = group.RandomExponent(rng);
  PlaintextProof proof;
  proof.dlog.commitment = group.PowG(w, zk.counter());
  const Exponent e = PkChallenge(group, pk, c, proof.dlog.commitment, tag);
  CountMul(zk.counter());
  proof.dlog.response = group.ReduceExponent(w.value + e.value * r.value);
  return proof;
}

bool VerifyPk(const GroupParams& group, const PublicKey& pk,
              const Ciphertext& c, const PlaintextProof& proof,
              std::string_view tag, CostCounter* cost) {
  if (!IsValidCiphertext(group, c) || !group.Contains(proof.dlog.commitment) ||
      !InExponentRange(group, proof.dlog.response)) {
    return false;
  }
  ZkCostScope zk(cost);
  CountExp(zk.counter(), 2);
  CountMul(zk.counter());
  const Exponent e = PkChallenge(group, pk, c, proof.dlog.commitment, tag);
  return CheckDlEquation(group, c.a, proof.dlog, e);
}

std::vector<bool> ShuffleChallengeBits(
    const GroupParams& group, const PublicKey& pk,
    std::span<const Ciphertext> input, std::span<const Ciphertext> output,
    std::span<const std::vector<Ciphertext>> commitments,
    std::string_view tag) {
  return ShuffleTranscript(group, pk, input, output, commitments, tag)
      .ChallengeBits(commitments.size());
}

absl::StatusOr<ShuffleProof> ProveShuffle(
    const GroupParams& group, const PublicKey& pk,
    std::span<const Ciphertext> input, std::span<const Ciphertext> output,
    std::span<const int> perm, std::span<const Exponent> gammas, int k,
    Drbg& rng, std::string_view tag, CostCounter* cost) {
  const size_t n = input.size();
  if (k < 1) return absl::InvalidArgumentError("k must be at least 1");
  if (output.size() != n || gammas.size() != n || !IsPermutation(perm, n)) {
    return absl::InvalidArgumentError("shuffle witness has the wrong shape");
  }
  for (size_t i = 0; i < n; ++i) {
    if (Rerandomize(group, pk, input[i], gammas[i], nullptr) !=
        output[perm[i]]) {
      return absl::FailedPreconditionError(
          absl::StrCat("witness does not map input ", i, " to its output"));
    }
  }
  ZkCostScope zk(cost);
  ShuffleProof proof;
  proof.repetitions.resize(k);
  std::vector<std::vector<int>> sigmas(k);
  std::vector<std::vector<Exponent>> deltas(k);
  std::vector<std::vector<Ciphertext>> commits(k);
  for (int t = 0; t < k; ++t) {
    sigmas[t] = rng.Permutation(static_cast<int>(n));
    deltas[t].reserve(n);
    commits[t].resize(n);
    for (size_t i = 0; i < n; ++i) {
      deltas[t].push_back(group.RandomExponent(rng));
      commits[t][sigmas[t][i]] =
          Rerandomize(group, pk, input[i], deltas[t][i], zk.counter());
    }
  }
  const std::vector<bool> bits =
      ShuffleChallengeBits(group, pk, input, output, commits, tag);
  for (int t = 0; t < k; ++t) {
    ShuffleRepetition& rep = proof.repetitions[t];
    rep.commitment = std::move(commits[t]);
    rep.challenge = bits[t];
    if (!rep.challenge) {
      rep.permutation = sigmas[t];
      rep.randomizers = deltas[t];
    } else {
      // D[sigma(i)] = Re(input[i], delta_i) = Re(output[perm(i)],
      // delta_i - gamma_i).
      rep.permutation.assign(n, 0);
      rep.randomizers.assign(n, Exponent{0});
      for (size_t i = 0; i < n; ++i) {
        rep.permutation[perm[i]] = sigmas[t][i];
        rep.randomizers[perm[i]] =
            group.ReduceExponent(deltas[t][i].value - gammas[i].value);
      }
    }
  }
  return proof;
}

bool VerifyShuffle(const GroupParams& group, const PublicKey& pk,
                   std::span<const Ciphertext> input,
                   std::span<const Ciphertext> output,
                   const ShuffleProof& proof, std::string_view tag,
                   CostCounter* cost) {
  const size_t n = input.size();
  if (output.size() != n || proof.repetitions.empty()) return false;
  for (const Ciphertext& c : input) {
    if (!IsValidCiphertext(group, c)) return false;
  }
  for (const Ciphertext& c : output) {
    if (!IsValidCiphertext(group, c)) return false;
  }
  std::vector<std::vector<Ciphertext>> commits;
  commits.reserve(proof.repetitions.size());
  for (const ShuffleRepetition& rep : proof.repetitions) {
    if (rep.commitment.size() != n || rep.randomizers.size() != n ||
        !IsPermutation(rep.permutation, n)) {
      return false;
    }
    for (const Ciphertext& c : rep.commitment) {
      if (!IsValidCiphertext(group, c)) return false;
    }
    for (const Exponent& e : rep.randomizers) {
      if (!InExponentRange(group, e)) return false;
    }
    commits.push_back(rep.commitment);
  }
  const std::vector<bool> bits =
      ShuffleChallengeBits(group, pk, input, output, commits, tag);
  ZkCostScope zk(cost);
  for (size_t t = 0; t < proof.repetitions.size(); ++t) {
    const ShuffleRepetition& rep = proof.repetitions[t];
    if (rep.challenge != bits[t]) return false;
    std::span<const Ciphertext> source = rep.challenge ? output : input;
    for (size_t i = 0; i < n; ++i) {
      if (Rerandomize(group, pk, source[i], rep.randomizers[i],
                      zk.counter()) != rep.commitment[rep.permutation[i]]) {
        return false;
      }
    }
  }
  return true;
}

void AppendDlogProof(const GroupParams& group, const DlogProof& proof,
                     std::vector<uint8_t>* out) {
  AppendFixedBytes(proof.commitment.value, group.element_bytes(), out);
  AppendFixedBytes(proof.response.value, group.element_bytes(), out);
}

void AppendShuffleProof(const GroupParams& group, const ShuffleProof& proof,
                        std::vector<uint8_t>* out) {
  AppendU32(static_cast<uint32_t>(proof.repetitions.size()), out);
  for (const ShuffleRepetition& rep : proof.repetitions) {
    for (const Ciphertext& c : rep.commitment) AppendCiphertext(group, c, out);
    out->push_back(rep.challenge ? 1 : 0);
    for (int p : rep.permutation) AppendU32(static_cast<uint32_t>(p), out);
    for (const Exponent& e : rep.randomizers) {
      AppendFixedBytes(e.value, group.element_bytes(), out);
    }
  }
}

}  // namespace pws
