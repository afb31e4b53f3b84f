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

#ifndef PWS_ALGEBRA_H_
#define PWS_ALGEBRA_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "pws/cost.h"
#include "pws/drbg.h"

namespace pws {

// An element of the order-q subgroup G_q of Z_p^*.
struct GroupElement {
  mpz_class value;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.value == b.value;
  }
};

// An exponent in [0, q-1]. Secret keys and randomizers live here.
struct Exponent {
  mpz_class value;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.value == b.value;
  }
};

// Safe-prime group: p = 2q + 1 with q prime, g a generator of the quadratic
// residues (the unique subgroup of order q).
class GroupParams {
 public:
  // Validates p = 2q+1, both prime, g != 1, g^q = 1 (mod p).
  static absl::StatusOr<GroupParams> Create(mpz_class p, mpz_class q,
                                            mpz_class g);

  const mpz_class& p() const { return p_; }
  const mpz_class& q() const { return q_; }
  const mpz_class& g() const { return g_; }
  GroupElement generator() const { return GroupElement{g_}; }
  GroupElement identity() const { return GroupElement{1}; }

  // ceil(log2 p); the width at which transmitted elements are accounted.
  int bits() const { return bits_; }
  // ceil(bits / 8); the serialized width of one element.
  size_t element_bytes() const { return (static_cast<size_t>(bits_) + 7) / 8; }

  bool Contains(const mpz_class& e) const;
  bool Contains(const GroupElement& e) const { return Contains(e.value); }

  GroupElement Pow(const GroupElement& base, const Exponent& e,
                   CostCounter* cost) const;
  GroupElement PowG(const Exponent& e, CostCounter* cost) const;
  GroupElement Mul(const GroupElement& a, const GroupElement& b,
                   CostCounter* cost) const;
  GroupElement Inverse(const GroupElement& a, CostCounter* cost) const;

  // Uniform in [1, q-1].
  Exponent RandomNonzeroExponent(Drbg& rng) const;
  // Uniform in [0, q-1].
  Exponent RandomExponent(Drbg& rng) const;
  Exponent ReduceExponent(const mpz_class& v) const;

  friend bool operator==(const GroupParams& a, const GroupParams& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.g_ == b.g_;
  }

 private:
  GroupParams(mpz_class p, mpz_class q, mpz_class g);

  mpz_class p_;
  mpz_class q_;
  mpz_class g_;
  int bits_ = 0;
};

// The Shamir field F_K = Z_qt, sized so that a share value followed by a
// 2*ceil(log n)-bit padding tag fits the plaintext space of the group.
struct SharingField {
  mpz_class modulus;  // qt, prime
  int n = 0;          // group size the field was sized for

  int padding_bits() const;
  int value_bits() const;  // ceil(log2 qt)

  friend bool operator==(const SharingField&, const SharingField&) = default;
};

struct PublicParams {
  GroupParams group;
  SharingField field;

  friend bool operator==(const PublicParams&, const PublicParams&) = default;
};

// Deterministic Miller-Rabin with `rounds` bases derived from n itself.
bool IsProbablePrime(const mpz_class& n, int rounds = 64);

// Safe-prime group of exactly `bits_p` bits (bits_p >= 5), deterministic in
// seed.
absl::StatusOr<GroupParams> GenerateGroup(int bits_p, std::string_view seed);

// Largest prime qt with ceil(log qt) = ceil(log q) - 2*ceil(log n) such that
// every packed share (value || tag) + 1 still lies in [1, q].
absl::StatusOr<mpz_class> SharingModulusFor(const GroupParams& group, int n);

// Checks the message-space constraint between a group and a field.
absl::Status CheckFieldFits(const GroupParams& group, const SharingField& f);

// Group plus sharing field. Requires bits_p >= 16, n >= 2 and
// 2*ceil(log n) < bits_p - 1. Safe primes whose q cannot host a sharing
// field of the mandated width are skipped, deterministically.
absl::StatusOr<PublicParams> GenerateParams(int bits_p, int n,
                                            std::string_view seed);

// Canonical text: p=...;q=...;g=...;qt=...;n=... (decimal, no whitespace).
std::string SerializeParams(const PublicParams& params);
absl::StatusOr<PublicParams> ParseParams(std::string_view text);

// Injective map [1, q] -> G_q: m if m is a quadratic residue mod p, else p-m.
absl::StatusOr<GroupElement> EncodeToGroup(const GroupParams& group,
                                           const mpz_class& m);
// Inverse of EncodeToGroup.
absl::StatusOr<mpz_class> DecodeFromGroup(const GroupParams& group,
                                          const GroupElement& e);

}  // namespace pws

#endif  // PWS_ALGEBRA_H_
