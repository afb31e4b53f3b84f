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

#ifndef PWS_SHAMIR_H_
#define PWS_SHAMIR_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "pws/algebra.h"
#include "pws/cost.h"
#include "pws/drbg.h"

namespace pws {

// A query term, already mapped into F_K = Z_qt.
struct QueryTerm {
  mpz_class value;

  friend bool operator==(const QueryTerm& a, const QueryTerm& b) {
    return a.value == b.value;
  }
};

// R(x) = q + r_1 x + ... + r_{n-1} x^{n-1}; coefficients[0] is q. The leading
// coefficient may be zero.
struct SharePolynomial {
  std::vector<mpz_class> coefficients;
};

struct SharePoint {
  int x = 0;      // evaluation point in [1, n]
  mpz_class v;    // R(x) in Z_qt

  friend bool operator==(const SharePoint& a, const SharePoint& b) {
    return a.x == b.x && a.v == b.v;
  }
};

// A share value with its origin tag: packed as (v << padding_bits) | alpha.
struct PaddedShare {
  mpz_class v;
  uint64_t alpha = 0;
  int padding_bits = 0;

  mpz_class Packed() const;
};

// Draws the n-1 non-constant coefficients uniformly from Z_qt.
absl::StatusOr<SharePolynomial> MakeSharePolynomial(const QueryTerm& q, int n,
                                                    const SharingField& field,
                                                    Drbg& rng);

// Horner evaluation at x = 1..n; n(n-1) counted field multiplications.
std::vector<SharePoint> EvaluateShares(const SharePolynomial& poly, int n,
                                       const SharingField& field,
                                       CostCounter* cost);

absl::StatusOr<std::vector<SharePoint>> Share(const QueryTerm& q, int n,
                                              const SharingField& field,
                                              Drbg& rng,
                                              CostCounter* cost = nullptr);

// Uniform tag of exactly 2*ceil(log n) bits.
uint64_t RandomPadding(int n, Drbg& rng);

absl::StatusOr<std::vector<PaddedShare>> Pad(std::span<const SharePoint> points,
                                             uint64_t alpha, int n);

// Splits a packed integer back into (v, alpha). A value v >= qt marks a
// malformed share.
absl::StatusOr<PaddedShare> Unpad(const mpz_class& packed, int n,
                                  const SharingField& field);

// Lagrange interpolation at x = 0 over Z_qt.
absl::StatusOr<QueryTerm> Reconstruct(std::span<const SharePoint> points,
                                      const SharingField& field,
                                      CostCounter* cost = nullptr);

// One decrypted matrix cell: the evaluation point it was computed at (the
// index of the user who shuffled it) and its packed value.
struct MatrixEntry {
  int column = 0;
  mpz_class packed;
};

struct ReconstructionBucket {
  uint64_t alpha = 0;
  std::vector<SharePoint> points;
};

struct DroppedBucket {
  uint64_t alpha = 0;
  int size = 0;
};

struct GroupingResult {
  std::vector<ReconstructionBucket> buckets;  // in order of first appearance
  std::vector<DroppedBucket> dropped;
  int malformed = 0;  // entries discarded by Unpad
};

// Buckets entries by padding tag. A bucket is kept iff it holds exactly n
// entries covering columns 1..n once each; colliding tags produce oversize
// buckets, which are dropped together with every term inside them.
GroupingResult GroupByPadding(std::span<const MatrixEntry> entries, int n,
                              const SharingField& field);

}  // namespace pws

#endif  // PWS_SHAMIR_H_
