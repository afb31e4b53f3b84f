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

#include "pws/shamir.h"

#include <map>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pws/bigint.h"

namespace pws {

mpz_class PaddedShare::Packed() const {
  return (v << padding_bits) | mpz_class(static_cast<unsigned long>(alpha));
}

absl::StatusOr<SharePolynomial> MakeSharePolynomial(const QueryTerm& q, int n,
                                                    const SharingField& field,
                                                    Drbg& rng) {
  if (n < 2) return absl::InvalidArgumentError("n must be at least 2");
  if (q.value < 0 || q.value >= field.modulus) {
    return absl::OutOfRangeError("query term must lie in [0, qt-1]");
  }
  SharePolynomial poly;
  poly.coefficients.reserve(n);
  poly.coefficients.push_back(q.value);
  for (int k = 1; k < n; ++k) {
    poly.coefficients.push_back(rng.UniformBelow(field.modulus));
  }
  return poly;
}

std::vector<SharePoint> EvaluateShares(const SharePolynomial& poly, int n,
                                       const SharingField& field,
                                       CostCounter* cost) {
  std::vector<SharePoint> out;
  out.reserve(n);
  const auto& c = poly.coefficients;
  for (int x = 1; x <= n; ++x) {
    mpz_class acc = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) {
      acc = MulMod(acc, x, field.modulus);
      CountMul(cost);
      acc += c[k];
      if (acc >= field.modulus) acc -= field.modulus;
    }
    out.push_back(SharePoint{x, acc});
  }
  return out;
}

absl::StatusOr<std::vector<SharePoint>> Share(const QueryTerm& q, int n,
                                              const SharingField& field,
                                              Drbg& rng, CostCounter* cost) {
  auto poly = MakeSharePolynomial(q, n, field, rng);
  if (!poly.ok()) return poly.status();
  return EvaluateShares(*poly, n, field, cost);
}

uint64_t RandomPadding(int n, Drbg& rng) {
  const int bits = 2 * CeilLog2(uint64_t(n));
  if (bits == 0) return 0;
  return rng.UniformU64(uint64_t{1} << bits);
}

absl::StatusOr<std::vector<PaddedShare>> Pad(std::span<const SharePoint> points,
                                             uint64_t alpha, int n) {
  const int bits = 2 * CeilLog2(uint64_t(n));
  if (bits < 64 && (alpha >> bits) != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("padding tag wider than ", bits, " bits"));
  }
  std::vector<PaddedShare> out;
  out.reserve(points.size());
  for (const SharePoint& p : points) {
    out.push_back(PaddedShare{p.v, alpha, bits});
  }
  return out;
}

absl::StatusOr<PaddedShare> Unpad(const mpz_class& packed, int n,
                                  const SharingField& field) {
  const int bits = 2 * CeilLog2(uint64_t(n));
  if (packed < 0 || BitLength(packed) > static_cast<size_t>(
                                            field.value_bits() + bits)) {
    return absl::OutOfRangeError("packed share is too wide");
  }
  mpz_class mask = (mpz_class(1) << bits) - 1;
  mpz_class low = packed & mask;
  PaddedShare out{packed >> bits, low.get_ui(), bits};
  if (out.v >= field.modulus) {
    return absl::DataLossError("malformed share: value exceeds field");
  }
  return out;
}

absl::StatusOr<QueryTerm> Reconstruct(std::span<const SharePoint> points,
                                      const SharingField& field,
                                      CostCounter* cost) {
  if (points.empty()) return absl::InvalidArgumentError("no points");
  std::set<int> xs;
  for (const SharePoint& p : points) {
    if (!xs.insert(p.x).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate evaluation point ", p.x));
    }
  }
  const mpz_class& mod = field.modulus;
  mpz_class sum = 0;
  for (const SharePoint& pj : points) {
    // L_j(0) = prod_{k != j} x_k / (x_k - x_j)
    mpz_class num = 1, den = 1;
    for (const SharePoint& pk : points) {
      if (pk.x == pj.x) continue;
      num = MulMod(num, pk.x, mod);
      mpz_class diff = mpz_class(pk.x - pj.x) % mod;
      if (diff < 0) diff += mod;
      den = MulMod(den, diff, mod);
      CountMul(cost, 2);
    }
    mpz_class term = MulMod(MulMod(pj.v, num, mod), InvMod(den, mod), mod);
    CountMul(cost, 3);
    sum = (sum + term) % mod;
  }
  return QueryTerm{sum};
}

GroupingResult GroupByPadding(std::span<const MatrixEntry> entries, int n,
                              const SharingField& field) {
  GroupingResult out;
  std::vector<uint64_t> order;
  std::map<uint64_t, std::vector<SharePoint>> by_tag;
  for (const MatrixEntry& e : entries) {
    auto parsed = Unpad(e.packed, n, field);
    if (!parsed.ok()) {
      ++out.malformed;
      continue;
    }
    auto [it, inserted] = by_tag.try_emplace(parsed->alpha);
    if (inserted) order.push_back(parsed->alpha);
    it->second.push_back(SharePoint{e.column, parsed->v});
  }
  for (uint64_t alpha : order) {
    std::vector<SharePoint>& pts = by_tag[alpha];
    std::set<int> cols;
    for (const SharePoint& p : pts) {
      if (p.x >= 1 && p.x <= n) cols.insert(p.x);
    }
    const bool valid = static_cast<int>(pts.size()) == n &&
                       static_cast<int>(cols.size()) == n;
    if (valid) {
      out.buckets.push_back(ReconstructionBucket{alpha, std::move(pts)});
    } else {
      out.dropped.push_back(
          DroppedBucket{alpha, static_cast<int>(pts.size())});
    }
  }
  return out;
}

}  // namespace pws
