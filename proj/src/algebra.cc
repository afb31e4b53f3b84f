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

#include "pws/algebra.h"

#include <optional>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "pws/bigint.h"
#include "pws/status_macros.h"

namespace pws {
namespace {

constexpr uint32_t kSieveLimit = 20000;

const std::vector<uint32_t>& SmallPrimes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t{i} * i; j <= kSieveLimit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

bool MillerRabinRound(const mpz_class& n, const mpz_class& d, unsigned s,
                      const mpz_class& base) {
  mpz_class x = PowMod(base, d, n);
  const mpz_class n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = MulMod(x, x, n);
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool FermatBase2(const mpz_class& n) { return PowMod(2, n - 1, n) == 1; }

// p = 11 (mod 12) is necessary for a safe prime p > 7: it makes p and
// q = (p-1)/2 both coprime to 6.
mpz_class FirstAligned(const mpz_class& lo) {
  mpz_class r = lo % 12;
  mpz_class x = lo - r + 11;
  if (x < lo) x += 12;
  return x;
}

}  // namespace

bool IsProbablePrime(const mpz_class& n, int rounds) {
  if (n < 2) return false;
  for (uint32_t sp : SmallPrimes()) {
    if (sp > 100) break;
    if (n == sp) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), sp)) return false;
  }
  mpz_class d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  if (!MillerRabinRound(n, d, s, 2)) return false;
  // Remaining bases are a deterministic function of n.
  Drbg rng(absl::StrCat("PWS/MR/", n.get_str(16)));
  const mpz_class span = n - 3;  // bases in [2, n-2]
  for (int i = 1; i < rounds; ++i) {
    mpz_class a = rng.UniformBelow(span) + 2;
    if (!MillerRabinRound(n, d, s, a)) return false;
  }
  return true;
}

GroupParams::GroupParams(mpz_class p, mpz_class q, mpz_class g)
    : p_(std::move(p)), q_(std::move(q)), g_(std::move(g)) {
  bits_ = CeilLog2(p_);
}

absl::StatusOr<GroupParams> GroupParams::Create(mpz_class p, mpz_class q,
                                                mpz_class g) {
  if (p != 2 * q + 1) {
    return absl::InvalidArgumentError("p must equal 2q + 1");
  }
  if (!IsProbablePrime(q) || !IsProbablePrime(p)) {
    return absl::InvalidArgumentError("p and q must both be prime");
  }
  if (g <= 1 || g >= p || PowMod(g, q, p) != 1) {
    return absl::InvalidArgumentError("g must generate the order-q subgroup");
  }
  return GroupParams(std::move(p), std::move(q), std::move(g));
}

bool GroupParams::Contains(const mpz_class& e) const {
  if (e < 1 || e >= p_) return false;
  // For a safe prime G_q is exactly the set of quadratic residues.
  return mpz_legendre(e.get_mpz_t(), p_.get_mpz_t()) == 1;
}

GroupElement GroupParams::Pow(const GroupElement& base, const Exponent& e,
                              CostCounter* cost) const {
  CountExp(cost);
  return GroupElement{PowMod(base.value, e.value, p_)};
}

GroupElement GroupParams::PowG(const Exponent& e, CostCounter* cost) const {
  CountExp(cost);
  return GroupElement{PowMod(g_, e.value, p_)};
}

GroupElement GroupParams::Mul(const GroupElement& a, const GroupElement& b,
                              CostCounter* cost) const {
  CountMul(cost);
  return GroupElement{MulMod(a.value, b.value, p_)};
}

GroupElement GroupParams::Inverse(const GroupElement& a,
                                  CostCounter* cost) const {
  CountMul(cost);
  return GroupElement{InvMod(a.value, p_)};
}

Exponent GroupParams::RandomNonzeroExponent(Drbg& rng) const {
  return Exponent{rng.UniformBelow(q_ - 1) + 1};
}

Exponent GroupParams::RandomExponent(Drbg& rng) const {
  return Exponent{rng.UniformBelow(q_)};
}

Exponent GroupParams::ReduceExponent(const mpz_class& v) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), q_.get_mpz_t());
  return Exponent{r};
}

int SharingField::padding_bits() const { return 2 * CeilLog2(uint64_t(n)); }

int SharingField::value_bits() const { return CeilLog2(modulus); }

namespace {

// Searches p = 11 (mod 12) in [2^(bits-1), 2^bits) starting at a random
// point and wrapping once. `accept` may veto an otherwise valid safe prime.
template <typename Accept>
std::optional<std::pair<mpz_class, mpz_class>> SearchSafePrime(
    int bits, Drbg& rng, Accept accept) {
  const mpz_class lo = mpz_class(1) << (bits - 1);
  const mpz_class hi = mpz_class(1) << bits;
  const mpz_class first = FirstAligned(lo);
  if (first >= hi) return std::nullopt;

  mpz_class start = FirstAligned(lo + rng.UniformBelow(lo));
  if (start >= hi) start = first;

  // Sieve only with primes small enough that divisibility implies
  // compositeness for both p and q.
  std::vector<uint32_t> sieve;
  const mpz_class q_floor = lo / 4;
  for (uint32_t sp : SmallPrimes()) {
    if (sp <= 3) continue;
    if (mpz_class(sp) >= q_floor) break;
    sieve.push_back(sp);
  }
  std::vector<uint32_t> residues(sieve.size());
  auto reset_residues = [&](const mpz_class& x) {
    for (size_t i = 0; i < sieve.size(); ++i) {
      residues[i] = static_cast<uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), sieve[i]));
    }
  };

  mpz_class p = start;
  reset_residues(p);
  bool wrapped = false;
  for (;;) {
    bool survives = true;
    for (size_t i = 0; i < sieve.size(); ++i) {
      // p = 0 (mod r) kills p; p = 1 (mod r) kills q = (p-1)/2.
      if (residues[i] <= 1) {
        survives = false;
        break;
      }
    }
    if (survives) {
      mpz_class q = (p - 1) / 2;
      if (FermatBase2(q) && FermatBase2(p) && IsProbablePrime(q) &&
          IsProbablePrime(p) && accept(p, q)) {
        return std::make_pair(p, q);
      }
    }
    p += 12;
    if (p >= hi) {
      p = first;
      wrapped = true;
      reset_residues(p);
    } else {
      for (size_t i = 0; i < sieve.size(); ++i) {
        residues[i] = (residues[i] + 12) % sieve[i];
      }
    }
    if (wrapped && p >= start) return std::nullopt;
  }
}

mpz_class PickGenerator(const mpz_class& p, Drbg& rng) {
  for (;;) {
    // Squares of non-trivial elements generate the quadratic residues.
    mpz_class h = rng.UniformBelow(p - 3) + 2;
    mpz_class g = MulMod(h, h, p);
    if (g != 1) return g;
  }
}

}  // namespace

absl::StatusOr<GroupParams> GenerateGroup(int bits_p, std::string_view seed) {
  if (bits_p < 5) {
    return absl::InvalidArgumentError("bits_p must be at least 5");
  }
  Drbg rng = Drbg(seed).Fork(absl::StrCat("params/group/", bits_p));
  auto found = SearchSafePrime(
      bits_p, rng, [](const mpz_class&, const mpz_class&) { return true; });
  if (!found) {
    return absl::NotFoundError(
        absl::StrCat("no safe prime of ", bits_p, " bits"));
  }
  mpz_class g = PickGenerator(found->first, rng);
  return GroupParams::Create(found->first, found->second, g);
}

absl::StatusOr<mpz_class> SharingModulusFor(const GroupParams& group, int n) {
  if (n < 2) return absl::InvalidArgumentError("n must be at least 2");
  const int pad = 2 * CeilLog2(uint64_t(n));
  const int log_q = CeilLog2(group.q());
  const int target = log_q - pad;
  if (target < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "field constraint unsatisfiable: 2*ceil(log n) = ", pad,
        " leaves no room in ceil(log q) = ", log_q));
  }
  // Capacity: (qt-1) * 2^pad + (2^pad - 1) + 1 = qt * 2^pad <= q.
  mpz_class upper = mpz_class(1) << target;
  mpz_class cap = group.q() >> pad;
  if (cap < upper) upper = cap;
  const mpz_class floor_excl = mpz_class(1) << (target - 1);
  for (mpz_class c = upper; c > floor_excl; --c) {
    if (IsProbablePrime(c)) {
      if (c <= n) break;
      return c;
    }
  }
  return absl::FailedPreconditionError(absl::StrCat(
      "no prime of ", target, " bits fits the plaintext space of q"));
}

absl::Status CheckFieldFits(const GroupParams& group, const SharingField& f) {
  if (f.n < 2) return absl::InvalidArgumentError("n must be at least 2");
  if (f.modulus <= f.n) {
    return absl::InvalidArgumentError("sharing modulus must exceed n");
  }
  if (CeilLog2(group.q()) != f.value_bits() + f.padding_bits()) {
    return absl::InvalidArgumentError(
        "ceil(log q) != ceil(log qt) + 2 ceil(log n)");
  }
  if ((f.modulus << f.padding_bits()) > group.q()) {
    return absl::InvalidArgumentError(
        "padded shares overflow the plaintext space");
  }
  return absl::OkStatus();
}

absl::StatusOr<PublicParams> GenerateParams(int bits_p, int n,
                                            std::string_view seed) {
  if (n < 2) return absl::InvalidArgumentError("n must be at least 2");
  const int pad = 2 * CeilLog2(uint64_t(n));
  if (pad >= bits_p - 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("field constraint violated: 2*ceil(log n) = ", pad,
                     " >= bits_p - 1 = ", bits_p - 1));
  }
  if (bits_p < 16) {
    return absl::InvalidArgumentError("bits_p must be at least 16");
  }
  Drbg rng = Drbg(seed).Fork(absl::StrCat("params/group/", bits_p));
  mpz_class qt;
  auto found = SearchSafePrime(
      bits_p, rng, [&](const mpz_class& p, const mpz_class& q) {
        auto group = GroupParams::Create(p, q, 4);  // 4 = 2^2 is always a QR
        if (!group.ok()) return false;
        auto modulus = SharingModulusFor(*group, n);
        if (!modulus.ok()) return false;
        qt = *modulus;
        return true;
      });
  if (!found) {
    return absl::NotFoundError(absl::StrCat(
        "no ", bits_p, "-bit safe prime admits a sharing field for n=", n));
  }
  mpz_class g = PickGenerator(found->first, rng);
  PWS_ASSIGN_OR_RETURN(GroupParams group,
                       GroupParams::Create(found->first, found->second, g));
  PublicParams out{std::move(group), SharingField{qt, n}};
  PWS_RETURN_IF_ERROR(CheckFieldFits(out.group, out.field));
  return out;
}

std::string SerializeParams(const PublicParams& params) {
  return absl::StrCat("p=", ToDecimal(params.group.p()),
                      ";q=", ToDecimal(params.group.q()),
                      ";g=", ToDecimal(params.group.g()),
                      ";qt=", ToDecimal(params.field.modulus),
                      ";n=", params.field.n);
}

absl::StatusOr<PublicParams> ParseParams(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  std::vector<absl::string_view> fields =
      absl::StrSplit(absl::string_view(text.data(), text.size()), ';');
  static constexpr absl::string_view kKeys[] = {"p", "q", "g", "qt", "n"};
  if (fields.size() != 5) {
    return absl::InvalidArgumentError("expected 5 ';'-separated fields");
  }
  mpz_class values[5];
  for (size_t i = 0; i < 5; ++i) {
    std::pair<absl::string_view, absl::string_view> kv =
        absl::StrSplit(fields[i], absl::MaxSplits('=', 1));
    if (kv.first != kKeys[i] || kv.second.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("expected field '", kKeys[i], "'"));
    }
    if (values[i].set_str(std::string(kv.second), 10) != 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("field '", kKeys[i], "' is not a decimal integer"));
    }
  }
  if (!values[4].fits_sint_p()) {
    return absl::InvalidArgumentError("n out of range");
  }
  PWS_ASSIGN_OR_RETURN(GroupParams group,
                       GroupParams::Create(values[0], values[1], values[2]));
  PublicParams out{std::move(group),
                   SharingField{values[3], static_cast<int>(values[4].get_si())}};
  if (!IsProbablePrime(out.field.modulus)) {
    return absl::InvalidArgumentError("qt must be prime");
  }
  PWS_RETURN_IF_ERROR(CheckFieldFits(out.group, out.field));
  return out;
}

absl::StatusOr<GroupElement> EncodeToGroup(const GroupParams& group,
                                           const mpz_class& m) {
  if (m < 1 || m > group.q()) {
    return absl::OutOfRangeError("message must lie in [1, q]");
  }
  if (group.Contains(m)) return GroupElement{m};
  return GroupElement{group.p() - m};
}

absl::StatusOr<mpz_class> DecodeFromGroup(const GroupParams& group,
                                          const GroupElement& e) {
  if (!group.Contains(e)) {
    return absl::InvalidArgumentError("element is not in G_q");
  }
  if (e.value <= group.q()) return e.value;
  return group.p() - e.value;
}

}  // namespace pws
