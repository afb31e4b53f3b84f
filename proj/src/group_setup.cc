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

#include "pws/group_setup.h"

#include <algorithm>
#include <random>

#include "absl/strings/escaping.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "pws/bigint.h"
#include "pws/sha256.h"

namespace pws {
namespace {

constexpr int kRandomizerBytes = 32;

// Counter-mode expansion of a hash state to `bits` output bits.
std::vector<uint8_t> Expand(const Sha256& state, int bits) {
  const size_t len = (static_cast<size_t>(bits) + 7) / 8;
  std::vector<uint8_t> out;
  out.reserve(len + 32);
  for (uint32_t ctr = 0; out.size() < len; ++ctr) {
    Sha256 h = state;
    h.UpdateU32(ctr);
    const Digest d = h.Finish();
    out.insert(out.end(), d.begin(), d.end());
  }
  out.resize(len);
  const int excess = static_cast<int>(len * 8) - bits;
  if (excess > 0) out[0] &= static_cast<uint8_t>(0xff >> excess);
  return out;
}

void UpdateField(Sha256& h, std::string_view s) {
  h.UpdateU32(static_cast<uint32_t>(s.size()));
  h.Update(s);
}

void UpdateField(Sha256& h, std::span<const uint8_t> s) {
  h.UpdateU32(static_cast<uint32_t>(s.size()));
  h.Update(s);
}

// Bits [start, start + width) of a big-endian bit string.
uint64_t Slice(std::span<const uint8_t> bytes, size_t start, int width) {
  uint64_t v = 0;
  for (int b = 0; b < width; ++b) {
    const size_t bit = start + b;
    v = (v << 1) | ((bytes[bit / 8] >> (7 - bit % 8)) & 1);
  }
  return v;
}

// H3 over (y_i, s_1..s_nu), unbiased below n_g by rejection on a counter.
int H3(const Sha256& s_state, uint64_t y_i, int n_groups) {
  const int width = CeilLog2(static_cast<uint64_t>(n_groups));
  if (width == 0) return 0;
  for (uint32_t ctr = 0;; ++ctr) {
    Sha256 h = s_state;
    h.UpdateU32(ctr);
    h.UpdateU64(y_i);
    const Digest d = h.Finish();
    const uint64_t j = Slice(d, 0, width);
    if (j < static_cast<uint64_t>(n_groups)) return static_cast<int>(j);
  }
}

}  // namespace

std::vector<uint8_t> H1(std::string_view ip, std::string_view id,
                        std::span<const uint8_t> r, int bits) {
  Sha256 h;
  h.Update("PWS/H1");
  UpdateField(h, ip);
  UpdateField(h, id);
  UpdateField(h, r);
  return Expand(h, bits);
}

absl::StatusOr<Registration> BulletinBoard::Register(std::string id,
                                                     std::string ip,
                                                     Drbg& rng) {
  if (closed_) return absl::FailedPreconditionError("registration is closed");
  if (id.empty() || id.find_first_of(",\n") != std::string::npos ||
      ip.find_first_of(",\n") != std::string::npos) {
    return absl::InvalidArgumentError("id and ip must be nonempty, no commas");
  }
  for (const Registration& p : postings_) {
    if (p.id == id) {
      return absl::AlreadyExistsError(absl::StrCat("id '", id, "' registered"));
    }
  }
  Registration reg{std::move(id), std::move(ip), rng.Bytes(kRandomizerBytes),
                   rng.Bytes(kRandomizerBytes), {}};
  reg.x = H1(reg.ip, reg.id, reg.r, digest_bits_);
  postings_.push_back(reg);
  return reg;
}

std::vector<uint8_t> BulletinBoard::DeriveY() const {
  const uint64_t nu = postings_.size();
  Sha256 h;
  h.Update("PWS/H2");
  h.UpdateU64(nu);
  for (const Registration& p : postings_) h.Update(p.x);
  return Expand(h, static_cast<int>(nu * CeilLog2(nu)));
}

std::string BulletinBoard::Serialize() const {
  std::string out;
  for (size_t i = 0; i < postings_.size(); ++i) {
    const Registration& p = postings_[i];
    absl::StrAppend(&out, i, ",", p.id, ",", p.ip, ",", HexEncode(p.s), ",",
                    HexEncode(p.x), "\n");
  }
  return out;
}

absl::StatusOr<BulletinBoard> BulletinBoard::Parse(std::string_view text,
                                                   int digest_bits) {
  BulletinBoard board(digest_bits);
  size_t expect = 0;
  for (absl::string_view line : absl::StrSplit(
           absl::string_view(text.data(), text.size()), '\n',
           absl::SkipEmpty())) {
    std::vector<absl::string_view> f = absl::StrSplit(line, ',');
    size_t idx = 0;
    if (f.size() != 5 || !absl::SimpleAtoi(f[0], &idx) || idx != expect) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad board line ", expect, ": ", line));
    }
    auto is_hex = [](absl::string_view h) {
      return h.size() % 2 == 0 &&
             h.find_first_not_of("0123456789abcdefABCDEF") ==
                 absl::string_view::npos;
    };
    if (!is_hex(f[3]) || !is_hex(f[4])) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad hex on board line ", expect));
    }
    Registration reg;
    reg.id = std::string(f[1]);
    reg.ip = std::string(f[2]);
    const std::string s = absl::HexStringToBytes(f[3]);
    const std::string x = absl::HexStringToBytes(f[4]);
    reg.s.assign(s.begin(), s.end());
    reg.x.assign(x.begin(), x.end());
    board.postings_.push_back(std::move(reg));
    ++expect;
  }
  return board;
}

absl::StatusOr<std::vector<GroupAssignment>> AssignGroups(
    const BulletinBoard& board, int n) {
  const auto& postings = board.postings();
  const int64_t nu = static_cast<int64_t>(postings.size());
  if (n < 1) return absl::InvalidArgumentError("n must be positive");
  if (nu < n) {
    return absl::FailedPreconditionError(
        absl::StrCat("need at least n=", n, " registrations, have ", nu));
  }
  const int n_groups = static_cast<int>(nu / n);
  const int slice = CeilLog2(static_cast<uint64_t>(nu));
  const std::vector<uint8_t> y = board.DeriveY();

  Sha256 s_state;
  s_state.Update("PWS/H3");
  for (const Registration& p : postings) s_state.Update(p.s);

  std::vector<GroupAssignment> out(nu);
  std::vector<int> load(n_groups, 0);
  const int64_t capped = static_cast<int64_t>(n_groups) * n;
  const int64_t leftover = nu - capped;
  auto place = [&](int64_t i, int capacity) {
    const uint64_t y_i = Slice(y, static_cast<size_t>(i) * slice, slice);
    const int j = H3(s_state, y_i, n_groups);
    int g = j;
    while (load[g] >= capacity) g = (g + 1) % n_groups;
    ++load[g];
    out[i] = GroupAssignment{postings[i].id, g, j};
  };
  // The first n_g * n users fill groups to exactly n; the rest spill over.
  int64_t placed = 0;
  std::vector<int64_t> late;
  for (int64_t i = 0; i < nu; ++i) {
    if (placed < capped) {
      place(i, n);
      ++placed;
    } else {
      late.push_back(i);
    }
  }
  const int extra = static_cast<int>((leftover + n_groups - 1) / n_groups);
  for (int64_t i : late) place(i, n + extra);
  return out;
}

std::string AssignmentsCsv(std::span<const GroupAssignment> assignments) {
  std::string out = "id,group\n";
  for (const GroupAssignment& a : assignments) {
    absl::StrAppend(&out, a.id, ",", a.group, "\n");
  }
  return out;
}

namespace {

mpz_class Binomial(int64_t n, int64_t k) {
  mpz_class out;
  if (k < 0 || k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace

absl::StatusOr<mpq_class> MalGrpExact(int64_t nu, int64_t t, int n) {
  if (n < 2 || n % 2 != 0 || n > nu || t < 0 || t > nu) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need even n >= 2, n <= nu, 0 <= t <= nu; got nu=", nu, " t=", t,
        " n=", n));
  }
  const int64_t n_groups = nu / n;
  mpq_class p(Binomial(t, n / 2) * Binomial(nu - t, n / 2),
              Binomial(nu, n) * n_groups);
  p.canonicalize();
  return p;
}

absl::StatusOr<mpf_class> MalGrpBound(int64_t nu, int64_t t, int n) {
  if (t <= 0 || t > nu || n < 1 || n > nu) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need 0 < t <= nu and 1 <= n <= nu; got nu=", nu, " t=", t, " n=", n));
  }
  constexpr mp_bitcnt_t kPrec = 256;
  const int64_t n_groups = nu / n;
  // Even n stays rational; odd n needs a square root.
  mpq_class ratio(nu - t, t);
  mpq_class frac(t, nu);
  ratio.canonicalize();
  frac.canonicalize();
  mpq_class exact_part = mpq_class(1, 1);
  for (int i = 0; i < n; ++i) exact_part *= frac;
  for (int i = 0; i < n / 2; ++i) exact_part *= ratio;
  exact_part *= mpq_class(mpz_class(1) << n, n_groups);
  mpf_class out(exact_part, kPrec);
  if (n % 2 != 0) out *= sqrt(mpf_class(ratio, kPrec));
  return out;
}

absl::StatusOr<MonteCarloResult> MalGrpMonteCarlo(int64_t nu, int64_t t, int n,
                                                  int64_t trials,
                                                  uint64_t seed) {
  if (n < 2 || n % 2 != 0 || n > nu || t < 0 || t > nu || trials < 0) {
    return absl::InvalidArgumentError("invalid Monte Carlo parameters");
  }
  const int64_t n_groups = nu / n;
  std::mt19937_64 gen(seed);
  std::vector<int64_t> users(nu);
  for (int64_t i = 0; i < nu; ++i) users[i] = i;
  MonteCarloResult out{trials, 0};
  for (int64_t trial = 0; trial < trials; ++trial) {
    int corrupted = 0;
    for (int k = 0; k < n; ++k) {
      std::uniform_int_distribution<int64_t> pick(k, nu - 1);
      std::swap(users[k], users[pick(gen)]);
      if (users[k] < t) ++corrupted;
    }
    std::uniform_int_distribution<int64_t> group(0, n_groups - 1);
    if (group(gen) == 0 && corrupted == n / 2) ++out.hits;
  }
  return out;
}

absl::StatusOr<int> ElectLeader(std::span<const int> manager_ids) {
  if (manager_ids.empty()) {
    return absl::InvalidArgumentError("manager pool is empty");
  }
  return *std::min_element(manager_ids.begin(), manager_ids.end());
}

}  // namespace pws
