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

#include "pws/drbg.h"

#include <stdexcept>

#include "pws/bigint.h"
#include "pws/sha256.h"

namespace pws {

Drbg::Drbg(std::string_view seed) {
  key_ = Sha256().Update("PWS/DRBG").Update(seed).Finish();
}

Drbg Drbg::Fork(std::string_view label) const {
  Drbg child;
  child.key_ = Sha256()
                   .Update("PWS/DRBG/fork")
                   .Update(std::span<const uint8_t>(key_))
                   .UpdateU32(static_cast<uint32_t>(label.size()))
                   .Update(label)
                   .Finish();
  return child;
}

void Drbg::Refill() {
  block_ = Sha256()
               .Update(std::span<const uint8_t>(key_))
               .UpdateU64(counter_++)
               .Finish();
  used_ = 0;
}

void Drbg::Fill(std::span<uint8_t> out) {
  for (uint8_t& b : out) {
    if (used_ == block_.size()) Refill();
    b = block_[used_++];
  }
}

std::vector<uint8_t> Drbg::Bytes(size_t n) {
  std::vector<uint8_t> out(n);
  Fill(out);
  return out;
}

uint64_t Drbg::NextU64() {
  uint8_t b[8];
  Fill(b);
  uint64_t v = 0;
  for (uint8_t x : b) v = (v << 8) | x;
  return v;
}

uint64_t Drbg::UniformU64(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("UniformU64 bound is zero");
  // Rejection sampling on the largest multiple of bound.
  const uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  for (;;) {
    uint64_t v = NextU64();
    if (v < limit) return v % bound;
  }
}

mpz_class Drbg::UniformBits(size_t bits) {
  if (bits == 0) return 0;
  std::vector<uint8_t> buf = Bytes((bits + 7) / 8);
  const size_t excess = buf.size() * 8 - bits;
  buf[0] &= static_cast<uint8_t>(0xff >> excess);
  return FromBytes(buf);
}

mpz_class Drbg::UniformBelow(const mpz_class& bound) {
  if (bound <= 0) throw std::invalid_argument("UniformBelow bound <= 0");
  const size_t bits = BitLength(bound - 1);
  for (;;) {
    mpz_class v = UniformBits(bits);
    if (v < bound) return v;
  }
}

std::vector<int> Drbg::Permutation(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(UniformU64(static_cast<uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace pws
