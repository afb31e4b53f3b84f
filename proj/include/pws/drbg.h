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

#ifndef PWS_DRBG_H_
#define PWS_DRBG_H_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace pws {

// Deterministic random bit generator: SHA-256 in counter mode over a key
// derived from the seed. Every random choice in a simulated run comes from
// one of these, so a run is a pure function of its seed.
class Drbg {
 public:
  explicit Drbg(std::string_view seed);

  // Independent child stream; does not advance this generator.
  Drbg Fork(std::string_view label) const;

  void Fill(std::span<uint8_t> out);
  std::vector<uint8_t> Bytes(size_t n);
  uint64_t NextU64();

  // Uniform in [0, bound). bound must be positive.
  uint64_t UniformU64(uint64_t bound);
  mpz_class UniformBelow(const mpz_class& bound);
  // Uniform in [0, 2^bits).
  mpz_class UniformBits(size_t bits);

  // Uniform permutation of {0, ..., n-1} (Fisher-Yates).
  std::vector<int> Permutation(int n);

 private:
  Drbg() = default;
  void Refill();

  std::array<uint8_t, 32> key_{};
  uint64_t counter_ = 0;
  std::array<uint8_t, 32> block_{};
  size_t used_ = 32;
};

}  // namespace pws

#endif  // PWS_DRBG_H_
