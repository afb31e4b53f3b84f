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

#ifndef PWS_BIGINT_H_
#define PWS_BIGINT_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pws {

// Number of significant bits; 0 for zero.
size_t BitLength(const mpz_class& x);

// ceil(log2(x)) for x >= 1.
int CeilLog2(uint64_t x);
int CeilLog2(const mpz_class& x);

// Big-endian, left-padded to `width` bytes. The value must fit.
std::vector<uint8_t> ToFixedBytes(const mpz_class& x, size_t width);
void AppendFixedBytes(const mpz_class& x, size_t width,
                      std::vector<uint8_t>* out);
mpz_class FromBytes(std::span<const uint8_t> bytes);

std::string ToDecimal(const mpz_class& x);

// Modular helpers used by the counted arithmetic. None of them count.
mpz_class PowMod(const mpz_class& base, const mpz_class& exp,
                 const mpz_class& mod);
mpz_class MulMod(const mpz_class& a, const mpz_class& b, const mpz_class& mod);
mpz_class InvMod(const mpz_class& a, const mpz_class& mod);

}  // namespace pws

#endif  // PWS_BIGINT_H_
