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

#include "pws/bigint.h"

#include <stdexcept>

namespace pws {

size_t BitLength(const mpz_class& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

int CeilLog2(uint64_t x) {
  if (x == 0) throw std::invalid_argument("CeilLog2(0)");
  int bits = 0;
  uint64_t v = x - 1;
  while (v != 0) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

int CeilLog2(const mpz_class& x) {
  if (x <= 0) throw std::invalid_argument("CeilLog2 of non-positive value");
  mpz_class v = x - 1;
  return static_cast<int>(BitLength(v));
}

void AppendFixedBytes(const mpz_class& x, size_t width,
                      std::vector<uint8_t>* out) {
  if (x < 0 || BitLength(x) > width * 8) {
    throw std::invalid_argument("value does not fit fixed width");
  }
  size_t start = out->size();
  out->resize(start + width, 0);
  if (x == 0) return;
  size_t count = 0;
  size_t len = (BitLength(x) + 7) / 8;
  mpz_export(out->data() + start + (width - len), &count, 1, 1, 1, 0,
             x.get_mpz_t());
}

std::vector<uint8_t> ToFixedBytes(const mpz_class& x, size_t width) {
  std::vector<uint8_t> out;
  out.reserve(width);
  AppendFixedBytes(x, width, &out);
  return out;
}

mpz_class FromBytes(std::span<const uint8_t> bytes) {
  mpz_class x;
  if (bytes.empty()) return x;
  mpz_import(x.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return x;
}

std::string ToDecimal(const mpz_class& x) { return x.get_str(10); }

mpz_class PowMod(const mpz_class& base, const mpz_class& exp,
                 const mpz_class& mod) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

mpz_class MulMod(const mpz_class& a, const mpz_class& b, const mpz_class& mod) {
  mpz_class r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

mpz_class InvMod(const mpz_class& a, const mpz_class& mod) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::domain_error("value is not invertible");
  }
  return r;
}

}  // namespace pws
