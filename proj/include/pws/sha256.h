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

#ifndef PWS_SHA256_H_
#define PWS_SHA256_H_

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pws {

using Digest = std::array<uint8_t, 32>;

// Incremental SHA-256. Copyable, so a common prefix can be hashed once and
// the midstate reused.
class Sha256 {
 public:
  Sha256();
  Sha256(const Sha256& other);
  Sha256& operator=(const Sha256& other);
  Sha256(Sha256&&) noexcept = default;
  Sha256& operator=(Sha256&&) noexcept = default;
  ~Sha256();

  Sha256& Update(std::span<const uint8_t> data);
  Sha256& Update(std::string_view data);
  Sha256& UpdateU32(uint32_t v);  // big-endian
  Sha256& UpdateU64(uint64_t v);  // big-endian

  // Finalizes a copy; the object may keep absorbing afterwards.
  Digest Finish() const;

 private:
  struct Ctx;
  std::unique_ptr<Ctx> ctx_;
};

Digest Sha256Digest(std::span<const uint8_t> data);
Digest Sha256Digest(std::string_view data);

std::string HexEncode(std::span<const uint8_t> bytes);

}  // namespace pws

#endif  // PWS_SHA256_H_
