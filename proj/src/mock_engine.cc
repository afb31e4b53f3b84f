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

#include "pws/mock_engine.h"

#include "pws/bigint.h"
#include "pws/sha256.h"

namespace pws {

MockEngine::MockEngine(const SharingField& field)
    : width_((static_cast<size_t>(field.value_bits()) + 7) / 8) {}

std::string MockEngine::Answer(const QueryTerm& term) const {
  const Digest d = Sha256Digest(ToFixedBytes(term.value, width_));
  return "R:" + HexEncode(std::span<const uint8_t>(d.data(), 4));
}

std::vector<std::string> MockEngine::Search(
    std::span<const QueryTerm> terms) const {
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (const QueryTerm& t : terms) out.push_back(Answer(t));
  return out;
}

}  // namespace pws
