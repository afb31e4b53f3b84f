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

#ifndef PWS_MOCK_ENGINE_H_
#define PWS_MOCK_ENGINE_H_

#include <span>
#include <string>
#include <vector>

#include "pws/algebra.h"
#include "pws/shamir.h"

namespace pws {

// Stand-in search engine. The answer for a term is "R:" followed by the
// first 8 hex digits of SHA-256 over the term's canonical bytes (big-endian,
// ceil(log qt / 8) bytes).
class MockEngine {
 public:
  explicit MockEngine(const SharingField& field);

  std::string Answer(const QueryTerm& term) const;
  std::vector<std::string> Search(std::span<const QueryTerm> terms) const;

 private:
  size_t width_;
};

}  // namespace pws

#endif  // PWS_MOCK_ENGINE_H_
