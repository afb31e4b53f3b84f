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

#ifndef PWS_TESTS_TEST_UTIL_H_
#define PWS_TESTS_TEST_UTIL_H_

#include <string>
#include <vector>

#include "pws/algebra.h"
#include "pws/elgamal.h"
#include "pws/protocol.h"
#include "pws/shamir.h"

namespace pws::testing {

// p = 23, q = 11, g = 4.
const GroupParams& ToyGroup();

// Parameters cached per (bits, n); seed fixed.
const PublicParams& CachedParams(int bits, int n);

std::vector<QueryTerm> DistinctTerms(const SharingField& field, int n,
                                     const std::string& salt);

// Decrypts with every manager's key share (test oracle only).
GroupElement DecryptWithAll(const GroupParams& group,
                            const std::vector<KeyShare>& keys,
                            const Ciphertext& c);

std::vector<KeyShare> SessionKeys(const Session& session);

}  // namespace pws::testing

#endif  // PWS_TESTS_TEST_UTIL_H_
