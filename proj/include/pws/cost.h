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

#ifndef PWS_COST_H_
#define PWS_COST_H_

#include <cstdint>

namespace pws {

// Operation counters in the cost model of the computation table: modular
// exponentiations and multiplications. Reductions are free; one modular
// inversion counts as one multiplication. Work done inside zero-knowledge
// proofs is tracked separately so the protocol-proper counts stay
// comparable with the semi-honest figures.
struct CostCounter {
  int64_t exp = 0;
  int64_t mul = 0;
  int64_t zk_exp = 0;
  int64_t zk_mul = 0;

  CostCounter& operator+=(const CostCounter& o) {
    exp += o.exp;
    mul += o.mul;
    zk_exp += o.zk_exp;
    zk_mul += o.zk_mul;
    return *this;
  }
  friend bool operator==(const CostCounter&, const CostCounter&) = default;
};

inline void CountExp(CostCounter* c, int64_t k = 1) {
  if (c != nullptr) c->exp += k;
}
inline void CountMul(CostCounter* c, int64_t k = 1) {
  if (c != nullptr) c->mul += k;
}

// Redirects exp/mul counts into the zk_* fields for the lifetime of the
// proof computation.
class ZkCostScope {
 public:
  explicit ZkCostScope(CostCounter* target) : target_(target) {}
  ~ZkCostScope() {
    if (target_ != nullptr) {
      target_->zk_exp += scratch_.exp;
      target_->zk_mul += scratch_.mul;
    }
  }
  ZkCostScope(const ZkCostScope&) = delete;
  ZkCostScope& operator=(const ZkCostScope&) = delete;

  CostCounter* counter() { return target_ == nullptr ? nullptr : &scratch_; }

 private:
  CostCounter* target_;
  CostCounter scratch_;
};

}  // namespace pws

#endif  // PWS_COST_H_
