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

#ifndef PWS_STATUS_MACROS_H_
#define PWS_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define PWS_CONCAT_INNER_(a, b) a##b
#define PWS_CONCAT_(a, b) PWS_CONCAT_INNER_(a, b)

#define PWS_RETURN_IF_ERROR(expr)         \
  do {                                    \
    absl::Status pws_status_ = (expr);    \
    if (!pws_status_.ok()) return pws_status_; \
  } while (0)

#define PWS_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                              \
  if (!statusor.ok()) return statusor.status();         \
  lhs = std::move(statusor).value()

#define PWS_ASSIGN_OR_RETURN(lhs, rexpr) \
  PWS_ASSIGN_OR_RETURN_IMPL_(PWS_CONCAT_(pws_statusor_, __LINE__), lhs, rexpr)

#endif  // PWS_STATUS_MACROS_H_
