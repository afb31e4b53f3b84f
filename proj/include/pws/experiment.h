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

#ifndef PWS_EXPERIMENT_H_
#define PWS_EXPERIMENT_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pws/algebra.h"
#include "pws/fault_plan.h"
#include "pws/network.h"
#include "pws/protocol.h"

namespace pws {

struct ExperimentConfig {
  int n = 10;
  int num_managers = 3;
  Mode mode = Mode::kSemiHonest;
  int bits = 512;
  int k = 40;
  std::string seed = "1";
  std::vector<std::string> queries;  // empty: q0, q1, ...
  FaultPlan faults;
  std::optional<PublicParams> params;  // generated from (bits, n, seed) if unset
};

// UTF-8 text -> SHA-256 -> mod qt.
QueryTerm TextToTerm(const SharingField& field, std::string_view text);

// "a,b,c" or a range "q0..q9".
absl::StatusOr<std::vector<std::string>> ParseQueryList(std::string_view spec);

struct ExperimentResult {
  PublicParams params;
  ProtocolConfig protocol;
  std::vector<std::string> texts;
  std::vector<QueryTerm> terms;
  std::map<std::string, std::string> term_to_text;  // hex term -> text
  RunOutcome outcome;
};

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config,
                                               const NetworkModel& model = {});

std::string EventsLog(const RunOutcome& outcome);
std::string ResultsCsv(const ExperimentResult& result);  // user,query,answer
std::string SummaryJson(const ExperimentResult& result);

// params.txt, metrics.csv, summary.json, events.log, results.csv, and
// abort.txt when the run aborted.
absl::Status WriteArtifacts(const std::filesystem::path& dir,
                            const ExperimentResult& result);

inline constexpr double kReferenceSubmitSeconds = 1.02;

struct BenchmarkRow {
  int n = 0;
  int runs = 0;
  double mean_s = 0;
  double std_s = 0;
};

// Wall time of the decrypt-and-submit rounds (3 and 4) for each n, with
// N = 1, semi-honest. Rounds 1-2 run once per n and are forked per timing.
absl::StatusOr<std::vector<BenchmarkRow>> Benchmark(std::span<const int> ns,
                                                    int bits, int runs,
                                                    std::string_view seed);

// n,runs,mean_s,std_s,reference_s
std::string BenchmarkCsv(std::span<const BenchmarkRow> rows);

}  // namespace pws

#endif  // PWS_EXPERIMENT_H_
