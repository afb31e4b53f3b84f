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

#include "pws/experiment.h"

#include <chrono>
#include <cmath>
#include <fstream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "pws/bigint.h"
#include "pws/sha256.h"
#include "pws/status_macros.h"

namespace pws {

QueryTerm TextToTerm(const SharingField& field, std::string_view text) {
  const Digest d = Sha256Digest(text);
  mpz_class v = FromBytes(d) % field.modulus;
  return QueryTerm{v};
}

absl::StatusOr<std::vector<std::string>> ParseQueryList(std::string_view spec) {
  const size_t dots = spec.find("..");
  if (dots != std::string_view::npos && spec.find(',') == std::string_view::npos) {
    // prefix<a>..prefix<b>
    auto split = [](std::string_view s, std::string_view* prefix, int* num) {
      size_t i = s.size();
      while (i > 0 && s[i - 1] >= '0' && s[i - 1] <= '9') --i;
      *prefix = s.substr(0, i);
      return i < s.size() && absl::SimpleAtoi(std::string(s.substr(i)), num);
    };
    std::string_view p1, p2;
    int a = 0, b = 0;
    if (!split(spec.substr(0, dots), &p1, &a) ||
        !split(spec.substr(dots + 2), &p2, &b) || p1 != p2 || b < a) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad query range '", std::string(spec), "'"));
    }
    std::vector<std::string> out;
    for (int i = a; i <= b; ++i) out.push_back(absl::StrCat(std::string(p1), i));
    return out;
  }
  std::vector<std::string> out = absl::StrSplit(
      absl::string_view(spec.data(), spec.size()), ',', absl::SkipEmpty());
  return out;
}

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config,
                                               const NetworkModel& model) {
  if (!model.broadcast_available) {
    return absl::FailedPreconditionError(
        "broadcast channel unavailable; emulating it over point-to-point "
        "links is not supported, so round counts would be wrong");
  }
  absl::StatusOr<PublicParams> generated =
      config.params.has_value()
          ? absl::StatusOr<PublicParams>(*config.params)
          : GenerateParams(config.bits, config.n, config.seed);
  PWS_ASSIGN_OR_RETURN(PublicParams params, std::move(generated));
  std::vector<std::string> texts = config.queries;
  if (texts.empty()) {
    for (int i = 0; i < config.n; ++i) texts.push_back(absl::StrCat("q", i));
  }
  if (static_cast<int>(texts.size()) != config.n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "expected ", config.n, " queries, got ", texts.size()));
  }
  ExperimentResult result{
      params,
      ProtocolConfig{params, config.n, config.num_managers, config.mode,
                     config.k, config.seed},
      texts,
      {},
      {},
      {}};
  for (const std::string& t : texts) {
    QueryTerm term = TextToTerm(params.field, t);
    result.term_to_text[term.value.get_str(16)] = t;
    result.terms.push_back(std::move(term));
  }
  PWS_ASSIGN_OR_RETURN(result.outcome,
                       Run(result.protocol, result.terms, config.faults));
  return result;
}

std::string EventsLog(const RunOutcome& outcome) {
  std::string out = absl::StrJoin(outcome.event_log, "\n");
  if (!out.empty()) out += "\n";
  return out;
}

std::string ResultsCsv(const ExperimentResult& result) {
  std::string out = "user,query,answer\n";
  const auto& answers = result.outcome.user_answers;
  for (size_t i = 0; i < answers.size(); ++i) {
    absl::StrAppend(&out, "U", i + 1, ",", result.texts[i], ",",
                    answers[i].value_or(""), "\n");
  }
  return out;
}

std::string SummaryJson(const ExperimentResult& result) {
  using nlohmann::ordered_json;
  const ProtocolConfig& cfg = result.protocol;
  const RunOutcome& out = result.outcome;
  const CostMetrics& m = out.metrics;
  const int64_t n = cfg.n;
  const int64_t log_p = cfg.params.group.bits();

  ordered_json j;
  j["mode"] = std::string(ModeName(cfg.mode));
  j["n"] = cfg.n;
  j["N"] = cfg.num_managers;
  j["bits_p"] = log_p;
  j["k"] = cfg.shuffle_reps;
  j["seed"] = cfg.seed;
  j["rounds"] = m.rounds;
  j["setup_rounds"] = m.setup_rounds;
  j["aborted"] = out.abort.has_value();
  if (out.abort) j["abort"] = out.abort->ToLine();

  ordered_json per_user = ordered_json::array();
  CostCounter user_total, manager_total;
  int64_t proof_bits = 0, setup_bits = 0;
  for (const auto& [id, pm] : m.parties) {
    if (id.role == Role::kUser) {
      user_total += pm.online;
      per_user.push_back({{"party", id.ToString()},
                          {"exp", pm.online.exp},
                          {"mul", pm.online.mul},
                          {"bits_sent", pm.bits_sent}});
    } else {
      manager_total += pm.online;
    }
    proof_bits += pm.proof_bits;
    setup_bits += pm.setup_bits;
  }
  j["totals"] = {
      {"user_exp", user_total.exp},
      {"user_mul", user_total.mul},
      {"manager_exp", manager_total.exp},
      {"manager_mul", manager_total.mul},
      {"zk_exp", user_total.zk_exp + manager_total.zk_exp},
      {"zk_mul", user_total.zk_mul + manager_total.zk_mul},
      {"user_bits", m.BitsFor(Role::kUser)},
      {"manager_bits", m.BitsFor(Role::kManager)},
      {"proof_bits", proof_bits},
      {"setup_bits", setup_bits},
      {"terms_dropped", m.terms_dropped},
      {"malformed_shares", m.malformed_shares},
      {"aborts", m.aborts},
  };
  j["predicted"] = {
      {"rounds", 4},
      {"per_user_exp", 4 * n},
      {"per_user_mul", "3n + O(n log^2 n)"},
      {"per_user_mul_3n", 3 * n},
      {"per_user_bits", 2 * (2 * n - 1) * log_p},
      {"total_user_bits", 2 * n * (2 * n - 1) * log_p},
      {"per_manager_exp", n * n},
  };
  j["per_user"] = per_user;
  j["warnings"] = out.warnings;
  return j.dump(2) + "\n";
}

namespace {

absl::Status WriteFile(const std::filesystem::path& path,
                       std::string_view content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return absl::UnavailableError(absl::StrCat("cannot write ", path.string()));
  f << content;
  f.close();
  if (!f) return absl::DataLossError(absl::StrCat("short write ", path.string()));
  return absl::OkStatus();
}

}  // namespace

absl::Status WriteArtifacts(const std::filesystem::path& dir,
                            const ExperimentResult& result) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create ", dir.string(), ": ", ec.message()));
  }
  PWS_RETURN_IF_ERROR(
      WriteFile(dir / "params.txt", SerializeParams(result.params) + "\n"));
  PWS_RETURN_IF_ERROR(
      WriteFile(dir / "metrics.csv", MetricsCsv(result.outcome.metrics)));
  PWS_RETURN_IF_ERROR(WriteFile(dir / "summary.json", SummaryJson(result)));
  PWS_RETURN_IF_ERROR(WriteFile(dir / "events.log", EventsLog(result.outcome)));
  PWS_RETURN_IF_ERROR(WriteFile(dir / "results.csv", ResultsCsv(result)));
  const std::filesystem::path abort_path = dir / "abort.txt";
  if (result.outcome.abort) {
    PWS_RETURN_IF_ERROR(
        WriteFile(abort_path, result.outcome.abort->ToLine() + "\n"));
  } else {
    std::filesystem::remove(abort_path, ec);
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<BenchmarkRow>> Benchmark(std::span<const int> ns,
                                                    int bits, int runs,
                                                    std::string_view seed) {
  std::vector<BenchmarkRow> rows;
  std::optional<PublicParams> params;
  for (int n : ns) {
    if (!params || CeilLog2(static_cast<uint64_t>(params->field.n)) !=
                       CeilLog2(static_cast<uint64_t>(n))) {
      PWS_ASSIGN_OR_RETURN(params, GenerateParams(bits, n, seed));
    }
    std::vector<QueryTerm> terms;
    for (int i = 0; i < n; ++i) {
      terms.push_back(TextToTerm(params->field, absl::StrCat("q", i)));
    }
    PWS_ASSIGN_OR_RETURN(
        Session base,
        Session::Create(ProtocolConfig{*params, n, 1, Mode::kSemiHonest, 1,
                                       absl::StrCat(std::string(seed), "/", n)},
                        terms));
    if (!base.RunSetup() || !base.RunRound(1) || !base.RunRound(2)) {
      return absl::InternalError("benchmark run aborted");
    }
    std::vector<double> times;
    for (int r = 0; r < runs; ++r) {
      Session s = base;
      const auto start = std::chrono::steady_clock::now();
      const bool ok = s.RunRound(3) && s.RunRound(4);
      const auto stop = std::chrono::steady_clock::now();
      if (!ok) return absl::InternalError("benchmark run aborted");
      times.push_back(std::chrono::duration<double>(stop - start).count());
    }
    BenchmarkRow row{n, runs, 0, 0};
    for (double t : times) row.mean_s += t;
    row.mean_s /= runs;
    for (double t : times) row.std_s += (t - row.mean_s) * (t - row.mean_s);
    row.std_s = runs > 1 ? std::sqrt(row.std_s / (runs - 1)) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::string BenchmarkCsv(std::span<const BenchmarkRow> rows) {
  std::string out = "n,runs,mean_s,std_s,reference_s\n";
  for (const BenchmarkRow& r : rows) {
    absl::StrAppend(&out, r.n, ",", r.runs, ",", absl::StrFormat("%.4f", r.mean_s),
                    ",", absl::StrFormat("%.4f", r.std_s), ",",
                    kReferenceSubmitSeconds, "\n");
  }
  return out;
}

}  // namespace pws
