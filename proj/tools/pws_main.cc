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

// pws: parameter generation, protocol runs, sweeps, group setup, lemma
// tables and the submit benchmark.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "pws/algebra.h"
#include "pws/experiment.h"
#include "pws/fault_plan.h"
#include "pws/group_setup.h"
#include "pws/metrics.h"
#include "pws/protocol.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitAbort = 3;

int ConfigError(const absl::Status& s) {
  std::cerr << "error: " << s.message() << "\n";
  return kExitConfig;
}

absl::Status WriteText(const std::filesystem::path& path,
                       const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  if (!f) return absl::UnavailableError("cannot write " + path.string());
  return absl::OkStatus();
}

struct RunFlags {
  int n = 10;
  int managers = 3;
  std::string mode = "semi-honest";
  int bits = 512;
  int k = 40;
  std::string seed = "1";
  std::string queries;
  std::string config;
  std::string out = "out";
  std::vector<std::string> faults;
};

void AddRunFlags(CLI::App* cmd, RunFlags* f) {
  cmd->add_option("--n", f->n, "group size");
  cmd->add_option("--N", f->managers, "number of group managers");
  cmd->add_option("--mode", f->mode, "semi-honest | malicious");
  cmd->add_option("--bits", f->bits, "bit length of p");
  cmd->add_option("--k", f->k, "shuffle proof repetitions");
  cmd->add_option("--seed", f->seed, "seed string");
  cmd->add_option("--queries", f->queries, "a,b,c or q0..q9");
  cmd->add_option("--config", f->config, "JSON config; flags win");
  cmd->add_option("--out", f->out, "output directory");
  cmd->add_option("--fault", f->faults, "kind:party, repeatable");
}

// Fills fields from the JSON file unless the flag was given.
absl::Status ApplyConfigFile(const CLI::App& cmd, RunFlags* f) {
  if (f->config.empty()) return absl::OkStatus();
  std::ifstream in(f->config);
  if (!in) return absl::NotFoundError("cannot read " + f->config);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("bad config: ", e.what()));
  }
  auto unset = [&](const char* flag) { return cmd.count(flag) == 0; };
  try {
    if (j.contains("n") && unset("--n")) f->n = j["n"].get<int>();
    if (j.contains("N") && unset("--N")) f->managers = j["N"].get<int>();
    if (j.contains("mode") && unset("--mode")) f->mode = j["mode"];
    if (j.contains("bits") && unset("--bits")) f->bits = j["bits"].get<int>();
    if (j.contains("k") && unset("--k")) f->k = j["k"].get<int>();
    if (j.contains("seed") && unset("--seed")) {
      f->seed = j["seed"].is_string() ? j["seed"].get<std::string>()
                                      : j["seed"].dump();
    }
    if (j.contains("queries") && unset("--queries")) {
      if (j["queries"].is_array()) {
        std::string joined;
        for (const auto& q : j["queries"]) {
          if (!joined.empty()) joined += ",";
          joined += q.get<std::string>();
        }
        f->queries = joined;
      } else {
        f->queries = j["queries"];
      }
    }
    if (j.contains("out") && unset("--out")) f->out = j["out"];
    if (j.contains("fault") && unset("--fault")) {
      f->faults.clear();
      if (j["fault"].is_array()) {
        for (const auto& x : j["fault"]) f->faults.push_back(x);
      } else {
        f->faults.push_back(j["fault"]);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("bad config: ", e.what()));
  }
  return absl::OkStatus();
}

absl::StatusOr<pws::ExperimentConfig> ToExperiment(const RunFlags& f) {
  pws::ExperimentConfig c;
  c.n = f.n;
  c.num_managers = f.managers;
  c.bits = f.bits;
  c.k = f.k;
  c.seed = f.seed;
  absl::StatusOr<pws::Mode> mode = pws::ParseMode(f.mode);
  if (!mode.ok()) return mode.status();
  c.mode = *mode;
  if (!f.queries.empty()) {
    absl::StatusOr<std::vector<std::string>> q = pws::ParseQueryList(f.queries);
    if (!q.ok()) return q.status();
    c.queries = *q;
  }
  for (const std::string& spec : f.faults) {
    absl::StatusOr<pws::Fault> fault = pws::ParseFault(spec);
    if (!fault.ok()) return fault.status();
    c.faults.faults.push_back(*fault);
  }
  return c;
}

int DoRun(const pws::ExperimentConfig& c, const std::filesystem::path& out,
          bool quiet) {
  absl::StatusOr<pws::ExperimentResult> r = pws::RunExperiment(c);
  if (!r.ok()) return ConfigError(r.status());
  if (absl::Status s = pws::WriteArtifacts(out, *r); !s.ok()) {
    return ConfigError(s);
  }
  for (const std::string& w : r->outcome.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  if (r->outcome.abort) {
    std::cerr << r->outcome.abort->ToLine() << "\n";
    return kExitAbort;
  }
  if (!quiet) {
    const pws::CostMetrics& m = r->outcome.metrics;
    std::cout << "rounds=" << m.rounds << " user_bits=" << m.BitsFor(pws::Role::kUser)
              << " terms_dropped=" << m.terms_dropped << " out=" << out.string()
              << "\n";
  }
  return kExitOk;
}

std::vector<int> ParseIntList(const std::string& s, bool* ok) {
  std::vector<int> out;
  *ok = true;
  for (absl::string_view part : absl::StrSplit(s, ',', absl::SkipEmpty())) {
    int v = 0;
    if (!absl::SimpleAtoi(part, &v)) *ok = false;
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"private web search protocol simulator"};
  app.require_subcommand(1);

  // params
  int p_bits = 512, p_n = 10;
  std::string p_seed = "1", p_out;
  CLI::App* params = app.add_subcommand("params", "generate public parameters");
  params->add_option("--bits", p_bits, "bit length of p");
  params->add_option("--n", p_n, "group size");
  params->add_option("--seed", p_seed, "seed string");
  params->add_option("--out", p_out, "output file or directory");

  // run
  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "run one protocol execution");
  AddRunFlags(run, &run_flags);

  // sweep
  RunFlags sweep_flags;
  std::string sweep_ns = "2,5,10";
  int sweep_seeds = 3;
  CLI::App* sweep = app.add_subcommand("sweep", "runs over n and seeds");
  AddRunFlags(sweep, &sweep_flags);
  sweep->add_option("--ns", sweep_ns, "comma list of group sizes");
  sweep->add_option("--seeds", sweep_seeds, "seeds per n");

  // groupsetup
  int64_t g_nu = 100;
  int g_n = 10;
  std::string g_seed = "1", g_out = "out", g_board;
  CLI::App* group = app.add_subcommand("groupsetup", "bulletin-board grouping");
  group->add_option("--nu", g_nu, "number of registering users");
  group->add_option("--n", g_n, "group size");
  group->add_option("--seed", g_seed, "seed string");
  group->add_option("--board", g_board, "load an existing board file");
  group->add_option("--out", g_out, "output directory");

  // lemma
  int64_t l_nu = 1000000, l_t = 1000, l_trials = 0;
  int l_n = 30;
  uint64_t l_seed = 1;
  CLI::App* lemma = app.add_subcommand("lemma", "malicious grouping probability");
  lemma->add_option("--nu", l_nu, "number of users");
  lemma->add_option("--t", l_t, "corrupted users");
  lemma->add_option("--n", l_n, "group size");
  lemma->add_option("--trials", l_trials, "Monte Carlo trials (0: skip)");
  lemma->add_option("--seed", l_seed, "Monte Carlo seed");

  // bench
  int b_bits = 1024, b_runs = 5;
  std::string b_ns = "34,35,36", b_seed = "bench", b_out;
  CLI::App* bench = app.add_subcommand("bench", "time the submit rounds");
  bench->add_option("--bits", b_bits, "bit length of p");
  bench->add_option("--runs", b_runs, "timed runs per n");
  bench->add_option("--ns", b_ns, "comma list of group sizes");
  bench->add_option("--seed", b_seed, "seed string");
  bench->add_option("--out", b_out, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (params->parsed()) {
    absl::StatusOr<pws::PublicParams> pp =
        pws::GenerateParams(p_bits, p_n, p_seed);
    if (!pp.ok()) return ConfigError(pp.status());
    const std::string text = pws::SerializeParams(*pp) + "\n";
    if (p_out.empty()) {
      std::cout << text;
      return kExitOk;
    }
    std::filesystem::path path(p_out);
    if (std::filesystem::is_directory(path)) path /= "params.txt";
    if (absl::Status s = WriteText(path, text); !s.ok()) return ConfigError(s);
    return kExitOk;
  }

  if (run->parsed()) {
    if (absl::Status s = ApplyConfigFile(*run, &run_flags); !s.ok()) {
      return ConfigError(s);
    }
    absl::StatusOr<pws::ExperimentConfig> c = ToExperiment(run_flags);
    if (!c.ok()) return ConfigError(c.status());
    return DoRun(*c, run_flags.out, false);
  }

  if (sweep->parsed()) {
    if (absl::Status s = ApplyConfigFile(*sweep, &sweep_flags); !s.ok()) {
      return ConfigError(s);
    }
    bool ok = true;
    const std::vector<int> ns = ParseIntList(sweep_ns, &ok);
    if (!ok || ns.empty() || sweep_seeds < 1) {
      return ConfigError(absl::InvalidArgumentError("bad --ns or --seeds"));
    }
    int worst = kExitOk;
    for (int n : ns) {
      for (int s = 0; s < sweep_seeds; ++s) {
        RunFlags f = sweep_flags;
        f.n = n;
        f.queries.clear();
        f.seed = absl::StrCat(sweep_flags.seed, "-", s);
        absl::StatusOr<pws::ExperimentConfig> c = ToExperiment(f);
        if (!c.ok()) return ConfigError(c.status());
        const std::filesystem::path dir =
            std::filesystem::path(sweep_flags.out) /
            absl::StrCat("n", n) / absl::StrCat("seed", s);
        const int code = DoRun(*c, dir, false);
        if (code == kExitConfig) return code;
        worst = std::max(worst, code);
      }
    }
    return worst;
  }

  if (group->parsed()) {
    pws::BulletinBoard board;
    if (!g_board.empty()) {
      std::ifstream in(g_board);
      std::stringstream ss;
      ss << in.rdbuf();
      absl::StatusOr<pws::BulletinBoard> loaded =
          pws::BulletinBoard::Parse(ss.str());
      if (!in || !loaded.ok()) {
        return ConfigError(loaded.ok() ? absl::NotFoundError(g_board)
                                       : loaded.status());
      }
      board = *std::move(loaded);
    } else {
      pws::Drbg rng(g_seed);
      for (int64_t i = 0; i < g_nu; ++i) {
        absl::StatusOr<pws::Registration> r = board.Register(
            absl::StrCat("u", i),
            absl::StrCat("10.", (i >> 16) & 255, ".", (i >> 8) & 255, ".",
                         i & 255),
            rng);
        if (!r.ok()) return ConfigError(r.status());
      }
    }
    board.CloseRegistration();
    absl::StatusOr<std::vector<pws::GroupAssignment>> a =
        pws::AssignGroups(board, g_n);
    if (!a.ok()) return ConfigError(a.status());
    const std::filesystem::path dir(g_out);
    if (absl::Status s = WriteText(dir / "board.txt", board.Serialize());
        !s.ok()) {
      return ConfigError(s);
    }
    if (absl::Status s = WriteText(dir / "assignments.csv",
                                   pws::AssignmentsCsv(*a));
        !s.ok()) {
      return ConfigError(s);
    }
    std::cout << "users=" << board.postings().size()
              << " groups=" << board.postings().size() / g_n << "\n";
    return kExitOk;
  }

  if (lemma->parsed()) {
    std::string exact = "NA";
    double exact_d = 0;
    if (l_n % 2 == 0) {
      absl::StatusOr<mpq_class> e = pws::MalGrpExact(l_nu, l_t, l_n);
      if (!e.ok()) return ConfigError(e.status());
      exact_d = mpf_class(*e, 256).get_d();
      exact = absl::StrFormat("%.6e", exact_d);
      if (*e == 0) exact = "0";
    }
    std::string bound = "NA";
    if (l_t > 0) {
      absl::StatusOr<mpf_class> b = pws::MalGrpBound(l_nu, l_t, l_n);
      if (!b.ok()) return ConfigError(b.status());
      long exp10 = 0;
      const double mant = mpf_get_d_2exp(&exp10, b->get_mpf_t());
      bound = absl::StrFormat("%.6e", std::ldexp(mant, static_cast<int>(exp10)));
    } else if (l_t < 0 || l_t > l_nu || l_n < 1 || l_n > l_nu) {
      return ConfigError(absl::InvalidArgumentError("invalid parameters"));
    }
    std::cout << "nu,t,n,exact,bound";
    if (l_trials > 0) std::cout << ",mc_rate,mc_expected_sd";
    std::cout << "\n" << l_nu << "," << l_t << "," << l_n << "," << exact
              << "," << bound;
    if (l_trials > 0) {
      absl::StatusOr<pws::MonteCarloResult> mc =
          pws::MalGrpMonteCarlo(l_nu, l_t, l_n, l_trials, l_seed);
      if (!mc.ok()) return ConfigError(mc.status());
      const double sd = std::sqrt(exact_d * (1 - exact_d) / l_trials);
      std::cout << "," << absl::StrFormat("%.6e", mc->rate()) << ","
                << absl::StrFormat("%.6e", sd);
    }
    std::cout << "\n";
    return kExitOk;
  }

  if (bench->parsed()) {
    bool ok = true;
    const std::vector<int> ns = ParseIntList(b_ns, &ok);
    if (!ok || ns.empty() || b_runs < 1) {
      return ConfigError(absl::InvalidArgumentError("bad --ns or --runs"));
    }
    absl::StatusOr<std::vector<pws::BenchmarkRow>> rows =
        pws::Benchmark(ns, b_bits, b_runs, b_seed);
    if (!rows.ok()) return ConfigError(rows.status());
    const std::string csv = pws::BenchmarkCsv(*rows);
    std::cout << csv;
    if (!b_out.empty()) {
      if (absl::Status s = WriteText(b_out, csv); !s.ok()) return ConfigError(s);
    }
    return kExitOk;
  }
  return kExitConfig;
}
