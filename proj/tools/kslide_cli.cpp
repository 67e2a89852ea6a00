/*
 * Copyright (c) 2026, The kslide Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// kslide command-line harness. Talks to the library through the C API only.
//
// Exit codes: 0 = every property holds, 1 = a violation was found (always the
// case for `violate`), 2 = usage or structural error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kslide/kslide.h"

namespace {

constexpr int kUsageError = 2;

struct ReportDeleter {
  void operator()(kslide_report* r) const { kslide_report_destroy(r); }
};
using ReportPtr = std::unique_ptr<kslide_report, ReportDeleter>;

struct RunArgs {
  uint32_t k = 0;
  uint32_t n = 0;
  std::vector<uint32_t> inputs;
  bool crashes = false;
  std::string output;
};

int library_error(kslide_error err) {
  std::cerr << "kslide: " << kslide_error_name(err) << ": " << kslide_last_error() << '\n';
  return kUsageError;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "kslide: cannot write " << path << '\n';
    return false;
  }
  return true;
}

// Summary to stdout, trace to --output when given.
int finish(kslide_error err, kslide_report* const* raw, const std::string& output) {
  if (err != KSLIDE_OK) return library_error(err);
  const ReportPtr report(*raw);
  std::cout << kslide_report_summary(report.get());
  if (!output.empty() && !write_file(output, kslide_report_trace(report.get()))) return kUsageError;
  return kslide_report_verdict(report.get());
}

kslide_run_params params_of(const RunArgs& a) {
  return kslide_run_params{a.k, a.n, a.inputs.empty() ? nullptr : a.inputs.data(), a.inputs.size(),
                           a.crashes ? 1 : 0};
}

void add_run_options(CLI::App* cmd, RunArgs& a, bool with_n = true) {
  cmd->add_option("--k", a.k, "window size of the register")->required();
  if (with_n) {
    cmd->add_option("--n", a.n, "number of processes")->required();
    cmd->add_option("--inputs", a.inputs, "comma-separated proposals, one per process")
        ->delimiter(',');
  }
  cmd->add_option("--output", a.output, "write the JSON-lines trace to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliding-window register consensus: verification harness"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kslide_version()));

  RunArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check every schedule of the consensus protocol");
  add_run_options(verify, verify_args);
  verify->add_flag("--crashes", verify_args.crashes, "also enumerate crash patterns");

  RunArgs violate_args;
  auto* violate = app.add_subcommand("violate", "run k+1 processes and print a disagreement");
  add_run_options(violate, violate_args, false);

  RunArgs replay_args;
  std::string schedule;
  auto* replay = app.add_subcommand("replay", "run one schedule and print its outcome");
  add_run_options(replay, replay_args);
  replay->add_option("--schedule", schedule, "steps such as E1,E1,C2,E3")->required();

  RunArgs valence_args;
  std::string format = "text";
  auto* valence = app.add_subcommand("valence", "classify every reachable configuration");
  add_run_options(valence, valence_args);
  valence->add_option("--format", format, "graph format")
      ->check(CLI::IsMember({"text", "dot", "json"}));

  auto* lincheck = app.add_subcommand("lincheck", "linearizability checks of the register");
  lincheck->require_subcommand(1);
  kslide_stress_params stress{4, 5, 2, 0, 1000, KSLIDE_IMPL_CONCURRENT};
  std::string mutant;
  std::string stress_output;
  auto* stress_cmd = lincheck->add_subcommand("stress", "generate and check concurrent histories");
  stress_cmd->add_option("--threads", stress.threads, "worker threads")->capture_default_str();
  stress_cmd->add_option("--ops", stress.ops_per_thread, "operations per thread")->capture_default_str();
  stress_cmd->add_option("--k", stress.k, "window size")->capture_default_str();
  stress_cmd->add_option("--seed", stress.seed, "base seed; history i uses seed+i")
      ->envname("KSLIDE_SEED")
      ->capture_default_str();
  stress_cmd->add_option("--histories", stress.histories, "number of histories")->capture_default_str();
  stress_cmd->add_option("--mutant", mutant, "check a deliberately broken register")
      ->check(CLI::IsMember({"window-short"}));
  stress_cmd->add_option("--output", stress_output,
                         "save the first failing history (or the first history)");
  std::string history_path;
  auto* file_cmd = lincheck->add_subcommand("file", "re-check a serialized history");
  file_cmd->add_option("--path", history_path, "JSON-lines history")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  kslide_report* raw = nullptr;

  if (*verify) {
    const auto p = params_of(verify_args);
    return finish(kslide_verify(&p, &raw), &raw, verify_args.output);
  }
  if (*violate) {
    return finish(kslide_violate(violate_args.k, &raw), &raw, violate_args.output);
  }
  if (*replay) {
    const auto p = params_of(replay_args);
    return finish(kslide_replay(&p, schedule.c_str(), &raw), &raw, replay_args.output);
  }
  if (*valence) {
    const auto p = params_of(valence_args);
    const kslide_graph_format f = format == "dot"    ? KSLIDE_GRAPH_DOT
                                  : format == "json" ? KSLIDE_GRAPH_JSON
                                                     : KSLIDE_GRAPH_TEXT;
    const kslide_error err = kslide_valence(&p, f, &raw);
    if (err != KSLIDE_OK) return library_error(err);
    const ReportPtr report(raw);
    // The graph owns stdout unless it goes to a file.
    if (valence_args.output.empty()) {
      std::cerr << kslide_report_summary(report.get());
      std::cout << kslide_report_trace(report.get());
    } else {
      std::cout << kslide_report_summary(report.get());
      if (!write_file(valence_args.output, kslide_report_trace(report.get()))) return kUsageError;
    }
    return kslide_report_verdict(report.get());
  }
  if (*stress_cmd) {
    if (mutant == "window-short") stress.implementation = KSLIDE_IMPL_WINDOW_SHORT_MUTANT;
    return finish(kslide_lincheck_stress(&stress, &raw), &raw, stress_output);
  }
  if (*file_cmd) {
    std::ifstream in(history_path, std::ios::binary);
    if (!in) {
      std::cerr << "kslide: cannot read " << history_path << '\n';
      return kUsageError;
    }
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return finish(kslide_lincheck_history(text.data(), text.size(), &raw), &raw, "");
  }
  return kUsageError;
}
