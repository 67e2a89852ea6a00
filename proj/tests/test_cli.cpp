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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stdout captured and stderr discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + KSLIDE_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (const size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("verify") {
  auto r = cli("verify --k 3 --n 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("90 crash-free schedules, 0 violations") != std::string::npos);
  r = cli("verify --k 1 --n 2");
  CHECK(r.code == 1);
  CHECK(r.out.find("[E1,E1,E2,E2]") != std::string::npos);
  CHECK(cli("verify --k 0 --n 1").code == 2);
  CHECK(cli("verify --k 2 --n 2 --inputs 0").code == 2);
  CHECK(cli("verify --k 2 --n 2 --inputs 4,4 --crashes").code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("verify --k x --n 1").code == 2);
  CHECK(cli("violate").code == 2);
  CHECK(cli("valence --k 2 --n 2 --format svg").code == 2);
  CHECK(cli("replay --k 2 --n 2 --schedule E1,Z1").code == 2);
  CHECK(cli("lincheck").code == 2);
  CHECK(cli("lincheck file --path does-not-exist.jsonl").code == 2);
}

TEST_CASE("violate") {
  auto r = cli("violate --k 1");
  CHECK(r.code == 1);
  CHECK(r.out.find("p1 decides 0, p2 decides 1") != std::string::npos);
  r = cli("violate --k 2");
  CHECK(r.out.find("schedule [E1,E1,E2,E3,E2]") != std::string::npos);
  r = cli("violate --k 3");
  CHECK(r.code == 1);
  CHECK(r.out.find("disagreement with 4 processes") != std::string::npos);
}

TEST_CASE("traces are byte-identical and replay to the same outcome") {
  REQUIRE(cli("violate --k 2 --output cli_v1.jsonl").code == 1);
  REQUIRE(cli("violate --k 2 --output cli_v2.jsonl").code == 1);
  const std::string trace = slurp("cli_v1.jsonl");
  CHECK_FALSE(trace.empty());
  CHECK(trace == slurp("cli_v2.jsonl"));

  std::size_t replayed = 0;
  std::size_t start = 0;
  while (start < trace.size()) {
    const std::size_t end = trace.find('\n', start);
    const auto j = nlohmann::json::parse(trace.substr(start, end - start));
    start = end + 1;
    if (j["type"] != "violation") continue;
    std::string steps;
    for (const auto& s : j["steps"]) steps += (steps.empty() ? "" : ",") + s.get<std::string>();
    const auto r = cli("replay --k 2 --n 3 --schedule " + steps + " --output cli_replay.jsonl");
    CHECK(r.code == 1);
    auto back = nlohmann::json::parse(slurp("cli_replay.jsonl"));
    CHECK(back["type"] == "outcome");
    back["type"] = "violation";
    CHECK(back == j);
    ++replayed;
  }
  CHECK(replayed > 0);
}

TEST_CASE("replay") {
  const auto r = cli("replay --k 2 --n 2 --inputs 0,1 --schedule E1,C1,E2,E2");
  CHECK(r.code == 0);
  CHECK(r.out.find("p2 decides 0") != std::string::npos);
}

TEST_CASE("valence") {
  auto r = cli("valence --k 2 --n 2 --inputs 1,1");
  CHECK(r.code == 0);
  r = cli("valence --k 2 --n 2 --inputs 1,1 --output cli_val.txt");
  CHECK(r.out.find("0 bivalent") != std::string::npos);

  r = cli("valence --k 2 --n 2 --inputs 0,1 --format dot");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph valence {", 0) == 0);
  CHECK(r.out.find("->") != std::string::npos);
  CHECK(r.out.substr(r.out.size() - 2) == "}\n");

  r = cli("valence --k 1 --n 2 --inputs 0,1 --format json --output cli_val.jsonl");
  CHECK(r.code == 1);
  CHECK(r.out.find("root Bivalent({0,1})") != std::string::npos);
  CHECK(nlohmann::json::parse(slurp("cli_val.jsonl").substr(0, slurp("cli_val.jsonl").find('\n')))["type"] ==
        "valence-node");
}

TEST_CASE("lincheck stress and file") {
  auto r = cli("lincheck stress --threads 4 --ops 5 --k 2 --seed 7 --histories 100 --output cli_ok.jsonl");
  CHECK(r.code == 0);
  CHECK(cli("lincheck file --path cli_ok.jsonl").code == 0);

  r = cli("lincheck stress --mutant window-short --seed 7 --histories 100 --output cli_bad.jsonl");
  CHECK(r.code == 1);
  CHECK(cli("lincheck file --path cli_bad.jsonl").code == 1);

  {
    std::ofstream("cli_empty.jsonl");
  }
  CHECK(cli("lincheck file --path cli_empty.jsonl").code == 2);
  CHECK(setenv("KSLIDE_SEED", "11", 1) == 0);
  CHECK(cli("lincheck stress --histories 10").out.find("10 histories") != std::string::npos);
}
