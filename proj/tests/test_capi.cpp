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

#include <cstring>
#include <string>
#include <vector>

#include "kslide/kslide.h"

namespace {

std::vector<int64_t> read_all(const kslide_register* r, size_t k) {
  std::vector<int64_t> out(k);
  size_t written = 0;
  REQUIRE(kslide_register_read(r, out.data(), out.size(), &written) == KSLIDE_OK);
  REQUIRE(written == k);
  return out;
}

}  // namespace

TEST_CASE("version and error names") {
  CHECK(std::string(kslide_version()) == "1.0.0");
  CHECK(std::string(kslide_error_name(KSLIDE_OK)) == "ok");
  CHECK(std::string(kslide_error_name(KSLIDE_ERR_CAPACITY)) == "capacity exceeded");
}

TEST_CASE("registers through the C interface") {
  for (auto kind : {KSLIDE_REGISTER_SEQUENTIAL, KSLIDE_REGISTER_CONCURRENT}) {
    kslide_register* r = nullptr;
    REQUIRE(kslide_register_create(3, kind, &r) == KSLIDE_OK);
    CHECK(read_all(r, 3) == std::vector<int64_t>{KSLIDE_BOTTOM, KSLIDE_BOTTOM, KSLIDE_BOTTOM});
    for (uint32_t v : {1u, 2u, 3u, 4u}) REQUIRE(kslide_register_write(r, v) == KSLIDE_OK);
    CHECK(read_all(r, 3) == std::vector<int64_t>{2, 3, 4});

    int64_t two[2];
    size_t written = 0;
    REQUIRE(kslide_register_read_narrow(r, 2, two, 2, &written) == KSLIDE_OK);
    CHECK(written == 2);
    CHECK(two[0] == 3);
    CHECK(two[1] == 4);
    CHECK(kslide_register_read_narrow(r, 4, two, 2, &written) == KSLIDE_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(kslide_last_error()) > 0);
    CHECK(kslide_register_read(r, two, 2, &written) == KSLIDE_ERR_INVALID_ARGUMENT);

    uint64_t count = 0;
    REQUIRE(kslide_register_write_count(r, &count) == KSLIDE_OK);
    CHECK(count == 4);
    kslide_register_destroy(r);
  }
  kslide_register* r = nullptr;
  CHECK(kslide_register_create(0, KSLIDE_REGISTER_SEQUENTIAL, &r) == KSLIDE_ERR_INVALID_ARGUMENT);
  CHECK(kslide_register_create(2, static_cast<kslide_register_kind>(7), &r) ==
        KSLIDE_ERR_INVALID_ARGUMENT);
  CHECK(kslide_register_write(nullptr, 1) == KSLIDE_ERR_INVALID_ARGUMENT);
  kslide_register_destroy(nullptr);
}

TEST_CASE("consensus through the C interface") {
  kslide_consensus* c = nullptr;
  REQUIRE(kslide_consensus_create(2, &c) == KSLIDE_OK);
  uint32_t d = 99;
  REQUIRE(kslide_consensus_propose(c, 1, 5, &d) == KSLIDE_OK);
  CHECK(d == 5);
  REQUIRE(kslide_consensus_propose(c, 2, 6, &d) == KSLIDE_OK);
  CHECK(d == 5);
  CHECK(kslide_consensus_propose(c, 2, 6, &d) == KSLIDE_ERR_PROTOCOL_MISUSE);
  CHECK(kslide_consensus_propose(c, 3, 7, &d) == KSLIDE_ERR_CAPACITY);
  kslide_consensus_set_enforce_capacity(c, 0);
  CHECK(kslide_consensus_propose(c, 3, 7, &d) == KSLIDE_OK);
  kslide_consensus_destroy(c);
  kslide_consensus_destroy(nullptr);
}

TEST_CASE("verification runs through the C interface") {
  kslide_report* r = nullptr;
  const kslide_run_params p3{3, 3, nullptr, 0, 0};
  REQUIRE(kslide_verify(&p3, &r) == KSLIDE_OK);
  CHECK(kslide_report_verdict(r) == 0);
  CHECK(kslide_report_count(r, KSLIDE_COUNT_CRASH_FREE) == 90);
  CHECK(std::string(kslide_report_summary(r)) == "90 crash-free schedules, 0 violations\n");
  kslide_report_destroy(r);

  const kslide_run_params bad{0, 1, nullptr, 0, 0};
  CHECK(kslide_verify(&bad, &r) == KSLIDE_ERR_INVALID_ARGUMENT);
  CHECK(kslide_verify(nullptr, &r) == KSLIDE_ERR_INVALID_ARGUMENT);

  REQUIRE(kslide_violate(2, &r) == KSLIDE_OK);
  CHECK(kslide_report_verdict(r) == 1);
  CHECK(std::string(kslide_report_summary(r)).find("[E1,E1,E2,E3,E2]") != std::string::npos);
  kslide_report_destroy(r);

  const uint32_t inputs[] = {0, 1};
  const kslide_run_params p{1, 2, inputs, 2, 0};
  REQUIRE(kslide_replay(&p, "E1,E1,E2,E2", &r) == KSLIDE_OK);
  CHECK(kslide_report_verdict(r) == 1);
  kslide_report_destroy(r);
  CHECK(kslide_replay(&p, "E1,E9", &r) == KSLIDE_ERR_MALFORMED_SCHEDULE);
  CHECK(kslide_replay(&p, "hello", &r) == KSLIDE_ERR_MALFORMED_SCHEDULE);

  REQUIRE(kslide_valence(&p, KSLIDE_GRAPH_DOT, &r) == KSLIDE_OK);
  CHECK(kslide_report_count(r, KSLIDE_COUNT_NODES) > 0);
  CHECK(std::string(kslide_report_trace(r)).rfind("digraph", 0) == 0);
  kslide_report_destroy(r);
  CHECK(kslide_valence(&p, static_cast<kslide_graph_format>(9), &r) == KSLIDE_ERR_INVALID_ARGUMENT);

  CHECK(kslide_report_verdict(nullptr) == -1);
  CHECK(std::string(kslide_report_summary(nullptr)).empty());
  kslide_report_destroy(nullptr);
}

TEST_CASE("lincheck through the C interface") {
  kslide_report* r = nullptr;
  const kslide_stress_params ok{4, 5, 2, 3, 20, KSLIDE_IMPL_CONCURRENT};
  REQUIRE(kslide_lincheck_stress(&ok, &r) == KSLIDE_OK);
  CHECK(kslide_report_verdict(r) == 0);
  CHECK(kslide_report_count(r, KSLIDE_COUNT_HISTORIES) == 20);
  const std::string history = kslide_report_trace(r);
  kslide_report_destroy(r);

  REQUIRE(kslide_lincheck_history(history.data(), history.size(), &r) == KSLIDE_OK);
  CHECK(kslide_report_verdict(r) == 0);
  kslide_report_destroy(r);

  CHECK(kslide_lincheck_history("{}", 2, &r) == KSLIDE_ERR_MALFORMED_HISTORY);
  const kslide_stress_params lonely{1, 5, 2, 3, 20, KSLIDE_IMPL_CONCURRENT};
  CHECK(kslide_lincheck_stress(&lonely, &r) == KSLIDE_ERR_INVALID_ARGUMENT);
}
