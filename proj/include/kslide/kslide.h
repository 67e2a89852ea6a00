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

/*
 * C interface of libkslide.
 *
 * Every fallible function returns a kslide_error. On failure a message for
 * the calling thread is available from kslide_last_error() until the next
 * failing call on that thread. Handles are opaque; each create/run function
 * has a matching destroy function, and destroy functions accept NULL.
 */

#ifndef KSLIDE_H
#define KSLIDE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KSLIDE_BUILDING_LIBRARY)
#    define KSLIDE_API __declspec(dllexport)
#  else
#    define KSLIDE_API __declspec(dllimport)
#  endif
#else
#  define KSLIDE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kslide_error {
  KSLIDE_OK = 0,
  KSLIDE_ERR_INVALID_ARGUMENT = 1,
  KSLIDE_ERR_MALFORMED_SCHEDULE = 2,
  KSLIDE_ERR_MALFORMED_HISTORY = 3,
  KSLIDE_ERR_MALFORMED_TRACE = 4,
  KSLIDE_ERR_PROTOCOL_MISUSE = 5,
  KSLIDE_ERR_CAPACITY = 6,
  KSLIDE_ERR_EXPLORATION_BOUND = 7,
  KSLIDE_ERR_IO = 8,
  KSLIDE_ERR_INTERNAL = 9
} kslide_error;

/* Read results use this for bottom. */
#define KSLIDE_BOTTOM (-1)

KSLIDE_API const char* kslide_version(void);
KSLIDE_API const char* kslide_error_name(kslide_error err);
KSLIDE_API const char* kslide_last_error(void);

/* ---- registers ---------------------------------------------------------- */

typedef enum kslide_register_kind {
  KSLIDE_REGISTER_SEQUENTIAL = 0,
  KSLIDE_REGISTER_CONCURRENT = 1
} kslide_register_kind;

typedef struct kslide_register kslide_register;

KSLIDE_API kslide_error kslide_register_create(uint32_t k, kslide_register_kind kind,
                                               kslide_register** out);
KSLIDE_API void kslide_register_destroy(kslide_register* reg);
KSLIDE_API kslide_error kslide_register_write(kslide_register* reg, uint32_t value);

/* Fills slots[0..k) oldest first; bottom is KSLIDE_BOTTOM. capacity must be
 * at least k. *written receives k. */
KSLIDE_API kslide_error kslide_register_read(const kslide_register* reg, int64_t* slots,
                                             size_t capacity, size_t* written);

/* Read through a window of size k_prime (1 <= k_prime <= k). */
KSLIDE_API kslide_error kslide_register_read_narrow(const kslide_register* reg, uint32_t k_prime,
                                                    int64_t* slots, size_t capacity,
                                                    size_t* written);
KSLIDE_API kslide_error kslide_register_write_count(const kslide_register* reg, uint64_t* out);

/* ---- consensus ---------------------------------------------------------- */

typedef struct kslide_consensus kslide_consensus;

KSLIDE_API kslide_error kslide_consensus_create(uint32_t k, kslide_consensus** out);
KSLIDE_API void kslide_consensus_destroy(kslide_consensus* c);

/* Thread-safe for distinct pids. A repeated pid gives
 * KSLIDE_ERR_PROTOCOL_MISUSE and a (k+1)-th pid KSLIDE_ERR_CAPACITY unless
 * enforcement was turned off. */
KSLIDE_API kslide_error kslide_consensus_propose(kslide_consensus* c, uint32_t pid, uint32_t value,
                                                 uint32_t* decision);
KSLIDE_API void kslide_consensus_set_enforce_capacity(kslide_consensus* c, int enforce);

/* ---- verification runs -------------------------------------------------- */

typedef struct kslide_report kslide_report;

typedef enum kslide_counter {
  KSLIDE_COUNT_CRASH_FREE = 0,
  KSLIDE_COUNT_WITH_CRASHES = 1,
  KSLIDE_COUNT_VIOLATIONS = 2,
  KSLIDE_COUNT_NODES = 3,
  KSLIDE_COUNT_BIVALENT = 4,
  KSLIDE_COUNT_MONOVALENT = 5,
  KSLIDE_COUNT_CRITICAL = 6,
  KSLIDE_COUNT_HISTORIES = 7,
  KSLIDE_COUNT_FAILURES = 8
} kslide_counter;

typedef enum kslide_graph_format {
  KSLIDE_GRAPH_TEXT = 0,
  KSLIDE_GRAPH_DOT = 1,
  KSLIDE_GRAPH_JSON = 2
} kslide_graph_format;

typedef enum kslide_implementation {
  KSLIDE_IMPL_CONCURRENT = 0,
  KSLIDE_IMPL_WINDOW_SHORT_MUTANT = 1
} kslide_implementation;

/* inputs == NULL (or inputs_len == 0) selects the default: pid i proposes i-1. */
typedef struct kslide_run_params {
  uint32_t k;
  uint32_t n;
  const uint32_t* inputs;
  size_t inputs_len;
  int with_crashes;
} kslide_run_params;

typedef struct kslide_stress_params {
  uint32_t threads;
  uint32_t ops_per_thread;
  uint32_t k;
  uint64_t seed;
  uint32_t histories;
  kslide_implementation implementation;
} kslide_stress_params;

/* 0 = every property holds, 1 = a violation exists. */
KSLIDE_API int kslide_report_verdict(const kslide_report* r);
KSLIDE_API const char* kslide_report_summary(const kslide_report* r);
/* JSON lines (or text/DOT for valence graphs in those formats). */
KSLIDE_API const char* kslide_report_trace(const kslide_report* r);
KSLIDE_API uint64_t kslide_report_count(const kslide_report* r, kslide_counter which);
KSLIDE_API void kslide_report_destroy(kslide_report* r);

KSLIDE_API kslide_error kslide_verify(const kslide_run_params* params, kslide_report** out);
KSLIDE_API kslide_error kslide_violate(uint32_t k, kslide_report** out);
/* schedule is text such as "E1,E1,C2,E3". */
KSLIDE_API kslide_error kslide_replay(const kslide_run_params* params, const char* schedule,
                                      kslide_report** out);
KSLIDE_API kslide_error kslide_valence(const kslide_run_params* params, kslide_graph_format format,
                                       kslide_report** out);
KSLIDE_API kslide_error kslide_lincheck_stress(const kslide_stress_params* params,
                                               kslide_report** out);
/* history is the JSON-lines text of a serialized history. */
KSLIDE_API kslide_error kslide_lincheck_history(const char* history, size_t length,
                                                kslide_report** out);

#ifdef __cplusplus
}
#endif

#endif /* KSLIDE_H */
