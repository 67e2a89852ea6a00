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

#include "kslide/kslide.h"

#include <memory>
#include <new>
#include <string>
#include <vector>

#include "kslide/consensus.hpp"
#include "kslide/error.hpp"
#include "kslide/harness.hpp"
#include "kslide/register.hpp"

struct kslide_register {
  std::unique_ptr<kslide::Register> impl;
};

struct kslide_consensus {
  kslide::ConsensusInstance impl;
};

struct kslide_report {
  kslide::harness::Report impl;
};

namespace {

thread_local std::string last_error;

kslide_error map_code(kslide::ErrorCode code) {
  using kslide::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return KSLIDE_ERR_INVALID_ARGUMENT;
    case ErrorCode::MalformedSchedule: return KSLIDE_ERR_MALFORMED_SCHEDULE;
    case ErrorCode::MalformedHistory: return KSLIDE_ERR_MALFORMED_HISTORY;
    case ErrorCode::MalformedTrace: return KSLIDE_ERR_MALFORMED_TRACE;
    case ErrorCode::ProtocolMisuse: return KSLIDE_ERR_PROTOCOL_MISUSE;
    case ErrorCode::CapacityExceeded: return KSLIDE_ERR_CAPACITY;
    case ErrorCode::ExplorationBound: return KSLIDE_ERR_EXPLORATION_BOUND;
    case ErrorCode::Io: return KSLIDE_ERR_IO;
    case ErrorCode::Internal: return KSLIDE_ERR_INTERNAL;
  }
  return KSLIDE_ERR_INTERNAL;
}

kslide_error fail(kslide_error err, const std::string& message) {
  last_error = message;
  return err;
}

// Runs body and converts any exception into an error code.
template <typename F>
kslide_error guarded(F&& body) {
  try {
    body();
    return KSLIDE_OK;
  } catch (const kslide::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KSLIDE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KSLIDE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KSLIDE_ERR_INTERNAL, "unknown exception");
  }
}

#define KSLIDE_REQUIRE(cond, what) \
  if (!(cond)) return fail(KSLIDE_ERR_INVALID_ARGUMENT, what)

kslide_error copy_window(const kslide::Window& w, int64_t* slots, size_t capacity, size_t* written) {
  if (capacity < w.size()) {
    return fail(KSLIDE_ERR_INVALID_ARGUMENT,
                "buffer holds " + std::to_string(capacity) + " slots, need " + std::to_string(w.size()));
  }
  for (size_t i = 0; i < w.size(); ++i) slots[i] = w[i] ? static_cast<int64_t>(*w[i]) : KSLIDE_BOTTOM;
  if (written) *written = w.size();
  return KSLIDE_OK;
}

std::vector<kslide::Value> inputs_of(const kslide_run_params* p) {
  if (p->inputs == nullptr || p->inputs_len == 0) return {};
  return {p->inputs, p->inputs + p->inputs_len};
}

kslide_error emit(kslide::harness::Report report, kslide_report** out) {
  *out = new kslide_report{std::move(report)};
  return KSLIDE_OK;
}

}  // namespace

extern "C" {

const char* kslide_version(void) { return "1.0.0"; }

const char* kslide_error_name(kslide_error err) {
  switch (err) {
    case KSLIDE_OK: return "ok";
    case KSLIDE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KSLIDE_ERR_MALFORMED_SCHEDULE: return "malformed schedule";
    case KSLIDE_ERR_MALFORMED_HISTORY: return "malformed history";
    case KSLIDE_ERR_MALFORMED_TRACE: return "malformed trace";
    case KSLIDE_ERR_PROTOCOL_MISUSE: return "protocol misuse";
    case KSLIDE_ERR_CAPACITY: return "capacity exceeded";
    case KSLIDE_ERR_EXPLORATION_BOUND: return "exploration bound exceeded";
    case KSLIDE_ERR_IO: return "i/o error";
    case KSLIDE_ERR_INTERNAL: return "internal error";
  }
  return "unknown error";
}

const char* kslide_last_error(void) { return last_error.c_str(); }

kslide_error kslide_register_create(uint32_t k, kslide_register_kind kind, kslide_register** out) {
  KSLIDE_REQUIRE(out, "out must not be null");
  KSLIDE_REQUIRE(kind == KSLIDE_REGISTER_SEQUENTIAL || kind == KSLIDE_REGISTER_CONCURRENT,
                 "unknown register kind");
  return guarded([&] {
    auto reg = std::make_unique<kslide_register>();
    if (kind == KSLIDE_REGISTER_SEQUENTIAL) {
      reg->impl = std::make_unique<kslide::SequentialRegister>(k);
    } else {
      reg->impl = std::make_unique<kslide::ConcurrentRegister>(k);
    }
    *out = reg.release();
  });
}

void kslide_register_destroy(kslide_register* reg) { delete reg; }

kslide_error kslide_register_write(kslide_register* reg, uint32_t value) {
  KSLIDE_REQUIRE(reg, "register must not be null");
  return guarded([&] { reg->impl->write(value); });
}

kslide_error kslide_register_read(const kslide_register* reg, int64_t* slots, size_t capacity,
                                  size_t* written) {
  KSLIDE_REQUIRE(reg && slots, "register and buffer must not be null");
  kslide_error err = KSLIDE_OK;
  const kslide_error thrown = guarded([&] { err = copy_window(reg->impl->read(), slots, capacity, written); });
  return thrown != KSLIDE_OK ? thrown : err;
}

kslide_error kslide_register_read_narrow(const kslide_register* reg, uint32_t k_prime, int64_t* slots,
                                         size_t capacity, size_t* written) {
  KSLIDE_REQUIRE(reg && slots, "register and buffer must not be null");
  kslide_error err = KSLIDE_OK;
  const kslide_error thrown = guarded([&] {
    const kslide::NarrowView view(*reg->impl, k_prime);
    err = copy_window(view.read(), slots, capacity, written);
  });
  return thrown != KSLIDE_OK ? thrown : err;
}

kslide_error kslide_register_write_count(const kslide_register* reg, uint64_t* out) {
  KSLIDE_REQUIRE(reg && out, "register and out must not be null");
  return guarded([&] {
    if (const auto* seq = dynamic_cast<const kslide::SequentialRegister*>(reg->impl.get())) {
      *out = seq->state().writes();
    } else {
      *out = static_cast<const kslide::ConcurrentRegister&>(*reg->impl).writes();
    }
  });
}

kslide_error kslide_consensus_create(uint32_t k, kslide_consensus** out) {
  KSLIDE_REQUIRE(out, "out must not be null");
  return guarded([&] { *out = new kslide_consensus{kslide::ConsensusInstance(k)}; });
}

void kslide_consensus_destroy(kslide_consensus* c) { delete c; }

kslide_error kslide_consensus_propose(kslide_consensus* c, uint32_t pid, uint32_t value,
                                      uint32_t* decision) {
  KSLIDE_REQUIRE(c && decision, "instance and decision must not be null");
  return guarded([&] { *decision = c->impl.propose(pid, value).value; });
}

void kslide_consensus_set_enforce_capacity(kslide_consensus* c, int enforce) {
  if (c) c->impl.set_enforce_capacity(enforce != 0);
}

int kslide_report_verdict(const kslide_report* r) { return r ? r->impl.verdict : -1; }

const char* kslide_report_summary(const kslide_report* r) { return r ? r->impl.summary.c_str() : ""; }

const char* kslide_report_trace(const kslide_report* r) { return r ? r->impl.trace.c_str() : ""; }

uint64_t kslide_report_count(const kslide_report* r, kslide_counter which) {
  if (!r) return 0;
  const auto& c = r->impl.counters;
  switch (which) {
    case KSLIDE_COUNT_CRASH_FREE: return c.crash_free;
    case KSLIDE_COUNT_WITH_CRASHES: return c.with_crashes;
    case KSLIDE_COUNT_VIOLATIONS: return c.violations;
    case KSLIDE_COUNT_NODES: return c.nodes;
    case KSLIDE_COUNT_BIVALENT: return c.bivalent;
    case KSLIDE_COUNT_MONOVALENT: return c.monovalent;
    case KSLIDE_COUNT_CRITICAL: return c.critical;
    case KSLIDE_COUNT_HISTORIES: return c.histories;
    case KSLIDE_COUNT_FAILURES: return c.failures;
  }
  return 0;
}

void kslide_report_destroy(kslide_report* r) { delete r; }

kslide_error kslide_verify(const kslide_run_params* params, kslide_report** out) {
  KSLIDE_REQUIRE(params && out, "params and out must not be null");
  return guarded([&] {
    emit(kslide::harness::verify(params->k, params->n, inputs_of(params), params->with_crashes != 0), out);
  });
}

kslide_error kslide_violate(uint32_t k, kslide_report** out) {
  KSLIDE_REQUIRE(out, "out must not be null");
  return guarded([&] { emit(kslide::harness::violate(k), out); });
}

kslide_error kslide_replay(const kslide_run_params* params, const char* schedule, kslide_report** out) {
  KSLIDE_REQUIRE(params && schedule && out, "params, schedule and out must not be null");
  return guarded([&] {
    emit(kslide::harness::replay(params->k, params->n, inputs_of(params),
                                 kslide::Schedule::parse(schedule)),
         out);
  });
}

kslide_error kslide_valence(const kslide_run_params* params, kslide_graph_format format,
                            kslide_report** out) {
  KSLIDE_REQUIRE(params && out, "params and out must not be null");
  kslide::harness::GraphFormat f{};
  switch (format) {
    case KSLIDE_GRAPH_TEXT: f = kslide::harness::GraphFormat::Text; break;
    case KSLIDE_GRAPH_DOT: f = kslide::harness::GraphFormat::Dot; break;
    case KSLIDE_GRAPH_JSON: f = kslide::harness::GraphFormat::Json; break;
    default: return fail(KSLIDE_ERR_INVALID_ARGUMENT, "unknown graph format");
  }
  return guarded([&] { emit(kslide::harness::valence(params->k, params->n, inputs_of(params), f), out); });
}

kslide_error kslide_lincheck_stress(const kslide_stress_params* params, kslide_report** out) {
  KSLIDE_REQUIRE(params && out, "params and out must not be null");
  KSLIDE_REQUIRE(params->implementation == KSLIDE_IMPL_CONCURRENT ||
                     params->implementation == KSLIDE_IMPL_WINDOW_SHORT_MUTANT,
                 "unknown implementation");
  return guarded([&] {
    kslide::harness::StressRun run;
    run.options.threads = params->threads;
    run.options.ops_per_thread = params->ops_per_thread;
    run.options.k = params->k;
    run.options.seed = params->seed;
    run.options.implementation = params->implementation == KSLIDE_IMPL_CONCURRENT
                                     ? kslide::Implementation::Concurrent
                                     : kslide::Implementation::WindowShortMutant;
    run.histories = params->histories;
    emit(kslide::harness::lincheck_stress(run), out);
  });
}

kslide_error kslide_lincheck_history(const char* history, size_t length, kslide_report** out) {
  KSLIDE_REQUIRE(history && out, "history and out must not be null");
  return guarded([&] { emit(kslide::harness::lincheck_file(std::string_view(history, length)), out); });
}

}  // extern "C"
