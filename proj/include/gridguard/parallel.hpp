#pragma once

#include <cstddef>
#include <functional>

namespace gridguard {

// Worker count: hardware concurrency capped by the GRIDGUARD_THREADS
// environment variable (re-read on every call so tests can adjust it).
size_t effective_threads();

// Runs body(0..count-1) across the effective worker count. Items are claimed
// from an atomic counter; the first exception wins and is rethrown after all
// workers stop. Callers are responsible for writing results into per-index
// slots so the output order never depends on the schedule.
void parallel_for(size_t count, const std::function<void(size_t)>& body);

}  // namespace gridguard
