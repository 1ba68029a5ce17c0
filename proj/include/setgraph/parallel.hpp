#pragma once

#include <cstdint>
#include <functional>

namespace setgraph {

/// Worker count from the SETGRAPH_JOBS environment variable, else hardware concurrency.
int default_jobs();

/// Runs body(index, worker) for index in [0, count) on `jobs` threads. Indices are handed
/// out in contiguous chunks; callers merge per-worker state themselves. The first
/// exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::uint64_t count, int jobs, const std::function<void(std::uint64_t, int)>& body);

}  // namespace setgraph
