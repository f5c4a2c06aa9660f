#pragma once

#include <cstdint>
#include <functional>

namespace tcmis {

/// Map workers <= 0 to the hardware concurrency (at least 1).
int resolve_workers(int workers);

/// Dynamic work queue: tasks [0, num_tasks) are claimed from a shared
/// atomic counter by a bounded pool. Task bodies must write disjoint
/// outputs; under that contract the result is independent of the worker
/// count and of claim order. Runs inline when one worker suffices.
void parallel_for(std::int64_t num_tasks, int workers,
                  const std::function<void(std::int64_t)>& task);

/// Same queue over contiguous index chunks, for per-element loops too
/// cheap to schedule individually.
void parallel_chunks(std::int64_t count, int workers,
                     const std::function<void(std::int64_t, std::int64_t)>& body);

}  // namespace tcmis
