#pragma once

#include <cstddef>
#include <functional>

namespace hardy {

/// Worker budget: hardware concurrency, capped by the HARDY_THREADS
/// environment variable when set. Always at least 1.
std::size_t worker_count();

/// Runs body(0..count-1) across the worker budget. Callers index into
/// pre-sized output so results do not depend on scheduling. The first
/// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hardy
