#pragma once

#include <cstdint>
#include <functional>

namespace topix {

// Worker count resolution: requested > 0 wins, else hardware concurrency,
// both capped by the TOPIX_THREADS environment variable when it is set.
int resolve_threads(int requested);

// Runs body(i) for i in [0, count). Work is split into contiguous blocks, one
// per worker; bodies must write only to their own index so that results do
// not depend on the partitioning.
void parallel_for_index(std::int64_t count, int threads, const std::function<void(std::int64_t)>& body);

} // namespace topix
