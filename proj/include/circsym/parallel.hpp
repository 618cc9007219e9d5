#pragma once

#include <cstddef>
#include <functional>

namespace circsym {

/// Runs fn(index) for every index in [0, count) on a bounded worker pool.
/// Blocks until all tasks finish; the first exception is rethrown. Pass
/// workers = 0 for the hardware default.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn,
                        unsigned workers = 0);

}  // namespace circsym
