#pragma once

#include <cstddef>
#include <functional>

// Row-parallel helper for the grid sweeps.  Work items are independent and
// write only their own slots, so results are identical for any thread count;
// reductions happen sequentially afterwards.

namespace trace_sharp::parallel {

// 0 = auto (hardware concurrency).  Process-wide.
void set_max_threads(unsigned count);
unsigned max_threads();

// Invokes body(i) for i in [0, count), partitioned over the configured
// number of threads.  Exceptions from workers are rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace trace_sharp::parallel
