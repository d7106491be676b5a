#pragma once

#include <functional>

#include "quartic/common.hpp"

namespace quartic {

/// Overrides the worker count. 0 restores the default, which is the
/// QUARTIC_THREADS environment variable when set, else the hardware count.
void set_thread_count(int n);
int thread_count();

/// Runs fn(chunk, begin, end) over [0, n) split into contiguous chunks, one
/// per worker. Callers merge per-chunk results in chunk order, so any
/// reduction that is associative over that order is deterministic.
void parallel_chunks(u64 n, const std::function<void(int chunk, u64 begin, u64 end)>& fn);

/// Number of chunks parallel_chunks will use for n items.
int chunk_count(u64 n);

}  // namespace quartic
