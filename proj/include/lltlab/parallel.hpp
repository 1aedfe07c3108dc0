#pragma once

#include <cstddef>
#include <functional>

namespace llt {

/// Worker count used when an EnumOptions leaves threads at 0.  Defaults to
/// the hardware concurrency; the CLI overrides it via --threads.
int default_thread_count();
void set_default_thread_count(int threads);

/// Splits [0, total) into contiguous chunks, one per worker, and runs
/// fn(worker_index, begin, end) on each.  Workers receive deterministic
/// ranges, so any merge done in worker-index order is reproducible.
void parallel_chunks(std::size_t total, int threads,
                     const std::function<void(int, std::size_t, std::size_t)>& fn);

}  // namespace llt
