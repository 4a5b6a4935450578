#pragma once

#include <cstddef>
#include <functional>

namespace fxpca {

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware
/// concurrency). Each index is processed exactly once; callers keep results
/// deterministic by writing to per-index slots. Exceptions from workers are
/// rethrown on the calling thread.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn,
                        unsigned threads = 0);

}  // namespace fxpca
