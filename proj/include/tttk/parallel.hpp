#ifndef TTTK_PARALLEL_HPP
#define TTTK_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace tttk {

/// Effective worker count: explicit request (0 = hardware), capped by the
/// TTTK_THREADS environment variable when set.
std::size_t effective_threads(std::size_t requested = 0);

/// Runs fn(i) for i in [0, count) on up to n_threads workers.  Work is split
/// into contiguous chunks so results written to disjoint slots are identical
/// for any worker count.  Exceptions are captured and rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  std::size_t n_threads = 0);

/// Chunked variant: fn(chunk_index, begin, end).  Chunk boundaries depend
/// only on (count, n_threads), which keeps reductions deterministic for a
/// fixed thread cap.
void parallel_chunks(std::size_t count, std::size_t n_threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

std::size_t chunk_count(std::size_t count, std::size_t n_threads);

}  // namespace tttk

#endif
