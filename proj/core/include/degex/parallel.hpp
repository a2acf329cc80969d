#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace degex {

/// Splits [0, count) into `chunks` contiguous ranges and runs
/// fn(chunk_index, begin, end) on up to `threads` workers. Callers store
/// per-chunk results and merge them in chunk order, which keeps the output
/// independent of the thread count. The first exception thrown by a worker
/// is rethrown on the calling thread.
template <typename Fn>
void parallel_chunks(std::uint64_t count, std::uint64_t chunks, unsigned threads, Fn&& fn) {
  if (count == 0) return;
  chunks = std::clamp<std::uint64_t>(chunks, 1, count);
  auto bounds = [&](std::uint64_t c) { return count / chunks * c + std::min(c, count % chunks); };

  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, chunks));
  if (threads == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) fn(c, bounds(c), bounds(c + 1));
    return;
  }

  std::mutex mutex;
  std::uint64_t next = 0;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::uint64_t c;
      {
        std::lock_guard lock(mutex);
        if (next == chunks || error) return;
        c = next++;
      }
      try {
        fn(c, bounds(c), bounds(c + 1));
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

/// Chunk count used by the exhaustive scans: enough pieces to balance up to
/// `threads` workers, a fixed shape when threads == 1.
inline std::uint64_t default_chunks(std::uint64_t count, unsigned threads) {
  return std::min<std::uint64_t>(count, threads <= 1 ? 1 : std::uint64_t{threads} * 8);
}

}  // namespace degex
