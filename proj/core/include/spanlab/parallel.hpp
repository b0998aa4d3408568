#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace spanlab {

inline int default_workers() {
  const auto hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs body(chunk, begin, end) over contiguous chunks of [0, count). Chunk
// boundaries depend only on count and workers, so per-chunk results merged in
// chunk order are deterministic.
template <typename Body>
void parallel_chunks(std::size_t count, int workers, Body&& body) {
  const std::size_t w = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1,
                                                 std::max<std::size_t>(count, 1));
  if (w == 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t c = 0; c < w; ++c) {
    const std::size_t begin = count * c / w;
    const std::size_t end = count * (c + 1) / w;
    threads.emplace_back([&, c, begin, end] {
      try {
        body(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::size_t chunk_count(std::size_t count, int workers) {
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1,
                                 std::max<std::size_t>(count, 1));
}

}  // namespace spanlab
