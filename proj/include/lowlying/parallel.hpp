#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace lowlying {

/// Sums partial(begin, end) over fixed chunks of [0, n) and reduces the chunk
/// results left to right. Chunk boundaries do not depend on `threads`, so the
/// result is bit-identical for every thread count.
template <class Partial>
double ordered_chunk_sum(std::size_t n, std::size_t chunk, unsigned threads, Partial&& partial) {
  if (n == 0) return 0.0;
  chunk = std::max<std::size_t>(chunk, 1);
  const std::size_t chunks = (n + chunk - 1) / chunk;
  std::vector<double> partials(chunks, 0.0);
  auto run = [&](std::size_t c) {
    const std::size_t begin = c * chunk;
    partials[c] = partial(begin, std::min(n, begin + chunk));
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < chunks; c = next++) run(c);
      });
    }
  }

  double total = 0.0;
  for (double p : partials) total += p;
  return total;
}

} // namespace lowlying
