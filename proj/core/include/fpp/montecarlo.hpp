#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "fpp/rng.hpp"

namespace fpp {

/// Draws are generated in fixed blocks; block b uses RngStream(seed, stream_base + b).
/// The output depends only on (n, seed, stream_base), never on the thread count.
inline constexpr std::size_t kMonteCarloBlock = 4096;

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = draw(rng) for i < n, filled in parallel over blocks.
template <class T, class Draw>
std::vector<T> monte_carlo(std::size_t n, std::uint64_t seed, Draw&& draw, unsigned jobs = 1,
                           std::uint64_t stream_base = 0) {
  std::vector<T> out(n);
  const std::size_t blocks = (n + kMonteCarloBlock - 1) / kMonteCarloBlock;
  auto run_block = [&](std::size_t b) {
    RngStream rng(seed, stream_base + b);
    const std::size_t end = std::min(n, (b + 1) * kMonteCarloBlock);
    for (std::size_t i = b * kMonteCarloBlock; i < end; ++i) out[i] = draw(rng);
  };
  const unsigned workers = std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(blocks, 1));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t b = w; b < blocks; b += workers) run_block(b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace fpp
