#pragma once

#include <algorithm>
#include <atomic>
#include <memory>
#include <thread>

namespace zeck {

template <typename T, typename MapFn, typename CombineFn>
T parallel_prime_reduce(std::uint64_t limit, int threads, T init, MapFn map,
                        CombineFn combine) {
  PrimeSieve sieve(limit);
  const std::uint64_t nseg = sieve.segment_count();
  if (threads <= 1) {
    T acc = std::move(init);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t s = 0; s < nseg; ++s) {
      sieve.primes_in_segment(s, &primes);
      combine(acc, map(primes));
    }
    return acc;
  }
  std::vector<std::unique_ptr<T>> partial(nseg);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    std::vector<std::uint64_t> primes;
    for (;;) {
      const std::uint64_t s = next.fetch_add(1);
      if (s >= nseg) return;
      sieve.primes_in_segment(s, &primes);
      partial[s] = std::make_unique<T>(map(primes));
    }
  };
  std::vector<std::thread> pool;
  const int nworkers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), nseg));
  pool.reserve(static_cast<std::size_t>(nworkers));
  for (int i = 0; i < nworkers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  // Ordered fold: identical to the sequential result bit for bit.
  T acc = std::move(init);
  for (std::uint64_t s = 0; s < nseg; ++s) combine(acc, *partial[s]);
  return acc;
}

}  // namespace zeck
