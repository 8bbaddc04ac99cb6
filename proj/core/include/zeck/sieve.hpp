#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace zeck {

/// Segmented sieve of Eratosthenes over odd numbers, bit-packed.
///
/// Segments are processed independently; parallel runs merge per-segment
/// results in ascending segment order, so every reduction is bit-identical
/// regardless of worker count.
class PrimeSieve {
 public:
  /// segment_bytes controls the bitset size per segment (default 1 MiB,
  /// i.e. 16M odd numbers per segment).
  explicit PrimeSieve(std::uint64_t limit, std::size_t segment_bytes = 1 << 20);

  std::uint64_t limit() const { return limit_; }
  std::uint64_t segment_count() const;

  /// Primes in segment `index`, ascending.  Thread-safe (const).
  void primes_in_segment(std::uint64_t index, std::vector<std::uint64_t>* out) const;

 private:
  std::uint64_t limit_;
  std::uint64_t span_;  // odd numbers per segment
  std::vector<std::uint32_t> base_primes_;  // odd primes <= sqrt(limit)
};

/// Calls fn(p) for every prime p <= limit, ascending, single thread.
void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn);

/// Per-segment map, ordered reduce.  `map` fills an accumulator of type T
/// from the primes of one segment; `combine(acc, t)` folds them in segment
/// order.  threads <= 1 runs inline.
template <typename T, typename MapFn, typename CombineFn>
T parallel_prime_reduce(std::uint64_t limit, int threads, T init, MapFn map,
                        CombineFn combine);

/// pi(x): exact prime count.
std::uint64_t prime_pi(std::uint64_t x, int threads = 1);

/// Deterministic Miller-Rabin for 64-bit integers (proven base set).
bool is_prime_u64(std::uint64_t n);

}  // namespace zeck

#include "zeck/sieve_impl.hpp"
