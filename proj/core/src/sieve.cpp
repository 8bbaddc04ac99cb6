#include "zeck/sieve.hpp"

#include <cmath>
#include <stdexcept>

namespace zeck {

namespace {

// Simple sieve for the base primes up to n (inclusive), odd primes only.
std::vector<std::uint32_t> odd_primes_upto(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  if (n < 3) return out;
  const std::size_t m = (n - 1) / 2;  // odd numbers 3,5,...,<=n
  std::vector<bool> composite(m + 1, false);
  for (std::size_t i = 1; i <= m; ++i) {
    const std::uint64_t p = 2 * i + 1;
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t j = (p * p - 1) / 2; j <= m; j += p) composite[j] = true;
  }
  return out;
}

}  // namespace

PrimeSieve::PrimeSieve(std::uint64_t limit, std::size_t segment_bytes)
    : limit_(limit), span_(static_cast<std::uint64_t>(segment_bytes) * 8) {
  if (limit < 2) throw std::invalid_argument("PrimeSieve: limit < 2");
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;
  base_primes_ = odd_primes_upto(static_cast<std::uint32_t>(root));
}

std::uint64_t PrimeSieve::segment_count() const {
  const std::uint64_t odds = limit_ / 2 + 1;  // odd numbers 1,3,...,<=limit
  return (odds + span_ - 1) / span_;
}

void PrimeSieve::primes_in_segment(std::uint64_t index,
                                   std::vector<std::uint64_t>* out) const {
  out->clear();
  // Segment covers odd numbers 2*(lo_idx+i)+1 for i in [0, span).
  const std::uint64_t lo_idx = index * span_;
  const std::uint64_t hi_idx = std::min(lo_idx + span_, limit_ / 2 + 1);
  if (lo_idx >= hi_idx) return;
  const std::uint64_t count = hi_idx - lo_idx;

  std::vector<std::uint64_t> bits((count + 63) / 64, 0);
  auto mark = [&](std::uint64_t i) { bits[i >> 6] |= (1ULL << (i & 63)); };
  auto marked = [&](std::uint64_t i) { return (bits[i >> 6] >> (i & 63)) & 1; };

  for (const std::uint32_t p : base_primes_) {
    const std::uint64_t p64 = p;
    if (p64 * p64 > limit_) break;
    // First odd multiple of p at or above max(p^2, first value of segment).
    const std::uint64_t lo_val = 2 * lo_idx + 1;
    std::uint64_t start = p64 * p64;
    if (start < lo_val) {
      std::uint64_t q = (lo_val + p64 - 1) / p64;
      if (q % 2 == 0) ++q;
      start = q * p64;
    }
    for (std::uint64_t v = start; v <= 2 * (hi_idx - 1) + 1; v += 2 * p64)
      mark((v - 1) / 2 - lo_idx);
  }

  if (lo_idx == 0) {
    mark(0);  // 1 is not prime
    if (limit_ >= 2) out->push_back(2);
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t val = 2 * (lo_idx + i) + 1;
    if (val <= limit_ && !marked(i)) out->push_back(val);
  }
}

void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn) {
  PrimeSieve sieve(limit);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t s = 0; s < sieve.segment_count(); ++s) {
    sieve.primes_in_segment(s, &primes);
    for (const std::uint64_t p : primes) fn(p);
  }
}

std::uint64_t prime_pi(std::uint64_t x, int threads) {
  return parallel_prime_reduce<std::uint64_t>(
      x, threads, 0,
      [](const std::vector<std::uint64_t>& primes) { return primes.size(); },
      [](std::uint64_t& acc, std::uint64_t c) { acc += c; });
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // Proven deterministic base set for n < 2^64 (Sorenson & Webster).
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace zeck
