#pragma once

#include <cstdint>
#include <vector>

#include "zeck/golden.hpp"

namespace zeck {

/// F_k with F_0 = 0, F_1 = 1, arbitrary precision.  Also defined for
/// k = -1 (F_{-1} = 1), which shows up in digit-count formulas.
BigInt fib(long long k);

/// F_k as uint64, valid for 0 <= k <= 93 (F_93 is the largest Fibonacci
/// number below 2^64).
std::uint64_t fib64(int k);

/// Largest index k with F_k <= n (n >= 1); this is the expansion length L(n).
int zeck_length(std::uint64_t n);

/// Zeckendorf digit sequence of a nonnegative integer: the sorted indices
/// k >= 2 with delta_k = 1.  No two indices are adjacent, and
/// sum F_k over the indices reconstructs the integer exactly.
struct ZeckDigits {
  std::vector<int> ones;  // strictly increasing, each >= 2, no neighbors

  int length() const { return ones.empty() ? 0 : ones.back(); }
  int weight() const { return static_cast<int>(ones.size()); }
  bool digit(int k) const;
  bool operator==(const ZeckDigits& o) const { return ones == o.ones; }
};

/// Greedy expansion; satisfies the ZeckDigits invariants for every n >= 0.
ZeckDigits zeck_expand(std::uint64_t n);

/// Inverse of zeck_expand.  Rejects sequences with indices < 2, repeats,
/// or two adjacent indices.
std::uint64_t zeck_value(const ZeckDigits& d);

/// Zeckendorf sum of digits: number of summands in the expansion.
int sz(std::uint64_t n);

/// Digit delta_k(n).
bool zeck_digit(std::uint64_t n, int k);

/// Truncated sum of digits: counts indices 2 <= k < lambda only.
int sz_trunc(std::uint64_t n, int lambda);

/// v(n, lambda) = sum of delta_k(n) F_k over 2 <= k < lambda; the lowest
/// digits of n, always < F_lambda.
std::uint64_t zeck_v(std::uint64_t n, int lambda);

/// Smallest y with 0 <= y < F_ell and v(n+y, ell) = 0.  Existence is
/// guaranteed (the integers with zero low digits have gaps <= F_ell).
std::uint64_t create_zero_shift(std::uint64_t n, int ell);

/// Exact count of 0 <= n < N whose digits at indices >= lambda are disturbed
/// when adding r, i.e. sz(n+r)-sz(n) != sz_trunc(n+r,lambda)-sz_trunc(n,lambda).
/// The carry propagation bound guarantees count <= N*r/F_{lambda-1}.
std::uint64_t carry_mismatch_count(std::uint64_t N, std::uint64_t r, int lambda);

/// First `len` symbols of the coded fixed point of the substitution
/// a->ab, b->c, c->cd, d->a (coding a,d -> 0 and b,c -> 1), starting from a.
/// Equals (sz(n) mod 2) for n = 0, 1, 2, ...
std::vector<std::uint8_t> fibword_morphic(std::size_t len);

/// First `count` nonnegative integers whose digits at indices 2..lambda-1
/// all vanish, by enumeration.  Consecutive gaps are F_lambda or F_{lambda-1},
/// the latter exactly when delta_2(j) = 1 for the position j of the gap.
std::vector<std::uint64_t> w_seq(int lambda, std::size_t count);

}  // namespace zeck
