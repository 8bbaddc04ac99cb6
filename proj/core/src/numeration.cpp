#include "zeck/numeration.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <stdexcept>

namespace zeck {

namespace {

constexpr int kMaxFib64 = 93;

std::array<std::uint64_t, kMaxFib64 + 1> make_fib_table() {
  std::array<std::uint64_t, kMaxFib64 + 1> t{};
  t[0] = 0;
  t[1] = 1;
  for (int i = 2; i <= kMaxFib64; ++i) t[i] = t[i - 1] + t[i - 2];
  return t;
}

const std::array<std::uint64_t, kMaxFib64 + 1> kFib = make_fib_table();

}  // namespace

BigInt fib(long long k) {
  if (k < -1) throw std::invalid_argument("fib: index < -1");
  if (k == -1) return 1;
  if (k <= kMaxFib64) return BigInt(kFib[static_cast<int>(k)]);
  BigInt a = kFib[kMaxFib64 - 1], b = kFib[kMaxFib64];
  for (long long i = kMaxFib64; i < k; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return b;
}

std::uint64_t fib64(int k) {
  if (k < 0 || k > kMaxFib64) throw std::invalid_argument("fib64: index out of range");
  return kFib[k];
}

int zeck_length(std::uint64_t n) {
  if (n == 0) return 0;
  int k = 2;
  while (k < kMaxFib64 && kFib[k + 1] <= n) ++k;
  return k;
}

bool ZeckDigits::digit(int k) const {
  for (int i : ones)
    if (i == k) return true;
  return false;
}

ZeckDigits zeck_expand(std::uint64_t n) {
  ZeckDigits d;
  if (n == 0) return d;
  int k = zeck_length(n);
  while (n > 0) {
    while (kFib[k] > n) --k;
    d.ones.push_back(k);
    n -= kFib[k];
    --k;  // adjacent index cannot be used again
  }
  std::reverse(d.ones.begin(), d.ones.end());
  return d;
}

std::uint64_t zeck_value(const ZeckDigits& d) {
  std::uint64_t n = 0;
  int prev = 0;
  for (int k : d.ones) {
    if (k < 2) throw std::invalid_argument("zeck_value: index below 2");
    if (prev != 0 && k <= prev + 1)
      throw std::invalid_argument("zeck_value: adjacent or repeated index");
    if (k > kMaxFib64) throw std::invalid_argument("zeck_value: index too large for 64 bits");
    n += kFib[k];
    prev = k;
  }
  return n;
}

int sz(std::uint64_t n) {
  int count = 0;
  int k = zeck_length(n);
  while (n > 0) {
    while (kFib[k] > n) --k;
    ++count;
    n -= kFib[k];
    --k;
  }
  return count;
}

bool zeck_digit(std::uint64_t n, int k) {
  if (k < 2) throw std::invalid_argument("zeck_digit: index below 2");
  int j = zeck_length(n);
  while (n > 0 && j >= k) {
    while (kFib[j] > n) --j;
    if (j < k) break;
    if (j == k) return true;
    n -= kFib[j];
    --j;
  }
  return false;
}

int sz_trunc(std::uint64_t n, int lambda) {
  if (lambda < 2) throw std::invalid_argument("sz_trunc: lambda < 2");
  return sz(zeck_v(n, lambda));
}

std::uint64_t zeck_v(std::uint64_t n, int lambda) {
  if (lambda < 2) throw std::invalid_argument("zeck_v: lambda < 2");
  // Strip digits with index >= lambda greedily; the remainder is v(n,lambda).
  int k = zeck_length(n);
  while (k >= lambda) {
    if (kFib[k] <= n) {
      n -= kFib[k];
      k -= 2;
    } else {
      --k;
    }
  }
  return n;
}

std::uint64_t create_zero_shift(std::uint64_t n, int ell) {
  if (ell < 2) throw std::invalid_argument("create_zero_shift: ell < 2");
  const std::uint64_t bound = fib64(ell);
  for (std::uint64_t y = 0; y < bound; ++y) {
    if (zeck_v(n + y, ell) == 0) return y;
  }
  throw std::logic_error("create_zero_shift: no shift below F_ell found");
}

std::uint64_t carry_mismatch_count(std::uint64_t N, std::uint64_t r, int lambda) {
  if (N < 1) throw std::invalid_argument("carry_mismatch_count: N < 1");
  if (lambda < 2) throw std::invalid_argument("carry_mismatch_count: lambda < 2");
  std::uint64_t count = 0;
  for (std::uint64_t n = 0; n < N; ++n) {
    const int full = sz(n + r) - sz(n);
    const int trunc = sz_trunc(n + r, lambda) - sz_trunc(n, lambda);
    if (full != trunc) ++count;
  }
  return count;
}

std::vector<std::uint8_t> fibword_morphic(std::size_t len) {
  if (len < 1) throw std::invalid_argument("fibword_morphic: len < 1");
  // Fixed point of a->ab, b->c, c->cd, d->a starting with a.
  std::string word = "a";
  while (word.size() < len) {
    std::string next;
    next.reserve(2 * word.size());
    for (char c : word) {
      switch (c) {
        case 'a': next += "ab"; break;
        case 'b': next += 'c'; break;
        case 'c': next += "cd"; break;
        default: next += 'a'; break;
      }
    }
    if (next.size() == word.size()) throw std::logic_error("substitution stalled");
    word.swap(next);
  }
  std::vector<std::uint8_t> coded(len);
  for (std::size_t i = 0; i < len; ++i)
    coded[i] = (word[i] == 'b' || word[i] == 'c') ? 1 : 0;
  return coded;
}

std::vector<std::uint64_t> w_seq(int lambda, std::size_t count) {
  if (lambda < 3) throw std::invalid_argument("w_seq: lambda < 3");
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t n = 0; out.size() < count; ++n) {
    if (zeck_v(n, lambda) == 0) out.push_back(n);
  }
  return out;
}

}  // namespace zeck
