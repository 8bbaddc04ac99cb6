#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zeck/golden.hpp"

namespace zeck {

using Complex = std::complex<double>;

// Empirical verification experiments over primes: digit-sum histograms, the
// local Gaussian comparison, residue classes, minimal primes per digit sum,
// exponential sums, and a desk-scale level-of-distribution statistic.

/// Counts of primes p <= x per sz(p) = k; the counts sum to pi(x).
std::map<int, std::uint64_t> sz_histogram_primes(std::uint64_t x, int threads = 1);

struct LocalCltRow {
  int k;
  std::uint64_t observed;
  double predicted;
  double abs_err;
};

struct LocalCltResult {
  std::uint64_t x;
  std::uint64_t pi_x;
  std::vector<LocalCltRow> rows;
  double sup_rel_err;    // sup_k |observed - predicted| / pi(x)
  double modal_rel_err;  // |obs-pred|/pred at the modal k of the prediction
};

/// Gaussian comparison: predicted(k) = pi(x)/sqrt(2 pi s2 L) exp(-(k-mu L)^2/(2 s2 L)),
/// L = log_phi(x).
LocalCltResult local_clt_table(std::uint64_t x, int threads = 1);

/// Class counts of sz(p) mod m over p <= x, and the max deviation
/// max_a |count_a/pi(x) - 1/m|.
std::vector<std::uint64_t> residue_counts(std::uint64_t x, int m, int threads = 1);
double residue_deviation(std::uint64_t x, int m, int threads = 1);

/// Smallest prime with sz(p) = k, enumerating integers with digit weight k in
/// increasing numeric order; empty if none uses indices below index_bound.
std::optional<std::uint64_t> smallest_prime_with_sz(int k, int index_bound);

struct FibPrimeRow {
  int index;
  bool probable;  // beyond the deterministic 64-bit range
};

/// Indices k <= max_index with F_k (probable) prime.  For F_k < 2^64 the
/// Miller-Rabin test is deterministic; larger values use 24 fixed rounds and
/// are flagged probable.
std::vector<FibPrimeRow> fibonacci_prime_scan(int max_index);

/// sum_{p<=x} e(theta p)
Complex exp_sum_primes(double theta, std::uint64_t x, int threads = 1);
/// sum_{p<=x} e(theta sz(p))
Complex exp_sum_sz_primes(double theta, std::uint64_t x, int threads = 1);
/// sum_{n<=x} Lambda(n) e(theta sz(n)), Lambda supported on prime powers.
Complex exp_sum_sz_mangoldt(double theta, std::uint64_t x, int threads = 1);

/// Chebyshev psi(x) = sum_{p^k <= x} log p (cross-check for the Mangoldt sum).
double chebyshev_psi(std::uint64_t x);

/// sum_{d<=D} max_{a<d} |sum_{n<=x, n=a mod d} e(theta sz(n))| with
/// D = floor(x^(1-eps)); window fixed to [0, x], a lower bound for the
/// all-windows maximum of the full statistic.  Guarded at x <= 10^5.
double lod_statistic(std::uint64_t x, double eps, double theta);

enum class CharFnMode { kFull, kTruncated };

/// phi_1(t) resp. phi_2(t): normalized characteristic function of sz over
/// primes p <= x, L = floor(log_phi x); truncated mode restricts digit
/// indices to [L^nu, L - L^nu] and normalizes by their count L'.
Complex char_fn_primes(double t, std::uint64_t x, CharFnMode mode, double nu = 0.25,
                       int threads = 1);

/// Verified primality for the smallest_prime_with_sz outputs: trial division
/// below 10^9, otherwise deterministic Miller-Rabin.
bool verify_prime_slow(std::uint64_t n);

/// Probable-prime test on big integers: small-factor screen plus `rounds`
/// fixed-base Miller-Rabin rounds.
bool probable_prime(const BigInt& n, int rounds = 24);

}  // namespace zeck
