#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "zeck/golden.hpp"

namespace zeck {

using Complex = std::complex<double>;

/// The stationary two-state chain modeling Zeckendorf digits:
///   P = ( 1/phi   1/phi^2 )      pi = ( phi^2/(phi^2+1), 1/(phi^2+1) )
///       ( 1       0       )
/// with mu = 1/(phi^2+1) and sigma^2 = phi^3/(phi^2+1)^3 = 1/(5 sqrt 5).
/// Exact quantities carry the common denominator phi^2+1; floating values
/// appear only at the reporting boundary.
namespace markov {

inline constexpr double kPhi = 1.6180339887498948482;
double mu();       // 1/(phi^2+1)
double sigma2();   // phi^3/(phi^2+1)^3

/// pi and P as exact ring elements over the denominator phi^2+1 (for pi)
/// and denominator 1 (P entries are units: 1/phi = phi-1, 1/phi^2 = 2-phi).
GoldenRational stationary_exact(int state);
GoldenInt transition_exact(int from, int to);

/// E v^{S_n} for S_n = Z_1 + ... + Z_n, via the closed form
///   a(v) l1(v)^n + b(v) l2(v)^n,  l_{1,2}(v) = (1 +- sqrt(1+4v)) / (2 phi),
/// principal square root, sqrt(1) = 1.
Complex pgf_Sn(Complex v, int n);

/// (mean, variance) of S_n: mean = n/(phi^2+1),
/// variance = n sigma^2 + 2/25 - (2/25)(-phi^{-2})^n.
std::pair<double, double> mean_var_Sn(int n);

/// Same, exact.
std::pair<GoldenRational, GoldenRational> mean_var_Sn_exact(int n);

/// Pr[Z_{k_1} = v_1, ..., Z_{k_d} = v_d] under the stationary chain, via
/// matrix powers between consecutive positions.  Positions must be strictly
/// increasing and the two lists of equal length d >= 1.
GoldenRational joint_prob_exact(const std::vector<int>& positions,
                                const std::vector<int>& values);
double joint_prob(const std::vector<int>& positions,
                  const std::vector<int>& values);

/// Fraction of integers with expansion length exactly `len` whose digit at
/// k equals b:  F_k F_{len-k} / F_{len-1}  (b=0),
///              F_{k-1} F_{len-k-1} / F_{len-1}  (b=1).
/// Returned as an exact big-integer ratio.
struct BigRatio {
  BigInt num, den;
  double to_double() const;
};
BigRatio exact_digit_prob(int len, int k, int b);

/// One path Z_0..Z_{n-1}: Z_0 from pi, then steps via P, driven by a seeded
/// SplitMix64.
std::vector<std::uint8_t> sample_path(int n, std::uint64_t seed);

/// Frequency of the digit pattern over all integers n < x (resp. primes
/// p <= x); exact counting.
double empirical_joint_integers(std::uint64_t x, const std::vector<int>& positions,
                                const std::vector<int>& values);
double empirical_joint_primes(std::uint64_t x, const std::vector<int>& positions,
                              const std::vector<int>& values);

/// phi_3(t) = E exp(it (S_{L'} - L' mu)/sqrt(L' sigma^2)), computed exactly
/// from the generating function at v = exp(it/sqrt(L' sigma^2)).
Complex char_fn_model(double t, int Lprime);

}  // namespace markov

}  // namespace zeck
