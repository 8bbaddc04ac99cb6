#pragma once

#include <cstdint>
#include <vector>

#include "zeck/golden.hpp"
#include "zeck/numeration.hpp"

namespace zeck {

/// An interval modulo 1: the set left..right reduced mod 1 (at most two
/// connected components).  Endpoints are exact ring elements; membership of
/// a ring-element point is decided by gsign only.
struct WrappedInterval {
  GoldenInt left, right;
  bool left_open = true, right_open = true;

  GoldenInt length() const { return right - left; }
  /// Exact membership of x modulo 1.
  bool contains(const GoldenInt& x) const;
  /// Connected components inside [0,1), as (lo, hi) pairs with lo < hi.
  std::vector<std::pair<GoldenInt, GoldenInt>> components() const;
};

/// The detection interval A_lambda(u) from the one-dimensional digit
/// criterion: v(n,lambda) = u iff n*phi lies in A_lambda(u) + Z.
///
///   A_lambda(u) = u*phi + (-1)^lambda * (-phi^(-lambda+1), phi^(-lambda))
/// for u < F_{lambda-1}, and with -phi^(-lambda-1) as the left endpoint
/// otherwise.  Lengths are phi^(-lambda+2) and phi^(-lambda+1).
WrappedInterval interval_for_lowdigits(int lambda, std::uint64_t u);

/// The unique u with frac(n*phi) in A_lambda(u); always equals v(n,lambda).
/// Found by digit descent: O(lambda) exact membership tests.
std::uint64_t detect_lowdigits(std::uint64_t n, int lambda);

/// The whole descent trajectory (v(n,2), v(n,3), ..., v(n,lambda)); one call
/// covers every level at the cost of a single detection.
std::vector<std::uint64_t> detect_lowdigits_all(std::uint64_t n, int lambda);

/// A parallelogram given by two half-open linear constraints
/// lo <= cx*x + cy*y < hi with coefficients in Z[phi].
struct LinearConstraint {
  GoldenInt cx, cy, lo, hi;
};

struct Parallelogram {
  LinearConstraint first, second;
  /// Exact area (hi1-lo1)(hi2-lo2)/|det|.
  GoldenRational area() const;
};

/// B_lambda(u): the two-dimensional detection cell with
///   u <= F_{lambda+1} x + F_lambda y < u+1,
///   alpha <= -x/phi + y < 1,
/// alpha = -phi for u < F_{lambda-1} and -1/phi otherwise.
Parallelogram parallelogram_B(int lambda, std::uint64_t u);

/// Membership of the point (frac(n/phi^lambda), frac(n/phi^(lambda+1)))
/// in B_lambda(u) + Z^2, exact.
bool in_parallelogram_B(std::uint64_t n, int lambda, std::uint64_t u);

/// The unique u with p(n,lambda) in B_lambda(u) + Z^2; equals v(n,lambda).
/// Found by digit descent through the levels 3..lambda.
std::uint64_t detect_via_B(std::uint64_t n, int lambda);

/// Descent trajectory of the parallelogram detector, levels 2..lambda.
std::vector<std::uint64_t> detect_via_B_all(std::uint64_t n, int lambda);

/// Detection set for the digit block (nu_a, ..., nu_{b-1}):
///   M <= F_{b+1} x + F_b y < M + W,   alpha <= -x/phi + y < 1,
/// with M = sum nu_k F_k, W = F_a or F_{a-1} (nu_a = 0 / 1) and
/// alpha = -phi or -1/phi (nu_{b-1} = 0 / 1).
Parallelogram block_parallelogram(int a, int b, const std::vector<int>& nu);

/// Exact test of (n/phi^b, n/phi^(b+1)) mod 1 against the block set; agrees
/// with the direct digit comparison delta_j(n) = nu_j for a <= j < b.
bool detect_block(std::uint64_t n, int a, int b, const std::vector<int>& nu);

/// The two tiling rectangles of the digit almost-criterion.  classify
/// returns 1 iff the point lies in A_1 mod 1 under the all-closed boundary
/// convention, else 0.  A_1 has slope directions (phi,1) and (1,-phi) and
/// area 1/(phi^2+1).
int tiling_classify(const GoldenInt& x1, const GoldenInt& x2);

/// Fraction of n < N whose tiling classification disagrees with delta_k(n).
/// The classified pair is (frac(n phi^-k), frac(n phi^-k-1)) -- the digit
/// index of the tiling criterion counts from 0, two below the delta_k
/// convention used here.  Decays like phi^{-k}.
double tiling_error_rate(int k, std::uint64_t N);

/// Exact areas of the tiling rectangles, as (num, den) rationals:
/// phi^2/(phi^2+1) and 1/(phi^2+1).
GoldenRational tiling_area(int which);

}  // namespace zeck
