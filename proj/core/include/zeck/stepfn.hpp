#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zeck/golden.hpp"

namespace zeck {

using Complex = std::complex<double>;

/// 1-periodic integer-valued step function with exact breakpoints.
/// Arc i is [breakpoints[i], breakpoints[i+1]) (the last wraps past 1) and
/// carries levels[i].  Breakpoints are strictly increasing in [0, 1).
class StepFnZ {
 public:
  StepFnZ() = default;
  /// Canonicalizes: sorts, drops empty arcs, merges equal neighbors.
  StepFnZ(std::vector<GoldenInt> breakpoints, std::vector<long long> levels);

  std::size_t arcs() const { return bp_.size(); }
  const std::vector<GoldenInt>& breakpoints() const { return bp_; }
  const std::vector<long long>& levels() const { return lv_; }

  /// Level at an exact point (arc convention [left, right)).
  long long level_at(const GoldenInt& x) const;

  /// x -> level(x) - level(x+z): the difference function entering
  /// Delta(e(theta g); z) = e(theta (g(x) - g(x+z))).
  StepFnZ difference(const GoldenInt& z) const;

  /// x -> level(x + offset).
  StepFnZ rotate(const GoldenInt& offset) const;

 private:
  std::vector<GoldenInt> bp_;
  std::vector<long long> lv_;
};

/// g_lambda: piecewise constant with F_lambda arcs; on the detection
/// interval A_lambda(u) its value is sz(u), so g_lambda(frac(n phi))
/// equals the truncated sum of digits sz_trunc(n, lambda).
StepFnZ build_g_lambda(int lambda);

/// 1-periodic complex step function: exact breakpoints, complex values.
class StepFn {
 public:
  StepFn() = default;
  StepFn(std::vector<GoldenInt> breakpoints, std::vector<Complex> values);

  /// e(theta * level) applied to an integer-level function.
  static StepFn modulate(const StepFnZ& f, double theta);

  std::size_t arcs() const { return bp_.size(); }
  const std::vector<GoldenInt>& breakpoints() const { return bp_; }
  const std::vector<Complex>& values() const { return values_; }

  Complex value_at(const GoldenInt& x) const;
  Complex value_at(double x) const;  // reporting-grade lookup

  StepFn rotate(const GoldenInt& offset) const;
  StepFn conjugate() const;
  StepFn pointwise_product(const StepFn& other) const;

  /// Exact arc-weighted integral over one period.
  Complex integral() const;

  /// Total variation over one period: sum of jump magnitudes.
  double total_variation() const;

  /// Fourier coefficient \hat f(h).
  Complex fourier_coeff(long long h) const;

 private:
  std::vector<GoldenInt> bp_;
  std::vector<Complex> values_;
};

/// Exact autocorrelation C(t) = int_0^1 f(x) conj(f(x+t)) dx.
Complex correlation(const StepFn& f, const GoldenInt& t);

/// || f ||_{U^2}: fourth root of int_0^1 |C(t)|^2 dt.  C is piecewise linear
/// with breakpoints at pairwise differences of arc endpoints; the piecewise
/// quadratic |C|^2 is integrated segment by segment (exact geometry, complex
/// arithmetic in double).  Throws if the arc budget (1200) is exceeded.
double gowers_u2_exact(const StepFn& f);

/// ||e(g/2)||^4_{U^2} for an integer-level function, fully exact: values are
/// +-1, the correlation is a Z[phi]-valued piecewise linear function and the
/// integral lands in (1/3) Z[phi].
GoldenRational gowers_u2_pow4_parity(const StepFnZ& f);

/// Fourier route: sum_{|h|<=H} |\hat f(h)|^4 plus a rigorous tail bound from
/// |\hat f(h)| <= V/(2 pi |h|).  Returns (truncated sum, tail bound).
std::pair<double, double> gowers_u2_pow4_fourier(const StepFn& f, int H);

struct U3Estimate {
  double estimate;
  double std_error;
  std::vector<double> samples;  // inner U^2 fourth powers, one per offset
};

/// || f ||_{U^3} by quasi-Monte Carlo over the identity
/// ||f||_{U^3}^8 = int ||Delta(f;z)||_{U^2}^4 dz, with offsets from the
/// Kronecker sequence z_j = frac((j+1+seed%1024) phi) and a jackknife
/// standard error.  The parity overload keeps the inner integrals exact.
U3Estimate gowers_u3_estimate(const StepFn& f, int samples, std::uint64_t seed);
U3Estimate gowers_u3_estimate_parity(const StepFnZ& f, int samples, std::uint64_t seed);

}  // namespace zeck
