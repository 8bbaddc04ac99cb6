#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "zeck/golden.hpp"
#include "zeck/stepfn.hpp"

namespace zeck {

// ---------------------------------------------------------------------------
// Zeckendorf Fourier terms

/// G~_lambda(theta, beta) = phi^-lambda sum_{u < F_lambda} e(theta sz(u) + beta u),
/// by direct summation.  Limited to lambda <= 30.
Complex fourier_Gtilde_direct(int lambda, double theta, double beta);

/// Same value through the two-term recursion
///   G~_{lambda+1} = G~_lambda / phi + e(theta + beta F_lambda) G~_{lambda-1} / phi^2,
/// run as a product of 2x2 matrices on the base vector (G~_2, G~_1).
Complex fourier_Gtilde_matrix(int lambda, double theta, double beta);

/// Row-sum norm of the five-step matrix block A_{l+4}...A_l; always <= 1.
double gtilde_block_norm(int lambda_start, double theta, double beta);

/// G_lambda(h) = F_lambda^-1 sum_{u<F_lambda} e(theta sz(u) - h u / F_lambda).
Complex fourier_G(int lambda, double theta, long long h);
/// All of G_lambda(0..F_lambda-1) in one pass.
std::vector<Complex> fourier_G_all(int lambda, double theta);

/// omega(theta, t, N, lambda) = N^-1 sum_{n<N} e(theta (sz_lambda(n+t) - sz_lambda(n))).
Complex omega_correlation(double theta, std::uint64_t t, std::uint64_t N, int lambda);

/// | sum_h |G_lambda(h)|^2 e(h t / F_lambda)  -  block average over
/// [w_i, w_{i+1}) |, for a block with gap F_lambda; O(t/F_lambda) by the
/// correlation identity.
double correlation_identity_residual(int lambda, std::uint64_t t, std::size_t block_index,
                                     double theta);

// ---------------------------------------------------------------------------
// Discrepancy and Erdos-Turan-Koksma

/// Star discrepancy sup_t |#{x_n < t}/N - t| via the sorted-points formula.
double discrepancy_star_1d(std::vector<double> points);
/// Extreme discrepancy over all subintervals: 1/N + max(i/N - x_i) - min(i/N - x_i).
double discrepancy_extreme_1d(std::vector<double> points);

/// Discrepancies of (frac(n phi))_{n<N} from exact positions.
double discrepancy_nalpha(std::uint64_t N, bool star = false);

/// Right-hand side of the one-dimensional ETK inequality with C = 1:
///   1/H + sum_{0<|h|<=H} |S_N(h)| / (N |h|).
double etk_bound_1d(const std::vector<double>& points, int H);
/// Same for the golden rotation, using the closed geometric-series form of
/// |sum_{n<N} e(h n phi)|.
double etk_bound_nalpha(std::uint64_t N, int H);

/// ETK bound shape for parallelotopes: 1/H + sum_{0<||h||_inf<=H}
/// prod_i max(1,|h.w_i|)^-1 |S_N(h)| / N, for d = 2.
double etk_parallelotope_bound(const std::vector<std::array<double, 2>>& points, int H,
                               const std::array<std::array<double, 2>, 2>& edges);

// ---------------------------------------------------------------------------
// Vaaler polynomials

/// Trigonometric polynomial sum_{|h|<=degree} c_h e(hx).
struct TrigPoly {
  int degree = 0;
  std::vector<Complex> coeff;  // index h + degree

  Complex& at(int h) { return coeff[static_cast<std::size_t>(h + degree)]; }
  Complex at(int h) const { return coeff[static_cast<std::size_t>(h + degree)]; }
  Complex eval(double x) const;
};

/// Vaaler's approximation pair for the half-open interval [a, a+len) mod 1:
/// |chi_I(x) - A(x)| <= B(x) for all x, with a_0 = len,
/// |a_h| <= min(len, 1/(pi |h|)) and |b_h| <= 1/(H+1).
std::pair<TrigPoly, TrigPoly> vaaler(double a, double len, int H);

// ---------------------------------------------------------------------------
// Classical inequalities as checkable pairs (lhs, rhs)

/// Koksma: |mean_n f(x_n) - int f| <= V(f) D_N.
std::pair<double, double> koksma_check(const StepFn& f, const std::vector<double>& points);

/// van der Corput: |sum z_n|^2 <= (N+R-1)/R sum_{|r|<R} (1-|r|/R) sum z_{n+r} conj(z_n).
std::pair<double, double> vdc_check(const std::vector<Complex>& z, int R);

/// Generalized van der Corput over a finite shift set K.
std::pair<double, double> vdc_general_check(const std::vector<Complex>& x,
                                            const std::vector<long long>& K);

/// Vinogradov's range-extension bound: |sum_{x<=n<y} a_n| <=
/// int_0^1 min(y-x+1, ||xi||^-1) |sum_{x<=n<z} a_n e(n xi)| dxi,
/// with the integral replaced by an upper Riemann sum on `grid` cells.
std::pair<double, double> vinogradov_check(const std::vector<Complex>& a, std::size_t x,
                                           std::size_t y, std::size_t z, int grid);

}  // namespace zeck
