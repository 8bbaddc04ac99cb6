#include "zeck/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zeck/numeration.hpp"

namespace zeck {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPhiD = 1.6180339887498948482;

Complex e_of(double x) { return std::exp(Complex(0.0, kTwoPi * x)); }

// sz(u) for all u < F_lambda, built from sz(u + F_k) = 1 + sz(u).
std::vector<std::uint8_t> sz_table(int lambda) {
  if (lambda < 1 || lambda > 30) throw std::invalid_argument("sz_table: lambda out of range");
  const std::uint64_t n = fib64(lambda);
  std::vector<std::uint8_t> t(static_cast<std::size_t>(n), 0);
  for (int k = 2; k < lambda; ++k) {
    const std::uint64_t fk = fib64(k), fk1 = fib64(k - 1);
    for (std::uint64_t u = 0; u < fk1 && fk + u < n; ++u)
      t[static_cast<std::size_t>(fk + u)] = static_cast<std::uint8_t>(1 + t[static_cast<std::size_t>(u)]);
  }
  return t;
}

// frac(beta * F) computed exactly through the binary representation of beta;
// F_l overflows the double mantissa long before the matrix recursion stops.
double frac_mul_exact(double beta, const BigInt& F) {
  if (beta == 0.0) return 0.0;
  const bool neg = beta < 0;
  int exp = 0;
  const double fr = std::frexp(std::abs(beta), &exp);
  const auto mant = static_cast<std::int64_t>(std::ldexp(fr, 53));
  const int shift = 53 - exp;
  BigInt prod = BigInt(mant) * F;
  double frac;
  if (shift <= 0) {
    frac = 0.0;
  } else {
    const BigInt rem = prod & ((BigInt(1) << shift) - 1);
    frac = std::ldexp(rem.convert_to<double>(), -shift);
  }
  if (neg && frac != 0.0) frac = 1.0 - frac;
  return frac;
}

struct CMat2 {
  Complex m00, m01, m10, m11;
  CMat2 operator*(const CMat2& o) const {
    return CMat2{m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                 m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }
  double row_sum_norm() const {
    return std::max(std::abs(m00) + std::abs(m01), std::abs(m10) + std::abs(m11));
  }
};

CMat2 gtilde_step(int l, double theta, double beta) {
  const Complex alpha = e_of(theta + frac_mul_exact(beta, fib(l)));
  return CMat2{Complex(1.0 / kPhiD, 0.0), alpha / (kPhiD * kPhiD),
               Complex(1.0, 0.0), Complex(0.0, 0.0)};
}

}  // namespace

Complex fourier_Gtilde_direct(int lambda, double theta, double beta) {
  if (lambda < 0 || lambda > 30)
    throw std::invalid_argument("fourier_Gtilde_direct: lambda limited to [0,30]");
  if (lambda == 0) return Complex(0.0, 0.0);
  if (lambda == 1) return Complex(1.0 / kPhiD, 0.0);
  const auto szv = sz_table(lambda);
  Complex acc(0.0, 0.0);
  for (std::uint64_t u = 0; u < szv.size(); ++u)
    acc += e_of(theta * szv[static_cast<std::size_t>(u)] +
                frac_mul_exact(beta, BigInt(u)));
  return acc * std::pow(kPhiD, -lambda);
}

Complex fourier_Gtilde_matrix(int lambda, double theta, double beta) {
  if (lambda < 0) throw std::invalid_argument("fourier_Gtilde_matrix: lambda < 0");
  if (lambda == 0) return Complex(0.0, 0.0);
  if (lambda == 1) return Complex(1.0 / kPhiD, 0.0);
  Complex cur(1.0 / (kPhiD * kPhiD), 0.0);  // G~_2
  Complex prev(1.0 / kPhiD, 0.0);           // G~_1
  for (int l = 2; l < lambda; ++l) {
    const CMat2 A = gtilde_step(l, theta, beta);
    const Complex next = A.m00 * cur + A.m01 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double gtilde_block_norm(int lambda_start, double theta, double beta) {
  if (lambda_start < 2) throw std::invalid_argument("gtilde_block_norm: lambda_start < 2");
  CMat2 prod = gtilde_step(lambda_start + 4, theta, beta);
  for (int l = lambda_start + 3; l >= lambda_start; --l)
    prod = prod * gtilde_step(l, theta, beta);
  return prod.row_sum_norm();
}

Complex fourier_G(int lambda, double theta, long long h) {
  if (lambda < 2 || lambda > 30) throw std::invalid_argument("fourier_G: lambda out of range");
  const auto szv = sz_table(lambda);
  const auto N = static_cast<double>(szv.size());
  if (h < 0 || static_cast<std::uint64_t>(h) >= szv.size())
    throw std::invalid_argument("fourier_G: h out of range");
  Complex acc(0.0, 0.0);
  for (std::size_t u = 0; u < szv.size(); ++u)
    acc += e_of(theta * szv[u] - static_cast<double>(h) * static_cast<double>(u) / N);
  return acc / N;
}

std::vector<Complex> fourier_G_all(int lambda, double theta) {
  if (lambda < 2 || lambda > 18)
    throw std::invalid_argument("fourier_G_all: lambda limited to [2,18]");
  const auto szv = sz_table(lambda);
  const std::size_t N = szv.size();
  std::vector<Complex> vals(N), roots(N);
  for (std::size_t u = 0; u < N; ++u) vals[u] = e_of(theta * szv[u]);
  for (std::size_t k = 0; k < N; ++k)
    roots[k] = e_of(-static_cast<double>(k) / static_cast<double>(N));
  std::vector<Complex> out(N);
  const double invN = 1.0 / static_cast<double>(N);
  for (std::size_t h = 0; h < N; ++h) {
    Complex acc(0.0, 0.0);
    for (std::size_t u = 0; u < N; ++u) acc += vals[u] * roots[(h * u) % N];
    out[h] = acc * invN;
  }
  return out;
}

Complex omega_correlation(double theta, std::uint64_t t, std::uint64_t N, int lambda) {
  if (N < 1) throw std::invalid_argument("omega_correlation: N < 1");
  Complex acc(0.0, 0.0);
  for (std::uint64_t n = 0; n < N; ++n)
    acc += e_of(theta * (sz_trunc(n + t, lambda) - sz_trunc(n, lambda)));
  return acc / static_cast<double>(N);
}

double correlation_identity_residual(int lambda, std::uint64_t t, std::size_t block_index,
                                     double theta) {
  const auto w = w_seq(lambda, block_index + 2);
  const std::uint64_t lo = w[block_index], hi = w[block_index + 1];
  if (hi - lo != fib64(lambda))
    throw std::invalid_argument("correlation_identity_residual: block gap is not F_lambda");
  const auto G = fourier_G_all(lambda, theta);
  const double FL = static_cast<double>(fib64(lambda));
  Complex lhs(0.0, 0.0);
  for (std::size_t h = 0; h < G.size(); ++h)
    lhs += std::norm(G[h]) * e_of(static_cast<double>(h) * static_cast<double>(t) / FL);
  Complex avg(0.0, 0.0);
  for (std::uint64_t v = lo; v < hi; ++v)
    avg += e_of(theta * (sz_trunc(v + t, lambda) - sz_trunc(v, lambda)));
  avg /= FL;
  return std::abs(lhs - avg);
}

double discrepancy_star_1d(std::vector<double> points) {
  if (points.empty()) throw std::invalid_argument("discrepancy: empty point set");
  std::sort(points.begin(), points.end());
  const double N = static_cast<double>(points.size());
  double d = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double up = static_cast<double>(i + 1) / N - points[i];
    const double dn = points[i] - static_cast<double>(i) / N;
    d = std::max(d, std::max(up, dn));
  }
  return d;
}

double discrepancy_extreme_1d(std::vector<double> points) {
  if (points.empty()) throw std::invalid_argument("discrepancy: empty point set");
  std::sort(points.begin(), points.end());
  const double N = static_cast<double>(points.size());
  double mx = -2.0, mn = 2.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double v = static_cast<double>(i + 1) / N - points[i];
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  return 1.0 / N + mx - mn;
}

double discrepancy_nalpha(std::uint64_t N, bool star) {
  if (N < 1) throw std::invalid_argument("discrepancy_nalpha: N < 1");
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(N));
  // Exact positions frac(n*phi), reduced incrementally; one rounding per point.
  GoldenInt x(0, 0);
  const GoldenInt one(1);
  for (std::uint64_t n = 1; n <= N; ++n) {
    x = x + GoldenInt::phi();
    if (gsign(x - one) >= 0) x = x - one;
    if (gsign(x - one) >= 0) x = x - one;
    pts.push_back(x.a().convert_to<double>() + x.b().convert_to<double>() * kPhiD);
  }
  return star ? discrepancy_star_1d(std::move(pts)) : discrepancy_extreme_1d(std::move(pts));
}

double etk_bound_1d(const std::vector<double>& points, int H) {
  if (H < 1) throw std::invalid_argument("etk_bound_1d: H < 1");
  const double N = static_cast<double>(points.size());
  double bound = 1.0 / H;
  for (int h = 1; h <= H; ++h) {
    Complex s(0.0, 0.0);
    for (double x : points) s += e_of(h * x);
    bound += 2.0 * std::abs(s) / (N * h);
  }
  return bound;
}

double etk_bound_nalpha(std::uint64_t N, int H) {
  if (H < 1) throw std::invalid_argument("etk_bound_nalpha: H < 1");
  double bound = 1.0 / H;
  for (int h = 1; h <= H; ++h) {
    // |sum_{n=1..N} e(h n phi)| = |sin(pi N xi)/sin(pi xi)|, xi = frac(h phi)
    const double xi = to_float(gfrac(GoldenInt(0, h)), 53);
    const double den = std::abs(std::sin(std::numbers::pi * xi));
    const double nxi =
        to_float(gfrac(GoldenInt(0, static_cast<long long>(h) * static_cast<long long>(N))), 53);
    const double num = std::abs(std::sin(std::numbers::pi * nxi));
    const double mag = den < 1e-300 ? static_cast<double>(N)
                                    : std::min(static_cast<double>(N), num / den);
    bound += 2.0 * mag / (static_cast<double>(N) * h);
  }
  return bound;
}

double etk_parallelotope_bound(const std::vector<std::array<double, 2>>& points, int H,
                               const std::array<std::array<double, 2>, 2>& edges) {
  if (H < 1) throw std::invalid_argument("etk_parallelotope_bound: H < 1");
  const double N = static_cast<double>(points.size());
  double bound = 1.0 / H;
  for (int h1 = -H; h1 <= H; ++h1) {
    for (int h2 = -H; h2 <= H; ++h2) {
      if (h1 == 0 && h2 == 0) continue;
      Complex s(0.0, 0.0);
      for (const auto& p : points) s += e_of(h1 * p[0] + h2 * p[1]);
      double r = 1.0;
      for (const auto& w : edges)
        r *= std::max(1.0, std::abs(h1 * w[0] + h2 * w[1]));
      bound += std::abs(s) / (N * r);
    }
  }
  return bound;
}

Complex TrigPoly::eval(double x) const {
  Complex acc(0.0, 0.0);
  for (int h = -degree; h <= degree; ++h) acc += at(h) * e_of(h * x);
  return acc;
}

namespace {

// Vaaler's damping factor: j(t) = pi t (1-|t|) cot(pi t) + |t|, |j| <= 1.
double vaaler_j(double t) {
  if (t == 0.0) return 1.0;
  const double at = std::abs(t);
  return std::numbers::pi * t * (1.0 - at) / std::tan(std::numbers::pi * t) + at;
}

}  // namespace

std::pair<TrigPoly, TrigPoly> vaaler(double a, double len, int H) {
  if (!(len > 0.0) || !(len < 1.0)) throw std::invalid_argument("vaaler: need 0 < len < 1");
  if (H < 1) throw std::invalid_argument("vaaler: H < 1");
  const double b = a + len;
  TrigPoly A, B;
  A.degree = B.degree = H;
  A.coeff.assign(2 * static_cast<std::size_t>(H) + 1, Complex(0.0, 0.0));
  B.coeff.assign(2 * static_cast<std::size_t>(H) + 1, Complex(0.0, 0.0));
  // chi_[a,b) = len - psi(x-a) + psi(x-b) with psi(x) = {x} - 1/2; replace psi
  // by Vaaler's polynomial psi_H with coefficients -j(h/(H+1))/(2 pi i h), and
  // the error by Fejer kernels at the endpoints.
  A.at(0) = Complex(len, 0.0);
  B.at(0) = Complex(1.0 / (H + 1), 0.0);
  for (int h = -H; h <= H; ++h) {
    if (h != 0) {
      const Complex ch = -vaaler_j(static_cast<double>(h) / (H + 1)) /
                         Complex(0.0, kTwoPi * h);
      A.at(h) = ch * (e_of(-h * b) - e_of(-h * a));
      B.at(h) = (1.0 - std::abs(h) / static_cast<double>(H + 1)) / (2.0 * (H + 1)) *
                (e_of(-h * a) + e_of(-h * b));
    }
  }
  return {A, B};
}

std::pair<double, double> koksma_check(const StepFn& f, const std::vector<double>& points) {
  if (points.empty()) throw std::invalid_argument("koksma_check: empty points");
  Complex mean(0.0, 0.0);
  for (double x : points) mean += f.value_at(x);
  mean /= static_cast<double>(points.size());
  const double lhs = std::abs(mean - f.integral());
  const double rhs = f.total_variation() * discrepancy_extreme_1d(points);
  return {lhs, rhs};
}

std::pair<double, double> vdc_check(const std::vector<Complex>& z, int R) {
  if (z.empty() || R < 1) throw std::invalid_argument("vdc_check: bad arguments");
  const auto N = static_cast<long long>(z.size());
  Complex total(0.0, 0.0);
  for (const auto& v : z) total += v;
  const double lhs = std::norm(total);
  Complex sum(0.0, 0.0);
  for (long long r = -(R - 1); r <= R - 1; ++r) {
    const double weight = 1.0 - std::abs(static_cast<double>(r)) / R;
    Complex corr(0.0, 0.0);
    for (long long n = 0; n < N; ++n) {
      if (n + r < 0 || n + r >= N) continue;
      corr += z[static_cast<std::size_t>(n + r)] * std::conj(z[static_cast<std::size_t>(n)]);
    }
    sum += weight * corr;
  }
  const double rhs = static_cast<double>(N + R - 1) / R * sum.real();
  return {lhs, rhs};
}

std::pair<double, double> vdc_general_check(const std::vector<Complex>& x,
                                            const std::vector<long long>& K) {
  if (x.empty() || K.empty()) throw std::invalid_argument("vdc_general_check: bad arguments");
  const auto M = static_cast<long long>(x.size());
  Complex total(0.0, 0.0);
  for (const auto& v : x) total += v;
  const double lhs = std::norm(total);
  const auto [kmin, kmax] = std::minmax_element(K.begin(), K.end());
  Complex sum(0.0, 0.0);
  for (long long k1 : K) {
    for (long long k2 : K) {
      const long long d = k1 - k2;
      for (long long m = 0; m < M; ++m) {
        if (m + d < 0 || m + d >= M) continue;
        sum += x[static_cast<std::size_t>(m)] * std::conj(x[static_cast<std::size_t>(m + d)]);
      }
    }
  }
  const double factor =
      static_cast<double>(M + *kmax - *kmin) / (static_cast<double>(K.size()) * K.size());
  return {lhs, factor * sum.real()};
}

std::pair<double, double> vinogradov_check(const std::vector<Complex>& a, std::size_t x,
                                           std::size_t y, std::size_t z, int grid) {
  if (!(x <= y && y <= z)) throw std::invalid_argument("vinogradov_check: need x <= y <= z");
  if (a.size() != z - x) throw std::invalid_argument("vinogradov_check: |a| != z - x");
  if (grid < 1000) throw std::invalid_argument("vinogradov_check: grid < 1000");
  Complex head(0.0, 0.0);
  for (std::size_t n = x; n < y; ++n) head += a[n - x];
  const double lhs = std::abs(head);
  if (a.empty()) return {lhs, 0.0};

  const double cap = static_cast<double>(y - x) + 1.0;
  // |S(xi)| is Lipschitz after recentering the indices at x.
  double lip = 0.0, norm1 = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    lip += kTwoPi * static_cast<double>(j) * std::abs(a[j]);
    norm1 += std::abs(a[j]);
  }
  auto smag = [&](double xi) {
    Complex s(0.0, 0.0);
    for (std::size_t j = 0; j < a.size(); ++j)
      s += a[j] * e_of(static_cast<double>(j) * xi);
    return std::abs(s);
  };
  auto minterm = [&](double xi) {
    const double dist = std::min(xi - std::floor(xi), std::ceil(xi) - xi);
    if (dist <= 1.0 / cap) return cap;
    return 1.0 / dist;
  };
  double rhs = 0.0;
  const double w = 1.0 / grid;
  for (int k = 0; k < grid; ++k) {
    const double l = k * w, r = (k + 1) * w;
    // the min-term is monotone on each side of 1/2: cell max is at an endpoint
    const double env = std::max(minterm(l), minterm(r));
    const double scell = std::min(norm1, smag((l + r) / 2) + lip * w / 2);
    rhs += env * scell * w;
  }
  return {lhs, rhs};
}

}  // namespace zeck
