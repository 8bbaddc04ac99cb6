#include "zeck/markov.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "zeck/numeration.hpp"
#include "zeck/rng.hpp"
#include "zeck/sieve.hpp"

namespace zeck {
namespace markov {

namespace {

const GoldenInt kDen(2, 1);             // phi^2 + 1 = phi + 2
const GoldenInt kInvPhi(-1, 1);         // 1/phi
const GoldenInt kInvPhi2(2, -1);        // 1/phi^2
const GoldenInt kOne(1, 0);
const GoldenInt kZero(0, 0);

// 2x2 matrices over Z[phi]; enough for transition powers.
struct Mat2 {
  GoldenInt m00, m01, m10, m11;
  Mat2 operator*(const Mat2& o) const {
    return Mat2{m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }
};

const Mat2 kP{kInvPhi, kInvPhi2, kOne, kZero};

Mat2 mat_pow(Mat2 base, int e) {
  Mat2 r{kOne, kZero, kZero, kOne};
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace

double mu() { return 1.0 / (kPhi * kPhi + 1.0); }

double sigma2() {
  const double d = kPhi * kPhi + 1.0;
  return kPhi * kPhi * kPhi / (d * d * d);
}

GoldenRational stationary_exact(int state) {
  if (state == 0) return GoldenRational(GoldenInt(1, 1), kDen);  // phi^2/(phi^2+1)
  if (state == 1) return GoldenRational(kOne, kDen);
  throw std::invalid_argument("stationary_exact: state must be 0 or 1");
}

GoldenInt transition_exact(int from, int to) {
  if (from == 0 && to == 0) return kInvPhi;
  if (from == 0 && to == 1) return kInvPhi2;
  if (from == 1 && to == 0) return kOne;
  if (from == 1 && to == 1) return kZero;
  throw std::invalid_argument("transition_exact: states must be bits");
}

Complex pgf_Sn(Complex v, int n) {
  if (n < 1) throw std::invalid_argument("pgf_Sn: n < 1");
  const double phi = kPhi;
  const Complex root = std::sqrt(Complex(1.0, 0.0) + 4.0 * v);
  const Complex l1 = (1.0 + root) / (2.0 * phi);
  const Complex l2 = (1.0 - root) / (2.0 * phi);
  const Complex top = (phi * phi + v) / (phi * phi + 1.0);
  if (std::abs(l1 - l2) < 1e-14) {
    // Degenerate pair (v near -1/4): fall back to the matrix product.
    Complex r0 = phi * phi / (phi * phi + 1.0), r1 = v / (phi * phi + 1.0);
    for (int i = 0; i < n - 1; ++i) {
      const Complex n0 = r0 / phi + r1;
      const Complex n1 = r0 * v / (phi * phi);
      r0 = n0;
      r1 = n1;
    }
    return r0 + r1;
  }
  const Complex a = (top - l2) / (l1 - l2);
  const Complex b = (top - l1) / (l2 - l1);
  return a * std::pow(l1, n) + b * std::pow(l2, n);
}

std::pair<double, double> mean_var_Sn(int n) {
  auto [m, v] = mean_var_Sn_exact(n);
  return {m.to_double(), v.to_double()};
}

std::pair<GoldenRational, GoldenRational> mean_var_Sn_exact(int n) {
  if (n < 1) throw std::invalid_argument("mean_var_Sn_exact: n < 1");
  const GoldenRational mean(GoldenInt(n), kDen);
  // sigma^2 = phi^3/(phi^2+1)^3; (phi^2+1)^2 = 5 phi^2, so
  // sigma^2 = phi/(5(phi^2+1)).
  const GoldenRational s2(GoldenInt(0, 1), GoldenInt(10, 5));
  GoldenInt sign_pow = phi_pow(-2LL * n);
  if (n % 2 != 0) sign_pow = -sign_pow;  // (-phi^{-2})^n
  const GoldenRational tail =
      GoldenRational(GoldenInt(2), GoldenInt(25)) *
      (GoldenRational(kOne, kOne) - GoldenRational(sign_pow, kOne));
  return {mean, s2 * GoldenRational(GoldenInt(n), kOne) + tail};
}

GoldenRational joint_prob_exact(const std::vector<int>& positions,
                                const std::vector<int>& values) {
  if (positions.empty() || positions.size() != values.size())
    throw std::invalid_argument("joint_prob: length mismatch");
  for (std::size_t i = 0; i + 1 < positions.size(); ++i)
    if (positions[i + 1] <= positions[i])
      throw std::invalid_argument("joint_prob: positions must increase");
  for (int b : values)
    if (b != 0 && b != 1) throw std::invalid_argument("joint_prob: values must be bits");

  GoldenInt num = stationary_exact(values[0]).num();
  for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
    const int gap = positions[i + 1] - positions[i];
    const Mat2 pg = mat_pow(kP, gap);
    const GoldenInt entry = values[i] == 0 ? (values[i + 1] == 0 ? pg.m00 : pg.m01)
                                           : (values[i + 1] == 0 ? pg.m10 : pg.m11);
    num = num * entry;
  }
  return GoldenRational(num, kDen);
}

double joint_prob(const std::vector<int>& positions, const std::vector<int>& values) {
  return joint_prob_exact(positions, values).to_double();
}

double BigRatio::to_double() const {
  return GoldenRational(GoldenInt(num, 0), GoldenInt(den, 0)).to_double();
}

BigRatio exact_digit_prob(int len, int k, int b) {
  if (k < 2 || k > len) throw std::invalid_argument("exact_digit_prob: need 2 <= k <= len");
  if (b != 0 && b != 1) throw std::invalid_argument("exact_digit_prob: b must be a bit");
  BigRatio r;
  r.den = fib(len - 1);
  r.num = b == 0 ? fib(k) * fib(len - k) : fib(k - 1) * fib(len - k - 1);
  return r;
}

std::vector<std::uint8_t> sample_path(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_path: n < 1");
  SplitMix64 rng(seed);
  std::vector<std::uint8_t> path(static_cast<std::size_t>(n));
  const double p1 = mu();  // Pr[Z_0 = 1]
  path[0] = rng.next_double() < p1 ? 1 : 0;
  const double p01 = 1.0 / (kPhi * kPhi);  // Pr[1 | 0]
  for (int i = 1; i < n; ++i) {
    if (path[static_cast<std::size_t>(i - 1)] == 1) {
      path[static_cast<std::size_t>(i)] = 0;
    } else {
      path[static_cast<std::size_t>(i)] = rng.next_double() < p01 ? 1 : 0;
    }
  }
  return path;
}

namespace {

void check_pattern(std::uint64_t x, const std::vector<int>& positions,
                   const std::vector<int>& values) {
  if (x < 2) throw std::invalid_argument("empirical_joint: x < 2");
  if (positions.empty() || positions.size() != values.size())
    throw std::invalid_argument("empirical_joint: length mismatch");
  const int L = zeck_length(x);
  for (int k : positions)
    if (k < 2 || k > L)
      throw std::invalid_argument("empirical_joint: position outside expansion range");
}

bool matches(std::uint64_t n, const std::vector<int>& positions,
             const std::vector<int>& values) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if ((zeck_digit(n, positions[i]) ? 1 : 0) != values[i]) return false;
  }
  return true;
}

}  // namespace

double empirical_joint_integers(std::uint64_t x, const std::vector<int>& positions,
                                const std::vector<int>& values) {
  check_pattern(x, positions, values);
  std::uint64_t count = 0;
  for (std::uint64_t n = 0; n < x; ++n)
    if (matches(n, positions, values)) ++count;
  return static_cast<double>(count) / static_cast<double>(x);
}

double empirical_joint_primes(std::uint64_t x, const std::vector<int>& positions,
                              const std::vector<int>& values) {
  check_pattern(x, positions, values);
  std::uint64_t count = 0, total = 0;
  for_each_prime(x, [&](std::uint64_t p) {
    ++total;
    if (matches(p, positions, values)) ++count;
  });
  return static_cast<double>(count) / static_cast<double>(total);
}

Complex char_fn_model(double t, int Lprime) {
  if (Lprime < 1) throw std::invalid_argument("char_fn_model: L' < 1");
  const double scale = std::sqrt(static_cast<double>(Lprime) * sigma2());
  const Complex v = std::exp(Complex(0.0, t / scale));
  const Complex center = std::exp(Complex(0.0, -t * Lprime * mu() / scale));
  return center * pgf_Sn(v, Lprime);
}

}  // namespace markov
}  // namespace zeck
