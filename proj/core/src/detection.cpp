#include "zeck/detection.hpp"

#include <stdexcept>

namespace zeck {

namespace {

// phi powers are needed at every membership test; cache a symmetric range.
const GoldenInt& phi_pow_cached(int k) {
  constexpr int kRange = 160;
  static const std::vector<GoldenInt> table = [] {
    std::vector<GoldenInt> t;
    t.reserve(2 * kRange + 1);
    for (int i = -kRange; i <= kRange; ++i) t.push_back(phi_pow(i));
    return t;
  }();
  if (k < -kRange || k > kRange) throw std::invalid_argument("phi power out of cached range");
  return table[static_cast<std::size_t>(k + kRange)];  // guard keeps k+kRange >= 0
}

const GoldenInt kPhi = GoldenInt::phi();
const GoldenInt kInvPhi = GoldenInt(-1, 1);      // 1/phi = phi - 1
const GoldenInt kNegInvPhi = GoldenInt(1, -1);   // -1/phi
const GoldenInt kNegPhi = GoldenInt(0, -1);
const GoldenInt kOne = GoldenInt(1, 0);

}  // namespace

bool WrappedInterval::contains(const GoldenInt& x) const {
  const GoldenInt len = right - left;
  const GoldenInt w = gfrac(x - left);
  const int at_left = gsign(w);
  if (at_left == 0) return !left_open;
  const int cmp = gsign(w - len);
  if (cmp < 0) return true;
  if (cmp == 0) return !right_open;
  return false;
}

std::vector<std::pair<GoldenInt, GoldenInt>> WrappedInterval::components() const {
  const GoldenInt len = right - left;
  const GoldenInt lo = gfrac(left);
  const GoldenInt hi = lo + len;
  std::vector<std::pair<GoldenInt, GoldenInt>> out;
  if (gsign(hi - kOne) <= 0) {
    out.emplace_back(lo, hi);
  } else {
    out.emplace_back(lo, kOne);
    out.emplace_back(GoldenInt(0, 0), hi - kOne);
  }
  return out;
}

WrappedInterval interval_for_lowdigits(int lambda, std::uint64_t u) {
  if (lambda < 2) throw std::invalid_argument("interval_for_lowdigits: lambda < 2");
  if (u >= fib64(lambda)) throw std::invalid_argument("interval_for_lowdigits: u out of range");
  const bool low = u < fib64(lambda - 1);
  // Base interval (-phi^(-lambda+-1), phi^(-lambda)), flipped by (-1)^lambda.
  GoldenInt lo = -phi_pow_cached(low ? -lambda + 1 : -lambda - 1);
  GoldenInt hi = phi_pow_cached(-lambda);
  if (lambda % 2 != 0) {
    GoldenInt t = lo;
    lo = -hi;
    hi = -t;
  }
  const GoldenInt shift = GoldenInt(0, static_cast<long long>(u));  // u*phi
  WrappedInterval iv;
  iv.left = shift + lo;
  iv.right = shift + hi;
  return iv;
}

namespace {

// Digit descent shared by the 1D and 2D detectors: at level k+1 the candidate
// u = v(n,k) either stays (delta_k = 0) or gains F_k.  `member` decides
// membership of the detection cell at a given level for a given u.
template <typename MemberFn>
std::uint64_t descend(int lambda, MemberFn member,
                      std::vector<std::uint64_t>* trajectory) {
  std::uint64_t u = 0;
  if (trajectory) trajectory->assign(1, 0);  // v(n,2) = 0
  for (int k = 2; k < lambda; ++k) {
    if (!member(k + 1, u)) {
      u += fib64(k);
      if (!member(k + 1, u)) throw std::logic_error("digit descent: no matching cell");
    }
    if (trajectory) trajectory->push_back(u);
  }
  return u;
}

}  // namespace

std::uint64_t detect_lowdigits(std::uint64_t n, int lambda) {
  if (lambda < 2) throw std::invalid_argument("detect_lowdigits: lambda < 2");
  const GoldenInt x = gfrac(GoldenInt(0, static_cast<long long>(n)));
  return descend(
      lambda,
      [&](int level, std::uint64_t u) {
        return interval_for_lowdigits(level, u).contains(x);
      },
      nullptr);
}

std::vector<std::uint64_t> detect_lowdigits_all(std::uint64_t n, int lambda) {
  if (lambda < 2) throw std::invalid_argument("detect_lowdigits_all: lambda < 2");
  const GoldenInt x = gfrac(GoldenInt(0, static_cast<long long>(n)));
  std::vector<std::uint64_t> traj;
  descend(
      lambda,
      [&](int level, std::uint64_t u) {
        return interval_for_lowdigits(level, u).contains(x);
      },
      &traj);
  return traj;
}

GoldenRational Parallelogram::area() const {
  const GoldenInt det = first.cx * second.cy - first.cy * second.cx;
  if (det.is_zero()) throw std::logic_error("degenerate parallelogram");
  GoldenInt num = (first.hi - first.lo) * (second.hi - second.lo);
  if (gsign(det) < 0) num = -num;
  return GoldenRational(num, gsign(det) < 0 ? -det : det);
}

Parallelogram parallelogram_B(int lambda, std::uint64_t u) {
  if (lambda < 2) throw std::invalid_argument("parallelogram_B: lambda < 2");
  if (u >= fib64(lambda)) throw std::invalid_argument("parallelogram_B: u out of range");
  Parallelogram p;
  p.first = LinearConstraint{GoldenInt(static_cast<long long>(fib64(lambda + 1))),
                             GoldenInt(static_cast<long long>(fib64(lambda))),
                             GoldenInt(static_cast<long long>(u)),
                             GoldenInt(static_cast<long long>(u + 1))};
  const GoldenInt alpha = u < fib64(lambda - 1) ? kNegPhi : kNegInvPhi;
  p.second = LinearConstraint{kNegInvPhi, kOne, alpha, kOne};
  return p;
}

namespace {

// Membership of an exact point (x, y) in [0,1)^2 in the cell
//   { k0 <= F_{b+1} x' + F_b y' < k0 + W,  alpha <= -x'/phi + y' < 1 } + Z^2.
//
// For the points used here, c1 = F_{b+1} x + F_b y is an exact integer, and
// an integer shift (m,n) adds m F_{b+1} + n F_b = k to c1 (every k occurs,
// consecutive Fibonacci numbers being coprime).  For fixed k the solutions
// form the family (m,n) = (m0 + t F_b, n0 - t F_{b+1}), along which the
// second form moves by exactly phi^b:
//   -m/phi + n = -(-1)^b k phi^(b-1) - t phi^b.
// So each admissible k leaves a single t to test, found by an exact floor.
bool cell_member(const GoldenInt& c2, const BigInt& c1, int b,
                 const BigInt& lo1, const BigInt& width,
                 const GoldenInt& alpha) {
  const GoldenInt& step = phi_pow_cached(b - 1);
  const GoldenInt& cell = phi_pow_cached(b);
  const GoldenInt& inv_cell = phi_pow_cached(-b);
  const bool beven = b % 2 == 0;
  for (BigInt j = 0; j < width; ++j) {
    const BigInt k = lo1 + j - c1;
    GoldenInt shift = step * GoldenInt(k, 0);
    GoldenInt c2base = beven ? c2 - shift : c2 + shift;
    const BigInt t = gfloor((c2base - alpha) * inv_cell);
    const GoldenInt r = c2base - cell * GoldenInt(t, 0);
    if (gsign(r - alpha) >= 0 && gsign(r - kOne) < 0) return true;
  }
  return false;
}

struct Point2 {
  GoldenInt x, y;
  BigInt c1;      // F_{b+1} x + F_b y, an exact integer
  GoldenInt c2;   // -x/phi + y
};

Point2 torus_point(std::uint64_t n, int b) {
  Point2 p;
  const GoldenInt nn(static_cast<long long>(n));
  p.x = gfrac(nn * phi_pow_cached(-b));
  p.y = gfrac(nn * phi_pow_cached(-b - 1));
  const GoldenInt c1g = p.x * GoldenInt(static_cast<long long>(fib64(b + 1))) +
                        p.y * GoldenInt(static_cast<long long>(fib64(b)));
  if (!c1g.is_integer()) throw std::logic_error("detection: first form not integral");
  p.c1 = c1g.a();
  p.c2 = p.y - p.x * kInvPhi;
  return p;
}

}  // namespace

bool in_parallelogram_B(std::uint64_t n, int lambda, std::uint64_t u) {
  if (lambda < 2) throw std::invalid_argument("in_parallelogram_B: lambda < 2");
  if (u >= fib64(lambda)) throw std::invalid_argument("in_parallelogram_B: u out of range");
  const Point2 p = torus_point(n, lambda);
  const GoldenInt alpha = u < fib64(lambda - 1) ? kNegPhi : kNegInvPhi;
  return cell_member(p.c2, p.c1, lambda, BigInt(u), BigInt(1), alpha);
}

std::uint64_t detect_via_B(std::uint64_t n, int lambda) {
  if (lambda < 2) throw std::invalid_argument("detect_via_B: lambda < 2");
  return descend(
      lambda,
      [&](int level, std::uint64_t u) { return in_parallelogram_B(n, level, u); },
      nullptr);
}

std::vector<std::uint64_t> detect_via_B_all(std::uint64_t n, int lambda) {
  if (lambda < 2) throw std::invalid_argument("detect_via_B_all: lambda < 2");
  std::vector<std::uint64_t> traj;
  descend(
      lambda,
      [&](int level, std::uint64_t u) { return in_parallelogram_B(n, level, u); },
      &traj);
  return traj;
}

namespace {

void check_block_args(int a, int b, const std::vector<int>& nu) {
  if (a < 2 || a >= b) throw std::invalid_argument("block: need 2 <= a < b");
  if (nu.size() != static_cast<std::size_t>(b - a))
    throw std::invalid_argument("block: nu must have b-a entries");
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] != 0 && nu[i] != 1) throw std::invalid_argument("block: nu entries must be bits");
    if (i + 1 < nu.size() && nu[i + 1] == 1 && nu[i] == 1)
      throw std::invalid_argument("block: adjacent ones in nu");
  }
}

}  // namespace

Parallelogram block_parallelogram(int a, int b, const std::vector<int>& nu) {
  check_block_args(a, b, nu);
  std::uint64_t M = 0;
  for (int j = a; j < b; ++j)
    if (nu[static_cast<std::size_t>(j - a)]) M += fib64(j);
  const std::uint64_t W = nu[0] == 0 ? fib64(a) : fib64(a - 1);
  const GoldenInt alpha = nu.back() == 0 ? kNegPhi : kNegInvPhi;
  Parallelogram p;
  p.first = LinearConstraint{GoldenInt(static_cast<long long>(fib64(b + 1))),
                             GoldenInt(static_cast<long long>(fib64(b))),
                             GoldenInt(static_cast<long long>(M)),
                             GoldenInt(static_cast<long long>(M + W))};
  p.second = LinearConstraint{kNegInvPhi, kOne, alpha, kOne};
  return p;
}

bool detect_block(std::uint64_t n, int a, int b, const std::vector<int>& nu) {
  check_block_args(a, b, nu);
  std::uint64_t M = 0;
  for (int j = a; j < b; ++j)
    if (nu[static_cast<std::size_t>(j - a)]) M += fib64(j);
  const std::uint64_t W = nu[0] == 0 ? fib64(a) : fib64(a - 1);
  const GoldenInt alpha = nu.back() == 0 ? kNegPhi : kNegInvPhi;
  const Point2 p = torus_point(n, b);
  return cell_member(p.c2, p.c1, b, BigInt(M), BigInt(W), alpha);
}

namespace {

// A_1 membership under the all-closed convention, in coordinates scaled by
// phi^2+1 = phi+2: along (phi,1) the scaled range is [phi+2, 3phi+1], along
// (1,-phi) it is [1-2phi, phi+2].
bool in_A1_closed(const GoldenInt& x1, const GoldenInt& x2) {
  static const GoldenInt scale = GoldenInt(2, 1);          // phi^2+1
  static const GoldenInt u_lo = GoldenInt(2, 1);           // phi+2
  static const GoldenInt u_hi = GoldenInt(1, 3);           // 3phi+1
  static const GoldenInt v_lo = GoldenInt(1, -2);          // 1-2phi
  static const GoldenInt v_hi = GoldenInt(2, 1);           // phi+2
  const GoldenInt su = scale * (x1 * kPhi + x2);
  if (gsign(su - u_lo) < 0 || gsign(su - u_hi) > 0) return false;
  const GoldenInt sv = scale * (x1 - x2 * kPhi);
  return gsign(sv - v_lo) >= 0 && gsign(sv - v_hi) <= 0;
}

}  // namespace

int tiling_classify(const GoldenInt& x1, const GoldenInt& x2) {
  const GoldenInt rx = gfrac(x1), ry = gfrac(x2);
  for (int m = -1; m <= 1; ++m) {
    for (int n = -1; n <= 1; ++n) {
      if (in_A1_closed(rx + GoldenInt(m), ry + GoldenInt(n))) return 1;
    }
  }
  return 0;
}

double tiling_error_rate(int k, std::uint64_t N) {
  if (k < 2) throw std::invalid_argument("tiling_error_rate: k < 2");
  if (N < 1) throw std::invalid_argument("tiling_error_rate: N < 1");
  // The digit delta_k lives two index steps above the cited tiling lemma's
  // digit (that source counts Zeckendorf digits from 0): in the k >= 2
  // convention the detecting pair for delta_k is (n phi^-k, n phi^-k-1).
  const GoldenInt& p2 = phi_pow_cached(-k);
  const GoldenInt& p3 = phi_pow_cached(-k - 1);
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 0; n < N; ++n) {
    const GoldenInt nn(static_cast<long long>(n));
    const int cls = tiling_classify(nn * p2, nn * p3);
    const int dig = zeck_digit(n, k) ? 1 : 0;
    if (cls != dig) ++mismatches;
  }
  return static_cast<double>(mismatches) / static_cast<double>(N);
}

GoldenRational tiling_area(int which) {
  const GoldenInt den(2, 1);  // phi^2 + 1
  if (which == 0) return GoldenRational(GoldenInt(1, 1), den);  // phi^2
  if (which == 1) return GoldenRational(kOne, den);
  throw std::invalid_argument("tiling_area: which must be 0 or 1");
}

}  // namespace zeck
