#include "zeck/stepfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zeck/detection.hpp"
#include "zeck/numeration.hpp"

namespace zeck {

namespace {

constexpr std::size_t kArcBudget = 1200;
constexpr double kPhiD = 1.6180339887498948482;

// Fast approximate value of a small-coefficient ring element.  Breakpoint
// coefficients here stay tiny (|a|,|b| < 2^40), where the double error
// ~1e-12 is far below the minimal gap |x| >= 1/|conj(x)| between distinct
// values, so sorting by this key plus exact equality of (a,b) is exact.
double approx_key(const GoldenInt& x) {
  if (x.a() < -(BigInt(1) << 40) || x.a() > (BigInt(1) << 40) ||
      x.b() < -(BigInt(1) << 40) || x.b() > (BigInt(1) << 40)) {
    return to_float(x, 64);
  }
  return x.a().convert_to<double>() + x.b().convert_to<double>() * kPhiD;
}

Complex unit_phase(double theta) {
  return std::exp(Complex(0.0, 2.0 * std::numbers::pi * theta));
}

// Reduce x into [0,1) knowing x in (-1, 1): one sign test, no isqrt.
GoldenInt frac_pm1(const GoldenInt& x) {
  if (gsign(x) < 0) return x + GoldenInt(1);
  return x;
}

template <typename V>
void canonicalize(std::vector<GoldenInt>& bp, std::vector<V>& vals) {
  if (bp.size() != vals.size()) throw std::invalid_argument("step fn: size mismatch");
  if (bp.empty()) throw std::invalid_argument("step fn: empty");
  const std::size_t m = bp.size();
  std::vector<std::size_t> order(m);
  std::vector<double> keys(m);
  for (std::size_t i = 0; i < m; ++i) {
    keys[i] = approx_key(bp[i]);
    if (keys[i] < -1e-12 || keys[i] >= 1.0 + 1e-12)
      throw std::invalid_argument("step fn: breakpoint outside [0,1)");
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (keys[i] != keys[j]) return keys[i] < keys[j];
    if (bp[i] == bp[j]) return false;
    return gsign(bp[i] - bp[j]) < 0;  // equal keys, distinct values: exact
  });
  std::vector<GoldenInt> nbp;
  std::vector<V> nvals;
  nbp.reserve(m);
  nvals.reserve(m);
  for (std::size_t idx : order) {
    if (!nbp.empty() && nbp.back() == bp[idx]) {
      // zero-length arc: the later breakpoint's value wins on [b, next)
      nvals.back() = vals[idx];
      continue;
    }
    nbp.push_back(bp[idx]);
    nvals.push_back(vals[idx]);
  }
  bp = std::move(nbp);
  vals = std::move(nvals);
}

// Merge circularly adjacent arcs with equal values; used before the O(m^2)
// correlation sweeps, where redundant breakpoints quadruple the event count.
template <typename V>
void merge_equal_neighbors(std::vector<GoldenInt>& bp, std::vector<V>& vals) {
  const std::size_t k = bp.size();
  if (k < 2) return;
  std::vector<GoldenInt> mbp;
  std::vector<V> mvals;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t prev = (i + k - 1) % k;
    if (vals[i] == vals[prev] && !mbp.empty()) continue;
    mbp.push_back(bp[i]);
    mvals.push_back(vals[i]);
  }
  if (mbp.size() > 1 && mvals.front() == mvals.back()) {
    mbp.erase(mbp.begin());
    mvals.erase(mvals.begin());
  }
  bp = std::move(mbp);
  vals = std::move(mvals);
}

template <typename V>
std::size_t arc_index(const std::vector<GoldenInt>& bp, const std::vector<V>&,
                      const GoldenInt& x) {
  // Largest breakpoint <= x, circular (x below bp[0] lands in the last arc).
  const double key = approx_key(x);
  std::size_t lo = 0, hi = bp.size();
  while (lo + 1 < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const double bk = approx_key(bp[mid]);
    if (bk < key - 1e-9) {
      lo = mid;
    } else if (bk > key + 1e-9) {
      hi = mid;
    } else {
      // ambiguous: exact compare
      if (gsign(bp[mid] - x) <= 0) lo = mid; else hi = mid;
    }
  }
  if (lo == 0 && gsign(bp[0] - x) > 0) return bp.size() - 1;
  return lo;
}

}  // namespace

StepFnZ::StepFnZ(std::vector<GoldenInt> breakpoints, std::vector<long long> levels)
    : bp_(std::move(breakpoints)), lv_(std::move(levels)) {
  canonicalize(bp_, lv_);
}

long long StepFnZ::level_at(const GoldenInt& x) const {
  return lv_[arc_index(bp_, lv_, gfrac(x))];
}

StepFnZ StepFnZ::rotate(const GoldenInt& offset) const {
  std::vector<GoldenInt> nbp;
  nbp.reserve(bp_.size());
  const GoldenInt off = gfrac(offset);
  for (const auto& b : bp_) nbp.push_back(frac_pm1(b - off));
  return StepFnZ(std::move(nbp), lv_);
}

StepFnZ StepFnZ::difference(const GoldenInt& z) const {
  const StepFnZ shifted = rotate(z);
  std::vector<GoldenInt> nbp;
  std::vector<long long> nlv;
  nbp.reserve(bp_.size() + shifted.bp_.size());
  for (const auto& b : bp_) nbp.push_back(b);
  for (const auto& b : shifted.bp_) nbp.push_back(b);
  nlv.reserve(nbp.size());
  for (const auto& b : nbp)
    nlv.push_back(lv_[arc_index(bp_, lv_, b)] -
                  shifted.lv_[arc_index(shifted.bp_, shifted.lv_, b)]);
  return StepFnZ(std::move(nbp), std::move(nlv));
}

StepFnZ build_g_lambda(int lambda) {
  if (lambda < 2 || lambda > 26)
    throw std::invalid_argument("build_g_lambda: lambda out of supported range [2,26]");
  const std::uint64_t count = fib64(lambda);
  std::vector<GoldenInt> bp;
  std::vector<long long> lv;
  bp.reserve(count);
  lv.reserve(count);
  // The F_lambda intervals A_lambda(u) tile the circle; one arc per interval,
  // opening at its (reduced) left endpoint.  delta'_k is right-continuous, so
  // half-open arcs carrying the value of the interval to the right are exact.
  for (std::uint64_t u = 0; u < count; ++u) {
    const WrappedInterval iv = interval_for_lowdigits(lambda, u);
    bp.push_back(gfrac(iv.left));
    lv.push_back(sz(u));
  }
  return StepFnZ(std::move(bp), std::move(lv));
}

StepFn::StepFn(std::vector<GoldenInt> breakpoints, std::vector<Complex> values)
    : bp_(std::move(breakpoints)), values_(std::move(values)) {
  canonicalize(bp_, values_);
}

StepFn StepFn::modulate(const StepFnZ& f, double theta) {
  std::vector<Complex> vals;
  vals.reserve(f.arcs());
  for (long long level : f.levels())
    vals.push_back(unit_phase(theta * static_cast<double>(level)));
  return StepFn(f.breakpoints(), std::move(vals));
}

Complex StepFn::value_at(const GoldenInt& x) const {
  return values_[arc_index(bp_, values_, gfrac(x))];
}

Complex StepFn::value_at(double x) const {
  x -= std::floor(x);
  std::size_t lo = 0;
  if (approx_key(bp_[0]) > x) return values_.back();
  std::size_t hi = bp_.size();
  while (lo + 1 < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (approx_key(bp_[mid]) <= x) lo = mid;
    else hi = mid;
  }
  return values_[lo];
}

StepFn StepFn::rotate(const GoldenInt& offset) const {
  std::vector<GoldenInt> nbp;
  nbp.reserve(bp_.size());
  const GoldenInt off = gfrac(offset);
  for (const auto& b : bp_) nbp.push_back(frac_pm1(b - off));
  return StepFn(std::move(nbp), values_);
}

StepFn StepFn::conjugate() const {
  std::vector<Complex> vals(values_);
  for (auto& v : vals) v = std::conj(v);
  return StepFn(bp_, std::move(vals));
}

StepFn StepFn::pointwise_product(const StepFn& other) const {
  std::vector<GoldenInt> nbp;
  std::vector<Complex> nvals;
  nbp.reserve(bp_.size() + other.bp_.size());
  for (const auto& b : bp_) nbp.push_back(b);
  for (const auto& b : other.bp_) nbp.push_back(b);
  nvals.reserve(nbp.size());
  for (const auto& b : nbp)
    nvals.push_back(values_[arc_index(bp_, values_, b)] *
                    other.values_[arc_index(other.bp_, other.values_, b)]);
  return StepFn(std::move(nbp), std::move(nvals));
}

Complex StepFn::integral() const {
  Complex acc(0.0, 0.0);
  const std::size_t m = bp_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const GoldenInt width = i + 1 < m ? bp_[i + 1] - bp_[i]
                                      : GoldenInt(1) - bp_[i] + bp_[0];
    acc += values_[i] * approx_key(width);
  }
  return acc;
}

double StepFn::total_variation() const {
  const std::size_t m = bp_.size();
  if (m < 2) return 0.0;
  double v = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    v += std::abs(values_[i] - values_[(i + m - 1) % m]);
  return v;
}

Complex StepFn::fourier_coeff(long long h) const {
  if (h == 0) return integral();
  Complex acc(0.0, 0.0);
  const std::size_t m = bp_.size();
  const double twopi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < m; ++i) {
    const double l = approx_key(bp_[i]);
    const double r = i + 1 < m ? approx_key(bp_[i + 1]) : approx_key(bp_[0]) + 1.0;
    // int_l^r e(-hx) dx = (e(-hl) - e(-hr)) / (2 pi i h)
    const Complex el = std::exp(Complex(0.0, -twopi * h * l));
    const Complex er = std::exp(Complex(0.0, -twopi * h * r));
    acc += values_[i] * (el - er) / Complex(0.0, twopi * static_cast<double>(h));
  }
  return acc;
}

namespace {

// One rotation sweep event: the shifted breakpoint c_j = b_j - t crosses the
// fixed breakpoint b_i at t = b_j - b_i mod 1.
struct SweepEvent {
  double key;
  std::uint32_t i, j;
  GoldenInt t;
};

template <typename V>
std::vector<SweepEvent> make_events(const std::vector<GoldenInt>& bp,
                                    const std::vector<V>&) {
  const std::size_t m = bp.size();
  std::vector<SweepEvent> events;
  events.reserve(m * (m - 1));
  for (std::uint32_t j = 0; j < m; ++j) {
    for (std::uint32_t i = 0; i < m; ++i) {
      if (i == j) continue;
      GoldenInt t = frac_pm1(bp[j] - bp[i]);
      SweepEvent e;
      e.key = approx_key(t);
      e.i = i;
      e.j = j;
      e.t = std::move(t);
      events.push_back(std::move(e));
    }
  }
  std::sort(events.begin(), events.end(), [](const SweepEvent& a, const SweepEvent& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.t == b.t) return false;
    return gsign(a.t - b.t) < 0;
  });
  return events;
}

}  // namespace

Complex correlation(const StepFn& f, const GoldenInt& t) {
  const StepFn shifted = f.rotate(t).conjugate();
  return f.pointwise_product(shifted).integral();
}

double gowers_u2_exact(const StepFn& f) {
  if (f.arcs() > kArcBudget) throw std::invalid_argument("gowers_u2_exact: arc budget exceeded");
  std::vector<GoldenInt> bp = f.breakpoints();
  std::vector<Complex> v = f.values();
  merge_equal_neighbors(bp, v);
  const std::size_t m = bp.size();
  if (m == 1) {
    const double c = std::norm(v[0]);
    return std::sqrt(std::sqrt(c * c));
  }
  auto events = make_events(bp, v);

  // State: arc index of each moving breakpoint, correlation value, slope.
  std::vector<std::uint32_t> pos(m);
  Complex C(0.0, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double w = i + 1 < m ? approx_key(bp[i + 1]) - approx_key(bp[i])
                               : 1.0 - approx_key(bp[i]) + approx_key(bp[0]);
    C += v[i] * std::conj(v[i]) * w;
  }
  Complex slope(0.0, 0.0);
  for (std::uint32_t j = 0; j < m; ++j) {
    pos[j] = (j + static_cast<std::uint32_t>(m) - 1) % m;
    slope += v[pos[j]] * std::conj(v[j] - v[(j + m - 1) % m]);
  }

  double integral = 0.0;
  double prev = 0.0;
  auto accumulate = [&](double w) {
    if (w <= 0.0) return;
    const double c2 = std::norm(C);
    const double cross = (std::conj(C) * slope).real();
    integral += w * c2 + w * w * cross + w * w * w * std::norm(slope) / 3.0;
    C += slope * w;
  };
  const Complex c_start = C;
  std::size_t idx = 0;
  while (idx < events.size()) {
    // group events with identical exact time
    std::size_t end = idx + 1;
    while (end < events.size() && events[end].t == events[idx].t) ++end;
    accumulate(events[idx].key - prev);
    prev = events[idx].key;
    for (std::size_t e = idx; e < end; ++e) {
      const std::uint32_t i = events[e].i, j = events[e].j;
      if (pos[j] != i) throw std::logic_error("u2 sweep: events out of order");
      const std::uint32_t inew = (i + static_cast<std::uint32_t>(m) - 1) % m;
      slope += (v[inew] - v[i]) * std::conj(v[j] - v[(j + m - 1) % m]);
      pos[j] = inew;
    }
    idx = end;
  }
  accumulate(1.0 - prev);
  // the correlation is 1-periodic: the sweep must close up to rounding
  if (std::abs(C - c_start) > 1e-6 * (1.0 + std::abs(c_start)))
    throw std::logic_error("u2 sweep: correlation failed to close up");
  return std::sqrt(std::sqrt(std::max(0.0, integral)));
}

GoldenRational gowers_u2_pow4_parity(const StepFnZ& f) {
  // Values are (-1)^level; correlation stays in Z[phi].
  if (f.arcs() > kArcBudget)
    throw std::invalid_argument("gowers_u2_pow4_parity: arc budget exceeded");
  std::vector<GoldenInt> bp = f.breakpoints();
  std::vector<long long> v(f.arcs());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = (f.levels()[i] % 2 + 2) % 2 == 0 ? 1 : -1;
  merge_equal_neighbors(bp, v);
  const std::size_t m = bp.size();
  if (m == 1) return GoldenRational(GoldenInt(1), GoldenInt(1));

  auto events = make_events(bp, v);

  std::vector<std::uint32_t> pos(m);
  GoldenInt C(1);  // int |f|^2 = 1 for unimodular values
  long long slope = 0;
  for (std::uint32_t j = 0; j < m; ++j) {
    pos[j] = (j + static_cast<std::uint32_t>(m) - 1) % m;
    slope += v[pos[j]] * (v[j] - v[(j + m - 1) % m]);
  }

  GoldenInt acc(0);  // accumulates 3 * integral
  GoldenInt prev(0);
  auto accumulate = [&](const GoldenInt& t) {
    const GoldenInt w = t - prev;
    if (gsign(w) <= 0) return;
    const GoldenInt s(slope);
    const GoldenInt w2 = w * w;
    acc += w * C * C * GoldenInt(3) + w2 * C * s * GoldenInt(3) + w2 * w * s * s;
    C += s * w;
    prev = t;
  };
  std::size_t idx = 0;
  while (idx < events.size()) {
    std::size_t end = idx + 1;
    while (end < events.size() && events[end].t == events[idx].t) ++end;
    accumulate(events[idx].t);
    for (std::size_t e = idx; e < end; ++e) {
      const std::uint32_t i = events[e].i, j = events[e].j;
      if (pos[j] != i) throw std::logic_error("u2 sweep: events out of order");
      const std::uint32_t inew = (i + static_cast<std::uint32_t>(m) - 1) % m;
      slope += (v[inew] - v[i]) * (v[j] - v[(j + m - 1) % m]);
      pos[j] = inew;
    }
    idx = end;
  }
  accumulate(GoldenInt(1));
  if (!(C == GoldenInt(1))) throw std::logic_error("u2 sweep: correlation failed to close up");
  return GoldenRational(acc, GoldenInt(3));
}

std::pair<double, double> gowers_u2_pow4_fourier(const StepFn& f, int H) {
  if (H < 1) throw std::invalid_argument("gowers_u2_pow4_fourier: H < 1");
  double sum = 0.0;
  for (long long h = -H; h <= H; ++h) {
    const double a = std::abs(f.fourier_coeff(h));
    sum += a * a * a * a;
  }
  const double V = f.total_variation();
  const double c = V / (2.0 * std::numbers::pi);
  const double tail = 2.0 * c * c * c * c / (3.0 * H * H * H);
  return {sum, tail};
}

namespace {

template <typename SampleFn>
U3Estimate u3_from_samples(int samples, std::uint64_t seed, SampleFn one_sample) {
  if (samples < 16) throw std::invalid_argument("gowers_u3_estimate: samples < 16");
  const std::uint64_t offset = seed % 1024;
  U3Estimate r;
  r.samples.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const GoldenInt z =
        gfrac(GoldenInt(0, static_cast<long long>(offset + 1 + static_cast<std::uint64_t>(j))));
    r.samples.push_back(one_sample(z));
  }
  double mean = 0.0;
  for (double y : r.samples) mean += y;
  mean /= samples;
  r.estimate = std::pow(std::max(0.0, mean), 1.0 / 8.0);
  // Jackknife over the offsets, delta method through the eighth root.
  double var = 0.0;
  const double n = samples;
  std::vector<double> thetas(r.samples.size());
  double tbar = 0.0;
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const double mi = (mean * n - r.samples[i]) / (n - 1.0);
    thetas[i] = std::pow(std::max(0.0, mi), 1.0 / 8.0);
    tbar += thetas[i];
  }
  tbar /= n;
  for (double th : thetas) var += (th - tbar) * (th - tbar);
  r.std_error = std::sqrt((n - 1.0) / n * var);
  return r;
}

}  // namespace

U3Estimate gowers_u3_estimate(const StepFn& f, int samples, std::uint64_t seed) {
  return u3_from_samples(samples, seed, [&](const GoldenInt& z) {
    const StepFn delta = f.pointwise_product(f.rotate(z).conjugate());
    const double u2 = gowers_u2_exact(delta);
    return u2 * u2 * u2 * u2;
  });
}

U3Estimate gowers_u3_estimate_parity(const StepFnZ& f, int samples, std::uint64_t seed) {
  return u3_from_samples(samples, seed, [&](const GoldenInt& z) {
    return gowers_u2_pow4_parity(f.difference(z)).to_double();
  });
}

}  // namespace zeck
