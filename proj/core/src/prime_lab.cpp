#include "zeck/prime_lab.hpp"

#include "zeck/errors.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zeck/numeration.hpp"
#include "zeck/sieve.hpp"

namespace zeck {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLogPhi = 0.4812118250596034475;

Complex e_of(double x) { return std::exp(Complex(0.0, kTwoPi * x)); }

double log_phi(double x) { return std::log(x) / kLogPhi; }

}  // namespace

std::map<int, std::uint64_t> sz_histogram_primes(std::uint64_t x, int threads) {
  if (x < 2) throw std::invalid_argument("sz_histogram_primes: x < 2");
  using Hist = std::vector<std::uint64_t>;
  Hist hist = parallel_prime_reduce<Hist>(
      x, threads, Hist(96, 0),
      [](const std::vector<std::uint64_t>& primes) {
        Hist h(96, 0);
        for (std::uint64_t p : primes) ++h[static_cast<std::size_t>(sz(p))];
        return h;
      },
      [](Hist& acc, const Hist& h) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += h[i];
      });
  std::map<int, std::uint64_t> out;
  for (std::size_t k = 0; k < hist.size(); ++k)
    if (hist[k] != 0) out[static_cast<int>(k)] = hist[k];
  return out;
}

LocalCltResult local_clt_table(std::uint64_t x, int threads) {
  if (x < 1000) throw std::invalid_argument("local_clt_table: x < 10^3");
  LocalCltResult r;
  r.x = x;
  const auto hist = sz_histogram_primes(x, threads);
  std::uint64_t total = 0;
  int kmax = 0;
  for (const auto& [k, c] : hist) {
    total += c;
    kmax = std::max(kmax, k);
  }
  r.pi_x = total;
  const double L = log_phi(static_cast<double>(x));
  const double phi = 1.6180339887498948482;
  const double mu = 1.0 / (phi * phi + 1.0);
  const double s2 = phi * phi * phi / std::pow(phi * phi + 1.0, 3.0);
  const double center = mu * L;
  const double var = s2 * L;
  const double amp = static_cast<double>(total) / std::sqrt(2.0 * std::numbers::pi * var);
  r.sup_rel_err = 0.0;
  double best_pred = -1.0;
  int modal_k = 0;
  for (int k = 0; k <= kmax + 8; ++k) {
    LocalCltRow row;
    row.k = k;
    auto it = hist.find(k);
    row.observed = it == hist.end() ? 0 : it->second;
    row.predicted = amp * std::exp(-(k - center) * (k - center) / (2.0 * var));
    row.abs_err = std::abs(static_cast<double>(row.observed) - row.predicted);
    r.sup_rel_err = std::max(r.sup_rel_err, row.abs_err / static_cast<double>(total));
    if (row.predicted > best_pred) {
      best_pred = row.predicted;
      modal_k = k;
    }
    r.rows.push_back(row);
  }
  const auto& mrow = r.rows[static_cast<std::size_t>(modal_k)];
  r.modal_rel_err = mrow.abs_err / mrow.predicted;
  return r;
}

std::vector<std::uint64_t> residue_counts(std::uint64_t x, int m, int threads) {
  if (m < 1) throw std::invalid_argument("residue_counts: m < 1");
  using Counts = std::vector<std::uint64_t>;
  return parallel_prime_reduce<Counts>(
      x, threads, Counts(static_cast<std::size_t>(m), 0),
      [m](const std::vector<std::uint64_t>& primes) {
        Counts c(static_cast<std::size_t>(m), 0);
        for (std::uint64_t p : primes) ++c[static_cast<std::size_t>(sz(p) % m)];
        return c;
      },
      [](Counts& acc, const Counts& c) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c[i];
      });
}

double residue_deviation(std::uint64_t x, int m, int threads) {
  const auto counts = residue_counts(x, m, threads);
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  double dev = 0.0;
  for (auto c : counts)
    dev = std::max(dev, std::abs(static_cast<double>(c) / static_cast<double>(total) -
                                 1.0 / static_cast<double>(m)));
  return dev;
}

namespace {

// Enumerate integers with exactly `weight` nonzero Zeckendorf digits among
// indices [2, max_index], in increasing numeric order, stopping when visit()
// returns true.  Numbers with top index T form the range [F_T, F_{T+1}), so
// ascending T with a recursive ascending tail enumeration is globally sorted.
bool enumerate_sz_k(int weight, int max_index, std::uint64_t prefix, int top_below,
                    const std::function<bool(std::uint64_t)>& visit) {
  if (weight == 0) return visit(prefix);
  // smallest admissible top index for `weight` more digits: 2weight, shifted
  // up so lower digits fit (indices 2, 4, ..., 2weight)
  for (int T = 2 * weight; T <= top_below && T <= max_index; ++T) {
    if (enumerate_sz_k(weight - 1, max_index, prefix + fib64(T), T - 2, visit)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::uint64_t> smallest_prime_with_sz(int k, int index_bound) {
  if (k < 1) throw std::invalid_argument("smallest_prime_with_sz: k < 1");
  if (index_bound < 2 || index_bound > 92)
    throw std::invalid_argument("smallest_prime_with_sz: index_bound outside [2,92]");
  std::optional<std::uint64_t> found;
  enumerate_sz_k(k, index_bound, 0, index_bound,
                 [&](std::uint64_t n) {
                   if (n >= 2 && is_prime_u64(n)) {
                     found = n;
                     return true;
                   }
                   return false;
                 });
  return found;
}

std::vector<FibPrimeRow> fibonacci_prime_scan(int max_index) {
  if (max_index < 1 || max_index > 1000)
    throw std::invalid_argument("fibonacci_prime_scan: max_index outside [1,1000]");
  std::vector<FibPrimeRow> out;
  for (int k = 1; k <= max_index; ++k) {
    const BigInt f = fib(k);
    if (f < 2) continue;
    if (f < (BigInt(1) << 64)) {
      if (is_prime_u64(f.convert_to<std::uint64_t>())) out.push_back({k, false});
    } else if (probable_prime(f)) {
      out.push_back({k, true});
    }
  }
  return out;
}

namespace {

struct ComplexAcc {
  double re = 0.0, im = 0.0;
  void add(Complex c) {
    re += c.real();
    im += c.imag();
  }
};

Complex prime_sum(std::uint64_t x, int threads, double theta, bool use_sz) {
  ComplexAcc acc = parallel_prime_reduce<ComplexAcc>(
      x, threads, ComplexAcc{},
      [theta, use_sz](const std::vector<std::uint64_t>& primes) {
        ComplexAcc a;
        for (std::uint64_t p : primes) {
          const double arg = use_sz ? theta * sz(p)
                                    : std::fmod(theta * static_cast<double>(p), 1.0);
          a.add(e_of(arg));
        }
        return a;
      },
      [](ComplexAcc& acc2, const ComplexAcc& a) {
        acc2.re += a.re;
        acc2.im += a.im;
      });
  return Complex(acc.re, acc.im);
}

}  // namespace

Complex exp_sum_primes(double theta, std::uint64_t x, int threads) {
  return prime_sum(x, threads, theta, false);
}

Complex exp_sum_sz_primes(double theta, std::uint64_t x, int threads) {
  return prime_sum(x, threads, theta, true);
}

Complex exp_sum_sz_mangoldt(double theta, std::uint64_t x, int threads) {
  ComplexAcc acc = parallel_prime_reduce<ComplexAcc>(
      x, threads, ComplexAcc{},
      [theta, x](const std::vector<std::uint64_t>& primes) {
        ComplexAcc a;
        for (std::uint64_t p : primes) {
          const double logp = std::log(static_cast<double>(p));
          // all powers p^k <= x contribute log p
          for (std::uint64_t q = p;; q *= p) {
            a.add(logp * e_of(theta * sz(q)));
            if (q > x / p) break;
          }
        }
        return a;
      },
      [](ComplexAcc& acc2, const ComplexAcc& a) {
        acc2.re += a.re;
        acc2.im += a.im;
      });
  return Complex(acc.re, acc.im);
}

double chebyshev_psi(std::uint64_t x) {
  double psi = 0.0;
  for_each_prime(x, [&](std::uint64_t p) {
    const double logp = std::log(static_cast<double>(p));
    for (std::uint64_t q = p;; q *= p) {
      psi += logp;
      if (q > x / p) break;
    }
  });
  return psi;
}

double lod_statistic(std::uint64_t x, double eps, double theta) {
  if (x > 100000) throw ResourceLimitError("lod_statistic: cost guard x <= 10^5 exceeded");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("lod_statistic: eps in (0,1)");
  const auto D = static_cast<std::uint64_t>(
      std::floor(std::pow(static_cast<double>(x), 1.0 - eps)));
  std::vector<Complex> vals(static_cast<std::size_t>(x) + 1);
  for (std::uint64_t n = 0; n <= x; ++n) vals[n] = e_of(theta * sz(n));
  double total = 0.0;
  std::vector<Complex> per_class;
  for (std::uint64_t d = 1; d <= D; ++d) {
    per_class.assign(static_cast<std::size_t>(d), Complex(0.0, 0.0));
    for (std::uint64_t n = 0; n <= x; ++n) per_class[n % d] += vals[n];
    double best = 0.0;
    for (const auto& c : per_class) best = std::max(best, std::abs(c));
    total += best;
  }
  return total;
}

Complex char_fn_primes(double t, std::uint64_t x, CharFnMode mode, double nu, int threads) {
  if (x < 1000) throw std::invalid_argument("char_fn_primes: x < 10^3");
  const double Lreal = log_phi(static_cast<double>(x));
  const int L = static_cast<int>(std::floor(Lreal));
  int lo = 2, hi = L;
  int Lnorm = L;
  if (mode == CharFnMode::kTruncated) {
    if (!(nu > 0.0 && nu < 0.5))
      throw std::invalid_argument("char_fn_primes: need 0 < nu < 1/2 in truncated mode");
    const double Lnu = std::pow(static_cast<double>(L), nu);
    lo = std::max(2, static_cast<int>(std::ceil(Lnu)));
    hi = static_cast<int>(std::floor(static_cast<double>(L) - Lnu));
    if (lo > hi) throw std::invalid_argument("char_fn_primes: empty truncation window");
    Lnorm = hi - lo + 1;
  }
  const double phi = 1.6180339887498948482;
  const double mu = 1.0 / (phi * phi + 1.0);
  const double s2 = phi * phi * phi / std::pow(phi * phi + 1.0, 3.0);
  const double scale = std::sqrt(Lnorm * s2);
  const double center = Lnorm * mu;

  struct Acc {
    double re = 0.0, im = 0.0;
    std::uint64_t count = 0;
  };
  Acc acc = parallel_prime_reduce<Acc>(
      x, threads, Acc{},
      [&](const std::vector<std::uint64_t>& primes) {
        Acc a;
        for (std::uint64_t p : primes) {
          int s;
          if (mode == CharFnMode::kFull) {
            s = sz(p);
          } else {
            s = 0;
            const auto d = zeck_expand(p);
            for (int idx : d.ones)
              if (idx >= lo && idx <= hi) ++s;
          }
          const Complex c = std::exp(Complex(0.0, t * (s - center) / scale));
          a.re += c.real();
          a.im += c.imag();
          ++a.count;
        }
        return a;
      },
      [](Acc& b, const Acc& a) {
        b.re += a.re;
        b.im += a.im;
        b.count += a.count;
      });
  return Complex(acc.re / static_cast<double>(acc.count),
                 acc.im / static_cast<double>(acc.count));
}

bool verify_prime_slow(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 1000000000ULL) {
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
  return is_prime_u64(n);
}

bool probable_prime(const BigInt& n, int rounds) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    if (n % p == 0) return n == p;
  }
  BigInt d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // Fixed bases: deterministic rerun always reproduces the same verdict.
  BigInt base = 2;
  for (int round = 0; round < rounds; ++round) {
    base = base * 6364136223846793005ULL + 1442695040888963407ULL;
    BigInt a = 2 + base % (n - 3);
    BigInt x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace zeck
