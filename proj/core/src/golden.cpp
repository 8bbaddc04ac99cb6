#include "zeck/golden.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zeck {

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

std::string GoldenInt::str() const {
  std::ostringstream os;
  os << a_;
  if (b_ >= 0) os << "+" << b_ << "phi";
  else os << b_ << "phi";
  return os.str();
}

int gsign(const GoldenInt& x) {
  if (x.b() == 0) return x.a() == 0 ? 0 : (x.a() > 0 ? 1 : -1);
  const BigInt t = 2 * x.a() + x.b();  // x = (t + b*sqrt5)/2
  const int st = t == 0 ? 0 : (t > 0 ? 1 : -1);
  const int sb = x.b() > 0 ? 1 : -1;
  if (st == 0) return sb;
  if (st == sb) return st;
  // Opposite signs: |t| vs sqrt5*|b| decides; equality impossible (b != 0).
  const BigInt t2 = t * t;
  const BigInt f2 = 5 * x.b() * x.b();
  if (t2 == f2) throw std::logic_error("gsign: sqrt5 rational?");
  return t2 > f2 ? st : sb;
}

BigInt gnorm(const GoldenInt& x) {
  return x.a() * x.a() + x.a() * x.b() - x.b() * x.b();
}

GoldenInt phi_pow(long long k) {
  const bool neg = k < 0;
  const unsigned long long m = neg ? static_cast<unsigned long long>(-k)
                                   : static_cast<unsigned long long>(k);
  // F_{m-1}, F_m by iteration (F_{-1} = 1).
  BigInt fprev = 1, f = 0;
  for (unsigned long long i = 0; i < m; ++i) {
    BigInt next = fprev + f;
    fprev = f;
    f = next;
  }
  if (!neg) return GoldenInt(fprev, f);
  // phi^{-m} = (-1)^m (F_{m+1} - F_m phi)
  BigInt fnext = fprev + f;
  if (m % 2 == 0) return GoldenInt(fnext, -f);
  return GoldenInt(-fnext, f);
}

BigInt gfloor(const GoldenInt& x) {
  if (x.b() == 0) return x.a();
  // x = (t + b*sqrt5)/2 with t = 2a+b; floor(b*sqrt5) is exact via isqrt.
  const BigInt t = 2 * x.a() + x.b();
  BigInt fl5;
  if (x.b() > 0) {
    fl5 = isqrt(5 * x.b() * x.b());
  } else {
    fl5 = -isqrt(5 * x.b() * x.b()) - 1;  // strict: sqrt5*b irrational
  }
  BigInt num = t + fl5;  // floor of the numerator t + b*sqrt5
  // floor(num_real/2) = floordiv(floor(num_real), 2) since num_real not in Z.
  BigInt q = num / 2;
  if (num < 0 && num % 2 != 0) --q;
  return q;
}

GoldenInt gfrac(const GoldenInt& x) {
  return x - GoldenInt(gfloor(x), 0);
}

double to_float(const GoldenInt& x, int bits) {
  if (bits < 24) throw std::invalid_argument("to_float: bits < 24");
  if (x.is_zero()) return 0.0;
  const int k = bits < 64 ? 64 : bits;
  GoldenInt scaled(x.a() << k, x.b() << k);
  BigInt m = gfloor(scaled);
  return std::ldexp(m.convert_to<double>(), -k);
}

GoldenRational::GoldenRational(GoldenInt num, GoldenInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("GoldenRational: zero denominator");
}

GoldenRational GoldenRational::operator+(const GoldenRational& o) const {
  return GoldenRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
GoldenRational GoldenRational::operator-(const GoldenRational& o) const {
  return GoldenRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
GoldenRational GoldenRational::operator*(const GoldenRational& o) const {
  return GoldenRational(num_ * o.num_, den_ * o.den_);
}
GoldenRational GoldenRational::operator/(const GoldenRational& o) const {
  if (o.num_.is_zero()) throw std::invalid_argument("GoldenRational: divide by zero");
  return GoldenRational(num_ * o.den_, den_ * o.num_);
}

double GoldenRational::to_double() const {
  // Scale the quotient into [1,2) range exactly, then divide as doubles.
  // Good to ~1e-15 relative error, which is all reporting needs.
  double n = to_float(num_, 64);
  double d = to_float(den_, 64);
  if (n == 0.0) return 0.0;
  if (std::isfinite(n) && std::isfinite(d) && d != 0.0) return n / d;
  // Fall back to 256-bit floor-based evaluation of the quotient.
  GoldenInt shifted(num_.a() << 128, num_.b() << 128);
  // num/den = (num * conj(den)) / N(den) with conj(a+b*phi) = (a+b) - b*phi.
  GoldenInt conj(den_.a() + den_.b(), -den_.b());
  GoldenInt top = shifted * conj;
  BigInt bottom = gnorm(den_);
  BigInt q = gfloor(top) / bottom;
  return std::ldexp(q.convert_to<double>(), -128);
}

}  // namespace zeck
