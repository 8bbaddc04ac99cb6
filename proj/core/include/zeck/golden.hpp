#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace zeck {

using BigInt = boost::multiprecision::cpp_int;

/// Floor of sqrt(n) for n >= 0.
BigInt isqrt(const BigInt& n);

/// An element a + b*phi of the ring Z[phi], phi = (1+sqrt 5)/2.
///
/// phi^2 = 1 + phi, so the ring is closed under multiplication, and phi is a
/// unit (phi^-1 = phi - 1).  All comparisons are exact: the sign of a + b*phi
/// is decided by integer arithmetic only, never by floating point.
class GoldenInt {
 public:
  GoldenInt() : a_(0), b_(0) {}
  GoldenInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}
  GoldenInt(long long a) : a_(a), b_(0) {}  // NOLINT: implicit by design

  static GoldenInt phi() { return GoldenInt(0, 1); }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_integer() const { return b_ == 0; }

  GoldenInt operator-() const { return GoldenInt(-a_, -b_); }
  GoldenInt operator+(const GoldenInt& o) const {
    return GoldenInt(a_ + o.a_, b_ + o.b_);
  }
  GoldenInt operator-(const GoldenInt& o) const {
    return GoldenInt(a_ - o.a_, b_ - o.b_);
  }
  // (a+b*phi)(c+d*phi) = (ac+bd) + (ad+bc+bd)*phi
  GoldenInt operator*(const GoldenInt& o) const {
    return GoldenInt(a_ * o.a_ + b_ * o.b_, a_ * o.b_ + b_ * o.a_ + b_ * o.b_);
  }
  GoldenInt& operator+=(const GoldenInt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  GoldenInt& operator-=(const GoldenInt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  GoldenInt& operator*=(const GoldenInt& o) { return *this = *this * o; }

  bool operator==(const GoldenInt& o) const {
    return a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const GoldenInt& o) const { return !(*this == o); }

  std::string str() const;

 private:
  BigInt a_, b_;
};

inline GoldenInt gadd(const GoldenInt& x, const GoldenInt& y) { return x + y; }
inline GoldenInt gmul(const GoldenInt& x, const GoldenInt& y) { return x * y; }
inline GoldenInt gneg(const GoldenInt& x) { return -x; }

/// Exact sign of a + b*phi in {-1, 0, +1}.
///
/// Writing a + b*phi = ((2a+b) + b*sqrt5)/2: when the signs of 2a+b and b
/// agree the answer is immediate; otherwise compare (2a+b)^2 against 5b^2.
int gsign(const GoldenInt& x);

/// Field norm a^2 + ab - b^2; zero iff x = 0, multiplicative.
BigInt gnorm(const GoldenInt& x);

/// Exact phi^k for any integer k.  For k >= 0 this is F_{k-1} + F_k*phi
/// (with F_{-1} = 1); phi^{-k} = (-1)^k (F_{k+1} - F_k*phi).
GoldenInt phi_pow(long long k);

/// Exact floor of a + b*phi.
BigInt gfloor(const GoldenInt& x);

/// x - floor(x), exact, in [0, 1).
GoldenInt gfrac(const GoldenInt& x);

/// Floating approximation with relative error < 2^(1-bits); reporting only,
/// never used in membership decisions.
double to_float(const GoldenInt& x, int bits = 53);

inline bool operator<(const GoldenInt& x, const GoldenInt& y) {
  return gsign(x - y) < 0;
}
inline bool operator>(const GoldenInt& x, const GoldenInt& y) {
  return gsign(x - y) > 0;
}
inline bool operator<=(const GoldenInt& x, const GoldenInt& y) {
  return gsign(x - y) <= 0;
}
inline bool operator>=(const GoldenInt& x, const GoldenInt& y) {
  return gsign(x - y) >= 0;
}

/// Quotient num/den of two ring elements, den != 0.  No reduction is
/// performed; equality and sign are decided by cross multiplication.
/// Used where exact chain probabilities with denominator (phi^2+1)^d or
/// exact Gowers integrals with denominator 3 are required.
class GoldenRational {
 public:
  GoldenRational() : num_(0), den_(1) {}
  GoldenRational(GoldenInt num, GoldenInt den);
  GoldenRational(long long n) : num_(n), den_(1) {}  // NOLINT

  const GoldenInt& num() const { return num_; }
  const GoldenInt& den() const { return den_; }

  GoldenRational operator+(const GoldenRational& o) const;
  GoldenRational operator-(const GoldenRational& o) const;
  GoldenRational operator*(const GoldenRational& o) const;
  GoldenRational operator/(const GoldenRational& o) const;
  GoldenRational operator-() const { return GoldenRational(-num_, den_); }

  bool operator==(const GoldenRational& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
  }
  bool operator!=(const GoldenRational& o) const { return !(*this == o); }

  int sign() const { return gsign(num_) * gsign(den_); }
  double to_double() const;

 private:
  GoldenInt num_, den_;
};

}  // namespace zeck
