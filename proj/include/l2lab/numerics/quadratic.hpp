#pragma once

#include <gmpxx.h>

#include <ostream>
#include <sstream>
#include <string>

#include "l2lab/error.hpp"
#include "l2lab/numerics/real.hpp"

namespace l2lab {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_squarefree(long n) {
  if (n <= 0) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

// Exact a + b*sqrt(D) with rational a, b and squarefree D >= 1.
class QuadraticNumber {
 public:
  QuadraticNumber() : a_(0), b_(0), D_(1) {}
  QuadraticNumber(long a) : a_(a), b_(0), D_(1) {}
  QuadraticNumber(Rational a) : a_(std::move(a)), b_(0), D_(1) { a_.canonicalize(); }
  QuadraticNumber(Rational a, Rational b, long D) : a_(std::move(a)), b_(std::move(b)), D_(D) {
    if (!is_squarefree(D_))
      throw DomainError("QuadraticNumber: D=" + std::to_string(D_) + " is not a squarefree positive integer");
    a_.canonicalize();
    b_.canonicalize();
    if (D_ == 1) {
      a_ += b_;
      b_ = 0;
    }
    if (b_ == 0) D_ = 1;
  }

  static QuadraticNumber sqrt_of(long D) { return QuadraticNumber(0, 1, D); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long D() const { return D_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadraticNumber conjugate() const { return QuadraticNumber(a_, -b_, D_); }
  Rational norm() const { return a_ * a_ - b_ * b_ * D_; }

  friend QuadraticNumber operator-(const QuadraticNumber& x) { return QuadraticNumber(-x.a_, -x.b_, x.D_); }
  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    long D = common_field(x, y);
    return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, D);
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    long D = common_field(x, y);
    return QuadraticNumber(x.a_ * y.a_ + x.b_ * y.b_ * D, x.a_ * y.b_ + x.b_ * y.a_, D);
  }
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (y.is_zero()) throw DomainError("QuadraticNumber: division by zero");
    Rational n = y.norm();
    QuadraticNumber t = x * y.conjugate();
    return QuadraticNumber(t.a_ / n, t.b_ / n, t.D_);
  }
  QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
  QuadraticNumber& operator*=(const QuadraticNumber& y) { return *this = *this * y; }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.D_ == y.D_);
  }
  friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

  QuadraticNumber pow(long n) const {
    if (n < 0) return QuadraticNumber(1) / pow(-n);
    QuadraticNumber r(1), base = *this;
    while (n > 0) {
      if (n & 1) r = r * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << a_;
    if (b_ != 0) os << (b_ < 0 ? " - " : " + ") << abs(b_) << "*sqrt(" << D_ << ")";
    return os.str();
  }

 private:
  // Rationals embed in every field, so they combine freely.
  static long common_field(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.b_ == 0) return y.D_;
    if (y.b_ == 0) return x.D_;
    if (x.D_ != y.D_)
      throw DomainError("QuadraticNumber: cannot mix sqrt(" + std::to_string(x.D_) + ") and sqrt(" +
                        std::to_string(y.D_) + ")");
    return x.D_;
  }

  Rational a_, b_;
  long D_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadraticNumber& q) { return os << q.to_string(); }

// a + b*sqrt(D) with the positive root. When a and b*sqrt(D) have opposite
// signs the value is computed as norm / (a - b*sqrt(D)) to avoid cancellation.
inline Real embed_quadratic(const QuadraticNumber& q, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (q.is_rational()) return Real(q.a());
  Real s = sqrt(Real(q.D()));
  Real bs = Real(q.b()) * s;
  if (q.a() == 0 || sgn(q.a()) == sgn(q.b())) return Real(q.a()) + bs;
  return Real(q.norm()) / (Real(q.a()) - bs);
}

// factor * base^exponent, kept unexpanded so the embedding stays well conditioned.
struct QuadraticPower {
  QuadraticNumber factor{1};
  QuadraticNumber base{1};
  long exponent = 1;

  QuadraticPower() = default;
  QuadraticPower(QuadraticNumber v) : factor(1), base(std::move(v)), exponent(1) {}
  QuadraticPower(QuadraticNumber f, QuadraticNumber b, long e)
      : factor(std::move(f)), base(std::move(b)), exponent(e) {}

  bool is_plain() const { return exponent == 1 && factor == QuadraticNumber(1); }
  QuadraticNumber value() const { return factor * base.pow(exponent); }
};

inline Real embed_quadratic(const QuadraticPower& p, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Real b = embed_quadratic(p.base, ctx);
  return embed_quadratic(p.factor, ctx) * pow(b, p.exponent);
}

}  // namespace l2lab
