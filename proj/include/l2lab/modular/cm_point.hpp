#pragma once

#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>

#include "l2lab/numerics/complex.hpp"
#include "l2lab/numerics/quadratic.hpp"

namespace l2lab {

class HalfPlanePoint {
 public:
  HalfPlanePoint(Complex z) : z_(std::move(z)) {
    if (!(z_.im.sign() > 0)) throw DomainError("point is not in the upper half-plane");
    require_finite(z_, "HalfPlanePoint");
  }
  HalfPlanePoint(Real re, Real im) : HalfPlanePoint(Complex(std::move(re), std::move(im))) {}

  const Complex& z() const { return z_; }
  const Real& re() const { return z_.re; }
  const Real& im() const { return z_.im; }
  operator const Complex&() const { return z_; }

 private:
  Complex z_;
};

// Root in the upper half-plane of A z^2 + B z + C with A > 0, gcd 1, B^2 - 4AC < 0.
class CMPoint {
 public:
  CMPoint(std::int64_t A, std::int64_t B, std::int64_t C) : A_(A), B_(B), C_(C) {
    if (A <= 0) throw DomainError("CMPoint: leading coefficient must be positive");
    if (std::gcd(std::gcd(A, B), C) != 1) throw DomainError("CMPoint: coefficients must be coprime");
    if (discriminant() >= 0) throw DomainError("CMPoint: discriminant must be negative");
  }

  // Accepts "x + t*sqrt(n)*i" with rationals x, t and integer n > 0, plus
  // the shorthands "i", "t*i", "sqrt(n)*i", "x + t*i", "x - t*sqrt(n)*i".
  static CMPoint parse(std::string_view text);

  // z = x + t*sqrt(n)*i
  static CMPoint from_parts(const Rational& x, const Rational& t, long n);

  std::int64_t A() const { return A_; }
  std::int64_t B() const { return B_; }
  std::int64_t C() const { return C_; }
  std::int64_t discriminant() const { return B_ * B_ - 4 * A_ * C_; }

  Rational real_part() const { return make_rational(BigInt(static_cast<long>(-B_)), BigInt(static_cast<long>(2 * A_))); }

  // Im z = t*sqrt(n) with n squarefree
  std::pair<Rational, long> imag_part() const {
    std::int64_t delta = -discriminant();
    std::int64_t s = 1, n = delta;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      while (n % (p * p) == 0) {
        n /= p * p;
        s *= p;
      }
    }
    return {make_rational(BigInt(static_cast<long>(s)), BigInt(static_cast<long>(2 * A_))), static_cast<long>(n)};
  }

  Complex embed(const PrecisionContext& ctx) const {
    PrecisionScope scope(ctx);
    Real two_a(static_cast<long>(2 * A_));
    return {Real(static_cast<long>(-B_)) / two_a, sqrt(Real(static_cast<long>(-discriminant()))) / two_a};
  }
  HalfPlanePoint point(const PrecisionContext& ctx) const { return HalfPlanePoint(embed(ctx)); }

  // image under z -> (a z + b)/(c z + d), ad - bc = 1
  CMPoint transform(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) const {
    if (a * d - b * c != 1) throw DomainError("CMPoint::transform: matrix must have determinant 1");
    std::int64_t A2 = A_ * d * d - B_ * c * d + C_ * c * c;
    std::int64_t B2 = -2 * A_ * b * d + B_ * (a * d + b * c) - 2 * C_ * a * c;
    std::int64_t C2 = A_ * b * b - B_ * a * b + C_ * a * a;
    if (A2 < 0) {
      A2 = -A2;
      B2 = -B2;
      C2 = -C2;
    }
    return CMPoint(A2, B2, C2);
  }

  std::string to_string() const {
    auto [t, n] = imag_part();
    std::ostringstream os;
    os << real_part() << " + " << t << "*sqrt(" << n << ")*i";
    return os.str();
  }

  friend bool operator==(const CMPoint& p, const CMPoint& q) {
    return p.A_ == q.A_ && p.B_ == q.B_ && p.C_ == q.C_;
  }

 private:
  std::int64_t A_, B_, C_;
};

inline std::int64_t discriminant(const CMPoint& p) { return p.discriminant(); }

inline CMPoint CMPoint::from_parts(const Rational& x, const Rational& t, long n) {
  if (n <= 0) throw ParseError("CM point: radicand must be a positive integer");
  if (t <= 0) throw ParseError("CM point: imaginary part must be positive");
  // (z - x)^2 = -t^2 n  =>  z^2 - 2x z + (x^2 + t^2 n) = 0
  Rational b = -2 * x;
  Rational c = x * x + t * t * n;
  BigInt l = lcm(b.get_den(), c.get_den());
  BigInt A = l, B = b.get_num() * (l / b.get_den()), C = c.get_num() * (l / c.get_den());
  BigInt g = gcd(gcd(A, B), C);
  A /= g;
  B /= g;
  C /= g;
  if (!A.fits_slong_p() || !B.fits_slong_p() || !C.fits_slong_p())
    throw ParseError("CM point: minimal polynomial coefficients too large");
  return CMPoint(A.get_si(), B.get_si(), C.get_si());
}

namespace detail {

class CMParser {
 public:
  explicit CMParser(std::string_view s) : s_(s) {}

  CMPoint parse() {
    Rational x(0);
    int sign = read_sign();
    if (sign == 0) sign = 1;
    Rational t;
    long n = 1;
    if (imaginary_ahead()) {
      read_imaginary(t, n);
      t *= sign;
    } else {
      x = read_rational() * sign;
      int s2 = read_sign();
      if (s2 == 0) fail("expected '+' or '-' before the imaginary part");
      read_imaginary(t, n);
      t *= s2;
    }
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return CMPoint::from_parts(x, t, n);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("CM point '" + std::string(s_) + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  // returns +1, -1, or 0 when no sign is present; accepts U+2212 as minus
  int read_sign() {
    if (accept("+")) return 1;
    if (accept("-") || accept("\xE2\x88\x92")) return -1;
    return 0;
  }
  long read_int() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 15) fail("integer too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  Rational read_rational() {
    bool paren = accept("(");
    long num = read_int();
    long den = 1;
    if (accept("/")) den = read_int();
    if (den == 0) fail("zero denominator");
    if (paren && !accept(")")) fail("expected ')'");
    return make_rational(BigInt(num), BigInt(den));
  }
  // the remaining term contains an 'i' before any sign
  bool imaginary_ahead() const {
    for (size_t k = pos_; k < s_.size(); ++k) {
      char c = s_[k];
      if (c == 'i') return true;
      if (c == '+' || c == '-' || static_cast<unsigned char>(c) == 0xE2) return false;
    }
    return false;
  }
  void read_imaginary(Rational& t, long& n) {
    t = 1;
    n = 1;
    skip_ws();
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
      t = read_rational();
      accept("*");
    }
    if (accept("sqrt(")) {
      if (accept("-") || accept("\xE2\x88\x92")) fail("radicand must be a positive integer");
      n = read_int();
      if (n <= 0) fail("radicand must be a positive integer");
      if (!accept(")")) fail("expected ')'");
      accept("*");
    }
    if (!accept("i")) fail("expected 'i'");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline CMPoint CMPoint::parse(std::string_view text) { return detail::CMParser(text).parse(); }

}  // namespace l2lab
