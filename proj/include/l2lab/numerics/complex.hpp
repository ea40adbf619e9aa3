#pragma once

#include "l2lab/numerics/real.hpp"

namespace l2lab {

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(int r) : re(r), im(0) {}
  Complex(long r) : re(r), im(0) {}
  Complex(double r) : re(r), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return Complex(Real(0), Real(1)); }

  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }
  Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
  Complex& operator/=(const Real& s) { re /= s; im /= s; return *this; }

  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    // scaled to avoid overflow in |b|^2 when the parts are far apart
    if (abs(b.re) >= abs(b.im)) {
      Real r = b.im / b.re;
      Real den = b.re + b.im * r;
      return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
    }
    Real r = b.re / b.im;
    Real den = b.re * r + b.im;
    return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator*(const Real& s, const Complex& a) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
};

using APComplex = Complex;

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) {
  Real r;
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex exp(const Complex& z) {
  Real m = exp(z.re);
  Real s, c;
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return {m * c, m * s};
}
// e^{i t}
inline Complex expi(const Real& t) {
  Real s, c;
  mpfr_sin_cos(s.raw(), c.raw(), t.raw(), MPFR_RNDN);
  return {c, s};
}
// principal branch
inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }
inline Complex pow(const Complex& z, const Real& e) {
  if (z.re.is_zero() && z.im.is_zero()) return Complex(0);
  return exp(log(z) * e);
}
inline Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(1) / pow(z, -n);
  Complex r(1), b = z;
  while (n > 0) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}
inline Complex sqrt(const Complex& z) {
  if (z.re.is_zero() && z.im.is_zero()) return Complex(0);
  Real m = abs(z);
  Real t = sqrt((m + abs(z.re)) / 2);
  if (z.re.sign() >= 0) return {t, z.im / (t * 2)};
  Real u = abs(z.im) / (t * 2);
  return {u, z.im.sign() < 0 ? -t : t};
}
inline Complex square(const Complex& z) { return z * z; }

inline void require_finite(const Complex& z, const char* what) {
  if (!z.is_finite()) throw DomainError(std::string(what) + ": non-finite result");
}

namespace detail {
// |w|^2 below this counts as inside the unit disc; points on the circle are
// left alone so that rounding cannot make w -> -1/w cycle
inline Real unit_norm_cutoff() { return Real(1) - pow(Real(2), 16 - static_cast<long>(working_precision())); }
}  // namespace detail

}  // namespace l2lab
