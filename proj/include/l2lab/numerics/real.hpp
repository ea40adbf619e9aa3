#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <climits>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "l2lab/error.hpp"
#include "l2lab/numerics/precision.hpp"

namespace l2lab {

// RAII handle over mpfr_t. New values take the thread's working precision,
// copies keep the precision of their source.
class Real {
 public:
  Real() {
    mpfr_init2(v_, working_precision());
    mpfr_set_zero(v_, 1);
  }
  Real(int x) : Real(static_cast<long>(x)) {}
  Real(long x) {
    mpfr_init2(v_, working_precision());
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(long long x) : Real(static_cast<long>(x)) {}
  Real(unsigned long x) {
    mpfr_init2(v_, working_precision());
    mpfr_set_ui(v_, x, MPFR_RNDN);
  }
  Real(double x) {
    mpfr_init2(v_, working_precision());
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  explicit Real(const mpz_class& x) {
    mpfr_init2(v_, working_precision());
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  explicit Real(const mpq_class& x) {
    mpfr_init2(v_, working_precision());
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  explicit Real(std::string_view s) {
    mpfr_init2(v_, working_precision());
    std::string buf(s);
    if (mpfr_set_str(v_, buf.c_str(), 10, MPFR_RNDN) != 0)
      throw ParseError("not a decimal number: '" + buf + "'");
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent() const { return is_zero() ? LONG_MIN : mpfr_get_exp(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(unsigned long k) { mpfr_mul_ui(v_, v_, k, MPFR_RNDN); return *this; }
  Real& operator/=(unsigned long k) { mpfr_div_ui(v_, v_, k, MPFR_RNDN); return *this; }

  friend Real operator-(const Real& a) {
    Real r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, long k) {
    Real r;
    mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long k, const Real& a) { return a * k; }
  friend Real operator/(const Real& a, long k) {
    Real r;
    mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }

  friend int compare(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

using APReal = Real;

namespace detail {
template <class F>
Real unary(const Real& x, F f) {
  Real r;
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline Real abs(const Real& x) { return detail::unary(x, mpfr_abs); }
inline Real sqrt(const Real& x) { return detail::unary(x, mpfr_sqrt); }
inline Real exp(const Real& x) { return detail::unary(x, mpfr_exp); }
inline Real log(const Real& x) { return detail::unary(x, mpfr_log); }
inline Real sin(const Real& x) { return detail::unary(x, mpfr_sin); }
inline Real cos(const Real& x) { return detail::unary(x, mpfr_cos); }
inline Real sinh(const Real& x) { return detail::unary(x, mpfr_sinh); }
inline Real cosh(const Real& x) { return detail::unary(x, mpfr_cosh); }
inline Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, const Real& e) {
  Real r;
  mpfr_pow(r.raw(), x.raw(), e.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, long e) {
  Real r;
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}
inline Real square(const Real& x) { return detail::unary(x, mpfr_sqr); }
inline Real round_nearest(const Real& x) {
  Real r;
  mpfr_rint(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline long to_long(const Real& x) { return mpfr_get_si(x.raw(), MPFR_RNDN); }

inline Real pi() {
  Real r;
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

// 10^k at working precision
inline Real pow10(long k) { return pow(Real(10), k); }

inline Real epsilon(const PrecisionContext& ctx) { return pow10(-ctx.working_digits()); }

inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }

inline void require_finite(const Real& x, const char* what) {
  if (!x.is_finite()) throw DomainError(std::string(what) + ": non-finite result");
}

}  // namespace l2lab
