#pragma once

#include <vector>

#include "l2lab/modular/cm_point.hpp"

namespace l2lab {

namespace detail {

// sigma_3(n) for n = 0..nmax (index 0 unused)
inline std::vector<BigInt> sigma3_table(long nmax) {
  std::vector<BigInt> s(static_cast<size_t>(nmax + 1), 0);
  for (long d = 1; d <= nmax; ++d) {
    BigInt d3 = BigInt(d) * d * d;
    for (long m = d; m <= nmax; m += d) s[static_cast<size_t>(m)] += d3;
  }
  return s;
}

// Smallest M with C * M^p * r^M / (1 - r (1 + 1/M)^p) below eps, where r = |q|.
// Bounds sum_{n >= M} C n^p r^n, used for the sigma_3 weighted q-series.
inline long qseries_cutoff(const Real& r, int p, double C, const PrecisionContext& ctx) {
  if (!(r < Real(1))) throw DomainError("q-series: |q| >= 1");
  double lr = log(r).to_double();
  double target = -ctx.working_digits() * 2.302585092994046 - std::log(C);
  for (long M = 1;; ++M) {
    if (M > ctx.max_terms) throw ConvergenceError("q-series: max_terms exceeded");
    double ratio = std::exp(lr) * std::pow(1.0 + 1.0 / M, p);
    if (ratio >= 1) continue;
    double lbound = p * std::log(double(M)) + M * lr - std::log(1 - ratio);
    if (lbound < target) return M;
  }
}

}  // namespace detail

// E_4(z) = 1 + 240 sum sigma_3(n) q^n
inline Complex eisenstein_e4(const HalfPlanePoint& point, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Complex& z = point.z();
  Complex q = exp(Complex(Real(0), pi() * 2) * z);
  long M = detail::qseries_cutoff(abs(q), 3, 240 * 1.21, ctx);
  auto sig = detail::sigma3_table(M);
  Complex sum(0), qn(1);
  for (long n = 1; n < M; ++n) {
    qn *= q;
    sum += qn * Real(sig[static_cast<size_t>(n)]);
  }
  return Complex(1) + sum * Real(240);
}

// Termwise integral of 1 - E_4 against (z-w)(conj z - w) along the vertical ray:
// E~_4(z) = i sum sigma_3(n) q^n [60/(pi^3 n^3) + 120 y/(pi^2 n^2)].
inline Complex eichler_e4_tilde(const HalfPlanePoint& point, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Complex& z = point.z();
  const Real pi_ = pi();
  const Real y = z.im;
  Complex q = exp(Complex(Real(0), pi_ * 2) * z);
  // sigma_3(n) [60/n^3 + 120 y n^{-2}] <= 1.21 (60 + 120 y n) after dropping powers of pi
  double cy = 60.0 + 120.0 * std::max(1.0, y.to_double());
  long M = detail::qseries_cutoff(abs(q), 1, 1.21 * cy, ctx);
  auto sig = detail::sigma3_table(M);
  const Real c3 = Real(60) / pow(pi_, 3L);
  const Real c2 = Real(120) * y / square(pi_);
  Complex sum(0), qn(1);
  for (long n = 1; n < M; ++n) {
    qn *= q;
    Real nn(n);
    Real w = Real(sig[static_cast<size_t>(n)]) * (c3 / (nn * nn * nn) + c2 / (nn * nn));
    sum += qn * w;
  }
  return Complex(-sum.im, sum.re);
}

namespace detail {
inline Real reflection_rhs_bracket(const Complex& z) {
  Real n2 = norm(z);
  Real y2 = square(z.im);
  return (n2 + y2 * 2) / square(n2) + n2 + y2 * 2 - Real(5);
}
inline bool near_half_integer_multiple(const Real& x, const PrecisionContext& ctx) {
  Real t = x * 2;
  return abs(t - round_nearest(t)) <= pow10(-(ctx.digits / 2));
}
}  // namespace detail

// Closed forms for Re E~_4: 0 when 2 Re z is an integer, the reflected value
// when 2 Re(1/z) is an integer.
inline Real re_eichler_closed_form(const HalfPlanePoint& point, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Complex& z = point.z();
  if (detail::near_half_integer_multiple(z.re, ctx)) return Real(0);
  Complex w = Complex(1) / z;
  if (detail::near_half_integer_multiple(w.re, ctx)) return -(z.re / 3) * detail::reflection_rhs_bracket(z);
  throw DomainError("re_eichler_closed_form: neither 2 Re z nor 2 Re(1/z) is an integer");
}

inline Real reflection_residual(const HalfPlanePoint& point, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Complex& z = point.z();
  Real y2 = square(z.im);
  Real re_z = eichler_e4_tilde(point, ctx).re;
  Real re_inv = eichler_e4_tilde(HalfPlanePoint(Complex(-1) / z), ctx).re;
  Real lhs = norm(z) / y2 * re_inv - re_z / y2;
  Real rhs = z.re / (y2 * 3) * detail::reflection_rhs_bracket(z);
  return abs(lhs - rhs);
}

}  // namespace l2lab
