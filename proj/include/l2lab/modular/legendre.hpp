#pragma once

#include <utility>
#include <vector>

#include "l2lab/numerics/complex.hpp"
#include "l2lab/numerics/quadratic.hpp"

namespace l2lab {

// Degrees used with the level-N invariants: N = 4 sin^2(nu pi).
inline Rational legendre_degree(int N) {
  switch (N) {
    case 2: return Rational(-1, 4);
    case 3: return Rational(-1, 3);
    case 4: return Rational(-1, 2);
    default: throw DomainError("no Legendre degree for level " + std::to_string(N));
  }
}

inline void check_degree(const Rational& nu) {
  if (nu != Rational(-1, 4) && nu != Rational(-1, 3) && nu != Rational(-1, 2))
    throw DomainError("legendre: degree must be -1/4, -1/3 or -1/2");
}

// F(t) = 2F1(-nu, nu+1; 1; t) = P_nu(1-2t) together with dF/dt.
struct LegendreValue {
  Complex f;
  Complex df;
};

namespace detail {

inline LegendreValue legendre_series(const Rational& nu, const Complex& t, const PrecisionContext& ctx) {
  const Real a(Rational(-nu)), b(Rational(nu + 1));
  Real eps = epsilon(ctx) * Real(1e-3);
  Complex f(1), df(0);
  Complex term(1);  // (a)_k (b)_k / (k!)^2 t^k
  for (long k = 0;; ++k) {
    if (k > ctx.max_terms) throw ConvergenceError("legendre series: max_terms exceeded");
    // d/dt of the k+1 term is (k+1) coef_{k+1} t^k = term * (a+k)(b+k)/(k+1)
    Real ratio = (a + Real(k)) * (b + Real(k)) / Real(k + 1);
    Complex dterm = term * ratio;
    df += dterm;
    term = dterm * t / Real(k + 1);
    f += term;
    if (abs(dterm) < eps && abs(term) < eps) break;
  }
  return {f, df};
}

// One Taylor step of t(1-t)F'' + (1-2t)F' + nu(nu+1)F = 0 from t0 to t0 + h.
inline LegendreValue legendre_taylor_step(const Real& lambda, const Complex& t0, const LegendreValue& v,
                                          const Complex& h, const PrecisionContext& ctx) {
  const Complex p0 = t0 * (Complex(1) - t0);
  const Complex p1 = Complex(1) - t0 * Real(2);
  const Complex inv_p0 = Complex(1) / p0;
  Real scale = abs(v.f) + abs(v.df) * abs(h);
  Real eps = epsilon(ctx) * Real(1e-3) * scale;

  Complex cprev = v.f, ccur = v.df;  // c_n, c_{n+1}
  Complex hn = h;                    // h^{n+1}
  Complex f = v.f + v.df * h;
  Complex df = v.df;
  int small = 0;
  for (long n = 0;; ++n) {
    if (n > ctx.max_terms) throw ConvergenceError("legendre continuation: max_terms exceeded");
    Real n1(n + 1);
    Complex cnext = -(p1 * ccur * (n1 * n1) + cprev * (lambda - Real(n * (n + 1)))) * inv_p0 /
                    (n1 * Real(n + 2));
    Complex dterm = cnext * hn * Real(n + 2);  // (n+2) c_{n+2} h^{n+1}
    hn *= h;
    Complex term = cnext * hn;
    f += term;
    df += dterm;
    cprev = std::move(ccur);
    ccur = std::move(cnext);
    if (abs(term) < eps && abs(dterm) * abs(h) < eps) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }
  return {f, df};
}

// Walks a straight segment, each step at most half the distance to {0, 1}.
inline LegendreValue legendre_walk(const Real& lambda, Complex t, LegendreValue v, const Complex& target,
                                   const PrecisionContext& ctx) {
  for (long steps = 0;; ++steps) {
    if (steps > 100000) throw ConvergenceError("legendre continuation: too many steps");
    Complex rest = target - t;
    Real dist = abs(rest);
    if (dist.is_zero()) return v;
    Real radius = min(abs(t), abs(Complex(1) - t));
    Real hmax = radius / 2;
    Complex h = dist <= hmax ? rest : rest * (hmax / dist);
    v = legendre_taylor_step(lambda, t, v, h, ctx);
    t += h;
    if (dist <= hmax) return v;
  }
}

}  // namespace detail

// Analytic continuation of F along a path in the upper (side = +1) or lower
// (side = -1) half-plane. Off the real axis the side is forced by Im t; on the
// cut t >= 1 it selects the boundary value F(t +- i0).
inline LegendreValue legendre_p_continued(const Rational& nu, const Complex& t, int side,
                                          const PrecisionContext& ctx) {
  check_degree(nu);
  PrecisionScope scope(ctx.working_bits() + 32);
  const Real half(0.5);
  if (abs(t) < half) return detail::legendre_series(nu, t, ctx);
  if (t.im.sign() != 0) side = t.im.sign();
  if (side != 1 && side != -1) throw DomainError("legendre: side must be +1 or -1");
  const Real lambda{Rational(nu * (nu + 1))};

  if (t.re < half) {
    // the ray from 0 through t stays left of Re = 1/2
    Complex start = t * (Real(0.4) / abs(t));
    LegendreValue v = detail::legendre_series(nu, start, ctx);
    return detail::legendre_walk(lambda, start, v, t, ctx);
  }
  if (t.im.is_zero() && t.re < Real(1)) {
    Complex start(Real(0.4), Real(0));
    LegendreValue v = detail::legendre_series(nu, start, ctx);
    return detail::legendre_walk(lambda, start, v, t, ctx);
  }
  if (t.im.is_zero() && t.re == Real(1)) throw DomainError("legendre: t = 1 is a singular point");
  // detour through 1/2 +- i, keeping clear of both singular points
  Complex start(Real(0), Real(0.4) * side);
  Complex mid(half, Real(side));
  LegendreValue v = detail::legendre_series(nu, start, ctx);
  v = detail::legendre_walk(lambda, start, v, mid, ctx);
  return detail::legendre_walk(lambda, mid, v, t, ctx);
}

// P_nu(1 - 2t), principal branch (t not on [1, oo)).
inline Complex legendre_p(const Rational& nu, const Complex& t, const PrecisionContext& ctx) {
  check_degree(nu);
  if (t.im.is_zero() && t.re >= Real(1)) throw DomainError("legendre_p: t lies on the cut [1, oo)");
  PrecisionScope scope(ctx);
  LegendreValue v = legendre_p_continued(nu, t, 1, ctx);
  Complex r = v.f;
  require_finite(r, "legendre_p");
  return r;
}

// P_nu(1-2t) = -(sin nu pi / pi) int_0^1 [X(1-tX)/(1-X)]^nu dX/(1-X), by the
// tanh-sinh rule with X = 1/(1 + e^{-pi sinh u}).
inline Complex legendre_p_quadrature(const Rational& nu, const Complex& t, const PrecisionContext& ctx) {
  check_degree(nu);
  if (t.im.is_zero() && t.re >= Real(1)) throw DomainError("legendre_p: t lies on the cut [1, oo)");
  PrecisionScope scope(ctx.working_bits() + 16);
  const Real pi_ = pi();
  const Real nur{Rational(nu)};
  const Real eps = epsilon(ctx);

  // X^{nu+1} (1-X)^{-nu} (1-tX)^nu times dX/du / (X(1-X))
  auto integrand = [&](const Real& u) -> Complex {
    Real s = pi_ * sinh(u);
    Real x = Real(1) / (Real(1) + exp(-s));
    Real omx = Real(1) / (Real(1) + exp(s));
    if (x.is_zero() || omx.is_zero()) return Complex(0);
    Real w = pi_ * cosh(u) * pow(x, nur + Real(1)) * pow(omx, -nur);
    Complex g = pow(Complex(1) - t * x, nur);
    return g * w;
  };

  // truncate |u| where the weight underflows eps
  double umax = std::asinh((ctx.working_digits() + 10) * 2.302585092994046 / (3.14159265358979 * 0.25)) + 0.5;
  Real h(0.5);
  Complex prev;
  Complex sum = integrand(Real(0));
  long nodes = static_cast<long>(umax / 0.5);
  for (long k = 1; k <= nodes; ++k) {
    Real u = h * Real(k);
    sum += integrand(u) + integrand(-u);
  }
  Complex est = sum * h;
  for (int level = 0; level < 20; ++level) {
    // halve h: add the new midpoints
    Real hnew = h / 2;
    long count = static_cast<long>(umax / hnew.to_double());
    for (long k = 1; k <= count; k += 2) {
      Real u = hnew * Real(k);
      sum += integrand(u) + integrand(-u);
    }
    h = hnew;
    Complex next = sum * h;
    Real diff = abs(next - est);
    est = next;
    if (diff < eps * max(Real(1), abs(est)) && level >= 2) break;
    if (level == 19) throw ConvergenceError("legendre quadrature did not converge");
  }
  Real pref = -sin(nur * pi_) / pi_;
  return est * pref;
}

// R_nu(xi) from P_nu(+-xi) and their derivatives; t1 = (1-xi)/2, t2 = (1+xi)/2.
namespace detail {
inline Complex ramanujan_r_from(const Rational& nu, const LegendreValue& v1, const LegendreValue& v2,
                                const Complex& xi, const PrecisionContext& ctx) {
  (void)ctx;
  const Real nur{Rational(nu)};
  Complex one_minus = Complex(1) - xi * xi;
  // d/dxi P(xi) = -F'(t1)/2, d/dxi [P(-xi)] = F'(t2)/2
  Complex a = one_minus * ((v2.df / v2.f) - (v1.df / v1.f)) / Real(2);
  Real s = sin(nur * pi()) / pi();
  Real re12 = (v2.f / v1.f).re;
  Real re21 = (v1.f / v2.f).re;
  Complex b = Complex(1) / (square(v1.f) * re12) - Complex(1) / (square(v2.f) * re21);
  return a - b * s;
}
inline Complex ramanujan_r_side(const Rational& nu, const Complex& xi, int side, const PrecisionContext& ctx) {
  Complex t1 = (Complex(1) - xi) / Real(2);
  Complex t2 = (Complex(1) + xi) / Real(2);
  // xi + i0 puts t2 above and t1 below the real axis
  LegendreValue v1 = legendre_p_continued(nu, t1, -side, ctx);
  LegendreValue v2 = legendre_p_continued(nu, t2, side, ctx);
  return ramanujan_r_from(nu, v1, v2, xi, ctx);
}
}  // namespace detail

inline Complex legendre_ramanujan_r(const Rational& nu, const Complex& xi, const PrecisionContext& ctx) {
  check_degree(nu);
  PrecisionScope scope(ctx);
  Complex r;
  if (!xi.im.is_zero() || abs(xi.re) < Real(1)) {
    PrecisionScope inner(ctx.working_bits() + 32);
    r = detail::ramanujan_r_side(nu, xi, xi.im.sign() >= 0 ? 1 : -1, ctx);
  } else {
    PrecisionScope inner(ctx.working_bits() + 32);
    Complex up = detail::ramanujan_r_side(nu, xi, 1, ctx);
    Complex down = detail::ramanujan_r_side(nu, xi, -1, ctx);
    Real gap = abs(up - down);
    if (gap > pow10(-(ctx.digits / 2)) * max(Real(1), abs(up)))
      throw ConvergenceError("legendre_ramanujan_r: one-sided limits disagree at real xi");
    r = (up + down) / Real(2);
  }
  require_finite(r, "legendre_ramanujan_r");
  return r;
}

// Vertical-limit route: values at xi(1 + i delta) and xi(1 + i delta/2),
// Richardson-extrapolated to delta = 0. Kept as an independent check on the
// exact boundary values above.
inline Complex legendre_ramanujan_r_extrapolated(const Rational& nu, const Real& xi, const PrecisionContext& ctx) {
  check_degree(nu);
  PrecisionScope scope(ctx);
  Real delta = pow10(-(ctx.working_digits() / 3));
  auto at = [&](const Real& d) {
    Complex x(xi, xi * d);
    return detail::ramanujan_r_side(nu, x, 1, ctx);
  };
  Complex r1 = at(delta), r2 = at(delta / 2);
  return r2 * Real(2) - r1;
}

}  // namespace l2lab
