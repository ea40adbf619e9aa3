#pragma once

#include "l2lab/modular/cm_point.hpp"

namespace l2lab {

namespace detail {

// sum_{n in Z} (-1)^n q^{n(3n-1)/2}, valid for |q| well below 1
inline Complex pentagonal_sum(const Complex& q, const PrecisionContext& ctx) {
  Real aq = abs(q);
  Real eps = epsilon(ctx);
  Complex sum(1);
  Complex qn(1);        // q^n
  Complex qpent(1);     // q^{n(3n-1)/2}
  for (long n = 1;; ++n) {
    if (n > ctx.max_terms) throw ConvergenceError("eta: max_terms exceeded");
    // q^{n(3n-1)/2} = q^{(n-1)(3n-4)/2} * q^{3n-2}
    qpent *= pow(q, 3 * n - 2);
    qn *= q;
    Complex pair = qpent + qpent * qn;  // q^{n(3n+1)/2} = q^{n(3n-1)/2} q^n
    if (n % 2) sum -= pair; else sum += pair;
    // later exponents are at least n(3n-1)/2 + 2n + 1; bound them by a geometric tail
    Real next = abs(qpent) * pow(aq, 2 * n + 1);
    if (next * 2 / (Real(1) - aq) < eps) break;
  }
  return sum;
}

}  // namespace detail

// Moves z into the standard fundamental domain with z -> z+n and z -> -1/z,
// tracking eta's multiplier so that eta(z) = factor * eta(w).
inline Complex dedekind_eta(const HalfPlanePoint& point, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real pi_ = pi();
  Complex w = point.z();
  Complex factor(1);
  const Real cutoff = detail::unit_norm_cutoff();
  for (int iter = 0;; ++iter) {
    if (iter > 10000) throw ConvergenceError("eta: reduction did not terminate");
    Real n = round_nearest(w.re);
    if (!n.is_zero()) {
      w.re -= n;
      factor *= expi(pi_ * n / 12);  // eta(w + n) = e^{pi i n/12} eta(w)
    }
    if (norm(w) < cutoff) {
      // eta(w) = (-i w)^{-1/2} eta(-1/w)
      Complex miw(w.im, -w.re);
      factor /= sqrt(miw);
      w = Complex(-1) / w;
    } else {
      break;
    }
  }
  Complex q = exp(Complex(Real(0), pi_ * 2) * w);
  Complex pref = exp(Complex(Real(0), pi_ / 12) * w);
  Complex r = factor * pref * detail::pentagonal_sum(q, ctx);
  require_finite(r, "dedekind_eta");
  return r;
}

// alpha_N(z) = 1 / (1 + N^{-6/(N-1)} (eta(z)/eta(Nz))^{24/(N-1)})
inline Complex alpha_n(const HalfPlanePoint& point, int N, const PrecisionContext& ctx) {
  if (N < 2 || N > 4) throw DomainError("alpha_n: level must be 2, 3 or 4");
  PrecisionScope scope(ctx);
  const long e = 24 / (N - 1);
  const long c = 6 / (N - 1);
  Complex ratio = dedekind_eta(point, ctx) / dedekind_eta(HalfPlanePoint(point.z() * Real(N)), ctx);
  Complex x = pow(ratio, e) / pow(Real(N), c);
  Complex r = Complex(1) / (Complex(1) + x);
  require_finite(r, "alpha_n");
  return r;
}

inline Complex j_invariant(const HalfPlanePoint& point, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Complex a = alpha_n(HalfPlanePoint(point.z() / Real(2)), 4, ctx);
  Complex one_minus = Complex(1) - a;
  Complex den = square(a * one_minus);
  // alpha_4 never reaches 0 or 1 inside the half-plane; this catches underflow near cusps
  if (abs(den) <= pow(Real(2), -static_cast<long>(working_precision()) + 8))
    throw DomainError("j_invariant: pole (alpha_4(z/2) in {0, 1})");
  Complex num = Complex(1) - a + square(a);
  Complex r = pow(num, 3L) * Real(256) / den;
  require_finite(r, "j_invariant");
  return r;
}

}  // namespace l2lab
