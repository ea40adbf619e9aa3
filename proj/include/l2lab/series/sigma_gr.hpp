#pragma once

#include "l2lab/epstein.hpp"
#include "l2lab/modular/eisenstein.hpp"
#include "l2lab/modular/legendre.hpp"
#include "l2lab/modular/region.hpp"
#include "l2lab/series/updown.hpp"

namespace l2lab {

// Summand constants of the level-N series at z:
// c1 = 2(1 - 2 alpha), c2 = R_nu(1 - 2 alpha), m = (scale/4) / (alpha (1 - alpha)).
struct SeriesConstants {
  Complex c1, c2, m;
  Complex alpha;
};

inline SeriesConstants series_constants_from_cm(const HalfPlanePoint& point, int N, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Rational nu = legendre_degree(N);
  Complex a = alpha_n(point, N, ctx);
  Complex a1 = a * (Complex(1) - a);
  if (abs(a1).is_zero()) throw DomainError("series_constants_from_cm: alpha_N(z) in {0, 1}");
  Complex xi = Complex(1) - a * Real(2);
  SeriesConstants out;
  out.alpha = a;
  out.c1 = xi * Real(2);
  out.c2 = legendre_ramanujan_r(nu, xi, ctx);
  out.m = Complex(Real(family_scale(family_for_level(N)) / 4)) / a1;
  return out;
}

inline SeriesConstants series_constants_from_cm(const CMPoint& p, int N, const PrecisionContext& ctx) {
  return series_constants_from_cm(p.point(ctx), N, ctx);
}

inline SeriesSum<Complex> sigma_gr_sum(const HalfPlanePoint& point, int N, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!satisfies_region(point, N, ctx)) throw DomainError("sigma_gr: z violates the admissibility region");
  SeriesConstants c = series_constants_from_cm(point, N, ctx);
  return sum_updown<Complex>(family_for_level(N), c.c1, c.c2, c.m, ctx);
}

inline Complex sigma_gr(const HalfPlanePoint& point, int N, const PrecisionContext& ctx) {
  return sigma_gr_sum(point, N, ctx).value;
}

// Closed form of Im Sigma: with s = sign(Re z) (s = 0 at Re z = 0) and w = Re z - s/2,
// (4 pi^2/(3y)) w [w^2 + 3y^2 + (12-N)/(4N)] + 4 pi^2 Re[E~(Nz) - N E~(z)] / (N (N^2-1) y).
inline Real sigma_gr_im_rhs(const HalfPlanePoint& point, int N, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!satisfies_region(point, N, ctx)) throw DomainError("sigma_gr_im_rhs: z violates the admissibility region");
  const Complex& z = point.z();
  const Real& x = z.re;
  const Real& y = z.im;
  const Real pi2 = square(pi());
  Real w = x;
  if (x.sign() > 0) w -= Real(0.5);
  if (x.sign() < 0) w += Real(0.5);
  Real poly = square(w) + square(y) * 3 + Real(Rational(12 - N, 4 * N));
  Real first = pi2 * 4 / (y * 3) * w * poly;
  Real eN = eichler_e4_tilde(HalfPlanePoint(z * Real(N)), ctx).re;
  Real e1 = eichler_e4_tilde(point, ctx).re;
  Real second = pi2 * 4 * (eN - e1 * Real(N)) / (y * Real(N * (N * N - 1)));
  return first + second;
}

// Re Sigma = (8 pi^2 / (3 (N^2-1))) [E(z, 2) - E(Nz, 2)]
inline Real sigma_gr_re_rhs(const HalfPlanePoint& point, int N, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Complex& z = point.z();
  Real diff = epstein_sl2(point, ctx) - epstein_sl2(HalfPlanePoint(z * Real(N)), ctx);
  return square(pi()) * 8 / Real(3 * (N * N - 1)) * diff;
}

// Same quantity through the level-N coset sums: (8 pi^2/3) [E_N(-1/(Nz)) - E_N(z)]
inline Real sigma_gr_re_rhs_level(const HalfPlanePoint& point, int N, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Complex& z = point.z();
  HalfPlanePoint w(Complex(-1) / (z * Real(N)));
  Real diff = epstein_gamma0(w, N, ctx) - epstein_gamma0(point, N, ctx);
  return square(pi()) * 8 / 3 * diff;
}

}  // namespace l2lab
