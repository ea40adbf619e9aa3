#pragma once

#include "l2lab/modular/eta.hpp"

namespace l2lab {

// The admissibility constraints for the level-N series: |4 alpha (1 - alpha)| >= 1,
// alpha != 1/2, |Re z| <= 1/2, |z +- 1/N| >= 1/N. Boundaries get 10^{-digits/2} slack.
inline bool satisfies_region(const HalfPlanePoint& point, int N, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Complex& z = point.z();
  const Real slack = pow10(-(ctx.digits / 2));
  const Real inv_n = Real(1) / Real(N);
  if (abs(z.re) > Real(0.5) + slack) return false;
  if (abs(z + Complex(inv_n)) < inv_n - slack) return false;
  if (abs(z - Complex(inv_n)) < inv_n - slack) return false;
  Complex a = alpha_n(point, N, ctx);
  if (abs(a - Complex(Real(0.5))) <= slack) return false;
  return abs(a * (Complex(1) - a)) * 4 >= Real(1) - slack;
}

}  // namespace l2lab
