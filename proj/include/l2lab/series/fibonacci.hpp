#pragma once

#include <cmath>
#include <utility>

#include "l2lab/series/updown.hpp"

namespace l2lab {

// (F_n, L_n) by fast doubling
inline std::pair<BigInt, BigInt> fibonacci_lucas(long n) {
  if (n < 0) throw DomainError("fibonacci_lucas: n must be non-negative");
  BigInt f(0), g(1);  // F_k, F_{k+1}
  for (int bit = 62; bit >= 0; --bit) {
    // F_{2k} = F_k (2 F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
    BigInt f2 = f * (2 * g - f);
    BigInt g2 = f * f + g * g;
    if ((n >> bit) & 1) {
      f = g2;
      g = f2 + g2;
    } else {
      f = f2;
      g = g2;
    }
  }
  return {f, 2 * g - f};
}

// summand [(p k + q) F_{8k} + (r k + s) L_{8k} + (u k + v) F_{8k-1}] / (k^3 binom(2k,k)^3)
struct FibLucasSeries {
  Rational p, q, r, s, u, v;
};

inline SeriesSum<Real> evaluate_fib_series(const FibLucasSeries& fs, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real eps = epsilon(ctx);
  // growth: F_{8k}, L_{8k}, F_{8k-1} are at most 1.01 phi^{8k} up to
  // the factors 1/sqrt5, 1, 1/(phi sqrt5); the binomial cube grows like 64^k
  const Real phi = (Real(1) + sqrt(Real(5))) / 2;
  const Real phi8 = pow(phi, 8L);
  const Real rho = phi8 / 64;
  const Real g1 = rho / (Real(1) - rho);
  const Real g2 = g1 / (Real(1) - rho);
  const Real s5 = sqrt(Real(5));
  auto absq = [](const Rational& x) { return Real(Rational(abs(x))); };
  const Real alpha = absq(fs.p) / s5 + absq(fs.r) + absq(fs.u) / (phi * s5);
  const Real beta = absq(fs.q) / s5 + absq(fs.s) + absq(fs.v) / (phi * s5);

  BigInt F8 = 0, F8m1 = 1;  // F_0, F_{-1}
  BigInt binom = 1;
  Real sum(0);
  Real growth(1);  // phi^{8k} / (k^3 binom(2k,k)^3)
  for (long k = 1;; ++k) {
    if (k > ctx.max_terms) throw ConvergenceError("Fibonacci-Lucas series: max_terms exceeded");
    // F_{8k+7} = 21 F_{8k} + 13 F_{8k-1}, F_{8k+8} = 34 F_{8k} + 21 F_{8k-1}
    BigInt next_m1 = 21 * F8 + 13 * F8m1;
    BigInt next = 34 * F8 + 21 * F8m1;
    F8 = next;
    F8m1 = next_m1;
    BigInt L8 = F8 + 2 * F8m1;
    binom = binom * (2 * (2 * k - 1)) / k;

    Rational num = (fs.p * k + fs.q) * F8 + (fs.r * k + fs.s) * L8 + (fs.u * k + fs.v) * F8m1;
    BigInt den = BigInt(k) * k * k * binom * binom * binom;
    sum += Real(num) / Real(den);

    growth = pow(phi, 8 * k) / Real(den);
    Real lin = alpha * Real(k) + beta;
    Real bound = growth * (lin * g1 + alpha * g2) * Real(1.01);
    if (bound < eps * max(Real(1), abs(sum))) return {sum, k};
  }
}

}  // namespace l2lab
