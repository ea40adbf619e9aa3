#pragma once

#include <array>
#include <cmath>

#include "l2lab/numerics/quadratic.hpp"
#include "l2lab/numerics/real.hpp"

namespace l2lab {

inline Real zeta_int(int n, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  switch (n) {
    case 2:
      return square(pi()) / 6;
    case 4:
      return pow(pi(), 4L) / 90;
    case 3: {
      // zeta(3) = 5/2 sum (-1)^{k+1} / (k^3 binom(2k,k)); terms shrink by ~1/4
      Real eps = epsilon(ctx);
      Real sum(0), binom(1);
      for (long k = 1;; ++k) {
        if (k > ctx.max_terms) throw ConvergenceError("zeta(3): max_terms exceeded");
        binom *= static_cast<unsigned long>(2 * (2 * k - 1));
        binom /= static_cast<unsigned long>(k);
        Real kk(k);
        Real term = Real(1) / (kk * kk * kk * binom);
        if (k % 2) sum += term; else sum -= term;
        if (term < eps) break;
      }
      return sum * 5 / 2;
    }
    default:
      throw DomainError("zeta_int: only n in {2,3,4} is supported, got " + std::to_string(n));
  }
}

namespace detail {
// B_2, B_4, ..., B_18
inline const std::array<Rational, 9>& bernoulli_even() {
  static const std::array<Rational, 9> b = {Rational(1, 6),       Rational(-1, 30),   Rational(1, 42),
                                            Rational(-1, 30),     Rational(5, 66),    Rational(-691, 2730),
                                            Rational(7, 6),       Rational(-3617, 510), Rational(43867, 798)};
  return b;
}
}  // namespace detail

// Hurwitz zeta(2, x) = sum_{n>=0} 1/(n+x)^2 for x > 0 (callers use 0 < x <= 1).
// Euler-Maclaurin at w = x + M with B_2..B_16; the remainder is below the
// first omitted term |B_18| / w^19, and M is chosen to push that under eps.
inline Real trigamma(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(x.sign() > 0)) throw DomainError("trigamma: x must be positive");
  const auto& B = detail::bernoulli_even();
  double target = ctx.working_digits() * std::log(10.0) + std::log(B[8].get_d());
  long M = static_cast<long>(std::ceil(std::exp(target / 19.0)));
  if (M > ctx.max_terms) throw ConvergenceError("trigamma: cutoff exceeds max_terms");

  Real sum(0);
  for (long n = M - 1; n >= 0; --n) sum += Real(1) / square(x + Real(n));

  Real w = x + Real(M);
  Real inv = Real(1) / w;
  Real inv2 = inv * inv;
  Real tail = inv + inv2 / 2;
  Real p = inv2 * inv;  // w^{-3}
  for (int k = 0; k < 8; ++k) {
    tail += Real(B[k]) * p;
    p *= inv2;
  }
  return sum + tail;
}

}  // namespace l2lab
