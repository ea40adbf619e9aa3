#pragma once

#include <string>
#include <string_view>

#include "l2lab/numerics/complex.hpp"
#include "l2lab/numerics/quadratic.hpp"

namespace l2lab {

enum class SeriesFamily {
  CENTRAL3,  // binom(2k,k)^3, scale 64
  C2x3K,     // binom(2k,k)^2 binom(3k,k), scale 108
  C2x4K      // binom(2k,k)^2 binom(4k,2k), scale 256
};

inline long family_scale(SeriesFamily f) {
  switch (f) {
    case SeriesFamily::CENTRAL3: return 64;
    case SeriesFamily::C2x3K: return 108;
    case SeriesFamily::C2x4K: return 256;
  }
  return 0;
}

inline std::string_view family_name(SeriesFamily f) {
  switch (f) {
    case SeriesFamily::CENTRAL3: return "CENTRAL3";
    case SeriesFamily::C2x3K: return "C2x3K";
    case SeriesFamily::C2x4K: return "C2x4K";
  }
  return "";
}

inline SeriesFamily parse_family(std::string_view s) {
  if (s == "CENTRAL3") return SeriesFamily::CENTRAL3;
  if (s == "C2x3K") return SeriesFamily::C2x3K;
  if (s == "C2x4K") return SeriesFamily::C2x4K;
  throw ParseError("unknown series family '" + std::string(s) + "'");
}

// family attached to the level-N invariant
inline SeriesFamily family_for_level(int N) {
  switch (N) {
    case 2: return SeriesFamily::C2x4K;
    case 3: return SeriesFamily::C2x3K;
    case 4: return SeriesFamily::CENTRAL3;
    default: throw DomainError("no series family for level " + std::to_string(N));
  }
}

// sum_{k>=1} (a k - b) m^k / (k^3 denom(k))
struct UpsideDownSeries {
  SeriesFamily family = SeriesFamily::CENTRAL3;
  QuadraticNumber a, b;
  QuadraticPower m;
};

template <class Scalar>
struct SeriesSum {
  Scalar value;
  long terms = 0;
};

namespace detail {

// denom(k)/denom(k-1) as a numerator/denominator pair of small integers,
// applied as successive multiplications
template <class Scalar>
void divide_by_denominator_ratio(Scalar& t, SeriesFamily f, long k) {
  auto mul = [&](long v) { t *= Real(v); };
  auto div = [&](long v) { t /= Real(v); };
  // binom(2k,k)/binom(2k-2,k-1) = 2(2k-1)/k
  const long c2n = 2 * (2 * k - 1);
  switch (f) {
    case SeriesFamily::CENTRAL3:
      div(c2n); div(c2n); div(c2n);
      mul(k); mul(k); mul(k);
      break;
    case SeriesFamily::C2x3K:
      // binom(3k,k)/binom(3k-3,k-1) = 3(3k-1)(3k-2)/(2k(2k-1))
      div(c2n); div(c2n); mul(k); mul(k);
      div(3 * (3 * k - 1)); div(3 * k - 2); mul(2 * k); mul(2 * k - 1);
      break;
    case SeriesFamily::C2x4K:
      // binom(4k,2k)/binom(4k-4,2k-2) = 2(4k-1)(4k-3)/(k(2k-1))
      div(c2n); div(c2n); mul(k); mul(k);
      div(2 * (4 * k - 1)); div(4 * k - 3); mul(k); mul(2 * k - 1);
      break;
  }
}

}  // namespace detail

// Generic over Real or Complex coefficients. Stops once the certified tail
// |t_k| [|a k - b| rho/(1-rho) + |a| rho/(1-rho)^2], rho = |m|/scale, drops
// below eps * max(1, |S|); here t_k = m^k/(k^3 denom(k)) and consecutive
// |t_{k+1}/t_k| <= rho.
template <class Scalar>
SeriesSum<Scalar> sum_updown(SeriesFamily family, const Scalar& a, const Scalar& b, const Scalar& m,
                             const PrecisionContext& ctx) {
  const Real scale(family_scale(family));
  const Real rho = abs(m) / scale;
  if (!(rho < Real(1)))
    throw DomainError("upside-down series diverges: |m| = " + std::to_string(abs(m).to_double()) +
                      " >= " + std::to_string(family_scale(family)));
  const Real eps = epsilon(ctx);
  const Real g1 = rho / (Real(1) - rho);
  const Real g2 = g1 / (Real(1) - rho);
  const Real abs_a = abs(a);

  Scalar sum(0);
  Scalar t = m;  // k = 1: m / (1 * denom(1))
  detail::divide_by_denominator_ratio(t, family, 1);
  for (long k = 1;; ++k) {
    if (k > ctx.max_terms) throw ConvergenceError("upside-down series: max_terms exceeded");
    if (k > 1) {
      t *= m;
      const Real km1(k - 1), kk(k);
      Real cube = km1 * km1 * km1 / (kk * kk * kk);
      t *= cube;
      detail::divide_by_denominator_ratio(t, family, k);
    }
    Scalar lin = a * Real(k) - b;
    sum += lin * t;
    Real bound = abs(t) * (abs(lin) * g1 + abs_a * g2);
    if (bound < eps * max(Real(1), abs(sum))) return {sum, k};
  }
}

inline SeriesSum<Real> evaluate_updown(const UpsideDownSeries& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Real a = embed_quadratic(s.a, ctx);
  Real b = embed_quadratic(s.b, ctx);
  Real m = embed_quadratic(s.m, ctx);
  return sum_updown<Real>(s.family, a, b, m, ctx);
}

}  // namespace l2lab
