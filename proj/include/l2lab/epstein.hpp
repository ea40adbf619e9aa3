#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "l2lab/modular/cm_point.hpp"
#include "l2lab/modular/eisenstein.hpp"
#include "l2lab/numerics/special.hpp"

namespace l2lab {

namespace detail {

inline std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline int mobius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

// mu(M) M^{-4} / prod_{p | M} (1 - p^{-4}): weight of the gcd class with N/gcd(N,k) = M
inline Rational gcd_class_weight(long M) {
  int mu = mobius(M);
  if (mu == 0) return Rational(0);
  Rational w(mu);
  w /= BigInt(M) * M * M * M;
  for (long p : prime_factors(M)) w /= Rational(1) - Rational(1) / (BigInt(p) * p * p * p);
  w.canonicalize();
  return w;
}

// constant-term factor rho_N (rho_1 = 1)
inline Rational epstein_rho(long N) {
  Rational rho(0);
  for (long g = 1; g <= N; ++g) {
    if (N % g) continue;
    long M = N / g;
    Rational term = gcd_class_weight(M) / (BigInt(g) * g * g);
    for (long p : prime_factors(M)) term *= Rational(1) - Rational(1) / (BigInt(p) * p * p);
    rho += term;
  }
  rho.canonicalize();
  return rho;
}

// Fourier expansion of the level-N coset sum at z (no reduction):
// y^2 + pi zeta(3) rho_N / (2 y zeta(4))
//     + pi/(y zeta(4)) sum_m r_N(m) (1 + 2 pi m y) e^{-2 pi m y} cos(2 pi m x),
// r_N(m) = sum_{k | m} w(N / gcd(N, k)) k^{-3}.
inline Real epstein_expansion(const Complex& z, long N, const PrecisionContext& ctx) {
  const Real pi_ = pi();
  const Real& x = z.re;
  const Real& y = z.im;
  const Real z3 = zeta_int(3, ctx);
  const Real z4 = zeta_int(4, ctx);

  const Real r = exp(-pi_ * 2 * y);
  double C = 1.21 * 3.1416 / (y.to_double() * 1.08) * (1 + 2 * 3.1416 * y.to_double());
  long M = qseries_cutoff(r, 1, C, ctx);

  std::vector<Real> weight(static_cast<size_t>(N + 1));
  for (long m = 1; m <= N; ++m)
    if (N % m == 0) weight[static_cast<size_t>(m)] = Real(gcd_class_weight(m));
  std::vector<Real> coef(static_cast<size_t>(M), Real(0));
  for (long k = 1; k < M; ++k) {
    long cls = N / std::gcd(N, k);
    const Real& w = weight[static_cast<size_t>(cls)];
    if (w.is_zero()) continue;
    Real kk(k);
    Real c = w / (kk * kk * kk);
    for (long m = k; m < M; m += k) coef[static_cast<size_t>(m)] += c;
  }
  Real sum(0);
  Real rm(1);
  for (long m = 1; m < M; ++m) {
    rm *= r;
    const Real& c = coef[static_cast<size_t>(m)];
    if (c.is_zero()) continue;
    sum += c * (Real(1) + pi_ * 2 * Real(m) * y) * rm * cos(pi_ * 2 * Real(m) * x);
  }
  Real constant = square(y) + pi_ * z3 * Real(epstein_rho(N)) / (y * 2 * z4);
  return constant + pi_ / (y * z4) * sum;
}

// z -> z + n and z -> -1/z until |Re z| <= 1/2 and |z| >= 1
inline Complex reduce_sl2(Complex w) {
  const Real one_minus = unit_norm_cutoff();
  for (int iter = 0; iter < 10000; ++iter) {
    Real n = round_nearest(w.re);
    w.re -= n;
    if (norm(w) < one_minus) w = Complex(-1) / w; else return w;
  }
  throw ConvergenceError("reduce_sl2 did not terminate");
}

// J(z) with sum over the outside of the box max(|c|,|d|) <= R of
// y^2/|cz+d|^4 approximately J(z)/R^2 (continuum estimate)
inline double box_tail_integral(double x, double y) {
  const int n = 20000;
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    double th = 2 * M_PI * (i + 0.5) / n;
    double c = std::cos(th), s = std::sin(th);
    double q = (c * x + s) * (c * x + s) + (c * y) * (c * y);
    double mx = std::max(std::fabs(c), std::fabs(s));
    acc += y * y * mx * mx / (2 * q * q);
  }
  return acc * 2 * M_PI / n;
}

// sum over (c, d) != 0 with |c|, |d| <= B and L | c of y^2/|cz+d|^4
inline long double box_sum(long double x, long double y, long B, long L) {
  long double total = 0;
  for (long c = -(B / L) * L; c <= B; c += L) {
    long double cx = c * x, cy = c * y;
    long double cy2 = cy * cy;
    long double row = 0;
    for (long d = -B; d <= B; ++d) {
      if (c == 0 && d == 0) continue;
      long double re = cx + d;
      long double q = re * re + cy2;
      row += y * y / (q * q);
    }
    total += row;
  }
  return total;
}

}  // namespace detail

struct LatticeSum {
  Real value;
  Real tail;  // estimate of the omitted part, value + tail ~ exact
  long radius;
};

inline Real epstein_sl2(const HalfPlanePoint& point, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Complex w = detail::reduce_sl2(point.z());
  return detail::epstein_expansion(w, 1, ctx);
}

// Level-N coset sum via its Fourier expansion (reduces to epstein_sl2 at N = 1).
inline Real epstein_gamma0(const HalfPlanePoint& point, int N, const PrecisionContext& ctx) {
  if (N < 1 || N > 4) throw DomainError("epstein_gamma0: level must be in 1..4");
  if (N == 1) return epstein_sl2(point, ctx);
  PrecisionScope scope(ctx);
  return detail::epstein_expansion(point.z(), N, ctx);
}

// (1/(2 zeta(4))) sum over 0 < max(|m|,|n|) <= radius of y^2/|mz+n|^4, in
// extended double precision, rows summed in ascending order.
inline LatticeSum epstein_sl2_bruteforce(const HalfPlanePoint& point, long radius, const PrecisionContext& ctx) {
  if (radius < 10) throw DomainError("epstein_sl2_bruteforce: radius must be >= 10");
  PrecisionScope scope(ctx);
  long double x = point.re().to_double(), y = point.im().to_double();
  long double s = detail::box_sum(x, y, radius, 1);
  const double z4 = M_PI * M_PI * M_PI * M_PI / 90.0;
  double tail = detail::box_tail_integral(static_cast<double>(x), static_cast<double>(y)) /
                (2 * z4 * double(radius) * double(radius));
  return {Real(static_cast<double>(s / (2 * z4))), Real(tail), radius};
}

// Coset sum over coprime (c, d) with N | c modulo +-1, by Moebius sieving over
// the common divisor g: each g contributes mu(g) g^{-4} times a box sum with
// c restricted to multiples of N/gcd(N, g).
inline LatticeSum epstein_gamma0_bruteforce(const HalfPlanePoint& point, int N, long radius,
                                            const PrecisionContext& ctx) {
  if (N < 1 || N > 4) throw DomainError("epstein_gamma0_bruteforce: level must be in 1..4");
  if (radius < 10) throw DomainError("epstein_gamma0_bruteforce: radius must be >= 10");
  PrecisionScope scope(ctx);
  long double x = point.re().to_double(), y = point.im().to_double();
  long double total = 0;
  for (long g = 1; g <= radius; ++g) {
    int mu = detail::mobius(g);
    if (mu == 0) continue;
    long L = N / std::gcd(static_cast<long>(N), g);
    long double g4 = static_cast<long double>(g) * g * g * g;
    total += mu * detail::box_sum(x, y, radius / g, L) / g4;
  }
  double psi = N;
  for (long p : detail::prime_factors(N)) psi *= 1.0 + 1.0 / p;
  double tail = detail::box_tail_integral(static_cast<double>(x), static_cast<double>(y)) /
                (2 * (M_PI * M_PI / 6) * psi * double(radius) * double(radius));
  return {Real(static_cast<double>(total / 2)), Real(tail), radius};
}

}  // namespace l2lab
