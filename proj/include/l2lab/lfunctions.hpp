#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "l2lab/numerics/special.hpp"

namespace l2lab {

// Kronecker symbol (d/k) for k >= 0, by the usual reduction to the Jacobi
// symbol: strip powers of two from k, then quadratic reciprocity.
inline int kronecker_symbol(std::int64_t d, std::int64_t k) {
  if (k < 0) throw DomainError("kronecker_symbol: k must be non-negative");
  if (k == 0) return (d == 1 || d == -1) ? 1 : 0;
  if (d % 2 == 0 && k % 2 == 0) return 0;

  int result = 1;
  int v = 0;
  while (k % 2 == 0) {
    k /= 2;
    ++v;
  }
  if (v % 2 == 1) {
    std::int64_t r = ((d % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  // (d/k) for odd k > 0
  std::int64_t a = d % k;
  if (a < 0) a += k;
  std::int64_t n = k;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

inline bool is_valid_discriminant(std::int64_t d) {
  if (d == 0) return false;
  std::int64_t r = ((d % 4) + 4) % 4;
  return r == 0 || r == 1;
}

inline bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 1 || D == 0) return false;
  auto squarefree = [](std::int64_t n) { return is_squarefree(static_cast<long>(std::llabs(n))); };
  std::int64_t m4 = ((D % 4) + 4) % 4;
  if (m4 == 1) return squarefree(D);
  std::int64_t m16 = ((D % 16) + 16) % 16;
  if (m16 == 8 || m16 == 12) return squarefree(D / 4);
  return false;
}

// D0 with d = D0 f^2 and D0 fundamental (or 1)
inline std::int64_t fundamental_part(std::int64_t d) {
  if (!is_valid_discriminant(d)) throw DomainError("not a discriminant: " + std::to_string(d));
  std::int64_t n = std::llabs(d), core = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) core *= p;
  }
  core *= n;
  if (d < 0) core = -core;
  std::int64_t m4 = ((core % 4) + 4) % 4;
  return m4 == 1 ? core : 4 * core;
}

class Discriminant {
 public:
  explicit Discriminant(std::int64_t d) : d_(d) {
    if (!is_valid_discriminant(d))
      throw DomainError("not a discriminant (need d != 0, d = 0 or 1 mod 4): " + std::to_string(d));
  }
  std::int64_t value() const { return d_; }
  bool fundamental() const { return is_fundamental_discriminant(d_); }

 private:
  std::int64_t d_;
};

// L_d(2) = |d|^{-2} sum_{a=1}^{|d|} (d/a) zeta(2, a/|d|). This presumes the
// symbol is periodic mod |d|, which holds for every discriminant.
inline Real dirichlet_l2(const Discriminant& disc, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const std::int64_t d = disc.value();
  if (d == 1) return zeta_int(2, ctx);
  const std::int64_t n = std::llabs(d);
  Real sum(0);
  for (std::int64_t a = 1; a <= n; ++a) {
    int chi = kronecker_symbol(d, a);
    if (chi == 0) continue;
    Real x = Real(static_cast<long>(a)) / static_cast<long>(n);
    if (chi > 0) sum += trigamma(x, ctx); else sum -= trigamma(x, ctx);
  }
  return sum / square(Real(static_cast<long>(n)));
}

inline Real dirichlet_l2(std::int64_t d, const PrecisionContext& ctx) { return dirichlet_l2(Discriminant(d), ctx); }

}  // namespace l2lab
