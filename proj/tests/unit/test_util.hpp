#pragma once

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "l2lab/l2lab.hpp"

namespace l2lab::testing {

inline ::testing::AssertionResult close(const Real& got, const Real& want, const Real& tol) {
  Real err = abs(got - want);
  if (err < tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << to_fixed(got, 30) << ", want " << to_fixed(want, 30)
                                       << ", |diff| = " << to_sci(err) << " >= " << to_sci(tol);
}

inline ::testing::AssertionResult close(const Complex& got, const Complex& want, const Real& tol) {
  Real err = abs(got - want);
  if (err < tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << to_fixed(got, 30) << ", want " << to_fixed(want, 30)
                                       << ", |diff| = " << to_sci(err) << " >= " << to_sci(tol);
}

inline Real tol(int exponent) { return pow10(exponent); }

// fixed seeds so failures reproduce
inline std::mt19937_64& rng() {
  static thread_local std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }
inline long uniform_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// a point whose coordinates are exact binary fractions, so every precision sees the same z
inline HalfPlanePoint random_point(double xlo, double xhi, double ylo, double yhi) {
  double x = std::ldexp(std::round(std::ldexp(uniform(xlo, xhi), 20)), -20);
  double y = std::ldexp(std::round(std::ldexp(uniform(ylo, yhi), 20)), -20);
  return HalfPlanePoint(Real(x), Real(y));
}

}  // namespace l2lab::testing
