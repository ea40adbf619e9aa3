#pragma once

#include <mpfr.h>

#include <cstdio>
#include <string>

#include "l2lab/numerics/complex.hpp"

namespace l2lab {

// Fixed notation with exactly `sig` significant digits (round-half-even).
inline std::string to_fixed(const Real& x, int sig) {
  if (x.is_zero()) return "0";
  if (!x.is_finite()) return mpfr_nan_p(x.raw()) ? "nan" : (x.sign() > 0 ? "inf" : "-inf");
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), x.raw(), MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string out;
  if (digits[0] == '-') {
    out = "-";
    digits.erase(0, 1);
  }
  const long n = static_cast<long>(digits.size());
  if (e <= 0) {
    out += "0." + std::string(static_cast<size_t>(-e), '0') + digits;
  } else if (e >= n) {
    out += digits + std::string(static_cast<size_t>(e - n), '0');
  } else {
    out += digits.substr(0, static_cast<size_t>(e)) + "." + digits.substr(static_cast<size_t>(e));
  }
  return out;
}

// Short scientific form for residuals, e.g. "3.1e-52".
inline std::string to_sci(const Real& x, int sig = 3) {
  if (x.is_zero()) return "0";
  char buf[64];
  std::string fmt = "%." + std::to_string(sig - 1) + "Re";
  mpfr_snprintf(buf, sizeof buf, fmt.c_str(), x.raw());
  return buf;
}

inline std::string to_fixed(const Complex& z, int sig) {
  std::string im = to_fixed(abs(z.im), sig);
  return to_fixed(z.re, sig) + (z.im.sign() < 0 ? " - " : " + ") + im + "*i";
}

}  // namespace l2lab
