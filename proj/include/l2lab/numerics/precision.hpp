#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>

#include "l2lab/error.hpp"

namespace l2lab {

struct PrecisionContext {
  int digits = 40;
  int guard = 15;
  long max_terms = 10'000'000;

  static PrecisionContext with_digits(int d) {
    PrecisionContext ctx;
    ctx.digits = d;
    ctx.validate();
    return ctx;
  }

  void validate() const {
    if (digits < 10) throw DomainError("digits must be >= 10, got " + std::to_string(digits));
    if (guard < 10) throw DomainError("guard must be >= 10, got " + std::to_string(guard));
    if (max_terms < 1000) throw DomainError("max_terms must be >= 1000");
  }

  int working_digits() const { return digits + guard; }

  mpfr_prec_t working_bits() const {
    return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.321928094887362)) + 8;
  }

  PrecisionContext escalated(int extra) const {
    PrecisionContext c = *this;
    c.digits += extra;
    return c;
  }
};

namespace detail {
inline thread_local mpfr_prec_t current_bits = 256;
}

inline mpfr_prec_t working_precision() { return detail::current_bits; }

// Sets the precision of every Real produced on this thread until destroyed.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits) : saved_(detail::current_bits) {
    detail::current_bits = bits;
  }
  explicit PrecisionScope(const PrecisionContext& ctx) : PrecisionScope(ctx.working_bits()) {}
  ~PrecisionScope() { detail::current_bits = saved_; }

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

}  // namespace l2lab
