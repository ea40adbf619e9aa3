// Evaluates a few quantities and checks one corpus record.
#include <iostream>

#include "l2lab/l2lab.hpp"

int main() {
  using namespace l2lab;
  auto ctx = PrecisionContext::with_digits(30);
  PrecisionScope scope(ctx);

  std::cout << "Catalan G      = " << to_fixed(dirichlet_l2(-4, ctx), 30) << "\n";

  CMPoint z = CMPoint::parse("1/2 + 1/2*sqrt(7)*i");
  std::cout << "disc(" << z.to_string() << ") = " << z.discriminant() << "\n";
  std::cout << "E(z, 2)        = " << to_fixed(epstein_sl2(z.point(ctx), ctx), 30) << "\n";
  std::cout << "j(z)           = " << to_fixed(j_invariant(z.point(ctx), ctx).re, 30) << "\n";

  Corpus corpus = default_corpus();
  ConstantCache cache;
  VerificationReport r = verify_identity(corpus, "zeilberger", ctx, cache);
  std::cout << r.id << ": " << (r.pass ? "pass" : "fail") << ", residual " << to_sci(r.abs_residual) << "\n";
  return r.pass ? 0 : 1;
}
