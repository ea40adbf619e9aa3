#include "test_util.hpp"

using namespace l2lab;
using l2lab::testing::close;
using l2lab::testing::random_point;
using l2lab::testing::tol;

namespace {
HalfPlanePoint at(const char* cm, const PrecisionContext& ctx) { return CMPoint::parse(cm).point(ctx); }
}  // namespace

TEST(Epstein, ClassNumberOneAnchors) {
  auto ctx = PrecisionContext::with_digits(40);
  PrecisionScope s(ctx);
  Real pi2 = square(pi());
  EXPECT_TRUE(close(epstein_sl2(at("i", ctx), ctx), dirichlet_l2(-4, ctx) * 30 / pi2, tol(-40)));
  EXPECT_TRUE(close(epstein_sl2(at("1/2 + 1/2*sqrt(7)*i", ctx), ctx), dirichlet_l2(-7, ctx) * 105 / (pi2 * 4), tol(-40)));
  EXPECT_TRUE(close(epstein_sl2(at("sqrt(2)*i", ctx), ctx), dirichlet_l2(-8, ctx) * 30 / pi2, tol(-40)));
}

TEST(Epstein, CuspLimit) {
  auto ctx = PrecisionContext::with_digits(30);
  PrecisionScope s(ctx);
  for (int N : {1, 2, 3, 4}) {
    HalfPlanePoint z(Real(0.2), Real(40));
    Real e = epstein_gamma0(z, N, ctx) - Real(1600);
    // the next term of the constant part decays like 1/y
    EXPECT_LT(abs(e), Real(0.1)) << N;
    EXPECT_GT(e, Real(0)) << N;
  }
  EXPECT_THROW(epstein_gamma0(HalfPlanePoint(Complex::i()), 5, ctx), DomainError);
}

TEST(Epstein, BruteForceAtI) {
  auto ctx = PrecisionContext::with_digits(20);
  PrecisionScope s(ctx);
  LatticeSum b = epstein_sl2_bruteforce(HalfPlanePoint(Complex::i()), 400, ctx);
  Real f = epstein_sl2(HalfPlanePoint(Complex::i()), ctx);
  EXPECT_LT(abs(b.value + b.tail - f), Real(1e-6));
  EXPECT_LT(abs(b.value - f), Real(1e-4));
  EXPECT_THROW(epstein_sl2_bruteforce(HalfPlanePoint(Complex::i()), 5, ctx), DomainError);
}

TEST(Epstein, BruteForceInvariance) {
  auto ctx = PrecisionContext::with_digits(20);
  PrecisionScope s(ctx);
  LatticeSum a = epstein_sl2_bruteforce(HalfPlanePoint(Real(0), Real(2)), 300, ctx);
  LatticeSum b = epstein_sl2_bruteforce(HalfPlanePoint(Real(0), Real(0.5)), 300, ctx);
  EXPECT_LT(abs((a.value + a.tail) - (b.value + b.tail)), Real(1e-4));
}

// doubling the radius shrinks the truncation error by about four
TEST(Epstein, BruteForceTailScaling) {
  auto ctx = PrecisionContext::with_digits(20);
  PrecisionScope s(ctx);
  HalfPlanePoint z(Real(0.3), Real(1.1));
  Real exact = epstein_sl2(z, ctx);
  Real e1 = exact - epstein_sl2_bruteforce(z, 100, ctx).value;
  Real e2 = exact - epstein_sl2_bruteforce(z, 200, ctx).value;
  double ratio = (e1 / e2).to_double();
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
}

TEST(Epstein, GammaZeroLevelTwoBruteForce) {
  auto ctx = PrecisionContext::with_digits(20);
  PrecisionScope s(ctx);
  HalfPlanePoint z(Complex::i());
  LatticeSum b = epstein_gamma0_bruteforce(z, 2, 200, ctx);
  Real f = epstein_gamma0(z, 2, ctx);
  EXPECT_LT(abs(b.value + b.tail - f), Real(1e-5));
}

TEST(EpsteinProperty, FourierAgreesWithBruteForce) {
  auto ctx = PrecisionContext::with_digits(20);
  PrecisionScope s(ctx);
  for (int i = 0; i < 10; ++i) {
    HalfPlanePoint z = random_point(-0.5, 0.5, 0.8, 2.0);
    LatticeSum b = epstein_sl2_bruteforce(z, 300, ctx);
    Real f = epstein_sl2(z, ctx);
    // the tail estimate is good to a few percent of itself
    EXPECT_LT(abs(b.value + b.tail - f), b.tail * Real(0.05)) << to_fixed(z.z(), 8);
    EXPECT_LT(abs(b.value - f), b.tail * Real(1.05));
  }
}

TEST(EpsteinProperty, ModularInvariance) {
  auto ctx = PrecisionContext::with_digits(40);
  PrecisionScope s(ctx);
  for (int i = 0; i < 10; ++i) {
    HalfPlanePoint z = random_point(-2.0, 2.0, 0.3, 2.0);
    Real e = epstein_sl2(z, ctx);
    EXPECT_TRUE(close(epstein_sl2(HalfPlanePoint(z.z() + Complex(1)), ctx), e, tol(-35) * e));
    EXPECT_TRUE(close(epstein_sl2(HalfPlanePoint(Complex(-1) / z.z()), ctx), e, tol(-35) * e));
  }
}

TEST(EpsteinProperty, DominatedByIdentityCoset) {
  auto ctx = PrecisionContext::with_digits(30);
  PrecisionScope s(ctx);
  for (int i = 0; i < 10; ++i) {
    HalfPlanePoint z = random_point(-0.5, 0.5, 0.9, 3.0);
    for (int N : {1, 2, 3, 4}) EXPECT_GT(epstein_gamma0(z, N, ctx), square(z.im()));
  }
}

// E_N(-1/(Nz)) - E_N(z) = [E(z) - E(Nz)] / (N^2 - 1)
TEST(EpsteinProperty, LevelLemmaBothLines) {
  auto ctx = PrecisionContext::with_digits(40);
  PrecisionScope s(ctx);
  for (int N : {2, 3, 4}) {
    for (int i = 0; i < 5; ++i) {
      HalfPlanePoint z = random_point(-0.5, 0.5, 0.3, 1.2);
      HalfPlanePoint w(Complex(-1) / (z.z() * Real(N)));
      Real line1 = epstein_gamma0(w, N, ctx) - epstein_gamma0(z, N, ctx);
      Real line2 = (epstein_sl2(z, ctx) - epstein_sl2(HalfPlanePoint(z.z() * Real(N)), ctx)) / Real(N * N - 1);
      EXPECT_TRUE(close(line1, line2, tol(-35))) << N;
    }
  }
  HalfPlanePoint z(Real(0.5), Real(0.6));
  Real l1 = epstein_gamma0(HalfPlanePoint(Complex(-1) / (z.z() * Real(4))), 4, ctx) - epstein_gamma0(z, 4, ctx);
  Real l2 = (epstein_sl2(z, ctx) - epstein_sl2(HalfPlanePoint(z.z() * Real(4)), ctx)) / Real(15);
  EXPECT_TRUE(close(l1, l2, tol(-35)));
}

// the same lemma with every lattice sum taken by brute force
TEST(EpsteinProperty, LevelLemmaAgainstLatticeOracle) {
  auto ctx = PrecisionContext::with_digits(20);
  PrecisionScope s(ctx);
  auto full = [&](const LatticeSum& b) { return b.value + b.tail; };
  for (int N : {2, 3, 4}) {
    for (int i = 0; i < 5; ++i) {
      HalfPlanePoint z = random_point(-0.5, 0.5, 0.45, 1.0);
      HalfPlanePoint w(Complex(-1) / (z.z() * Real(N)));
      HalfPlanePoint nz(z.z() * Real(N));
      Real line1 = full(epstein_gamma0_bruteforce(w, N, 150, ctx)) - full(epstein_gamma0_bruteforce(z, N, 150, ctx));
      Real line2 = (full(epstein_sl2_bruteforce(z, 150, ctx)) - full(epstein_sl2_bruteforce(nz, 150, ctx))) / Real(N * N - 1);
      Real fourier = epstein_gamma0(w, N, ctx) - epstein_gamma0(z, N, ctx);
      EXPECT_LT(abs(line1 - fourier), Real(2e-3) * max(Real(1), abs(fourier))) << N;
      EXPECT_LT(abs(line2 - fourier), Real(2e-3) * max(Real(1), abs(fourier))) << N;
    }
  }
}

TEST(EpsteinProperty, PrecisionEscalation) {
  auto lo = PrecisionContext::with_digits(30), hi = PrecisionContext::with_digits(40);
  PrecisionScope s(hi);
  HalfPlanePoint z(Real(0.1), Real(0.45));
  EXPECT_TRUE(close(epstein_sl2(z, lo), epstein_sl2(z, hi), tol(-29)));
  for (int N : {2, 3, 4}) EXPECT_TRUE(close(epstein_gamma0(z, N, lo), epstein_gamma0(z, N, hi), tol(-29)));
}
