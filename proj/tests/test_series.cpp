#include <gtest/gtest.h>

#include "toprec/catalog.hpp"
#include "toprec/curve.hpp"
#include "toprec/series.hpp"

using namespace toprec;
using S = LaurentSeries<Rat>;
using SC = LaurentSeries<Coeff>;

namespace {

S ser(int lo, std::vector<long> c, int hi = kExact) {
  std::vector<Rat> r;
  for (long v : c) r.emplace_back(v);
  return S(lo, r, hi, "t");
}

}  // namespace

TEST(Series, InvertGeometric) {
  S inv = ser(0, {1, -1}).inverse(3);
  EXPECT_EQ(inv, ser(0, {1, 1, 1}, 3));
}

TEST(Series, MultiplyLaurent) { EXPECT_EQ(ser(-1, {1, 1}) * ser(1, {1}), ser(0, {1, 1})); }

TEST(Series, Antiderivative) {
  S f = ser(-2, {1, 0, 3});
  EXPECT_EQ(f.antiderivative(), ser(-1, {-1, 0, 3}));
  EXPECT_THROW(ser(-1, {1}).antiderivative(), DomainError);
  EXPECT_EQ(f.antiderivative().derivative(), f);
}

TEST(Series, ComposeWithNegation) {
  S geo = ser(0, {1, 1, 1, 1}, 4);
  EXPECT_EQ(geo.compose(ser(1, {-1})), ser(0, {1, -1, 1, -1}, 4));
}

TEST(Series, ComposePolynomial) { EXPECT_EQ(ser(2, {1}).compose(ser(1, {1, 1})), ser(2, {1, 2, 1})); }

TEST(Series, ComposeNeedsZeroConstantTerm) { EXPECT_THROW(ser(0, {1, 1}).compose(ser(0, {1, 1})), DomainError); }

TEST(Series, SineGermWithSymbolicP) {
  SC s = sine_germ(Coeff::p(), 8);
  EXPECT_EQ(s.coeff(1), Coeff(Rat(1, 2)));
  EXPECT_EQ(s.coeff(3), Coeff::p() * Coeff(Rat(-1, 3)));
  EXPECT_EQ(s.coeff(5), Coeff::p() * Coeff::p() * Coeff(Rat(1, 15)));
  EXPECT_EQ(s.hi(), 8);
}

TEST(Series, RevertIdentityAndCatalan) {
  EXPECT_EQ(ser(1, {1}).revert(), ser(1, {1}));
  S r = ser(1, {1, -1}).revert(5);
  EXPECT_EQ(r, ser(1, {1, 1, 2, 5}, 5));
  EXPECT_TRUE(S::agree(ser(1, {1, -1}).compose(r, 5), ser(1, {1})));
  EXPECT_THROW(ser(2, {1}).revert(5), DomainError);
}

TEST(Series, RevertTwiceIsIdentity) {
  S f = ser(1, {2, 3, -1, 4}, 7);
  EXPECT_TRUE(S::agree(f.revert().revert(), f));
}

TEST(Series, LambertSheetSolve) {
  // s e^{-s} = z e^{-z} near 1: s = 1 + σ(z-1).
  S sigma = local_involution(lambert_curve<Rat>(), 0, 6);
  std::vector<Rat> want = {Rat(-1), Rat(2, 3), Rat(-4, 9), Rat(44, 135), Rat(-104, 405)};
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(sigma.coeff(k), want[static_cast<std::size_t>(k - 1)]) << k;
}

TEST(Series, Residue) {
  EXPECT_EQ(ser(-1, {1}).residue(), Rat(1));
  EXPECT_EQ(ser(-2, {1, 0, 3}).residue(), Rat(0));
  EXPECT_THROW(S::unknown_from(-2, "t").residue(), PrecisionError);
  S f = ser(-3, {1, 2, 3, 4, 5}, 4);
  EXPECT_EQ(f.derivative().residue(), Rat(0));
}

TEST(Series, WorkedResidueIntegrand) {
  // (1/(8ζ^3)) (1 + ζ^2/z1^2 + 4p ζ^2/6 + ...): the residue collects the ζ^2 terms.
  Coeff z1m2 = Coeff(Rat(1, 9));  // z1 = 3
  SC inner(0, {Coeff(1L), Coeff(0L), z1m2 + Coeff(Rat(4, 6)) * Coeff::p()}, 3, "t");
  SC integrand = SC::mul(SC::monomial(Coeff(Rat(1, 8)), -3, kExact, "t"), inner, 0);
  EXPECT_EQ(integrand.residue(), Coeff(Rat(1, 8)) * (z1m2 + Coeff(Rat(2, 3)) * Coeff::p()));
}

TEST(Series, BeyondWindowThrows) {
  S f = ser(0, {1, 2}, 2);
  EXPECT_THROW(f.coeff(2), PrecisionError);
  try {
    f.coeff(5);
  } catch (const PrecisionError& e) {
    EXPECT_EQ(e.required_hi, 6);
  }
}

TEST(Series, TruncationSoundness) {
  S big = ser(1, {1, -1}).revert(12);
  S small = ser(1, {1, -1}).revert(6);
  EXPECT_TRUE(S::agree(big, small));
}
