#include <gtest/gtest.h>

#include "toprec/catalog.hpp"
#include "toprec/curve.hpp"

using namespace toprec;
using S = LaurentSeries<Rat>;

namespace {

S loc(int lo, std::vector<Rat> c, int hi = kExact) { return S(lo, std::move(c), hi, kLocalVar); }

}  // namespace

TEST(Curve, CatalogCurvesAreValid) {
  for (const auto& e : catalog_entries()) EXPECT_TRUE(validate_curve(catalog_get(e.name)).empty()) << e.name;
  EXPECT_TRUE(validate_curve(maps_quad_curve<Rat>(Rat(1, 3), Rat(1, 2))).empty());
}

TEST(Curve, NonSimpleBranchpointIsRejected) {
  SpectralCurve<Rat> c;
  c.x.rational = RatMap<Rat>(UPoly<Rat>(std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)}));
  c.y = RatMap<Rat>::identity();
  c.branchpoints.push_back({Rat(0), std::nullopt});
  auto d = validate_curve(c);
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d[0].predicate, "x''(a) != 0");
}

TEST(Curve, WrongInvolutionIsRejected) {
  SpectralCurve<Rat> c = airy_curve<Rat>();
  c.branchpoints[0].rho = RatMap<Rat>(UPoly<Rat>(std::vector<Rat>{Rat(0), Rat(2)}));
  EXPECT_FALSE(validate_curve(c).empty());
}

TEST(Curve, BranchpointWhereDxDoesNotVanish) {
  SpectralCurve<Rat> c = airy_curve<Rat>();
  c.branchpoints[0].a = Rat(1);
  c.branchpoints[0].rho.reset();
  EXPECT_FALSE(validate_curve(c).empty());
}

TEST(Curve, AiryInvolutionIsExact) { EXPECT_EQ(local_involution(airy_curve<Rat>(), 0, 8), loc(1, {Rat(-1)})); }

TEST(Curve, MapsInvolutionAtOne) {
  S s = local_involution(maps_quad_curve<Rat>(Rat(1, 3)), 0, 6);
  EXPECT_EQ(s, loc(1, {Rat(-1), Rat(1), Rat(-1), Rat(1), Rat(-1)}, 6));
}

TEST(Curve, InvolutionPropertiesOnAllCatalogCurves) {
  for (const auto& e : catalog_entries()) {
    auto c = catalog_get(e.name);
    for (std::size_t b = 0; b < c.branchpoints.size(); ++b) {
      auto s = local_involution(c, b, 10);
      auto X = c.x.local(c.branchpoints[b].a, 10);
      EXPECT_TRUE((X.compose(s, 10) - X).is_known_zero()) << e.name;
      EXPECT_TRUE((s.compose(s, 10) - LaurentSeries<Coeff>::variable(kLocalVar)).is_known_zero()) << e.name;
      EXPECT_EQ(local_frame(c, b, 10).D.valuation(), 2) << e.name;
    }
  }
}

TEST(Curve, AiryFrame) {
  auto f = local_frame(airy_curve<Rat>(), 0, 8);
  EXPECT_TRUE(S::agree(f.W, loc(2, {Rat(2)})));
  EXPECT_TRUE(S::agree(f.Phi, loc(3, {Rat(2, 3)})));
}

TEST(Curve, WeilPeterssonFrame) {
  auto f = local_frame(weil_petersson_curve<Coeff>(Coeff::p()), 0, 8);
  EXPECT_EQ(f.W.coeff(2), Coeff(1L));
  EXPECT_EQ(f.W.coeff(3), Coeff(0L));
  EXPECT_EQ(f.W.coeff(4), Coeff::p() * Coeff(Rat(-2, 3)));
}

TEST(Curve, LambertFrameMatchesOneMinusZ) {
  // ω01 = (1 - z) dz at z = 1 + ζ is -ζ dζ.
  auto f = local_frame(lambert_curve<Rat>(), 0, 8);
  EXPECT_TRUE(S::agree(f.W, loc(1, {Rat(-1)})));
}

TEST(Curve, BergmanExpansion) {
  auto b = bergman_expand<Rat>(5);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(b.at(k + 2), S::monomial(Rat(k + 1), k, 5, kLocalVar));
}

TEST(Curve, BergmanOnInvolution) {
  S s = loc(1, {Rat(-1)});
  EXPECT_TRUE(S::agree(bergman_on_involution(s, 6), loc(-2, {Rat(-1, 4)})));
}

TEST(Curve, BergmanIntegral) {
  // Σ_{k odd} 2 ζ^k dz1/z1^(k+1): entry j holds the coefficient of dz1/z1^j.
  auto I = bergman_integral(loc(1, {Rat(-1)}), 8, 10);
  for (int j = 1; j < 8; ++j) {
    S want = (j % 2 == 0) ? S::monomial(Rat(2), j - 1, 10, kLocalVar) : S(0, {}, 10, kLocalVar);
    EXPECT_TRUE(S::agree(I.at(j), want)) << j;
  }
}
