#include <gtest/gtest.h>

#include "toprec/catalog.hpp"
#include "toprec/curve.hpp"
#include "toprec/extract.hpp"

using namespace toprec;
using S = LaurentSeries<Rat>;

namespace {

S loc(int lo, std::vector<Rat> c, int hi = kExact) { return S(lo, std::move(c), hi, kLocalVar); }

}  // namespace


TEST(Catalog, AiryEntry) {
  auto c = catalog_get("airy");
  ASSERT_EQ(c.branchpoints.size(), 1u);
  EXPECT_TRUE(c.branchpoints[0].a.is_zero());
  EXPECT_TRUE(LaurentSeries<Coeff>::agree(c.y_local(0, 4), LaurentSeries<Coeff>::variable(kLocalVar)));
}

TEST(Catalog, MapsQuadSymbolicGamma) {
  auto c = catalog_get("maps-quad");
  const Coeff g = Coeff::p();
  EXPECT_EQ(c.params.at("v1"), g - Coeff(3L) * g * g * g);
  EXPECT_EQ(c.params.at("v3"), -(g * g * g));
  EXPECT_EQ(c.params.at("t"), g * g - Coeff(3L) * g * g * g * g);
  ASSERT_EQ(c.branchpoints.size(), 2u);
  EXPECT_EQ(c.branchpoints[0].a, Coeff(1L));
  EXPECT_EQ(c.branchpoints[1].a, Coeff(-1L));
}

TEST(Catalog, GammaSquaredSeries) {
  auto s = gamma_squared_series(Rat(1), 5);
  std::vector<Rat> want = {Rat(1), Rat(3), Rat(18), Rat(135)};
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(s.coeff(k), want[static_cast<std::size_t>(k - 1)]);
  // (1 - sqrt(1 - 12 t))/6 has coefficients Catalan-like: 3^(k-1) C(2k-2,k-1)/k * 2/2.
  for (int k = 1; k <= 4; ++k) {
    Rat c = pow(Rat(3), k - 1) * Rat(binomial(2 * k - 2, k - 1)) / Rat(k);
    EXPECT_EQ(s.coeff(k), c) << k;
  }
}

TEST(Catalog, NoFaceWeights) {
  auto m = map_curve_from_weights<Rat>(Rat(2), {});
  EXPECT_EQ(m.t, Rat(4));
  ASSERT_GE(m.v.size(), 2u);
  EXPECT_EQ(m.v[1], Rat(2));
}

TEST(Catalog, DiskFromClosedFormMatchesY) {
  // W01 = (x - t4 x^3 + t4 (x^2 + 2γ^2 - 1/t4) sqrt(x^2 - 4γ^2))/2 at t4 = 1, expanded at
  // x = ∞ (ξ = 1/x), reproduces y(z(x)) = v1/z + v3/z^3; here γ = 1/3.
  const Rat gamma(1, 3), g2 = gamma * gamma;
  const int hi = 12;
  const std::string v = kInfinityVar;
  using L = LaurentSeries<Rat>;
  std::vector<Rat> root;  // sqrt(1 - 4γ^2 ξ^2)
  for (int k = 0; 2 * k < hi + 2; ++k) {
    root.push_back(binomial(Rat(1, 2), k) * pow(Rat(-4) * g2, k));
    root.push_back(Rat(0));
  }
  L R(0, root, hi + 2, v);
  L closed = L::monomial(Rat(1), -1, kExact, v) - L::monomial(Rat(1), -3, kExact, v) +
             L::mul(L(-3, {Rat(1), Rat(0), Rat(2) * g2 - Rat(1)}, kExact, v), R, hi);
  closed = closed.scaled(Rat(1, 2)).truncated(hi);
  auto c = maps_quad_curve<Rat>(gamma);
  L s = inverse_coordinate_at_infinity<Rat>(gamma, Rat(0), hi);
  L y = s.scaled(c.params.at("v1")) + s.pow(3, hi).scaled(c.params.at("v3"));
  EXPECT_TRUE(L::agree(closed, y.truncated(hi)));
  EXPECT_EQ(closed.valuation(), 1);
  EXPECT_EQ(closed.coeff(1), c.params.at("t"));
}

TEST(Catalog, UnknownNameIsRejected) { EXPECT_THROW(catalog_get("marchenko"), ValidationError); }
