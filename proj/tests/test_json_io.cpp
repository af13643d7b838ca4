#include <gtest/gtest.h>

#include <fstream>

#include "toprec/catalog.hpp"
#include "toprec/json_io.hpp"
#include "toprec/recursion.hpp"

using namespace toprec;

namespace {

json read_data(const std::string& name) {
  std::ifstream in(std::string(TOPREC_DATA) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  return json::parse(in);
}

}  // namespace

TEST(JsonIo, ScalarRoundTrips) {
  for (const char* s : {"0", "-7", "22/7", "-1/1152"}) EXPECT_EQ(rat_from_json(to_json(Rat::parse(s))), Rat::parse(s));
  Poly q = Poly::p() * Poly::p() - Poly(Rat(1, 3));
  EXPECT_EQ(poly_from_json(to_json(q)), q);
  Coeff c = (Coeff::p() + Coeff(1L)) / (Coeff::p() * Coeff(Rat(2, 5)) - Coeff(3L));
  EXPECT_EQ(coeff_from_json(to_json(c)), c);
  EXPECT_EQ(coeff_from_json(json("3/4")), Coeff(Rat(3, 4)));
  EXPECT_THROW(rat_from_json(json("1/0")), Error);
}

TEST(JsonIo, SeriesRoundTrip) {
  LaurentSeries<Rat> s(-2, {Rat(1), Rat(0), Rat(-5, 6)}, 4, kLocalVar);
  auto back = series_from_json<Rat>(to_json(s));
  EXPECT_EQ(back.valuation(), -2);
  EXPECT_EQ(back.hi(), 4);
  EXPECT_TRUE(LaurentSeries<Rat>::agree(back, s));
  LaurentSeries<Coeff> exact(0, {Coeff::p(), Coeff(2L)}, kExact, "z");
  auto j = to_json(exact);
  EXPECT_FALSE(j.contains("hi"));
  EXPECT_EQ(series_from_json<Coeff>(j).hi(), kExact);
}

TEST(JsonIo, MultiFormRoundTrip) {
  OmegaTable<Coeff> t(weil_petersson_curve<Coeff>(Coeff::p()), general_kernel<Coeff>());
  MultiForm<Coeff> w = t.omega(1, 2);
  json j = to_json(w);
  EXPECT_EQ(multiform_from_json<Coeff>(j), w);
  MultiForm<Rat> a(2);
  a.add({{0, 2}, {1, 4}}, Rat(-3, 8));
  EXPECT_EQ(multiform_from_json<Rat>(to_json(a)), a);
  EXPECT_EQ(to_json(a).dump(), to_json(multiform_from_json<Rat>(to_json(a))).dump());
}

TEST(JsonIo, CurveFilesParseAndValidate) {
  for (const char* f : {"airy.json", "lambert.json", "two_cuts.json", "wp_germ.json"}) {
    auto c = curve_from_json(read_data(f));
    EXPECT_TRUE(validate_curve(c).empty()) << f;
  }
  EXPECT_FALSE(validate_curve(curve_from_json(read_data("bad_cusp.json"))).empty());
}

TEST(JsonIo, CurveFilesReproduceCatalog) {
  OmegaTable<Coeff> file(curve_from_json(read_data("lambert.json")), general_kernel<Coeff>());
  OmegaTable<Coeff> cat(lambert_curve<Coeff>(), general_kernel<Coeff>());
  EXPECT_EQ(file.omega(0, 3), cat.omega(0, 3));
  EXPECT_EQ(file.omega(1, 1), cat.omega(1, 1));
  OmegaTable<Coeff> germ(curve_from_json(read_data("wp_germ.json")), general_kernel<Coeff>());
  OmegaTable<Coeff> wp(weil_petersson_curve<Coeff>(Coeff::p()), general_kernel<Coeff>());
  EXPECT_EQ(germ.omega(1, 1), wp.omega(1, 1));
  OmegaTable<Coeff> cuts(curve_from_json(read_data("two_cuts.json")), general_kernel<Coeff>());
  OmegaTable<Coeff> maps(maps_quad_curve<Coeff>(Coeff(Rat(1, 3))), general_kernel<Coeff>());
  EXPECT_EQ(cuts.f_g(2), maps.f_g(2));
}

TEST(JsonIo, MalformedCurvesAreRejected) {
  json j = read_data("airy.json");
  j["bergman"] = "nonstandard";
  EXPECT_THROW(curve_from_json(j), ValidationError);
  json k = read_data("airy.json");
  k.erase("x");
  EXPECT_THROW(curve_from_json(k), ValidationError);
  json m = read_data("airy.json");
  m["y"]["type"] = "spline";
  EXPECT_THROW(curve_from_json(m), ValidationError);
}
