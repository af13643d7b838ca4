#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "toprec/catalog.hpp"
#include "toprec/kernel.hpp"
#include "toprec/recursion.hpp"

using namespace toprec;

namespace {

Rat dfact(int n) {  // n!!, with (-1)!! = 1
  Rat r(1);
  for (int k = n; k > 1; k -= 2) r *= Rat(k);
  return r;
}

/// Intersection numbers <τ_{d_1} ... τ_{d_n}>_g by the DVV recursion.
class Intersections {
 public:
  Rat operator()(int g, std::vector<int> d) {
    std::sort(d.begin(), d.end());
    int n = static_cast<int>(d.size()), sum = 0;
    for (int x : d) sum += x;
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0 || sum != 3 * g - 3 + n) return Rat(0);
    auto key = std::make_pair(g, d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rat r(0);
    if (g == 0 && n == 3) {
      r = Rat(1);
    } else if (g == 1 && n == 1) {
      r = Rat(1, 24);
    } else if (d.back() == 0) {
      r = Rat(0);
    } else {
      int k = d.back() - 1;
      std::vector<int> S(d.begin(), d.end() - 1);
      for (std::size_t j = 0; j < S.size(); ++j) {
        std::vector<int> T = S;
        int dj = T[j];
        T[j] = dj + k;
        r += dfact(2 * k + 2 * dj + 1) / dfact(2 * dj - 1) * (*this)(g, T);
      }
      for (int a = 0; a <= k - 1; ++a) {
        int b = k - 1 - a;
        Rat w = dfact(2 * a + 1) * dfact(2 * b + 1) / Rat(2);
        std::vector<int> T = S;
        T.push_back(a);
        T.push_back(b);
        r += w * (*this)(g - 1, T);
        const std::size_t m = S.size();
        for (unsigned mask = 0; mask < (1u << m); ++mask)
          for (int g1 = 0; g1 <= g; ++g1) {
            std::vector<int> I{a}, J{b};
            for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1 ? I : J).push_back(S[i]);
            r += w * (*this)(g1, I) * (*this)(g - g1, J);
          }
      }
      r /= dfact(2 * k + 3);
    }
    memo_[key] = r;
    return r;
  }

 private:
  std::map<std::pair<int, std::vector<int>>, Rat> memo_;
};

void partitions_into(int total, int parts, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (parts == 0) {
    if (total == 0) f(cur);
    return;
  }
  int hi = cur.empty() ? total : std::min(total, cur.back());
  for (int v = hi; v >= 0; --v) {
    cur.push_back(v);
    partitions_into(total - v, parts - 1, cur, f);
    cur.pop_back();
  }
}

/// Expected form from a volume polynomial symmetric in L_i^2: each monomial
/// ∏ L_i^{2k_i} maps to ∏ (2k_i+1)! dz_i / z_i^{2k_i+2}.
SymForm<Coeff> laplace(int n, const std::map<std::vector<int>, Coeff>& vol) {
  SymForm<Coeff> out(n);
  for (const auto& [k, c] : vol) {
    Slots s;
    Coeff w = c;
    for (int e : k) {
      s.push_back(Slot{0, 2 * e + 2});
      w *= Coeff(Rat(factorial(2 * e + 1)));
    }
    std::sort(s.begin(), s.end());
    if (out.coeff(s).is_zero()) out.set(s, w);
  }
  return out;
}

const Coeff p = Coeff::p();

}  // namespace

TEST(Recursion, AiryMatchesIntersectionNumbers) {
  OmegaTable<Rat> t(airy_curve<Rat>(), general_kernel<Rat>());
  Intersections I;
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; 2 * g - 2 + n <= 5; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      SymForm<Rat> want(n);
      std::vector<int> cur;
      partitions_into(3 * g - 3 + n, n, cur, [&](const std::vector<int>& d) {
        Rat c = I(g, d) / pow(Rat(2), 2 * g - 2 + n);
        Slots s;
        for (int x : d) {
          c *= dfact(2 * x + 1);
          s.push_back(Slot{0, 2 * x + 2});
        }
        std::sort(s.begin(), s.end());
        if (!c.is_zero()) want.set(s, c);
      });
      EXPECT_EQ(t.omega_sym(g, n), want) << "(" << g << "," << n << ")";
    }
  EXPECT_EQ(I(1, {1}), Rat(1, 24));
  EXPECT_EQ(I(2, {4}), Rat(1, 1152));
}

TEST(Recursion, WeilPeterssonLowOrder) {
  OmegaTable<Coeff> t(weil_petersson_curve<Coeff>(p), general_kernel<Coeff>());
  SymForm<Coeff> w03(3);
  w03.set({{0, 2}, {0, 2}, {0, 2}}, Coeff(1L));
  EXPECT_EQ(t.omega_sym(0, 3), w03);
  SymForm<Coeff> w11(1);
  w11.set({{0, 2}}, p / Coeff(12L));
  w11.set({{0, 4}}, Coeff(Rat(1, 8)));
  EXPECT_EQ(t.omega_sym(1, 1), w11);
}

TEST(Recursion, WeilPeterssonMatchesVolumes) {
  OmegaTable<Coeff> t(weil_petersson_curve<Coeff>(p), general_kernel<Coeff>());
  // V04 = (4π^2 + Σ L_i^2)/2
  EXPECT_EQ(t.omega_sym(0, 4), laplace(4, {{{0, 0, 0, 0}, Coeff(2L) * p}, {{1, 0, 0, 0}, Coeff(Rat(1, 2))}}));
  // V12 = (4π^2 + L1^2 + L2^2)(12π^2 + L1^2 + L2^2)/192
  EXPECT_EQ(t.omega_sym(1, 2), laplace(2, {{{0, 0}, p * p / Coeff(4L)},
                                           {{1, 0}, p / Coeff(12L)},
                                           {{2, 0}, Coeff(Rat(1, 192))},
                                           {{1, 1}, Coeff(Rat(1, 96))}}));
  // V21 = (4π^2 + L^2)(12π^2 + L^2)(6960π^4 + 384π^2 L^2 + 5L^4)/2211840
  using P = UPoly<Coeff>;
  P v = P(std::vector<Coeff>{Coeff(4L) * p, Coeff(1L)}) * P(std::vector<Coeff>{Coeff(12L) * p, Coeff(1L)}) *
        P(std::vector<Coeff>{Coeff(6960L) * p * p, Coeff(384L) * p, Coeff(5L)});
  std::map<std::vector<int>, Coeff> vol;
  for (int k = 0; k <= v.degree(); ++k) vol[{k}] = v.coeff(k) / Coeff(2211840L);
  EXPECT_EQ(t.omega_sym(2, 1), laplace(1, vol));
  // F_2 = 1/(2-2g) Σ Res ω21 Φ equals -V_{2,0} = -43 π^6/2160.
  EXPECT_EQ(t.f_g(2), p * p * p * Coeff(Rat(-43, 2160)));
}

TEST(Recursion, HurwitzLowOrderInFamilyKernel) {
  OmegaTable<Rat> t(lambert_curve<Rat>(), printed_hurwitz_kernel<Rat>());
  SymForm<Rat> w03(3);
  w03.set({{0, 2}, {0, 2}, {0, 2}}, Rat(1));
  EXPECT_EQ(t.omega_sym(0, 3), w03);
  // (1+2z)/(1-z)^4 - 1/(1-z)^2 = 3/u^4 + 2/u^3 - 1/u^2 with u = z-1.
  SymForm<Rat> w11(1);
  w11.set({{0, 4}}, Rat(1, 8));
  w11.set({{0, 3}}, Rat(1, 12));
  w11.set({{0, 2}}, Rat(-1, 24));
  EXPECT_EQ(t.omega_sym(1, 1), w11);
  OmegaTable<Rat> gen(lambert_curve<Rat>(), general_kernel<Rat>());
  EXPECT_EQ(gen.omega_sym(1, 1), w11.scaled(Rat(-1)));
  EXPECT_EQ(gen.omega_sym(0, 4), t.omega_sym(0, 4));
}

TEST(Recursion, PrintedKernelRejectsOtherCurves) {
  OmegaTable<Rat> t(airy_curve<Rat>(), printed_hurwitz_kernel<Rat>());
  EXPECT_THROW(t.omega(0, 3), ValidationError);
  EXPECT_THROW(printed_kernel_for<Rat>("airy"), ValidationError);
}

TEST(Recursion, WeilPeterssonPrintedKernelLeadingTerm) {
  // 1/(z1^2 - z^2) π/sin(2πz) has leading term 1/(2ζ z1^2); the form kernel
  // multiplies it by -1 and the engine pairs it with K_2.
  auto f = local_frame(weil_petersson_curve<Coeff>(p), 0, 8);
  auto K = printed_weil_petersson_kernel<Coeff>().bind(weil_petersson_curve<Coeff>(p), f);
  EXPECT_EQ(K(2).valuation(), -1);
  EXPECT_EQ(K(2).coeff(-1), Coeff(Rat(-1, 2)));
  EXPECT_TRUE(K(3).is_known_zero());
}

TEST(Recursion, UnstableRequestsAreRefused) {
  OmegaTable<Rat> t(airy_curve<Rat>(), general_kernel<Rat>());
  EXPECT_THROW(t.omega(0, 2), DomainError);
  EXPECT_THROW(t.omega(0, 1), DomainError);
  EXPECT_THROW(t.f_g(1), DomainError);
  EXPECT_THROW(t.f_g(0), DomainError);
}

TEST(Recursion, DilatonFixesKappa) {
  EXPECT_EQ(calibrate_kappa(airy_curve<Rat>()), Rat(1));
  OmegaTable<Rat> t(airy_curve<Rat>(), general_kernel<Rat>());
  auto d11 = t.dilaton(1, 1);
  EXPECT_TRUE(d11.ok);
  EXPECT_FALSE(d11.flipped_ok);
  EXPECT_TRUE(t.dilaton(0, 3).ok);
  OmegaTable<Rat> bad(airy_curve<Rat>(), general_kernel<Rat>(Rat(2)));
  EXPECT_FALSE(bad.dilaton(0, 3).ok);
}

TEST(Recursion, SymmetryCheck) {
  MultiForm<Rat> m(2);
  m.add({{0, 2}, {0, 4}}, Rat(1));
  EXPECT_FALSE(symmetry_check(m));
  OmegaTable<Rat> t(airy_curve<Rat>(), general_kernel<Rat>());
  EXPECT_TRUE(symmetry_check(t.omega(1, 2)));
  EXPECT_EQ(t.omega_exhaustive(1, 2), t.omega(1, 2));
  OmegaTable<Coeff> m4(catalog_get("maps-quad"), general_kernel<Coeff>());
  EXPECT_TRUE(symmetry_check(m4.omega(0, 3)));
  EXPECT_EQ(m4.omega_exhaustive(0, 4), m4.omega(0, 4));
}

TEST(Recursion, PoleBoundAndNoResidues) {
  OmegaTable<Rat> t(lambert_curve<Rat>(), general_kernel<Rat>());
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; 2 * g - 2 + n <= 4; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const auto& w = t.omega_sym(g, n);
      EXPECT_LE(w.max_order(), 6 * g - 4 + 2 * n);
      EXPECT_FALSE(w.expand().has_residue_terms());
    }
}

TEST(Recursion, FgIndependentOfPhiConstantAndWindow) {
  OmegaTable<Rat> t(airy_curve<Rat>(), general_kernel<Rat>());
  EXPECT_EQ(t.f_g(2), t.f_g(2, Rat(17)));
  OmegaTable<Rat> wide(airy_curve<Rat>(), general_kernel<Rat>(), EngineOptions{40});
  EXPECT_EQ(t.f_g(2), wide.f_g(2));
  auto c = maps_quad_curve<Rat>(Rat(1, 3));
  OmegaTable<Rat> m(c, general_kernel<Rat>());
  EXPECT_EQ(m.f_g(2), m.f_g(2, Rat(-5, 2)));
}

TEST(Recursion, FgUnderBranchpointReordering) {
  auto c = maps_quad_curve<Rat>(Rat(1, 3));
  auto r = c;
  std::swap(r.branchpoints[0], r.branchpoints[1]);
  OmegaTable<Rat> a(c, general_kernel<Rat>()), b(r, general_kernel<Rat>());
  EXPECT_EQ(a.f_g(2), b.f_g(2));
  EXPECT_FALSE(a.f_g(2).is_zero());
}

TEST(Recursion, FgScalesUnderY) {
  // y -> λ y multiplies F_g by λ^(2-2g).
  auto c = maps_quad_curve<Rat>(Rat(1, 3));
  auto s = c;
  auto& y = std::get<RatMap<Rat>>(s.y);
  y = RatMap<Rat>(y.num() * UPoly<Rat>(Rat(2)), y.den());
  OmegaTable<Rat> a(c, general_kernel<Rat>()), b(s, general_kernel<Rat>());
  EXPECT_EQ(b.f_g(2), a.f_g(2) / Rat(4));
}

TEST(Recursion, WindowStability) {
  OmegaTable<Rat> a(lambert_curve<Rat>(), general_kernel<Rat>());
  OmegaTable<Rat> b(lambert_curve<Rat>(), general_kernel<Rat>(), EngineOptions{30});
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 5}, {1, 3}, {2, 1}, {2, 2}})
    EXPECT_EQ(a.omega_sym(g, n), b.omega_sym(g, n));
}

TEST(Recursion, PrecisionErrorReportsRequiredWindow) {
  // A germ known only to a fixed order cannot support deep recursion.
  SpectralCurve<Rat> c = airy_curve<Rat>();
  c.y = std::vector<Germ<Rat>>{fixed_germ(LaurentSeries<Rat>(1, {Rat(1)}, 4, kLocalVar))};
  OmegaTable<Rat> t(c, general_kernel<Rat>(), EngineOptions{0, true, 1});
  EXPECT_THROW(t.omega(1, 1), PrecisionError);
  c.y = std::vector<Germ<Rat>>{fixed_germ(LaurentSeries<Rat>(1, {Rat(1)}, kExact, kLocalVar))};
  OmegaTable<Rat> exact(c, general_kernel<Rat>());
  OmegaTable<Rat> airy(airy_curve<Rat>(), general_kernel<Rat>());
  EXPECT_EQ(exact.omega(2, 1), airy.omega(2, 1));
}
