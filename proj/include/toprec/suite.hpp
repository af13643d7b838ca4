#pragma once

// Fixed verification suite: one item per reproducibility claim, each with a
// pass/fail verdict and human-readable details.  Expected values below are
// either printed constants or direct evaluations of printed closed forms;
// none of them are produced by the engine.

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "toprec/catalog.hpp"
#include "toprec/curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/extract.hpp"
#include "toprec/graphs.hpp"
#include "toprec/json_io.hpp"
#include "toprec/kernel.hpp"
#include "toprec/multiform.hpp"
#include "toprec/rational.hpp"
#include "toprec/recursion.hpp"
#include "toprec/upoly.hpp"

namespace toprec {

struct CheckItem {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0;
};

struct CheckReport {
  std::vector<CheckItem> items;
  json artifacts = json::object();
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

/// Closed-form count formulas, evaluated directly.
namespace formulas {

inline Rat planar_quadrangulations(long m) {  // 2·3^m (2m)!/((m+2)! m!)
  return Rat(2) * pow(Rat(3), m) * Rat(mpq_class(factorial(2 * m), factorial(m + 2) * factorial(m)));
}
inline Rat genus1_quadrangulations(long n) {  // 3^n/6 (C(2n,n) - 2^n)
  return pow(Rat(3), n) / Rat(6) * (Rat(binomial(2 * n, n)) - pow(Rat(2), n));
}
inline Rat genus2_quadrangulations(long n) {  // n+2 faces
  return pow(Rat(12), n) / Rat(2) *
         (Rat(14) * binomial(Rat(n) + Rat(5, 2), n) - Rat(13) * binomial(Rat(n + 2), n) - binomial(Rat(n) + Rat(3, 2), n));
}
inline Rat genus3_quadrangulations(long n) {  // n+4 faces
  return pow(Rat(12), n) * (Rat(-2450) * binomial(Rat(n + 5), n) + Rat(3033) * binomial(Rat(n) + Rat(9, 2), n) -
                            Rat(291) * binomial(Rat(n + 4), n) + Rat(292) * binomial(Rat(n) + Rat(7, 2), n));
}
inline Rat cayley(long k) { return k == 1 ? Rat(1) : pow(Rat(k), k - 2); }
inline Rat hurwitz_cylinder(long m1, long m2) {  // (m1+m2-1)! m1^(m1+1) m2^(m2+1)/(m1! m2!)
  return Rat(factorial(m1 + m2 - 1)) * pow(Rat(m1), m1 + 1) * pow(Rat(m2), m2 + 1) /
         Rat(mpq_class(factorial(m1) * factorial(m2)));
}

}  // namespace formulas

namespace detail {

template <Field F>
UPoly<F> upoly_pow(const UPoly<F>& p, int e) {
  UPoly<F> r(F(1L));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

template <Field F>
UPoly<F> linear(const F& a) {  // z - a
  return UPoly<F>(std::vector<F>{-a, F(1L)});
}

/// If a = r·b for a single r, returns r.
template <Field F>
std::optional<F> form_ratio(const SymForm<F>& a, const SymForm<F>& b) {
  if (a.terms().size() != b.terms().size() || b.is_zero()) return std::nullopt;
  std::optional<F> r;
  for (const auto& [s, cb] : b.terms()) {
    F ca = a.coeff(s);
    F q = ca / cb;
    if (r && !(*r == q)) return std::nullopt;
    r = q;
  }
  return r;
}

inline std::string slot_text(const Slots& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i].bp) + ":" + std::to_string(s[i].order);
  return out + ")";
}

}  // namespace detail

/// A one-point form Σ c/(z-a)^k dz as the rational function Σ c/(z-a)^k.
template <Field F>
RatMap<F> one_form_function(const SpectralCurve<F>& c, const SymForm<F>& w) {
  if (w.n() != 1) throw DomainError("one_form_function needs a one-point form");
  std::map<int, int> top;
  for (const auto& [s, v] : w.terms()) top[s[0].bp] = std::max(top[s[0].bp], s[0].order);
  auto a_of = [&](int bp) { return c.branchpoints.at(static_cast<std::size_t>(bp)).a; };
  UPoly<F> den(F(1L));
  for (const auto& [bp, k] : top) den = den * detail::upoly_pow(detail::linear(a_of(bp)), k);
  UPoly<F> num;
  for (const auto& [s, v] : w.terms()) {
    UPoly<F> t(v);
    for (const auto& [bp, k] : top)
      t = t * detail::upoly_pow(detail::linear(a_of(bp)), bp == s[0].bp ? k - s[0].order : k);
    num = num + t;
  }
  return RatMap<F>(num, den);
}

/// Shared engine state for the suite; tables are computed once.
class SuiteContext {
 public:
  Rat kappa() {
    if (!kappa_) kappa_ = calibrate_kappa(airy_curve<Rat>());
    return *kappa_;
  }

  OmegaTable<Rat>& airy() { return lazy(airy_, [&] { return OmegaTable<Rat>(airy_curve<Rat>(), general_kernel<Rat>(kappa())); }); }
  OmegaTable<Coeff>& wp() {
    return lazy(wp_, [&] {
      return OmegaTable<Coeff>(weil_petersson_curve<Coeff>(Coeff::p()), general_kernel<Coeff>(Coeff(kappa())));
    });
  }
  OmegaTable<Coeff>& wp_printed() {
    return lazy(wp_p_, [&] {
      return OmegaTable<Coeff>(weil_petersson_curve<Coeff>(Coeff::p()), printed_weil_petersson_kernel<Coeff>());
    });
  }
  OmegaTable<Rat>& lambert() { return lazy(lam_, [&] { return OmegaTable<Rat>(lambert_curve<Rat>(), general_kernel<Rat>(kappa())); }); }
  OmegaTable<Rat>& lambert_printed() {
    return lazy(lam_p_, [&] { return OmegaTable<Rat>(lambert_curve<Rat>(), printed_hurwitz_kernel<Rat>()); });
  }
  OmegaTable<Coeff>& maps() {
    return lazy(maps_, [&] { return OmegaTable<Coeff>(catalog_get("maps-quad"), general_kernel<Coeff>(Coeff(kappa()))); });
  }
  OmegaTable<Coeff>& maps_printed() {
    return lazy(maps_p_, [&] { return OmegaTable<Coeff>(catalog_get("maps-quad"), printed_maps_kernel<Coeff>()); });
  }

 private:
  template <class T, class Make>
  T& lazy(std::unique_ptr<T>& slot, Make&& make) {
    if (!slot) slot = std::make_unique<T>(make());
    return *slot;
  }

  std::optional<Rat> kappa_;
  std::unique_ptr<OmegaTable<Rat>> airy_, lam_, lam_p_;
  std::unique_ptr<OmegaTable<Coeff>> wp_, wp_p_, maps_, maps_p_;
};

namespace checks {

struct Recorder {
  CheckItem& item;
  bool expect(bool ok, const std::string& what) {
    item.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok) item.pass = false;
    return ok;
  }
  void note(const std::string& what) { item.details.push_back("note " + what); }
};

template <Field F>
SymForm<F> form_of(int n, std::vector<std::pair<Slots, F>> terms) {
  SymForm<F> s(n);
  for (auto& [sl, c] : terms) s.set(std::move(sl), std::move(c));
  return s;
}

inline Slots repeat_slot(Slot s, int n) { return Slots(static_cast<std::size_t>(n), s); }

inline void weil_petersson_forms(SuiteContext& ctx, Recorder& r) {
  auto& t = ctx.wp_printed();
  const Coeff p = Coeff::p();
  auto e03 = form_of<Coeff>(3, {{repeat_slot({0, 2}, 3), Coeff(1L)}});
  auto e11 = form_of<Coeff>(1, {{{{0, 4}}, Coeff(Rat(1, 8))}, {{{0, 2}}, p / Coeff(12L)}});
  r.expect(t.omega_sym(0, 3) == e03, "W03 = 1/(z1^2 z2^2 z3^2): engine " + t.omega(0, 3).str());
  r.expect(t.omega_sym(1, 1) == e11, "W11 = 1/(8 z^4) + p/(12 z^2), p = pi^2: engine " + t.omega(1, 1).str());
  auto& g = ctx.wp();
  r.expect(g.omega_sym(0, 3) == e03 && g.omega_sym(1, 1) == e11, "general kernel with kappa = " + ctx.kappa().str() + " gives the same two forms");
}

inline void hurwitz_forms(SuiteContext& ctx, Recorder& r) {
  auto& t = ctx.lambert_printed();
  auto e03 = form_of<Rat>(3, {{repeat_slot({0, 2}, 3), Rat(1)}});
  r.expect(t.omega_sym(0, 3) == e03, "omega03 = prod dz_i/(1-z_i)^2: engine " + t.omega(0, 3).str({"1"}));
  // (1/24)((1+2z)/(1-z)^4 - 1/(1-z)^2) as a rational function.
  using P = UPoly<Rat>;
  P one_m_z(std::vector<Rat>{Rat(1), Rat(-1)});
  P num = P(std::vector<Rat>{Rat(1), Rat(2)}) - detail::upoly_pow(one_m_z, 2);
  RatMap<Rat> printed(num, P(Rat(24)) * detail::upoly_pow(one_m_z, 4));
  RatMap<Rat> engine = one_form_function(t.curve(), t.omega_sym(1, 1));
  r.expect(engine == printed, "omega11 = (1/24)((1+2z)/(1-z)^4 - 1/(1-z)^2) dz: engine " + t.omega(1, 1).str({"1"}));
  const std::vector<Rat> inv = {Rat(-1), Rat(2, 3), Rat(-4, 9), Rat(44, 135), Rat(-104, 405)};
  LaurentSeries<Rat> s = local_involution(t.curve(), 0, 8);
  bool ok = true;
  std::string got;
  for (int k = 1; k <= 5; ++k) {
    ok = ok && s.coeff(k) == inv[static_cast<std::size_t>(k - 1)];
    got += (k > 1 ? ", " : "") + s.coeff(k).str();
  }
  r.expect(ok, "involution coefficients (-1, 2/3, -4/9, 44/135, -104/405): engine " + got);
}

inline void quadrangulation_forms(SuiteContext& ctx, Recorder& r) {
  auto& t = ctx.maps_printed();
  const Coeff g = Coeff::p(), t4(1L);
  const Coeff g2 = g * g, g4 = g2 * g2;
  const Coeff tt = g2 - Coeff(3L) * t4 * g4;
  const Coeff c = (Coeff(4L) * tt - Coeff(2L) * g2).inv();
  auto e03 = form_of<Coeff>(3, {{repeat_slot({0, 2}, 3), c}, {repeat_slot({1, 2}, 3), -c}});
  r.expect(t.omega_sym(0, 3) == e03, "omega03 = (prod (z_i-1)^-2 - prod (z_i+1)^-2)/(4t - 2 gamma^2): engine " + t.omega(0, 3).str({"1", "-1"}));
  using P = UPoly<Coeff>;
  // -z (t4 g^4 z^4 + (t - 5 t4 g^4) z^2 + t4 g^4) / ((t - 3 t4 g^4)^2 (z^2-1)^4)
  P num(std::vector<Coeff>{Coeff(0L), -(t4 * g4), Coeff(0L), -(tt - Coeff(5L) * t4 * g4), Coeff(0L), -(t4 * g4)});
  Coeff d0 = tt - Coeff(3L) * t4 * g4;
  P den = P(d0 * d0) * detail::upoly_pow(P(std::vector<Coeff>{Coeff(-1L), Coeff(0L), Coeff(1L)}), 4);
  RatMap<Coeff> printed(num, den);
  RatMap<Coeff> engine = one_form_function(t.curve(), t.omega_sym(1, 1));
  r.expect(engine == printed, "omega11 equals the printed rational function in Q(gamma)(z) with t = gamma^2 - 3 t4 gamma^4, t4 = 1");
  if (!(engine == printed) && engine == RatMap<Coeff>(-num, den))
    r.note("engine omega11 = -(printed omega11) exactly; the printed sign gives W11 = -1/x^5 + ..., i.e. -1 for the "
           "single one-face torus quadrangulation, while omega03 carries the printed sign; both have 2g-2+n = 1, so no "
           "kernel normalization reproduces both printed signs");
}

inline std::string counts_text(const MapCountTable& tab) {
  std::string s;
  for (const auto& [f, v] : tab.by_faces) s += (s.empty() ? "" : ", ") + std::to_string(f) + ":" + v.str();
  return s;
}

inline void map_counts(SuiteContext& ctx, Recorder& r, CheckReport& rep) {
  auto& t = ctx.maps_printed();
  const SpectralCurve<Coeff>& c = t.curve();
  json art = json::object();
  auto compare = [&](const MapCountTable& tab, int g, int faces, const Rat& expected, const std::string& formula) {
    Rat got = tab.by_faces.at(faces);
    r.expect(got == expected, "genus " + std::to_string(g) + ", " + std::to_string(faces) + " faces: extracted " + got.str() +
                                  ", " + formula + " gives " + expected.str());
  };
  MapCountTable g0 = map_count_extract_disk(c, 3);
  for (int m = 1; m <= 3; ++m) compare(g0, 0, m, formulas::planar_quadrangulations(m), "2*3^m (2m)!/((m+2)! m!)");
  MapCountTable g1 = map_count_extract(c, t.omega_sym(1, 1), 1, 4);
  for (int n = 2; n <= 4; ++n) compare(g1, 1, n, formulas::genus1_quadrangulations(n), "3^n/6 (C(2n,n) - 2^n)");
  MapCountTable g2 = map_count_extract(c, t.omega_sym(2, 1), 2, 4);
  compare(g2, 2, 3, formulas::genus2_quadrangulations(1), "the genus-2 formula at n = 1");
  MapCountTable g3 = map_count_extract(c, t.omega_sym(3, 1), 3, 5);
  compare(g3, 3, 5, formulas::genus3_quadrangulations(1), "the genus-3 formula at n = 1");
  r.note("extracted genus 0: " + counts_text(g0));
  r.note("extracted genus 1: " + counts_text(g1) + "  (= 3^(n-1) (4^n - C(2n,n))/2; 1, 15, 198 confirmed by permutation enumeration)");
  r.note("extracted genus 2: " + counts_text(g2));
  r.note("extracted genus 3: " + counts_text(g3) + "  (9450 confirmed by a character sum over S_20)");
  r.note("marked face size 4; faces include the marked face");
  for (const auto* tab : {&g0, &g1, &g2, &g3}) art["genus" + std::to_string(tab->g)] = to_json(*tab);
  rep.artifacts["map_counts"] = art;
}

inline void hurwitz_numbers(SuiteContext&, Recorder& r) {
  HurwitzTable h1 = hurwitz_extract_disk(8);
  bool ok = true;
  std::string got;
  for (const auto& e : h1.entries) {
    ok = ok && e.number == formulas::cayley(e.mu[0]);
    got += (got.empty() ? "" : ", ") + e.number.str();
  }
  r.expect(ok && h1.entries.size() == 8, "H01(k) = k^(k-2), k = 1..8: " + got);
  HurwitzTable h2 = hurwitz_extract_cylinder(5);
  ok = true;
  got.clear();
  for (const auto& e : h2.entries) {
    Rat want = formulas::hurwitz_cylinder(e.mu[0], e.mu[1]);
    ok = ok && e.number == want;
    got += (got.empty() ? "" : ", ") + std::string("(") + std::to_string(e.mu[0]) + "," + std::to_string(e.mu[1]) + ")=" + e.number.str();
  }
  r.expect(ok && h2.entries.size() == 6, "H02(mu) = (m1+m2-1)! m1^(m1+1) m2^(m2+1)/(m1! m2!), |mu| <= 5: " + got);
}

template <Field F>
void properties_on(OmegaTable<F>& t, const std::string& name, int max_chi, int exhaustive_chi, int stable_chi, Recorder& r,
                   const F& shift) {
  bool dil = true;
  std::string dil_fail;
  for (int g = 0; 2 * g - 1 <= max_chi; ++g)
    for (int n = 1; 2 * g - 2 + n <= max_chi; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      auto d = t.dilaton(g, n);
      if (!d.ok) {
        dil = false;
        dil_fail += " (" + std::to_string(g) + "," + std::to_string(n) + ")";
      }
    }
  r.expect(dil, name + ": dilaton exact for every (g,n) with 2g-2+n <= " + std::to_string(max_chi) + dil_fail);
  bool sym = true, res = true, pole = true;
  int count = 0;
  for (const auto& [gn, w] : t.entries()) {
    auto [g, n] = gn;
    ++count;
    MultiForm<F> m = w.expand();
    if (!symmetry_check(m)) sym = false;
    if (2 * g - 2 + n <= exhaustive_chi && !(t.omega_exhaustive(g, n) == m)) sym = false;
    if (m.has_residue_terms()) res = false;
    if (w.max_order() > 6 * g - 4 + 2 * n) pole = false;
  }
  r.expect(sym, name + ": all " + std::to_string(count) + " forms symmetric (orderings recomputed independently for 2g-2+n <= " +
                    std::to_string(exhaustive_chi) + ")");
  r.expect(res, name + ": no residue terms");
  r.expect(pole, name + ": pole orders <= 6g-4+2n");
  for (int g = 2; g <= 2; ++g) {
    F a = t.f_g(g), b = t.f_g(g, shift);
    r.expect(a == b, name + ": F_2 = " + to_string(a) + " unchanged when Phi is shifted by " + to_string(shift));
  }
  OmegaTable<F> wide(t.curve(), t.kernel(), EngineOptions{t.window() + 8});
  bool stable = true;
  for (const auto& [gn, w] : t.entries())
    if (2 * gn.first - 2 + gn.second <= stable_chi && !(wide.omega_sym(gn.first, gn.second) == w)) stable = false;
  r.expect(stable, name + ": forms with 2g-2+n <= " + std::to_string(stable_chi) + " unchanged with the window raised by 8");
}

inline void properties(SuiteContext& ctx, Recorder& r) {
  properties_on(ctx.airy(), "airy", 4, 3, 5, r, Rat(7, 3));
  properties_on(ctx.wp(), "weil-petersson", 4, 3, 5, r, Coeff(Rat(7, 3)));
  properties_on(ctx.lambert(), "lambert", 4, 3, 5, r, Rat(7, 3));
  properties_on(ctx.maps(), "maps-quad", 4, 3, 3, r, Coeff(Rat(7, 3)));
}

template <Field F>
void graphs_on(const SpectralCurve<F>& c, OmegaTable<F>& t, const std::string& name, Recorder& r) {
  GraphEvaluator<F> ev(c, t.kernel());
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}}) {
    std::vector<RecGraph> gs = enumerate_graphs(g, n);
    MultiForm<F> sum = ev.sum(gs);
    r.expect(sum == t.omega(g, n), name + " (" + std::to_string(g) + "," + std::to_string(n) + "): sum over " +
                                        std::to_string(gs.size()) + " graphs and their colorings equals the recursion");
  }
}

inline void graph_oracle(SuiteContext& ctx, Recorder& r) {
  std::string counts;
  bool ok = true;
  for (auto [g, n, want] : std::vector<std::tuple<int, int, int>>{{0, 3, 2}, {1, 1, 1}, {0, 4, 12}, {1, 2, -1}, {2, 1, -1}}) {
    std::vector<RecGraph> gs = enumerate_graphs(g, n);
    std::set<std::string> keys;
    int bad = 0;
    for (const auto& G : gs) {
      keys.insert(G.key());
      if (!graph_violations(G).empty()) ++bad;
    }
    long size = static_cast<long>(gs.size());
    bool this_ok = bad == 0 && keys.size() == gs.size() && mpz_class(size) == unrolled_term_count(g, n) && (want < 0 || size == want);
    ok = ok && this_ok;
    counts += " (" + std::to_string(g) + "," + std::to_string(n) + ")=" + std::to_string(size);
  }
  r.expect(ok, "graph counts, distinct, all ten conditions hold, equal to the unroll count:" + counts);
  graphs_on(airy_curve<Rat>(), ctx.airy(), "airy", r);
  graphs_on(lambert_curve<Rat>(), ctx.lambert(), "lambert", r);
}

template <Field F>
std::optional<F> family_ratio(OmegaTable<F>& gen, OmegaTable<F>& pr, int max_chi, std::string& detail) {
  std::optional<F> rho;
  bool ok = true;
  for (int g = 0; 2 * g - 1 <= max_chi; ++g)
    for (int n = 1; 2 * g - 2 + n <= max_chi; ++n) {
      int chi = 2 * g - 2 + n;
      if (chi <= 0) continue;
      auto q = detail::form_ratio(gen.omega_sym(g, n), pr.omega_sym(g, n));
      if (!q) {
        ok = false;
        detail += " (" + std::to_string(g) + "," + std::to_string(n) + "):not proportional";
        continue;
      }
      detail += " (" + std::to_string(g) + "," + std::to_string(n) + "):" + to_string(*q);
      if (!rho) rho = *q;  // first level is χ = 1
      F want(1L);
      for (int i = 0; i < chi; ++i) want *= *rho;
      if (!(want == *q)) ok = false;
    }
  if (!ok) return std::nullopt;
  return rho;
}

inline void mode_agreement(SuiteContext& ctx, Recorder& r, CheckReport& rep) {
  json art = json::object();
  Rat k = ctx.kappa();
  json cal = json::object();
  cal["airy"] = k.str();
  cal["weil-petersson"] = to_string(calibrate_kappa(weil_petersson_curve<Coeff>(Coeff::p())));
  cal["lambert"] = calibrate_kappa(lambert_curve<Rat>()).str();
  cal["maps-quad"] = to_string(calibrate_kappa(catalog_get("maps-quad")));
  bool same = true;
  for (const auto& [n, v] : cal.items()) same = same && v.get<std::string>() == k.str();
  r.expect(same, "kappa from the dilaton equation: " + cal.dump());
  art["kappa"] = cal;
  json ratios = json::object();
  auto family = [&](const std::string& name, auto& gen, auto& pr) {
    std::string d;
    auto rho = family_ratio(gen, pr, 3, d);
    if (r.expect(rho.has_value(), name + ": general = rho^(2g-2+n) * printed for all 2g-2+n <= 3 with rho = " +
                                      (rho ? to_string(*rho) : std::string("none")) + "; ratios" + d)) {
      ratios[name] = to_string(*rho);
    } else {
      ratios[name] = nullptr;
    }
  };
  family("weil-petersson", ctx.wp(), ctx.wp_printed());
  family("lambert", ctx.lambert(), ctx.lambert_printed());
  family("maps-quad", ctx.maps(), ctx.maps_printed());
  r.note("rho = -1 is the sign of the printed kernel relative to the general one; it is a rescaling kappa -> -kappa of the kernel");
  art["rho"] = ratios;
  rep.artifacts["mode_agreement"] = art;
}

inline void exclusions(SuiteContext&, Recorder& r) {
  r.note("not covered: intersection numbers and ELSV / Marino-Vafa identities, integrability, knot-polynomial asymptotics");
  // Out-of-scope inputs are refused rather than silently mis-handled.
  SpectralCurve<Rat> cubic;
  cubic.name = "cubic";
  cubic.x.rational = RatMap<Rat>(UPoly<Rat>(std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)}));
  cubic.y = RatMap<Rat>::identity();
  cubic.branchpoints.push_back({Rat(0), std::nullopt});
  r.expect(!validate_curve(cubic).empty(), "a non-simple branchpoint is rejected by curve validation");
  bool refused = false;
  try {
    curve_from_json(json::parse(R"({"x":{"num":["0","0","1"]},"y":{"num":["0","1"]},"bergman":"shifted","branchpoints":[{"a":"0"}]})"));
  } catch (const ValidationError&) {
    refused = true;
  }
  r.expect(refused, "a non-standard Bergman kernel is refused");
  refused = false;
  try {
    OmegaTable<Rat> t(airy_curve<Rat>(), general_kernel<Rat>());
    t.f_g(1);
  } catch (const DomainError&) {
    refused = true;
  }
  r.expect(refused, "F_0 and F_1 are refused");
  refused = false;
  try {
    enumerate_graphs(2, 2);
  } catch (const DomainError&) {
    refused = true;
  }
  r.expect(refused, "graph enumeration beyond 2g-2+n <= 3 is refused");
}

}  // namespace checks

struct SuiteItemDef {
  int id;
  std::string title;
  std::function<void(SuiteContext&, checks::Recorder&, CheckReport&)> run;
};

inline std::vector<SuiteItemDef> suite_items() {
  using namespace checks;
  return {
      {1, "weil-petersson W03 and W11", [](auto& c, auto& r, auto&) { weil_petersson_forms(c, r); }},
      {2, "hurwitz omega03, omega11 and involution", [](auto& c, auto& r, auto&) { hurwitz_forms(c, r); }},
      {3, "quadrangulation omega03 and omega11", [](auto& c, auto& r, auto&) { quadrangulation_forms(c, r); }},
      {4, "rooted quadrangulation counts", [](auto& c, auto& r, auto& rep) { map_counts(c, r, rep); }},
      {5, "hurwitz numbers", [](auto& c, auto& r, auto&) { hurwitz_numbers(c, r); }},
      {6, "property suite", [](auto& c, auto& r, auto&) { properties(c, r); }},
      {7, "graph oracle", [](auto& c, auto& r, auto&) { graph_oracle(c, r); }},
      {8, "general vs printed kernel", [](auto& c, auto& r, auto& rep) { mode_agreement(c, r, rep); }},
      {9, "exclusions", [](auto& c, auto& r, auto&) { exclusions(c, r); }},
  };
}

/// Runs the selected items (all when `ids` is empty).  Engine exceptions
/// inside an item fail that item and are recorded.
inline CheckReport run_suite(const std::set<int>& ids = {}, const std::function<void(const CheckItem&)>& on_item = {}) {
  SuiteContext ctx;
  CheckReport rep;
  for (const auto& def : suite_items()) {
    if (!ids.empty() && !ids.count(def.id)) continue;
    CheckItem item{def.id, def.title, true, {}, 0};
    checks::Recorder r{item};
    auto t0 = std::chrono::steady_clock::now();
    try {
      def.run(ctx, r, rep);
    } catch (const std::exception& e) {
      item.pass = false;
      item.details.push_back(std::string("FAIL exception: ") + e.what());
    }
    item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.items.push_back(item);
    if (on_item) on_item(rep.items.back());
  }
  return rep;
}

inline json to_json(const CheckReport& rep) {
  json items = json::array();
  for (const auto& i : rep.items)
    items.push_back(json{{"id", i.id}, {"title", i.title}, {"pass", i.pass}, {"details", i.details}});
  return json{{"pass", rep.all_pass()}, {"items", items}, {"artifacts", rep.artifacts}};
}

}  // namespace toprec
