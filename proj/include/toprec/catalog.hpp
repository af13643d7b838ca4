#pragma once

// Named spectral curves.

#include <string>
#include <utility>
#include <vector>

#include "toprec/curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/rational.hpp"
#include "toprec/series.hpp"
#include "toprec/upoly.hpp"

namespace toprec {

template <Field F>
RatMap<F> ratmap(std::vector<F> num, std::vector<F> den = {F(1L)}) {
  return RatMap<F>(UPoly<F>(std::move(num)), UPoly<F>(std::move(den)));
}

/// x = z^2, y = z.
template <Field F>
SpectralCurve<F> airy_curve() {
  SpectralCurve<F> c;
  c.name = "airy";
  c.x.rational = ratmap<F>({F(0L), F(0L), F(1L)});
  c.y = ratmap<F>({F(0L), F(1L)});
  c.branchpoints.push_back({F(0L), ratmap<F>({F(0L), F(-1L)})});
  return c;
}

/// sin(2πζ)/(4π) with p = π^2:  Σ_j (-1)^j 2^(2j-1) p^j ζ^(2j+1) / (2j+1)!.
template <Field F>
LaurentSeries<F> sine_germ(const F& p, int hi) {
  std::vector<F> c(static_cast<std::size_t>(std::max(hi, 0)), F(0L));
  F pj(1L);
  for (int j = 0; 2 * j + 1 < hi; ++j) {
    Rat r = (j == 0 ? Rat(1, 2) : pow(Rat(2), 2 * j - 1)) / Rat(mpq_class(factorial(2 * j + 1)));
    if (j % 2) r = -r;
    c[static_cast<std::size_t>(2 * j + 1)] = F(r) * pj;
    pj = pj * p;
  }
  return LaurentSeries<F>(0, std::move(c), hi, kLocalVar);
}

/// x = z^2, y = sin(2πz)/(4π) as a germ at 0; the parameter p stands for π^2.
template <Field F>
SpectralCurve<F> weil_petersson_curve(const F& p) {
  SpectralCurve<F> c;
  c.name = "weil-petersson";
  c.x.rational = ratmap<F>({F(0L), F(0L), F(1L)});
  c.y = std::vector<Germ<F>>{[p](int hi) { return sine_germ(p, hi); }};
  c.branchpoints.push_back({F(0L), ratmap<F>({F(0L), F(-1L)})});
  c.params["p"] = p;
  return c;
}

/// x = -z + ln z, y = z; the involution at z = 1 is solved locally.
template <Field F>
SpectralCurve<F> lambert_curve() {
  SpectralCurve<F> c;
  c.name = "lambert";
  c.x.rational = ratmap<F>({F(0L), F(-1L)});
  c.x.log_coeff = F(1L);
  c.y = ratmap<F>({F(0L), F(1L)});
  c.branchpoints.push_back({F(1L), std::nullopt});
  return c;
}

template <Field F>
struct MapCurveParams {
  F t;                                   // vertex weight
  std::vector<std::pair<int, F>> faces;  // (j, t_j), j >= 3
  F alpha, gamma;
  std::vector<F> v;  // v[k] for k = 0..deg
};

/// Face weights and γ (the primary parameter) determine v_k through
///   Σ_k v_k (z^k + z^-k) = x - Σ_{k>=2} t_{k+1} x^k,  x = α + γ(z + 1/z),
/// and then t = γ v_1.  v_0 must vanish.
template <Field F>
MapCurveParams<F> map_curve_from_weights(const F& gamma, std::vector<std::pair<int, F>> faces, const F& alpha = F(0L)) {
  if (gamma.is_zero()) throw ValidationError("map curve: gamma must be nonzero");
  using S = LaurentSeries<F>;
  S zz = S::monomial(F(1L), 1, kExact, "z") + S::monomial(F(1L), -1, kExact, "z");
  S x = S::constant(alpha, kExact, "z") + zz.scaled(gamma);
  S rhs = x;
  for (const auto& [j, tj] : faces) {
    if (j < 3) throw ValidationError("map curve: face weights need j >= 3");
    rhs -= x.pow(j - 1).scaled(tj);
  }
  MapCurveParams<F> m;
  m.faces = std::move(faces);
  m.alpha = alpha;
  m.gamma = gamma;
  int deg = rhs.is_known_zero() ? 0 : rhs.stored_end() - 1;
  for (int k = 0; k <= deg; ++k) {
    if (!(rhs.coeff(k) == rhs.coeff(-k))) throw InternalError("map curve: expansion is not symmetric in z");
    m.v.push_back(rhs.coeff(k));
  }
  if (!m.v.empty() && !m.v[0].is_zero())
    throw ValidationError("map curve: inconsistent weights, v0 = " + to_string(m.v[0]) + " != 0");
  m.t = m.v.size() > 1 ? gamma * m.v[1] : F(0L);
  return m;
}

/// x = α + γ(z + 1/z), y = Σ_k v_k z^-k, branchpoints ±1 with ρ(z) = 1/z.
template <Field F>
SpectralCurve<F> map_curve(const MapCurveParams<F>& m, std::string name = "maps") {
  SpectralCurve<F> c;
  c.name = std::move(name);
  c.x.rational = ratmap<F>({m.gamma, m.alpha, m.gamma}, {F(0L), F(1L)});
  int deg = static_cast<int>(m.v.size()) - 1;
  std::vector<F> num(static_cast<std::size_t>(std::max(deg, 1)), F(0L));
  for (int k = 1; k <= deg; ++k) num[static_cast<std::size_t>(deg - k)] = m.v[static_cast<std::size_t>(k)];
  std::vector<F> den(static_cast<std::size_t>(deg + 1), F(0L));
  den.back() = F(1L);
  c.y = ratmap<F>(num, den);
  RatMap<F> inv = ratmap<F>({F(1L)}, {F(0L), F(1L)});
  c.branchpoints.push_back({F(1L), inv});
  c.branchpoints.push_back({F(-1L), inv});
  c.params["gamma"] = m.gamma;
  c.params["t"] = m.t;
  for (std::size_t k = 1; k < m.v.size(); ++k) c.params["v" + std::to_string(k)] = m.v[k];
  for (const auto& [j, tj] : m.faces) c.params["t" + std::to_string(j)] = tj;
  return c;
}

/// Quadrangulations: only t4 nonzero, α = 0.
template <Field F>
SpectralCurve<F> maps_quad_curve(const F& gamma, const F& t4 = F(1L)) {
  SpectralCurve<F> c = map_curve(map_curve_from_weights<F>(gamma, {{4, t4}}), "maps-quad");
  c.param = "gamma";
  if (!c.params.count("v3")) c.params["v3"] = F(0L);
  c.params["t4"] = t4;
  return c;
}

/// γ^2 as a series in t, from t = γ^2 - 3 t4 γ^4 (reversion), known below hi.
inline LaurentSeries<Rat> gamma_squared_series(const Rat& t4, int hi) {
  LaurentSeries<Rat> f(1, {Rat(1), -Rat(3) * t4}, kExact, "t");
  return f.revert(hi);
}

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string parameters;
};

inline std::vector<CatalogEntry> catalog_entries() {
  return {
      {"airy", "x = z^2, y = z; branchpoint 0, involution z -> -z", "none"},
      {"weil-petersson", "x = z^2, y = sin(2 pi z)/(4 pi) as a germ at 0; volumes of moduli of bordered surfaces",
       "p = pi^2 (symbolic)"},
      {"lambert", "x = -z + ln z, y = z; branchpoint 1, involution solved locally; simple Hurwitz numbers", "none"},
      {"maps-quad", "x = gamma (z + 1/z), y = v1/z + v3/z^3; branchpoints +-1, involution z -> 1/z; quadrangulations",
       "gamma (symbolic p by default), t4 (rational, default 1); t = gamma^2 - 3 t4 gamma^4"},
  };
}

/// Symbolic catalog: p is π^2 for weil-petersson and γ for maps-quad.
inline SpectralCurve<Coeff> catalog_get(const std::string& name, const Rat& t4 = Rat(1)) {
  if (name == "airy") return airy_curve<Coeff>();
  if (name == "weil-petersson") return weil_petersson_curve<Coeff>(Coeff::p());
  if (name == "lambert") return lambert_curve<Coeff>();
  if (name == "maps-quad") return maps_quad_curve<Coeff>(Coeff::p(), Coeff(t4));
  throw ValidationError("unknown curve '" + name + "'");
}

}  // namespace toprec
