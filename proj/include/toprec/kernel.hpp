#pragma once

// Recursion kernels.  A kernel supplies, for a branchpoint frame and a pole
// order k >= 1, the ζ-series K_k with
//
//   K_a(z1, a+ζ) = Σ_k K_k(ζ) dz1/(z1 - a)^k / dζ.
//
// The general kernel is  -κ/2 ∫_{σq}^{q} B(z1,·) / (ω01(q) - ω01(σq)).
// The family kernels are transcribed from the closed forms stated for the
// Weil-Petersson, Hurwitz and map-counting recursions, independently of the
// curve machinery except for the branchpoint location.

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "toprec/curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/rational.hpp"
#include "toprec/series.hpp"

namespace toprec {

template <Field F>
struct Kernel {
  std::string name;
  /// Prepares per-frame state; returns k -> K_k.
  std::function<std::function<LaurentSeries<F>(int k)>(const SpectralCurve<F>&, const LocalFrame<F>&)> bind;
};

namespace detail {

/// Memoizing k -> (ζ^(k-1) - s^(k-1)) * factor, where factor carries the
/// denominator of the kernel.
template <Field F>
std::function<LaurentSeries<F>(int)> difference_kernel(LaurentSeries<F> s, LaurentSeries<F> factor, int window) {
  struct State {
    LaurentSeries<F> s, factor;
    int window;
    std::vector<LaurentSeries<F>> spow;  // s^j
    std::map<int, LaurentSeries<F>> memo;
  };
  auto st = std::make_shared<State>();
  st->s = std::move(s);
  st->factor = std::move(factor);
  st->window = window;
  st->spow.push_back(LaurentSeries<F>::constant(F(1L), kExact, kLocalVar));
  return [st](int k) -> LaurentSeries<F> {
    if (auto it = st->memo.find(k); it != st->memo.end()) return it->second;
    if (k < 1) throw DomainError("kernel: pole order must be positive");
    // The bracket never has poles beyond window - 4, so K_k is needed below
    // exponent window at most.
    int cap = st->window;
    while (static_cast<int>(st->spow.size()) < k)
      st->spow.push_back(LaurentSeries<F>::mul(st->spow.back(), st->s, cap));
    LaurentSeries<F> num = LaurentSeries<F>::monomial(F(1L), k - 1, kExact, kLocalVar) - st->spow[static_cast<std::size_t>(k - 1)];
    LaurentSeries<F> r = LaurentSeries<F>::mul(num, st->factor, cap);
    return st->memo.emplace(k, std::move(r)).first->second;
  };
}

}  // namespace detail

/// -κ/2 (ζ^(k-1) - σ^(k-1)) / D(ζ).
template <Field F>
Kernel<F> general_kernel(const F& kappa = F(1L)) {
  Kernel<F> k;
  k.name = "general";
  k.bind = [kappa](const SpectralCurve<F>&, const LocalFrame<F>& f) {
    LaurentSeries<F> factor = f.D.inverse(f.window).scaled(-kappa / F(2L));
    return detail::difference_kernel(f.sigma, factor, f.window);
  };
  return k;
}

/// Weil-Petersson: 1/(z1^2 - z^2) * π/sin(2πz), as a form kernel.  The
/// function-valued recursion pairs W(z,-z), while forms pair ω(q,σq) =
/// -W(ζ,-ζ) dζ^2, hence the overall sign.
template <Field F>
Kernel<F> printed_weil_petersson_kernel() {
  Kernel<F> k;
  k.name = "printed:weil-petersson";
  k.bind = [](const SpectralCurve<F>& c, const LocalFrame<F>& f) -> std::function<LaurentSeries<F>(int)> {
    if (c.name != "weil-petersson") throw ValidationError("printed weil-petersson kernel on curve '" + c.name + "'");
    if (!c.params.count("p")) throw ValidationError("weil-petersson curve lacks parameter p");
    const F p = c.params.at("p");
    // sin(2πζ)/π = Σ_j (-1)^j 2^(2j+1) p^j ζ^(2j+1) / (2j+1)!
    int n = f.window + 4;
    std::vector<F> c_sin(static_cast<std::size_t>(n), F(0L));
    F pj(1L);
    for (int j = 0; 2 * j + 1 < n; ++j) {
      Rat r = pow(Rat(2), 2 * j + 1) / Rat(mpq_class(factorial(2 * j + 1)));
      if (j % 2) r = -r;
      c_sin[static_cast<std::size_t>(2 * j + 1)] = F(r) * pj;
      pj = pj * p;
    }
    LaurentSeries<F> s(0, std::move(c_sin), n, kLocalVar);
    LaurentSeries<F> inv = s.inverse(f.window).scaled(F(-1L));
    auto memo = std::make_shared<std::map<int, LaurentSeries<F>>>();
    return [inv, memo](int kk) -> LaurentSeries<F> {
      if (auto it = memo->find(kk); it != memo->end()) return it->second;
      LaurentSeries<F> r = (kk % 2) ? LaurentSeries<F>(0, {}, kExact, kLocalVar) : inv.shifted(kk - 2);
      return memo->emplace(kk, std::move(r)).first->second;
    };
  };
  return k;
}

/// Hurwitz: dz1/2 (1/(z1-z) - 1/(z1-s(z))) / (z - s(z)) * z / ((1-z) dz), at z = 1+ζ.
template <Field F>
Kernel<F> printed_hurwitz_kernel() {
  Kernel<F> k;
  k.name = "printed:lambert";
  k.bind = [](const SpectralCurve<F>& c, const LocalFrame<F>& f) {
    if (c.name != "lambert") throw ValidationError("printed hurwitz kernel on curve '" + c.name + "'");
    const int w = f.window;
    LaurentSeries<F> zeta = LaurentSeries<F>::variable(kLocalVar);
    LaurentSeries<F> z = zeta + LaurentSeries<F>::constant(F(1L), kExact, kLocalVar);
    LaurentSeries<F> z_minus_s = (zeta - f.sigma);
    LaurentSeries<F> one_minus_z = -zeta;
    LaurentSeries<F> den = LaurentSeries<F>::mul(z_minus_s, one_minus_z, w);
    LaurentSeries<F> factor = LaurentSeries<F>::mul(z, den.inverse(w), w).scaled(F(1L) / F(2L));
    return detail::difference_kernel(f.sigma, factor, w);
  };
  return k;
}

/// Maps: dz1/(2γ) (1/(z1-z) - 1/(z1-1/z)) / ((y(z) - y(1/z)) (1 - z^-2) dz),
/// with y(z) = v1/z + v3/z^3.
template <Field F>
Kernel<F> printed_maps_kernel() {
  Kernel<F> k;
  k.name = "printed:maps-quad";
  k.bind = [](const SpectralCurve<F>& c, const LocalFrame<F>& f) {
    if (c.name != "maps-quad") throw ValidationError("printed maps kernel on curve '" + c.name + "'");
    for (const char* key : {"gamma", "v1", "v3"})
      if (!c.params.count(key)) throw ValidationError(std::string("maps curve lacks parameter ") + key);
    const F gamma = c.params.at("gamma"), v1 = c.params.at("v1"), v3 = c.params.at("v3");
    const int w = f.window + 4;
    using S = LaurentSeries<F>;
    S z = S::variable(kLocalVar) + S::constant(f.a, kExact, kLocalVar);
    S zi = z.inverse(w);  // 1/z
    S sigma = zi - S::constant(f.a, kExact, kLocalVar);
    S zi3 = zi.pow(3, w);
    S z3 = z.pow(3, w);
    S ydiff = (zi - z).scaled(v1) + (zi3 - z3).scaled(v3);
    S one_minus = S::constant(F(1L), kExact, kLocalVar) - zi.pow(2, w);
    S den = S::mul(ydiff, one_minus, w);
    S factor = den.inverse(w).scaled((F(2L) * gamma).inv());
    return detail::difference_kernel(sigma, factor, f.window);
  };
  return k;
}

/// The family kernel matching a catalog curve name.
template <Field F>
Kernel<F> printed_kernel_for(const std::string& curve_name) {
  if (curve_name == "weil-petersson") return printed_weil_petersson_kernel<F>();
  if (curve_name == "lambert") return printed_hurwitz_kernel<F>();
  if (curve_name == "maps-quad") return printed_maps_kernel<F>();
  throw ValidationError("no printed kernel for curve '" + curve_name + "'");
}

}  // namespace toprec
