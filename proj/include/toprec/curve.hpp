#pragma once

// Genus-zero spectral curves with simple branchpoints and the local data the
// recursion consumes.
//
// x is a rational map plus an optional logarithmic term c*ln z, so that dx is
// always rational (this covers x = -z + ln z).  y is either a global rational
// map or a germ per branchpoint.  The Bergman kernel is the standard one,
// dz1 dz2 / (z1 - z2)^2; nothing else is representable.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "toprec/errors.hpp"
#include "toprec/rational.hpp"
#include "toprec/series.hpp"
#include "toprec/upoly.hpp"

namespace toprec {

inline constexpr const char* kLocalVar = "ζ";

template <Field F>
struct XMap {
  RatMap<F> rational;
  F log_coeff = F(0L);

  RatMap<F> dx() const {
    RatMap<F> d = rational.derivative();
    if (log_coeff.is_zero()) return d;
    // + c / z
    return RatMap<F>(d.num() * UPoly<F>::z() + UPoly<F>(log_coeff) * d.den(), d.den() * UPoly<F>::z());
  }

  /// x(a+ζ) - x(a), known below hi.
  LaurentSeries<F> local(const F& a, int hi) const {
    if (!log_coeff.is_zero() && a.is_zero()) throw DomainError("x has a logarithmic singularity at z = 0");
    return dx().expand_at(a, hi - 1, kLocalVar).antiderivative();
  }
};

/// Germ of y at a branchpoint: returns y(a+ζ) known below the requested hi.
template <Field F>
using Germ = std::function<LaurentSeries<F>(int hi)>;

template <Field F>
struct Branchpoint {
  F a;
  std::optional<RatMap<F>> rho;  // global involution; nullopt means solve locally
};

template <Field F>
struct SpectralCurve {
  std::string name;
  XMap<F> x;
  std::variant<RatMap<F>, std::vector<Germ<F>>> y;
  std::vector<Branchpoint<F>> branchpoints;
  std::string param = "p";  // name of the formal parameter, if any
  std::map<std::string, F> params;  // named family parameters (gamma, t4, ...)

  LaurentSeries<F> y_local(std::size_t bp, int hi) const {
    if (const auto* r = std::get_if<RatMap<F>>(&y)) return r->expand_at(branchpoints[bp].a, hi, kLocalVar);
    const auto& germs = std::get<std::vector<Germ<F>>>(y);
    if (bp >= germs.size()) throw ValidationError("no y germ for branchpoint " + std::to_string(bp));
    return germs[bp](hi).truncated(hi);
  }
};

/// Germ from an explicit stored series (e.g. read from a file).
template <Field F>
Germ<F> fixed_germ(LaurentSeries<F> s) {
  return [s = std::move(s)](int hi) {
    if (hi > s.hi())
      throw PrecisionError("y germ is only known below " + std::to_string(s.hi()), hi);
    return s.truncated(hi);
  };
}

// ---------------------------------------------------------------------------
// Involutions.

/// σ(ζ) with x(a+σ(ζ)) = x(a+ζ), σ = -ζ + O(ζ^2), known below `window`.
template <Field F>
LaurentSeries<F> local_involution(const SpectralCurve<F>& c, std::size_t bp, int window) {
  if (bp >= c.branchpoints.size()) throw ValidationError("branchpoint index out of range");
  const auto& b = c.branchpoints[bp];
  if (b.rho) {
    LaurentSeries<F> s = b.rho->expand_at(b.a, window, kLocalVar);
    return s - LaurentSeries<F>::constant(b.a, kExact, kLocalVar);
  }
  // X = x(a+ζ) - x(a) = c2 ζ^2 (1 + u).  With φ = ζ sqrt(1+u), X = c2 φ^2 and
  // the other sheet is φ(σ) = -φ(ζ), i.e. σ = φ^{-1}(-φ(ζ)).
  LaurentSeries<F> X = c.x.local(b.a, window + 2);
  if (X.valuation() != 2) throw InternalError("involution solve: branchpoint is not simple");
  F c2 = X.coeff(2);
  LaurentSeries<F> unit = X.shifted(-2).scaled(c2.inv());
  LaurentSeries<F> phi = series_sqrt_unit(unit).shifted(1);
  LaurentSeries<F> s = phi.revert().compose(-phi);
  if (s.valuation() != 1 || !(s.coeff(1) == F(-1L))) throw InternalError("involution solve did not converge");
  return s.truncated(window);
}

// ---------------------------------------------------------------------------
// Local frames.

template <Field F>
struct LocalFrame {
  std::size_t bp = 0;
  int window = 0;
  F a;
  LaurentSeries<F> X;      // x(a+ζ) - x(a)
  LaurentSeries<F> Y;      // y(a+ζ)
  LaurentSeries<F> sigma;  // σ(ζ)
  LaurentSeries<F> dsigma; // σ'(ζ)
  LaurentSeries<F> W;      // ω01 = W(ζ) dζ
  LaurentSeries<F> Phi;    // dΦ = ω01, Φ(0) = 0
  LaurentSeries<F> D;      // ω01(q) - ω01(σq) = D(ζ) dζ
};

template <Field F>
LocalFrame<F> local_frame(const SpectralCurve<F>& c, std::size_t bp, int window) {
  if (bp >= c.branchpoints.size()) throw ValidationError("branchpoint index out of range");
  LocalFrame<F> f;
  f.bp = bp;
  f.window = window;
  f.a = c.branchpoints[bp].a;
  f.sigma = local_involution(c, bp, window);
  f.dsigma = f.sigma.derivative();
  f.X = c.x.local(f.a, window);
  f.Y = c.y_local(bp, window);
  LaurentSeries<F> dx = c.x.dx().expand_at(f.a, window, kLocalVar);
  f.W = LaurentSeries<F>::mul(f.Y, dx, window);
  f.Phi = f.W.antiderivative();
  f.D = f.W - LaurentSeries<F>::mul(f.W.compose(f.sigma, window), f.dsigma, window);
  if (f.D.is_known_zero() && f.D.hi() <= 3)
    throw PrecisionError("local frame: window too small to determine the kernel denominator", 4);
  if (f.D.valuation() != 2)
    throw ValidationError("local frame: kernel denominator does not have exact order 2 at branchpoint " +
                          std::to_string(bp));
  return f;
}

// ---------------------------------------------------------------------------
// Validation.

struct Diagnostic {
  std::size_t bp;
  std::string predicate;
  std::string detail;
};

template <Field F>
std::vector<Diagnostic> validate_curve(const SpectralCurve<F>& c, int window = 10) {
  std::vector<Diagnostic> out;
  auto report = [&](std::size_t i, std::string pred, std::string det = {}) {
    out.push_back({i, std::move(pred), std::move(det)});
  };
  if (c.branchpoints.empty()) report(0, "has branchpoints", "curve has no branchpoints");
  for (std::size_t i = 0; i < c.branchpoints.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (c.branchpoints[i].a == c.branchpoints[j].a) report(i, "distinct branchpoints", "duplicate location");

  RatMap<F> dx;
  try {
    dx = c.x.dx();
  } catch (const Error& e) {
    report(0, "x well-formed", e.what());
    return out;
  }
  for (std::size_t i = 0; i < c.branchpoints.size(); ++i) {
    const auto& b = c.branchpoints[i];
    try {
      if (!c.x.log_coeff.is_zero() && b.a.is_zero()) {
        report(i, "x regular at a", "logarithmic singularity");
        continue;
      }
      LaurentSeries<F> d = dx.expand_at(b.a, 3, kLocalVar);
      if (d.valuation() < 0) {
        report(i, "x regular at a", "x has a pole at the branchpoint");
        continue;
      }
      if (!d.coeff(0).is_zero()) {
        report(i, "x'(a) = 0", "dx does not vanish at a");
        continue;
      }
      if (d.coeff(1).is_zero()) {
        report(i, "x''(a) != 0", "branchpoint is not simple");
        continue;
      }
      if (b.rho) {
        const RatMap<F>& rho = *b.rho;
        if (rho == RatMap<F>::identity()) report(i, "rho != id");
        if (!(rho.eval(b.a) == b.a)) report(i, "rho(a) = a");
        if (!(rho.compose(rho) == RatMap<F>::identity())) report(i, "rho o rho = id");
        if (c.x.log_coeff.is_zero()) {
          if (!(c.x.rational.compose(rho) == c.x.rational)) report(i, "x o rho = x");
        }
      }
      LaurentSeries<F> s = local_involution(c, i, window);
      if (s.valuation() != 1 || !(s.coeff(1) == F(-1L))) report(i, "sigma = -ζ + O(ζ^2)");
      LaurentSeries<F> X = c.x.local(b.a, window);
      LaurentSeries<F> diff = X.compose(s, window) - X;
      if (!diff.is_known_zero()) report(i, "x(a+sigma) = x(a+ζ)", "mismatch at order " + std::to_string(diff.valuation()));
      LaurentSeries<F> ss = s.compose(s, window);
      if (!(ss - LaurentSeries<F>::variable(kLocalVar)).is_known_zero()) report(i, "sigma o sigma = id");
      LaurentSeries<F> y = c.y_local(i, window);
      if (y.valuation() < 0) {
        report(i, "y regular at a", "y has a pole at the branchpoint");
        continue;
      }
      LaurentSeries<F> odd = y.compose(s, window) - y;
      if (odd.valuation() != 1) report(i, "odd part of y nonzero at first order", "t_{a,1} = 0");
    } catch (const Error& e) {
      report(i, "local data computable", e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bergman kernel expansions.

/// B(z1, b+ζ) = Σ_k (k+1) ζ^k dz1 dζ / (z1-b)^(k+2): entry k+2 holds the
/// ζ-series coefficient of dz1/(z1-b)^(k+2).
template <Field F>
std::map<int, LaurentSeries<F>> bergman_expand(int window) {
  std::map<int, LaurentSeries<F>> out;
  for (int k = 0; k < window; ++k)
    out.emplace(k + 2, LaurentSeries<F>::monomial(F(static_cast<long>(k + 1)), k, window, kLocalVar));
  return out;
}

/// B(q, σq) pulled back to ζ: σ'(ζ) / (ζ - σ(ζ))^2, times dζ^2.
template <Field F>
LaurentSeries<F> bergman_on_involution(const LaurentSeries<F>& sigma, int window) {
  LaurentSeries<F> diff = LaurentSeries<F>::variable(kLocalVar) - sigma;
  int v = diff.valuation();
  LaurentSeries<F> inv = diff.inverse(window + 2 * v).pow(2, window);
  return LaurentSeries<F>::mul(sigma.derivative(), inv, window);
}

/// ∫_{σq}^{q} B(z1, ·) = Σ_{k>=1} (ζ^(k-1) - σ^(k-1)) dz1/(z1-a)^k, for k < kmax.
template <Field F>
std::map<int, LaurentSeries<F>> bergman_integral(const LaurentSeries<F>& sigma, int kmax, int window) {
  std::map<int, LaurentSeries<F>> out;
  LaurentSeries<F> zp = LaurentSeries<F>::constant(F(1L), kExact, kLocalVar);
  LaurentSeries<F> sp = zp;
  LaurentSeries<F> t = LaurentSeries<F>::variable(kLocalVar);
  for (int k = 1; k < kmax; ++k) {
    out.emplace(k, (zp - sp).truncated(window));
    zp = LaurentSeries<F>::mul(zp, t, window);
    sp = LaurentSeries<F>::mul(sp, sigma, window);
  }
  return out;
}

}  // namespace toprec
