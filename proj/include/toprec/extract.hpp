#pragma once

// Enumerative data read off computed invariants.
//
// Hurwitz numbers (lambert curve, x = -z + ln z):  w = e^x = z e^-z, so
// z(w) = Σ k^(k-1)/k! w^k and dz/dx = z/(1-z).  W_{g,n} = ω_{g,n}/∏dx_i is
// expanded in the w_i, and
//   H_{g,n}(μ) = (2g-2+n+|μ|)! [∏ w_i^μ_i] W_{g,n}.
// Read literally, the Σ_σ in the generating function would add a factor
// #{σ : μ∘σ = μ} to that coefficient; the closed form for H_{0,2} holds
// without it, so the stabilizer size is reported alongside but not divided out.
//
// Map counts (maps-quad curve, x = α + γ(z + 1/z)):  with ξ = 1/x and s = 1/z,
// ξ = s/(γ + αs + γs^2) is reverted to s(ξ); W_{g,1} = ω_{g,1}/dx becomes a
// ξ-series whose coefficients lie in Q(γ); γ^2 is then replaced by its t-series.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toprec/catalog.hpp"
#include "toprec/curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/multiform.hpp"
#include "toprec/rational.hpp"
#include "toprec/series.hpp"

namespace toprec {

inline constexpr const char* kInfinityVar = "ξ";

// ---------------------------------------------------------------------------
// Expansion at infinity.

/// z as a Laurent series in ξ = 1/x on the branch z -> ∞, from
/// x = α + γ(z + 1/z); known below hi.
template <Field F>
LaurentSeries<F> expand_at_infinity(const F& gamma, const F& alpha, int hi) {
  if (gamma.is_zero()) throw DomainError("expand_at_infinity: gamma must be nonzero");
  using S = LaurentSeries<F>;
  // ξ(s) = s / (γ + α s + γ s^2)
  S den(0, {gamma, alpha, gamma}, kExact, kInfinityVar);
  S xi_of_s = S::mul(S::variable(kInfinityVar), den.inverse(hi + 2), hi + 2);
  S s = xi_of_s.revert(hi + 2);
  return s.inverse(hi);
}

/// s = 1/z as a series in ξ, known below hi.
template <Field F>
LaurentSeries<F> inverse_coordinate_at_infinity(const F& gamma, const F& alpha, int hi) {
  if (gamma.is_zero()) throw DomainError("expand_at_infinity: gamma must be nonzero");
  using S = LaurentSeries<F>;
  S den(0, {gamma, alpha, gamma}, kExact, kInfinityVar);
  return S::mul(S::variable(kInfinityVar), den.inverse(hi), hi).revert(hi);
}

// ---------------------------------------------------------------------------
// Series in t from elements of Q(γ).

namespace detail {

/// p(u) for a series u.
inline LaurentSeries<Rat> poly_at_series(const std::vector<Rat>& c, const LaurentSeries<Rat>& u, int hi) {
  LaurentSeries<Rat> acc(0, {}, kExact, u.var());
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = LaurentSeries<Rat>::mul(acc, u, hi);
    acc += LaurentSeries<Rat>::constant(c[i], kExact, u.var());
  }
  return acc.truncated(hi);
}

/// Splits q(γ) = γ^shift r(γ^2); throws unless q is even or odd.
inline std::pair<int, std::vector<Rat>> split_parity(const Poly& q) {
  int par = -1;
  for (int e = 0; e <= q.degree(); ++e) {
    if (q.coeff(e).is_zero()) continue;
    if (par < 0) par = e % 2;
    else if (e % 2 != par) throw DomainError("coefficient is not a function of gamma^2 up to a power of gamma");
  }
  if (par < 0) par = 0;
  std::vector<Rat> r;
  for (int e = par; e <= q.degree(); e += 2) r.push_back(q.coeff(e));
  return {par, r};
}

inline int low_index(const std::vector<Rat>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) return static_cast<int>(i);
  return static_cast<int>(c.size());
}

}  // namespace detail

/// c(γ) with γ^2 replaced by the series u(t) = γ^2(t); known below hi.
/// c must be even in γ.
inline LaurentSeries<Rat> gamma_coeff_to_t_series(const Coeff& c, const Rat& t4, int hi) {
  if (c.is_zero()) return LaurentSeries<Rat>(0, {}, kExact, "t");
  auto [pn, rn] = detail::split_parity(c.num());
  auto [pd, rd] = detail::split_parity(c.den());
  if (pn != pd) throw DomainError("coefficient is odd in gamma; no t-series exists");
  // u has valuation 1, so r(u) has valuation low_index(r); the quotient loses that much.
  int vd = detail::low_index(rd);
  int work = hi + vd + 1;
  LaurentSeries<Rat> u = gamma_squared_series(t4, work);
  LaurentSeries<Rat> n = detail::poly_at_series(rn, u, work);
  LaurentSeries<Rat> d = detail::poly_at_series(rd, u, work);
  return LaurentSeries<Rat>::mul(n, d.inverse(hi), hi).truncated(hi);
}

// ---------------------------------------------------------------------------
// Map counts.

struct MapCountTable {
  int g = 0;
  int marked_size = 4;
  Rat t4{1};
  std::map<int, Rat> by_faces;  // total faces (marked included) -> rooted count
};

namespace detail {

/// W_{g,1} as a ξ-series, known below hi, from ω_{g,1} on a map curve.
inline LaurentSeries<Coeff> map_w1_series(const SpectralCurve<Coeff>& c, const SymForm<Coeff>& w, int hi) {
  using S = LaurentSeries<Coeff>;
  const Coeff gamma = c.params.at("gamma");
  const Coeff alpha = c.params.count("alpha") ? c.params.at("alpha") : Coeff(0L);
  S s = inverse_coordinate_at_infinity(gamma, alpha, hi);
  // dz/dx = 1/(γ (1 - s^2))
  S one = S::constant(Coeff(1L), kExact, kInfinityVar);
  S dzdx = (one - S::mul(s, s, hi)).inverse(hi).scaled(gamma.inv());
  S acc(0, {}, kExact, kInfinityVar);
  for (const auto& [slots, coef] : w.terms()) {
    const Slot& sl = slots.at(0);
    const Coeff a = c.branchpoints.at(static_cast<std::size_t>(sl.bp)).a;
    // (z - a)^-k = s^k (1 - a s)^-k
    S f = S::mul(s.pow(sl.order, hi), (one - s.scaled(a)).inverse(hi).pow(sl.order, hi), hi);
    acc += S::mul(f, dzdx, hi).scaled(coef);
  }
  return acc.truncated(hi);
}

inline MapCountTable read_counts(const LaurentSeries<Coeff>& W, int g, int l, const Rat& t4, int max_faces) {
  MapCountTable out;
  out.g = g;
  out.marked_size = l;
  out.t4 = t4;
  // Faces F = n4 + 1, vertices V = l/2 + 1 - 2g + n4 (Euler, quadrangles).
  int base_v = l / 2 + 1 - 2 * g;
  int vmax = base_v + max_faces - 1;
  LaurentSeries<Rat> ts = gamma_coeff_to_t_series(W.coeff(1 + l), t4, std::max(vmax + 1, 1));
  for (int faces = 1; faces <= max_faces; ++faces) {
    int n4 = faces - 1;
    int v = base_v + n4;
    Rat val = v < 0 ? Rat(0) : ts.coeff(v);
    if (!t4.is_zero()) val = val / pow(t4, n4);
    out.by_faces[faces] = val;
  }
  return out;
}

}  // namespace detail

/// Rooted quadrangulation counts of genus g >= 1 with a marked face of size l,
/// for total face counts 1..max_faces, read from ω_{g,1}.
inline MapCountTable map_count_extract(const SpectralCurve<Coeff>& c, const SymForm<Coeff>& w_g1, int g,
                                       int max_faces, int l = 4) {
  if (l % 2) throw ValidationError("marked face size must be even for quadrangulations");
  if (w_g1.n() != 1) throw ValidationError("map_count_extract needs a one-point form");
  if (!c.params.count("gamma") || !c.params.count("t4")) throw ValidationError("map_count_extract needs a maps-quad curve");
  LaurentSeries<Coeff> W = detail::map_w1_series(c, w_g1, l + 3);
  return detail::read_counts(W, g, l, to_rat(c.params.at("t4")), max_faces);
}

/// Genus-zero counts from W_{0,1} = y(z(ξ)) = Σ v_k s^k.
inline MapCountTable map_count_extract_disk(const SpectralCurve<Coeff>& c, int max_faces, int l = 4) {
  if (l % 2) throw ValidationError("marked face size must be even for quadrangulations");
  if (!c.params.count("gamma") || !c.params.count("t4")) throw ValidationError("map_count_extract needs a maps-quad curve");
  using S = LaurentSeries<Coeff>;
  int hi = l + 3;
  const Coeff gamma = c.params.at("gamma");
  const Coeff alpha = c.params.count("alpha") ? c.params.at("alpha") : Coeff(0L);
  S s = inverse_coordinate_at_infinity(gamma, alpha, hi);
  S W(0, {}, kExact, kInfinityVar);
  for (int k = 1;; ++k) {
    auto it = c.params.find("v" + std::to_string(k));
    if (it == c.params.end()) break;
    W += s.pow(k, hi).scaled(it->second);
  }
  return detail::read_counts(W.truncated(hi), 0, l, to_rat(c.params.at("t4")), max_faces);
}

// ---------------------------------------------------------------------------
// Hurwitz numbers.

/// z(w) = Σ_{k>=1} k^(k-1)/k! w^k, the inverse of w = z e^-z; known below hi.
inline LaurentSeries<Rat> lambert_z_of_w(int hi) {
  std::vector<Rat> c;
  for (int k = 1; k < hi; ++k)
    c.push_back(Rat(mpq_class(mpz_class(pow(Rat(k), k - 1).num()), factorial(k))));
  return LaurentSeries<Rat>(1, std::move(c), hi, "w");
}

/// dz/(z-1)^k divided by dx, as a series in w, known below hi.
inline LaurentSeries<Rat> hurwitz_basis_series(int k, int hi) {
  using S = LaurentSeries<Rat>;
  S z = lambert_z_of_w(hi);
  S one = S::constant(Rat(1), kExact, "w");
  // (z-1)^-k * z/(1-z) = -z (z-1)^-(k+1)
  return -S::mul(z, (z - one).inverse(hi).pow(k + 1, hi), hi);
}

struct HurwitzEntry {
  std::vector<int> mu;  // non-increasing
  Rat coefficient;      // [∏ w^μ] W_{g,n}
  Rat symmetry;         // #{σ : μ∘σ = μ}, not divided out
  Rat number;           // H_{g,n}(μ)
};

struct HurwitzTable {
  int g = 0, n = 0;
  std::vector<HurwitzEntry> entries;
};

namespace detail {

inline Rat stabilizer_size(const std::vector<int>& mu) {
  std::map<int, long> mult;
  for (int m : mu) ++mult[m];
  mpz_class r = 1;
  for (const auto& [v, k] : mult) r *= factorial(k);
  return Rat(r);
}

inline void partitions(int total, int parts, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int m = std::min(total, maxpart); m >= 1; --m) {
    if (m * parts < total) break;
    cur.push_back(m);
    partitions(total - m, parts - 1, m, cur, out);
    cur.pop_back();
  }
}

inline HurwitzEntry hurwitz_entry(int g, std::vector<int> mu, Rat coefficient) {
  int n = static_cast<int>(mu.size()), d = 0;
  for (int m : mu) d += m;
  HurwitzEntry e;
  e.mu = std::move(mu);
  e.coefficient = coefficient;
  e.symmetry = stabilizer_size(e.mu);
  e.number = coefficient * Rat(factorial(2 * g - 2 + n + d));
  return e;
}

}  // namespace detail

/// H_{g,n}(μ) for all partitions with |μ| <= max_degree, from ω_{g,n} on the
/// lambert curve (2g-2+n > 0).
inline HurwitzTable hurwitz_extract(const SymForm<Rat>& w, int g, int max_degree) {
  const int n = w.n();
  HurwitzTable t;
  t.g = g;
  t.n = n;
  const int hi = max_degree + 1;
  std::map<int, LaurentSeries<Rat>> basis;
  for (const auto& [slots, c] : w.terms())
    for (const auto& s : slots)
      if (!basis.count(s.order)) basis.emplace(s.order, hurwitz_basis_series(s.order, hi));
  for (int d = n; d <= max_degree; ++d) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    detail::partitions(d, n, d, cur, parts);
    for (auto& mu : parts) {
      Rat coef(0);
      for (const auto& [slots, c] : w.terms()) {
        // The form is symmetric: sum over distinct orderings of the multiset.
        Slots perm = slots;
        do {
          Rat prod = c;
          for (int i = 0; i < n && !prod.is_zero(); ++i)
            prod *= basis.at(perm[static_cast<std::size_t>(i)].order).coeff(mu[static_cast<std::size_t>(i)]);
          coef += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      t.entries.push_back(detail::hurwitz_entry(g, mu, coef));
    }
  }
  return t;
}

/// H_{0,1}(k) from ω_{0,1} = z dx:  W_{0,1} = z(w).
inline HurwitzTable hurwitz_extract_disk(int max_degree) {
  HurwitzTable t;
  t.g = 0;
  t.n = 1;
  LaurentSeries<Rat> z = lambert_z_of_w(max_degree + 1);
  for (int k = 1; k <= max_degree; ++k) t.entries.push_back(detail::hurwitz_entry(0, {k}, z.coeff(k)));
  return t;
}

/// H_{0,2}(μ) from ω_{0,2} = B:  W_{0,2} = B/(dx1 dx2) - w1 w2/(w1 - w2)^2.
/// With z1 - z2 = (w1 - w2) U(w1, w2),
///   W_{0,2} = [z1 z2 / ((1-z1)(1-z2) U^2) - w1 w2] / (w1 - w2)^2,
/// and the bracket is divided exactly, one homogeneous degree at a time.
inline HurwitzTable hurwitz_extract_cylinder(int max_degree) {
  // Bivariate truncated series as homogeneous components: comp[d][i] = [w1^i w2^(d-i)].
  using Bi = std::vector<std::vector<Rat>>;
  const int T = max_degree + 3;  // total degrees 0..T-1 of the numerator
  auto zero = [&] {
    Bi b(static_cast<std::size_t>(T));
    for (int d = 0; d < T; ++d) b[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(d + 1), Rat(0));
    return b;
  };
  auto mul = [&](const Bi& a, const Bi& b) {
    Bi r = zero();
    for (int d1 = 0; d1 < T; ++d1)
      for (int i1 = 0; i1 <= d1; ++i1) {
        const Rat& x = a[static_cast<std::size_t>(d1)][static_cast<std::size_t>(i1)];
        if (x.is_zero()) continue;
        for (int d2 = 0; d1 + d2 < T; ++d2)
          for (int i2 = 0; i2 <= d2; ++i2) {
            const Rat& y = b[static_cast<std::size_t>(d2)][static_cast<std::size_t>(i2)];
            if (y.is_zero()) continue;
            r[static_cast<std::size_t>(d1 + d2)][static_cast<std::size_t>(i1 + i2)] += x * y;
          }
      }
    return r;
  };
  auto inverse = [&](const Bi& a) {
    // a = a0 (1 - e), 1/a = (1/a0) Σ e^j
    Rat a0 = a[0][0];
    if (a0.is_zero()) throw InternalError("bivariate inverse of a non-unit");
    Bi e = zero();
    for (int d = 1; d < T; ++d)
      for (int i = 0; i <= d; ++i)
        e[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] = -a[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] / a0;
    Bi r = zero(), p = zero();
    p[0][0] = Rat(1);
    for (int j = 0; j < T; ++j) {
      for (int d = 0; d < T; ++d)
        for (int i = 0; i <= d; ++i) r[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
      p = mul(p, e);
    }
    for (auto& row : r)
      for (auto& v : row) v /= a0;
    return r;
  };
  auto univariate = [&](const LaurentSeries<Rat>& f, int which) {
    Bi r = zero();
    for (int d = 0; d < T; ++d) r[static_cast<std::size_t>(d)][static_cast<std::size_t>(which == 1 ? d : 0)] = f.coeff(d);
    return r;
  };
  LaurentSeries<Rat> z = lambert_z_of_w(T + 1);
  LaurentSeries<Rat> one = LaurentSeries<Rat>::constant(Rat(1), kExact, "w");
  LaurentSeries<Rat> g = LaurentSeries<Rat>::mul(z, (one - z).inverse(T), T);  // z/(1-z)
  // U = Σ_k c_k h_{k-1}(w1, w2)
  Bi U = zero();
  for (int k = 1; k <= T; ++k) {
    Rat ck = z.coeff(k);
    if (k - 1 < T)
      for (int i = 0; i <= k - 1; ++i) U[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)] += ck;
  }
  Bi Uinv = inverse(U);
  Bi num = mul(mul(univariate(g, 1), univariate(g, 2)), mul(Uinv, Uinv));
  num[2][1] -= Rat(1);  // - w1 w2
  // Exact division by (w1 - w2), twice.
  auto divide = [&](const Bi& m, int top) {
    Bi q = zero();
    for (int d = 1; d < top; ++d) {
      const auto& md = m[static_cast<std::size_t>(d)];
      auto& qd = q[static_cast<std::size_t>(d - 1)];
      Rat prev(0);
      for (int i = 0; i < d; ++i) {
        // m_i = q_{i-1} - q_i
        Rat qi = prev - md[static_cast<std::size_t>(i)];
        qd[static_cast<std::size_t>(i)] = qi;
        prev = qi;
      }
      if (!(prev == md[static_cast<std::size_t>(d)])) throw InternalError("cylinder numerator is not divisible by w1 - w2");
    }
    if (!m[0][0].is_zero()) throw InternalError("cylinder numerator is not divisible by w1 - w2");
    return q;
  };
  Bi W = divide(divide(num, T), T - 1);
  HurwitzTable t;
  t.g = 0;
  t.n = 2;
  for (int d = 2; d <= max_degree; ++d)
    for (int m1 = d - 1; m1 >= (d + 1) / 2; --m1) {
      int m2 = d - m1;
      Rat coef = W[static_cast<std::size_t>(d)][static_cast<std::size_t>(m1)];
      t.entries.push_back(detail::hurwitz_entry(0, {m1, m2}, coef));
    }
  return t;
}

}  // namespace toprec
