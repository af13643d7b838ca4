#pragma once

// The residue recursion for ω_{g,n}, F_g and the dilaton check.
//
//   ω_{g,n}(z1, J) = Σ_a Res_{q→a} K_a(z1, q) [ ω_{g-1,n+1}(q, σq, J)
//                    + Σ' ω_{h,1+|I|}(q, I) ω_{h',1+|I'|}(σq, I') ]
//
// Everything happens in the local coordinate ζ = q - a.  A lower form's
// factor dz/(z - b)^k contributes its expansion at a+ζ (a pole when b = a),
// and at σq the expansion composed with σ times σ'.  The bracket is kept as
// a map from the output slots J to a ζ-series; only exponents <= 0 matter,
// since the kernel's k-th coefficient has exact order k - 3 >= -1.
//
// In canonical mode only sorted J are produced: lower forms are symmetric,
// so each multiset split I ⊔ I' = J is visited once with the number of
// position subsets realizing it as multiplicity.  Exhaustive mode visits
// every ordering instead and is used to cross-check symmetry.

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toprec/curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/kernel.hpp"
#include "toprec/multiform.hpp"
#include "toprec/rational.hpp"
#include "toprec/series.hpp"

namespace toprec {

struct EngineOptions {
  int window = 0;         // 0: derived from (g,n)
  bool canonical = true;  // false: enumerate every ordering of the outputs
  int max_retries = 8;
};

// The dilaton identity is checked as  Σ_a Res ω_{g,n+1} Φ = (2g-2+n) ω_{g,n}.
// With the opposite factor (2-2g-n) the identity contradicts the known
// Weil-Petersson volumes already at (0,3) and (1,1); `flipped_ok` records
// whether that form holds as well (it never does for nonzero ω_{g,n}).
template <Field F>
struct DilatonResult {
  bool ok = false;
  bool flipped_ok = false;
  SymForm<F> lhs, rhs;  // Σ_a Res ω_{g,n+1} Φ  and  (2g-2+n) ω_{g,n}
};

/// Bergman-pseudo slot: the q-factor (m+1) ζ^m of B(q, z_i) expanded at a.
inline Slot bergman_head(int m) { return Slot{-1, m}; }

inline int default_window(int g, int n) { return 6 * g - 2 + 2 * n + 4; }

template <Field F>
class OmegaTable {
 public:
  OmegaTable(SpectralCurve<F> curve, Kernel<F> kernel, EngineOptions opt = {})
      : curve_(std::move(curve)), kernel_(std::move(kernel)), opt_(opt) {
    window_ = opt_.window > 0 ? opt_.window : default_window(1, 1);
  }

  const SpectralCurve<F>& curve() const { return curve_; }
  const Kernel<F>& kernel() const { return kernel_; }
  int window() const { return window_; }
  const std::map<std::pair<int, int>, SymForm<F>>& entries() const { return table_; }

  /// ω_{g,n} as a symmetric form.  Requires 2g-2+n > 0.
  const SymForm<F>& omega_sym(int g, int n) {
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0)
      throw DomainError("omega: (g,n) = (" + std::to_string(g) + "," + std::to_string(n) + ") is not stable");
    auto key = std::make_pair(g, n);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    // Lower levels first.
    if (g >= 1 && !(g - 1 == 0 && n + 1 == 2)) omega_sym(g - 1, n + 1);
    for (int h = 0; h <= g; ++h)
      for (int i = 0; i <= n - 1; ++i) {
        int h2 = g - h, i2 = n - 1 - i;
        if (present(h, 1 + i) && present(h2, 1 + i2)) {
          if (stable(h, 1 + i)) omega_sym(h, 1 + i);
          if (stable(h2, 1 + i2)) omega_sym(h2, 1 + i2);
        }
      }
    // The bracket pairs two factors with poles up to the lower forms' maximal
    // orders, and σ-pulled-back poles lose that much relative precision.
    int need = default_window(g, n);
    auto involve = [&](int h, int m) {
      if (stable(h, m)) need = std::max(need, 2 * table_.at({h, m}).max_order() + 4);
    };
    if (g >= 1) involve(g - 1, n + 1);
    for (int h = 0; h <= g; ++h)
      for (int i = 0; i <= n - 1; ++i)
        if (present(h, 1 + i) && present(g - h, n - i)) involve(h, 1 + i);
    grow_window(need);
    SymForm<F> result = with_retries([&] { return compute(g, n); });
    return table_.emplace(key, std::move(result)).first->second;
  }

  MultiForm<F> omega(int g, int n) { return omega_sym(g, n).expand(); }

  /// ω_{g,n} with every output ordering computed independently (no symmetry
  /// assumed for the outputs); lower levels come from the table.
  MultiForm<F> omega_exhaustive(int g, int n) {
    omega_sym(g, n);
    bool saved = opt_.canonical;
    opt_.canonical = false;
    MultiForm<F> m;
    try {
      m = with_retries([&] { return compute_raw_full(g, n); });
    } catch (...) {
      opt_.canonical = saved;
      throw;
    }
    opt_.canonical = saved;
    return m;
  }

  /// F_g = 1/(2-2g) Σ_a Res ω_{g,1} Φ, with Φ shifted by a constant.
  F f_g(int g, const F& phi_shift = F(0L)) {
    if (g < 2) throw DomainError("F_g is only defined here for g >= 2");
    const SymForm<F>& w = omega_sym(g, 1);
    return with_retries([&] {
      F acc(0L);
      for (const auto& [s, c] : w.terms()) acc += c * phi_residue(s[0], phi_shift);
      return acc / F(static_cast<long>(2 - 2 * g));
    });
  }

  DilatonResult<F> dilaton(int g, int n) {
    const SymForm<F>& big = omega_sym(g, n + 1);
    DilatonResult<F> r;
    r.rhs = omega_sym(g, n).scaled(F(static_cast<long>(2 * g - 2 + n)));
    r.lhs = with_retries([&] {
      SymForm<F> lhs(n);
      for (const auto& [s, c] : big.terms())
        for_each_distinct_head(s, [&](const Slot& q, const Slots& rest) { lhs.add(rest, c * phi_residue(q, F(0L))); });
      return lhs;
    });
    r.ok = r.lhs == r.rhs;
    r.flipped_ok = r.lhs == r.rhs.scaled(F(-1L));
    return r;
  }

 private:
  using S = LaurentSeries<F>;

  static bool stable(int g, int n) { return n >= 1 && 2 * g - 2 + n > 0; }
  // Factors allowed in Σ': stable forms and ω02, never ω01.
  static bool present(int g, int n) { return stable(g, n) || (g == 0 && n == 2); }

  struct Frame {
    LocalFrame<F> f;
    std::function<S(int)> K;
    std::map<Slot, S> E, Es;
    std::map<std::pair<Slot, Slot>, S> P;
    S bdiag;
  };

  template <class Fn>
  auto with_retries(Fn&& fn) -> decltype(fn()) {
    for (int attempt = 0;; ++attempt) {
      try {
        return fn();
      } catch (const PrecisionError& e) {
        if (attempt >= opt_.max_retries) throw;
        grow_window(window_ + std::max(4, window_ / 2));
      }
    }
  }

  void grow_window(int w) {
    if (w <= window_ && !frames_.empty()) return;
    window_ = std::max(window_, w);
    frames_.clear();
  }

  Frame& frame(std::size_t a) {
    if (frames_.empty()) {
      for (std::size_t i = 0; i < curve_.branchpoints.size(); ++i) {
        auto fr = std::make_unique<Frame>();
        fr->f = local_frame(curve_, i, window_);
        fr->K = kernel_.bind(curve_, fr->f);
        fr->bdiag = bergman_on_involution(fr->f.sigma, window_);
        frames_.push_back(std::move(fr));
      }
    }
    return *frames_[a];
  }

  /// Expansion at q = a+ζ of the q-factor of a head slot.
  const S& E(Frame& fr, const Slot& s) {
    if (auto it = fr.E.find(s); it != fr.E.end()) return it->second;
    S r;
    if (s.bp < 0) {
      r = S::monomial(F(static_cast<long>(s.order + 1)), s.order, kExact, kLocalVar);
    } else if (static_cast<std::size_t>(s.bp) == fr.f.bp) {
      r = S::monomial(F(1L), -s.order, kExact, kLocalVar);
    } else {
      F d = fr.f.a - curve_.branchpoints[static_cast<std::size_t>(s.bp)].a;
      S lin = S::variable(kLocalVar) + S::constant(d, kExact, kLocalVar);
      r = lin.inverse(window_).pow(s.order, window_);
    }
    return fr.E.emplace(s, std::move(r)).first->second;
  }

  /// Pull-back to σq: E(σ(ζ)) σ'(ζ).
  const S& Es(Frame& fr, const Slot& s) {
    if (auto it = fr.Es.find(s); it != fr.Es.end()) return it->second;
    S r = S::mul(E(fr, s).compose(fr.f.sigma, window_), fr.f.dsigma, window_);
    return fr.Es.emplace(s, std::move(r)).first->second;
  }

  const S& P(Frame& fr, const Slot& s0, const Slot& s1) {
    auto key = std::make_pair(s0, s1);
    if (auto it = fr.P.find(key); it != fr.P.end()) return it->second;
    S r = S::mul(E(fr, s0), Es(fr, s1), 1);
    return fr.P.emplace(key, std::move(r)).first->second;
  }

  F phi_residue(const Slot& s, const F& shift) {
    // Res_{ζ=0} ζ^{-k} (Φ(ζ) + shift) dζ at the slot's own branchpoint.
    Frame& fr = frame(static_cast<std::size_t>(s.bp));
    F r = s.order >= 2 ? fr.f.Phi.coeff(s.order - 1) : F(0L);
    if (s.order == 1) r = fr.f.Phi.coeff(0) + shift;
    return r;
  }

  // Dense accumulator for a bracket series.
  struct Acc {
    int lo = 0;
    int hi = kExact;
    std::vector<F> c;
    bool empty = true;
    void axpy(const F& m, const S& s) {
      hi = std::min(hi, s.hi());
      if (s.is_known_zero()) return;
      int slo = s.lo(), send = s.stored_end();
      if (empty) {
        lo = slo;
        c.assign(static_cast<std::size_t>(send - slo), F(0L));
        empty = false;
      } else if (slo < lo) {
        c.insert(c.begin(), static_cast<std::size_t>(lo - slo), F(0L));
        lo = slo;
      }
      if (send - lo > static_cast<int>(c.size())) c.resize(static_cast<std::size_t>(send - lo), F(0L));
      const auto& sc = s.stored();
      for (std::size_t i = 0; i < sc.size(); ++i) {
        if (sc[i].is_zero()) continue;
        c[static_cast<std::size_t>(slo - lo) + i] += m * sc[i];
      }
    }
    S series() const { return empty ? S::unknown_from(hi, kLocalVar) : S(lo, c, hi, kLocalVar); }
  };

  // A lower form viewed as head (q-slot) + remaining slots.
  struct Headed {
    Slot head;
    Slots rest;
    F c;
  };

  std::vector<Headed> headed(int h, int n, int bp_for_bergman, int cutoff) {
    std::vector<Headed> out;
    if (h == 0 && n == 2) {
      for (int m = 0; m <= cutoff; ++m) out.push_back({bergman_head(m), Slots{Slot{bp_for_bergman, m + 2}}, F(1L)});
      return out;
    }
    const SymForm<F>& w = table_.at({h, n});
    if (opt_.canonical) {
      for (const auto& [s, c] : w.terms())
        for_each_distinct_head(s, [&](const Slot& q, const Slots& rest) { out.push_back({q, rest, c}); });
    } else {
      MultiForm<F> full = w.expand();
      for (const auto& [s, c] : full.terms()) out.push_back({s[0], Slots(s.begin() + 1, s.end()), c});
    }
    return out;
  }

  static int max_pole_at(const std::vector<Headed>& hs, int bp) {
    int m = 0;
    for (const auto& h : hs)
      if (h.head.bp == bp) m = std::max(m, h.head.order);
    return m;
  }

  /// Calls f(J, multiplicity) for every way of merging I and I' into J.
  template <class Fn>
  void merges(const Slots& a, const Slots& b, Fn&& f) {
    if (opt_.canonical) {
      Slots j;
      j.reserve(a.size() + b.size());
      std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(j));
      // Number of position subsets of J carrying the multiset a.
      mpz_class mult = 1;
      for (std::size_t i = 0; i < j.size();) {
        std::size_t e = i;
        while (e < j.size() && j[e] == j[i]) ++e;
        long in_a = std::count(a.begin(), a.end(), j[i]);
        mult *= binomial(static_cast<long>(e - i), in_a);
        i = e;
      }
      f(j, F(Rat(mpq_class(mult))));
      return;
    }
    // Every subset of positions for a.
    std::size_t n = a.size() + b.size();
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(a.size()), true);
    do {
      Slots j(n);
      std::size_t ia = 0, ib = 0;
      for (std::size_t k = 0; k < n; ++k) j[k] = pick[k] ? a[ia++] : b[ib++];
      f(j, F(1L));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  /// Raw output: key = (z1 slot, J...) -> coefficient.
  std::map<Slots, F> compute_raw(int g, int n) {
    std::map<Slots, F> raw;
    for (std::size_t a = 0; a < curve_.branchpoints.size(); ++a) {
      Frame& fr = frame(a);
      const int bp = static_cast<int>(a);
      std::map<Slots, Acc> br;
      // ω_{g-1,n+1}(q, σq, J)
      if (g >= 1) {
        if (g - 1 == 0 && n + 1 == 2) {
          br[Slots{}].axpy(F(1L), fr.bdiag.truncated(1));
        } else {
          const SymForm<F>& w = table_.at({g - 1, n + 1});
          auto visit = [&](const Slot& s0, const Slot& s1, const Slots& rest, const F& c) {
            br[rest].axpy(c, P(fr, s0, s1));
          };
          if (opt_.canonical) {
            for (const auto& [s, c] : w.terms())
              for_each_distinct_head(s, [&](const Slot& s0, const Slots& r0) {
                for_each_distinct_head(r0, [&](const Slot& s1, const Slots& r1) { visit(s0, s1, r1, c); });
              });
          } else {
            const MultiForm<F> all = w.expand();
            for (const auto& [s, c] : all.terms()) visit(s[0], s[1], Slots(s.begin() + 2, s.end()), c);
          }
        }
      }
      // Σ' ω_{h,1+|I|}(q, I) ω_{h',1+|I'|}(σq, I')
      for (int h = 0; h <= g; ++h)
        for (int i = 0; i <= n - 1; ++i) {
          int h2 = g - h, i2 = n - 1 - i;
          if (!present(h, 1 + i) || !present(h2, 1 + i2)) continue;
          bool lb = (h == 0 && i == 1), rb = (h2 == 0 && i2 == 1);
          std::vector<Headed> L, R;
          if (!lb) L = headed(h, 1 + i, bp, 0);
          if (!rb) R = headed(h2, 1 + i2, bp, 0);
          if (lb) L = headed(0, 2, bp, rb ? 0 : max_pole_at(R, bp));
          if (rb) R = headed(0, 2, bp, lb ? 0 : max_pole_at(L, bp));
          for (const auto& l : L)
            for (const auto& r : R) {
              const S& prod = P(fr, l.head, r.head);
              F lr = l.c * r.c;
              merges(l.rest, r.rest, [&](const Slots& j, const F& mult) { br[j].axpy(lr * mult, prod); });
            }
        }
      // Residues.
      for (const auto& [j, acc] : br) {
        S b = acc.series();
        if (b.is_known_zero()) {
          if (b.hi() <= 0) throw PrecisionError("bracket series unknown at the needed order", 1);
          continue;
        }
        int v = b.valuation();
        for (int k = 2; k <= 2 - v; ++k) {
          F c = S::product_coeff(fr.K(k), b, -1);
          if (c.is_zero()) continue;
          Slots key;
          key.reserve(j.size() + 1);
          key.push_back(Slot{bp, k});
          key.insert(key.end(), j.begin(), j.end());
          auto [it, fresh] = raw.try_emplace(std::move(key), c);
          if (!fresh) it->second += c;
        }
      }
    }
    for (auto it = raw.begin(); it != raw.end();) it = it->second.is_zero() ? raw.erase(it) : std::next(it);
    return raw;
  }

  MultiForm<F> compute_raw_full(int g, int n) {
    MultiForm<F> m(n);
    for (const auto& [s, c] : compute_raw(g, n)) m.add(s, c);
    return m;
  }

  SymForm<F> compute(int g, int n) {
    if (!opt_.canonical) {
      MultiForm<F> m = compute_raw_full(g, n);
      if (!symmetry_check(m)) throw InternalError(asym_message(g, n));
      return SymForm<F>::from(m);
    }
    std::map<Slots, F> raw = compute_raw(g, n);
    SymForm<F> sym(n);
    for (const auto& [s, c] : raw) {
      Slots m = s;
      std::sort(m.begin(), m.end());
      if (m == s) sym.set(m, c);  // the sorted representative with the smallest head
    }
    // Every raw entry must be present with the value of its multiset, and every
    // head of every multiset must have been produced.
    for (const auto& [s, c] : raw) {
      Slots m = s;
      std::sort(m.begin(), m.end());
      if (!(sym.coeff(m) == c)) throw InternalError(asym_message(g, n));
    }
    for (const auto& [m, c] : sym.terms()) {
      bool ok = true;
      for_each_distinct_head(m, [&](const Slot& h, const Slots& rest) {
        Slots key{h};
        key.insert(key.end(), rest.begin(), rest.end());
        auto it = raw.find(key);
        if (it == raw.end() || !(it->second == c)) ok = false;
      });
      if (!ok) throw InternalError(asym_message(g, n));
    }
    return sym;
  }

  static std::string asym_message(int g, int n) {
    return "omega(" + std::to_string(g) + "," + std::to_string(n) + ") is not symmetric";
  }

  SpectralCurve<F> curve_;
  Kernel<F> kernel_;
  EngineOptions opt_;
  int window_ = 0;
  std::vector<std::unique_ptr<Frame>> frames_;
  std::map<std::pair<int, int>, SymForm<F>> table_;
};

/// κ from dilaton exactness at (0,3): with κ = 1, Res ω04 Φ = L and ω03 = R;
/// scaling gives κ^2 L = κ R.
template <Field F>
F calibrate_kappa(const SpectralCurve<F>& c, int window = 0) {
  OmegaTable<F> t(c, general_kernel<F>(F(1L)), EngineOptions{window});
  DilatonResult<F> d = t.dilaton(0, 3);
  std::optional<F> kappa;
  for (const auto& [s, r] : d.rhs.terms()) {
    F l = d.lhs.coeff(s);
    if (l.is_zero()) throw InternalError("kappa calibration: dilaton sides have different supports");
    F k = r / l;
    if (kappa && !(*kappa == k)) throw InternalError("kappa calibration: ratio is not constant");
    kappa = k;
  }
  for (const auto& [s, l] : d.lhs.terms())
    if (d.rhs.coeff(s).is_zero()) throw InternalError("kappa calibration: dilaton sides have different supports");
  if (!kappa) throw InternalError("kappa calibration: ω03 vanishes");
  return *kappa;
}

}  // namespace toprec
