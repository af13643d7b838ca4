#pragma once

// Polynomials and rational maps in the curve coordinate z over a field F.

#include <string>
#include <utility>
#include <vector>

#include "toprec/errors.hpp"
#include "toprec/rational.hpp"
#include "toprec/series.hpp"

namespace toprec {

template <Field F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> ascending) : c_(std::move(ascending)) { trim(); }
  UPoly(const F& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT

  static UPoly z() { return UPoly(std::vector<F>{F(0L), F(1L)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int e) const { return (e >= 0 && e < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(e)] : F(0L); }
  const F& lead() const { return c_.back(); }

  F eval(const F& x) const {
    F r(0L);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  UPoly derivative() const {
    std::vector<F> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * F(static_cast<long>(i)));
    return UPoly(std::move(v));
  }

  /// Exact Taylor shift: the polynomial in t equal to this(a + t).
  LaurentSeries<F> shifted_series(const F& a, const std::string& var) const {
    // Horner in (a + t).
    std::vector<F> acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      std::vector<F> next(acc.size() + 1, F(0L));
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i] += acc[i] * a;
        next[i + 1] += acc[i];
      }
      next[0] += *it;
      acc = std::move(next);
    }
    return LaurentSeries<F>(0, std::move(acc), kExact, var);
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0L));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0L));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(v));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<F> r = a.c_;
    std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F(0L));
    F inv = b.lead().inv();
    int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
      F f = r[static_cast<std::size_t>(k + db)] * inv;
      q[static_cast<std::size_t>(k)] = f;
      if (f.is_zero()) continue;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  UPoly monic() const {
    if (is_zero()) return {};
    F inv = lead().inv();
    std::vector<F> v = c_;
    for (auto& c : v) c = c * inv;
    return UPoly(std::move(v));
  }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

/// A rational map num(z)/den(z), kept reduced with a monic denominator.
template <Field F>
class RatMap {
 public:
  RatMap() : num_(), den_(F(1L)) {}
  RatMap(UPoly<F> num, UPoly<F> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
  explicit RatMap(UPoly<F> num) : RatMap(std::move(num), UPoly<F>(F(1L))) {}

  static RatMap identity() { return RatMap(UPoly<F>::z()); }

  const UPoly<F>& num() const { return num_; }
  const UPoly<F>& den() const { return den_; }

  F eval(const F& z) const {
    F d = den_.eval(z);
    if (d.is_zero()) throw PoleError("rational map evaluated at a pole");
    return num_.eval(z) / d;
  }

  RatMap derivative() const {
    return RatMap(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  /// (this ∘ inner)(z) = this(inner(z)).
  RatMap compose(const RatMap& inner) const {
    // Homogenize: sum_k a_k N^k D^(d-k) over sum_k b_k N^k D^(d-k).
    int d = std::max(num_.degree(), den_.degree());
    auto hom = [&](const UPoly<F>& p) {
      UPoly<F> acc;
      for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k).is_zero()) continue;
        UPoly<F> term(p.coeff(k));
        for (int i = 0; i < k; ++i) term = term * inner.num_;
        for (int i = k; i < d; ++i) term = term * inner.den_;
        acc = acc + term;
      }
      return acc;
    };
    return RatMap(hom(num_), hom(den_));
  }

  /// Laurent expansion of this(a + t) truncated at hi.
  LaurentSeries<F> expand_at(const F& a, int hi, const std::string& var) const {
    LaurentSeries<F> n = num_.shifted_series(a, var);
    LaurentSeries<F> d = den_.shifted_series(a, var);
    if (den_.degree() == 0) return n.scaled(den_.lead().inv());
    if (d.stored().size() == 1) return LaurentSeries<F>::mul(n, d.inverse(), hi).truncated(hi);
    int v = d.valuation();
    // n / d with d = t^v * unit; the quotient starts at -v at the lowest.
    int cap = hi + v - std::min(0, n.valuation());
    return LaurentSeries<F>::mul(n, d.inverse(std::max(cap, -v + 1)), hi).truncated(hi);
  }

  friend bool operator==(const RatMap& a, const RatMap& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void reduce() {
    if (den_.is_zero()) throw ValidationError("rational map with zero denominator");
    if (num_.is_zero()) {
      den_ = UPoly<F>(F(1L));
      return;
    }
    UPoly<F> g = UPoly<F>::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = UPoly<F>::divmod(num_, g).first;
      den_ = UPoly<F>::divmod(den_, g).first;
    }
    F inv = den_.lead().inv();
    num_ = num_ * UPoly<F>(inv);
    den_ = den_ * UPoly<F>(inv);
  }

  UPoly<F> num_;
  UPoly<F> den_;
};

}  // namespace toprec
