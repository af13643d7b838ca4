#pragma once

// Truncated Laurent series over an exact field.
//
// A LaurentSeries represents  sum_{lo <= e < hi} c_e t^e + O(t^hi).
// Coefficients at or beyond `hi` are unknown.  A series whose terms are all
// known (a Laurent polynomial) carries hi == kExact.  Every arithmetic
// operation propagates the tightest truncation bound it can prove, and
// coefficient access beyond that bound throws PrecisionError.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toprec/errors.hpp"
#include "toprec/rational.hpp"

namespace toprec {

inline constexpr int kExact = 1 << 28;

namespace detail {
inline int sat_add(int a, int b) {
  if (a >= kExact || b >= kExact) return kExact;
  long s = static_cast<long>(a) + b;
  return s >= kExact ? kExact : static_cast<int>(s);
}
}  // namespace detail

template <Field F>
class LaurentSeries {
 public:
  /// Exact zero.
  LaurentSeries() = default;

  /// Coefficients `ascending` for exponents lo, lo+1, ...; truncated at hi.
  LaurentSeries(int lo, std::vector<F> ascending, int hi = kExact, std::string var = "z")
      : lo_(lo), hi_(hi), c_(std::move(ascending)), var_(std::move(var)) {
    if (lo_ + static_cast<int>(c_.size()) > hi_) c_.resize(static_cast<std::size_t>(std::max(0, hi_ - lo_)));
    canonicalize();
  }

  static LaurentSeries monomial(const F& c, int e, int hi = kExact, std::string var = "z") {
    return LaurentSeries(e, {c}, hi, std::move(var));
  }
  static LaurentSeries constant(const F& c, int hi = kExact, std::string var = "z") {
    return monomial(c, 0, hi, std::move(var));
  }
  /// The series O(t^hi).
  static LaurentSeries unknown_from(int hi, std::string var = "z") {
    LaurentSeries s;
    s.hi_ = hi;
    s.lo_ = hi;
    s.var_ = std::move(var);
    return s;
  }
  /// The variable itself: t.
  static LaurentSeries variable(std::string var = "z") { return monomial(F(1L), 1, kExact, std::move(var)); }

  const std::string& var() const { return var_; }
  LaurentSeries& rename(std::string v) {
    var_ = std::move(v);
    return *this;
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool exact() const { return hi_ >= kExact; }
  /// Exponent one past the last stored (nonzero) coefficient.
  int stored_end() const { return lo_ + static_cast<int>(c_.size()); }
  bool is_known_zero() const { return c_.empty(); }

  /// Lowest exponent with a nonzero coefficient, or hi() if none is known.
  int valuation() const { return c_.empty() ? hi_ : lo_; }

  F coeff(int e) const {
    if (e >= hi_)
      throw PrecisionError("series coefficient of " + var_ + "^" + std::to_string(e) +
                               " is beyond the known window (hi=" + std::to_string(hi_) + ")",
                           e + 1);
    if (e < lo_ || e >= stored_end()) return F(0L);
    return c_[static_cast<std::size_t>(e - lo_)];
  }
  /// Coefficient access without the window check; zero outside storage.
  const F* find(int e) const {
    if (e < lo_ || e >= stored_end()) return nullptr;
    return &c_[static_cast<std::size_t>(e - lo_)];
  }

  LaurentSeries truncated(int hi) const {
    if (hi >= hi_) return *this;
    LaurentSeries r = *this;
    r.hi_ = hi;
    if (r.lo_ >= hi) {
      r.c_.clear();
      r.lo_ = hi;
    } else if (r.stored_end() > hi) {
      r.c_.resize(static_cast<std::size_t>(hi - r.lo_));
    }
    r.canonicalize();
    return r;
  }

  /// Multiply by t^k.
  LaurentSeries shifted(int k) const {
    LaurentSeries r = *this;
    r.lo_ += k;
    if (!exact()) r.hi_ += k;
    return r;
  }

  LaurentSeries scaled(const F& s) const {
    if (s.is_zero()) return unknown_from(hi_, var_);
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = c * s;
    return r;
  }

  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = add(*this, o, false); }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = add(*this, o, true); }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = mul(*this, o, kExact); }
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b, false); }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b, true); }
  friend LaurentSeries operator-(const LaurentSeries& a) { return a.scaled(F(-1L)); }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b, kExact); }

  /// Product truncated at min(cap, provable bound).
  static LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b, int cap) {
    check_var(a, b);
    int hi = std::min({detail::sat_add(a.valuation(), b.hi_), detail::sat_add(b.valuation(), a.hi_), cap});
    if (a.c_.empty() || b.c_.empty()) return unknown_from(hi, a.var_);
    int lo = a.lo_ + b.lo_;
    long n_full = static_cast<long>(a.c_.size()) + static_cast<long>(b.c_.size()) - 1;
    long n = std::min<long>(n_full, static_cast<long>(hi) - lo);
    if (n <= 0) return unknown_from(hi, a.var_);
    std::vector<F> out(static_cast<std::size_t>(n), F(0L));
    for (std::size_t i = 0; i < a.c_.size() && static_cast<long>(i) < n; ++i) {
      if (a.c_[i].is_zero()) continue;
      std::size_t jmax = std::min(b.c_.size(), static_cast<std::size_t>(n - static_cast<long>(i)));
      for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentSeries(lo, std::move(out), hi, a.var_);
  }

  /// Coefficient of t^e in a*b without forming the product.
  static F product_coeff(const LaurentSeries& a, const LaurentSeries& b, int e) {
    check_var(a, b);
    int hi = std::min(detail::sat_add(a.valuation(), b.hi_), detail::sat_add(b.valuation(), a.hi_));
    if (e >= hi)
      throw PrecisionError("product coefficient of " + a.var_ + "^" + std::to_string(e) + " is beyond the known window",
                           e + 1);
    F acc(0L);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      int j = e - a.lo_ - static_cast<int>(i) - b.lo_;
      if (j < 0) break;
      if (j >= static_cast<int>(b.c_.size())) continue;
      if (a.c_[i].is_zero()) continue;
      acc += a.c_[i] * b.c_[static_cast<std::size_t>(j)];
    }
    return acc;
  }

  /// Multiplicative inverse.  An exact input has an infinite inverse, so
  /// `cap` must then bound the result.
  LaurentSeries inverse(int cap = kExact) const {
    if (c_.empty()) throw DomainError("series inverse: no nonzero coefficient in the known window");
    int v = lo_;
    int rel = exact() ? kExact : hi_ - v;
    int hi = std::min(rel >= kExact ? kExact : -v + rel, cap);
    if (hi >= kExact) {
      if (c_.size() == 1) return monomial(c_[0].inv(), -v, kExact, var_);
      throw DomainError("series inverse of an exact series needs a truncation bound");
    }
    int n = hi + v;  // number of coefficients of the unit part
    if (n <= 0) return unknown_from(hi, var_);
    F inv0 = c_[0].inv();
    std::vector<F> out(static_cast<std::size_t>(n), F(0L));
    out[0] = inv0;
    for (int k = 1; k < n; ++k) {
      F acc(0L);
      for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j) {
        if (c_[static_cast<std::size_t>(j)].is_zero()) continue;
        acc += c_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
      }
      out[static_cast<std::size_t>(k)] = -(acc * inv0);
    }
    return LaurentSeries(-v, std::move(out), hi, var_);
  }

  LaurentSeries derivative() const {
    std::vector<F> out;
    out.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.push_back(c_[i] * F(static_cast<long>(lo_ + static_cast<int>(i))));
    return LaurentSeries(lo_ - 1, std::move(out), exact() ? kExact : hi_ - 1, var_);
  }

  /// Term-wise antiderivative with zero constant of integration.
  LaurentSeries antiderivative() const {
    if (hi_ <= -1)
      throw PrecisionError("antiderivative: coefficient of " + var_ + "^-1 is unknown", 0);
    if (const F* r = find(-1); r && !r->is_zero())
      throw DomainError("antiderivative: nonzero " + var_ + "^-1 coefficient would produce a logarithm");
    std::vector<F> out;
    out.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      int e = lo_ + static_cast<int>(i);
      out.push_back(e == -1 ? F(0L) : c_[i] / F(static_cast<long>(e + 1)));
    }
    return LaurentSeries(lo_ + 1, std::move(out), exact() ? kExact : hi_ + 1, var_);
  }

  /// Coefficient of t^-1.
  F residue() const {
    if (hi_ <= -1) throw PrecisionError("residue: coefficient of " + var_ + "^-1 is beyond the known window", 0);
    return coeff(-1);
  }

  /// f(g) for g(0) = 0.  Negative powers of f require val(g) == 1.
  LaurentSeries compose(const LaurentSeries& g, int cap = kExact) const {
    check_var(*this, g);
    if (g.lo_ < 1 && !(g.c_.empty()))
      throw DomainError("series compose: inner series must vanish at 0");
    if (g.c_.empty() && lo_ < 0)
      throw PrecisionError("series compose: inner series has no known nonzero term", g.hi_ + 1);
    int vg = g.valuation();
    if (c_.empty()) {
      int hi = exact() ? kExact : (hi_ >= 0 ? hi_ * vg : hi_);
      return unknown_from(std::min(hi, cap), var_);
    }
    if (lo_ < 0 && vg != 1) throw DomainError("series compose: pole requires inner valuation exactly 1");
    // Provable bound.
    int bound = cap;
    if (!exact()) bound = std::min(bound, hi_ >= 0 ? static_cast<int>(std::min<long>(static_cast<long>(hi_) * vg, kExact)) : hi_);
    if (!g.exact()) {
      int rel = g.hi_ - vg;
      for (std::size_t i = 0; i < c_.size(); ++i) {
        int e = lo_ + static_cast<int>(i);
        if (e == 0 || c_[i].is_zero()) continue;
        bound = std::min(bound, static_cast<int>(std::min<long>(static_cast<long>(e) * vg + rel, kExact)));
      }
    }
    if (bound >= kExact && lo_ < 0 && !(g.c_.size() == 1))
      throw DomainError("series compose: result is infinite; a truncation bound is required");
    // Horner on P(g) = sum_i c_{lo+i} g^i, then multiply by g^lo.
    int work = bound >= kExact ? kExact : bound - std::min(0, lo_) * vg;
    LaurentSeries gt = g.truncated(std::max(work, 1));
    LaurentSeries acc = constant(c_.back(), kExact, var_);
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      acc = mul(acc, gt, work);
      acc += constant(c_[i], kExact, var_);
    }
    if (lo_ > 0) acc = mul(acc, gt.pow(lo_, work), work);
    if (lo_ < 0) {
      LaurentSeries ginv = gt.inverse(bound >= kExact ? kExact : bound + vg);
      acc = mul(acc, ginv.pow(-lo_, bound), bound);
    }
    return acc.truncated(bound);
  }

  LaurentSeries pow(int n, int cap = kExact) const {
    if (n < 0) return inverse(cap).pow(-n, cap);
    LaurentSeries r = constant(F(1L), kExact, var_), b = *this;
    while (n > 0) {
      if (n & 1) r = mul(r, b, cap);
      n >>= 1;
      if (n) b = mul(b, b, cap);
    }
    return r;
  }

  /// Compositional inverse of f = c1 t + O(t^2) by Newton iteration.
  LaurentSeries revert(int cap = kExact) const {
    if (c_.empty() || lo_ != 1) {
      if (!c_.empty() && lo_ < 1) throw DomainError("series revert: series must vanish at 0");
      throw DomainError("series revert: linear coefficient is zero");
    }
    int target = std::min(hi_, cap);
    if (target >= kExact) {
      if (c_.size() == 1) return monomial(c_[0].inv(), 1, kExact, var_);
      throw DomainError("series revert: exact input needs a truncation bound");
    }
    LaurentSeries t = variable(var_);
    LaurentSeries fprime = derivative();
    LaurentSeries h = monomial(c_[0].inv(), 1, std::min(2, target), var_);
    int prec = 2;
    while (prec < target) {
      prec = std::min(2 * prec, target);
      LaurentSeries hp = LaurentSeries(h.lo_, h.c_, prec, var_);
      LaurentSeries resid = truncated(prec).compose(hp, prec) - t;
      LaurentSeries slope = fprime.truncated(prec).compose(hp, prec);
      h = (hp - mul(resid, slope.inverse(prec), prec)).truncated(prec);
    }
    return h.truncated(target);
  }

  /// Exact equality of the known parts on the common window.
  static bool agree(const LaurentSeries& a, const LaurentSeries& b) {
    int hi = std::min(a.hi_, b.hi_);
    int lo = std::min(a.valuation(), b.valuation());
    int end = std::min(hi, std::max(a.stored_end(), b.stored_end()));
    for (int e = lo; e < end; ++e) {
      const F* x = a.find(e);
      const F* y = b.find(e);
      bool xz = !x || x->is_zero(), yz = !y || y->is_zero();
      if (xz != yz) return false;
      if (!xz && !(*x == *y)) return false;
    }
    return true;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.hi_ == b.hi_ && a.lo_ == b.lo_ && a.c_ == b.c_ && a.var_ == b.var_;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      int e = lo_ + static_cast<int>(i);
      os << "(" << to_string(c_[i]) << ")";
      if (e != 0) os << "*" << var_ << "^" << e;
    }
    if (first) os << "0";
    if (!exact()) os << " + O(" << var_ << "^" << hi_ << ")";
    return os.str();
  }

  const std::vector<F>& stored() const { return c_; }

 private:
  static void check_var(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.var_ != b.var_) throw ValidationError("series variables differ: " + a.var_ + " vs " + b.var_);
  }

  static LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
    check_var(a, b);
    int hi = std::min(a.hi_, b.hi_);
    if (b.c_.empty()) return a.truncated(hi);
    if (a.c_.empty()) return (subtract ? -b : b).truncated(hi);
    int lo = std::min(a.lo_, b.lo_);
    int end = std::min(hi, std::max(a.stored_end(), b.stored_end()));
    if (end <= lo) return unknown_from(hi, a.var_);
    std::vector<F> out(static_cast<std::size_t>(end - lo), F(0L));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      int e = a.lo_ + static_cast<int>(i);
      if (e >= end) break;
      out[static_cast<std::size_t>(e - lo)] = a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      int e = b.lo_ + static_cast<int>(i);
      if (e >= end) break;
      auto& slot = out[static_cast<std::size_t>(e - lo)];
      if (subtract) slot -= b.c_[i];
      else slot += b.c_[i];
    }
    return LaurentSeries(lo, std::move(out), hi, a.var_);
  }

  void canonicalize() {
    std::size_t first = 0;
    while (first < c_.size() && c_[first].is_zero()) ++first;
    if (first == c_.size()) {
      c_.clear();
      lo_ = exact() ? 0 : hi_;
      return;
    }
    if (first > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
      lo_ += static_cast<int>(first);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  int lo_ = 0;
  int hi_ = kExact;
  std::vector<F> c_;
  std::string var_ = "z";
};

// Named operations mirroring the module's operation list.

template <Field F>
LaurentSeries<F> series_invert(const LaurentSeries<F>& f, int window = kExact) { return f.inverse(window); }

template <Field F>
LaurentSeries<F> series_compose(const LaurentSeries<F>& f, const LaurentSeries<F>& g, int window = kExact) {
  return f.compose(g, window);
}

template <Field F>
LaurentSeries<F> series_revert(const LaurentSeries<F>& f, int window = kExact) { return f.revert(window); }

/// Square root of a series with constant term 1, truncated like f.
template <Field F>
LaurentSeries<F> series_sqrt_unit(const LaurentSeries<F>& f, int cap = kExact) {
  if (f.valuation() != 0 || !(f.coeff(0) == F(1L)))
    throw DomainError("series sqrt: constant term must be 1");
  int hi = std::min(f.hi(), cap);
  if (hi >= kExact) throw DomainError("series sqrt: exact input needs a truncation bound");
  std::vector<F> r(static_cast<std::size_t>(hi), F(0L));
  r[0] = F(1L);
  F half = F(1L) / F(2L);
  for (int k = 1; k < hi; ++k) {
    F acc = f.coeff(k);
    for (int i = 1; i < k; ++i) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
    r[static_cast<std::size_t>(k)] = acc * half;
  }
  return LaurentSeries<F>(0, std::move(r), hi, f.var());
}

template <Field F>
F series_residue(const LaurentSeries<F>& f) { return f.residue(); }

}  // namespace toprec
