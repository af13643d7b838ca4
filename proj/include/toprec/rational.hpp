#pragma once

// Exact coefficient domains: Rat (Q), Poly (Q[p]) and Coeff (Q(p)).
//
// Every series, form and curve in the library is parameterized by a field
// type F.  Both Rat and Coeff model the Field concept below, so the engine can
// run over plain rationals when a curve carries no symbolic parameter and over
// the rational-function field Q(p) when it does.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toprec/errors.hpp"

namespace toprec {

// ---------------------------------------------------------------------------
// Rat

class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den) {
    if (den == 0) throw ValidationError("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}

  /// Parses "a" or "a/b" in base 10.
  static Rat parse(std::string_view s) {
    std::string str(s);
    if (str.empty()) throw ValidationError("Rat: empty string");
    auto slash = str.find('/');
    mpz_class num, den(1);
    auto ok_int = [](const std::string& t) {
      if (t.empty()) return false;
      std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) return false;
      return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                         [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string n = str.substr(0, slash);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    if (!ok_int(n)) throw ValidationError("Rat: cannot parse '" + str + "'");
    num.set_str(n, 10);
    if (slash != std::string::npos) {
      std::string d = str.substr(slash + 1);
      if (!ok_int(d)) throw ValidationError("Rat: cannot parse '" + str + "'");
      den.set_str(d, 10);
      if (den == 0) throw ValidationError("Rat: zero denominator in '" + str + "'");
    }
    return Rat(mpq_class(num, den));
  }

  std::string str() const { return v_.get_str(10); }

  const mpq_class& get() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat inv() const {
    if (is_zero()) throw DomainError("Rat: division by zero");
    return Rat(mpq_class(1) / v_);
  }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rat pow(const Rat& base, long e) {
  if (e < 0) return pow(base.inv(), -e);
  Rat r(1), b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Generalized binomial C(x, k) for rational x.
inline Rat binomial(const Rat& x, long k) {
  Rat r(1);
  for (long i = 0; i < k; ++i) r *= (x - Rat(i)) / Rat(i + 1);
  return r;
}

// ---------------------------------------------------------------------------
// Poly: univariate polynomial over Q in the formal parameter p.
//
// Dense ascending storage; trailing zeros are never stored, so the zero
// polynomial is the empty vector.

class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
  Poly(long c) : Poly(Rat(c)) {}                              // NOLINT
  explicit Poly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

  /// The monomial c * p^e.
  static Poly monomial(const Rat& c, int e) {
    if (c.is_zero()) return {};
    std::vector<Rat> v(static_cast<std::size_t>(e) + 1);
    v.back() = c;
    return Poly(std::move(v));
  }
  static Poly p() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int e) const {
    return (e >= 0 && e < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(e)] : Rat(0);
  }
  const Rat& lead() const { return c_.back(); }
  Rat constant() const { return coeff(0); }

  Rat eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Poly derivative() const {
    std::vector<Rat> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Rat(static_cast<long>(i)));
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rat& s) const {
    if (s.is_zero()) return {};
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  /// Euclidean division; throws on a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("Poly: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> r = a.c_;
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    Rat inv_lead = b.lead().inv();
    int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
      Rat f = r[static_cast<std::size_t>(k + db)] * inv_lead;
      q[static_cast<std::size_t>(k)] = f;
      if (f.is_zero()) continue;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  Poly monic() const { return is_zero() ? Poly() : scaled(lead().inv()); }

  /// Monic greatest common divisor (zero iff both inputs are zero).
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  /// Rational content: positive c with (*this)/c integral and primitive.
  Rat content() const {
    if (is_zero()) return Rat(1);
    mpz_class g = 0, l = 1;
    for (const auto& c : c_) {
      if (c.is_zero()) continue;
      mpz_class n = abs(c.num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rat(mpq_class(g, l));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form in the variable name given, e.g. "p^2-1/2*p+3".
  std::string str(std::string_view var = "p") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
      const Rat& c = c_[static_cast<std::size_t>(e)];
      if (c.is_zero()) continue;
      Rat a = c.sign() < 0 ? -c : c;
      if (c.sign() < 0) os << "-";
      else if (!first) os << "+";
      first = false;
      if (e == 0) { os << a; continue; }
      if (!a.is_one()) os << a << "*";
      os << var;
      if (e > 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// ---------------------------------------------------------------------------
// Coeff: element of Q(p).
//
// Canonical storage keeps gcd(num, den) = 1 with a monic denominator, so two
// equal values have identical representations.  The integral form used for
// text I/O (both parts integral and jointly primitive, den leading > 0) is
// derived on demand by integral_parts().

class Coeff {
 public:
  Coeff() : den_(1) {}
  Coeff(long v) : num_(v), den_(1) {}                  // NOLINT
  Coeff(const Rat& v) : num_(v), den_(1) {}            // NOLINT
  Coeff(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  Coeff(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Coeff p() { return Coeff(Poly::p()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// The rational value of a constant element.
  Rat as_rat() const {
    if (!is_constant()) throw DomainError("Coeff: value depends on the parameter");
    return num_.constant();  // den is monic constant, i.e. 1
  }

  Rat eval(const Rat& probe) const {
    Rat d = den_.eval(probe);
    if (d.is_zero()) throw PoleError("Coeff: probe " + probe.str() + " is a root of the denominator");
    return num_.eval(probe) / d;
  }

  /// Both parts integral, jointly primitive, den with positive leading term.
  std::pair<Poly, Poly> integral_parts() const {
    if (is_zero()) return {Poly(), Poly(1)};
    // num/den with den monic: scale by L = lcm of coefficient denominators,
    // then divide by the gcd of all integer coefficients.
    mpz_class l = 1, g = 0;
    for (const auto* p : {&num_, &den_})
      for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    Rat scale{mpq_class(l)};
    Poly n = num_.scaled(scale), d = den_.scaled(scale);
    for (const auto* p : {&n, &d})
      for (const auto& c : p->coeffs()) {
        mpz_class a = abs(c.num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
      }
    Rat inv_g{mpq_class(1, g)};
    return {n.scaled(inv_g), d.scaled(inv_g)};
  }

  std::string str(std::string_view var = "p") const {
    auto [n, d] = integral_parts();
    if (d == Poly(1)) return n.str(var);
    auto wrap = [&](const Poly& q) {
      std::string s = q.str(var);
      bool simple = q.coeffs().size() == 1 || (q.degree() >= 1 && std::count_if(q.coeffs().begin(), q.coeffs().end(),
                                                                                 [](const Rat& c) { return !c.is_zero(); }) == 1);
      return simple ? s : "(" + s + ")";
    };
    return wrap(n) + "/" + wrap(d);
  }

  Coeff inv() const {
    if (is_zero()) throw DomainError("Coeff: division by zero");
    Coeff r;
    r.num_ = den_;
    r.den_ = num_;
    r.fix_lead();
    return r;
  }

  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff& operator/=(const Coeff& o) { return *this = *this / o; }

  friend Coeff operator+(const Coeff& a, const Coeff& b) { return add(a, b, false); }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return add(a, b, true); }
  friend Coeff operator-(const Coeff& a) {
    Coeff r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return Coeff::raw(a.num_ * b.num_, Poly(1));
    if (a.is_constant()) return raw(b.num_.scaled(a.num_.constant()), b.den_);
    if (b.is_constant()) return raw(a.num_.scaled(b.num_.constant()), a.den_);
    // Cross-cancel before multiplying to keep degrees small.
    Poly g1 = Poly::gcd(a.num_, b.den_), g2 = Poly::gcd(b.num_, a.den_);
    Poly n = Poly::divmod(a.num_, g1).first * Poly::divmod(b.num_, g2).first;
    Poly d = Poly::divmod(a.den_, g2).first * Poly::divmod(b.den_, g1).first;
    Coeff r = raw(std::move(n), std::move(d));
    r.fix_lead();
    return r;
  }
  friend Coeff operator/(const Coeff& a, const Coeff& b) { return a * b.inv(); }

  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Equality decided by cross-multiplication (independent of normalization).
  static bool equal_by_cross_multiplication(const Coeff& a, const Coeff& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Coeff& c) { return os << c.str(); }

 private:
  static Coeff raw(Poly n, Poly d) {
    Coeff r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  static Coeff add(const Coeff& a, const Coeff& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.den_ == b.den_) {
      Poly n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      if (a.is_polynomial()) return raw(std::move(n), Poly(1));
      return Coeff(std::move(n), a.den_);
    }
    Poly bn = subtract ? -b.num_ : b.num_;
    Poly g = Poly::gcd(a.den_, b.den_);
    Poly ad = Poly::divmod(a.den_, g).first, bd = Poly::divmod(b.den_, g).first;
    return Coeff(a.num_ * bd + bn * ad, ad * b.den_);
  }

  void fix_lead() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    Rat l = den_.lead();
    if (!l.is_one()) {
      Rat inv = l.inv();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  void normalize() {
    if (den_.is_zero()) throw ValidationError("Coeff: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (!den_.is_constant()) {
      Poly g = Poly::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
      }
    }
    fix_lead();
  }

  Poly num_;
  Poly den_;
};

/// coeff_normalize: validated construction of a canonical Q(p) element.
inline Coeff coeff_normalize(const Poly& num, const Poly& den) { return Coeff(num, den); }

/// coeff_eval: exact value at p = probe.
inline Rat coeff_eval(const Coeff& c, const Rat& probe) { return c.eval(probe); }

// ---------------------------------------------------------------------------
// Field concept shared by Rat and Coeff.

template <class F>
concept Field = requires(const F& a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inv() } -> std::convertible_to<F>;
  F(Rat(1));
  F(1L);
};

inline std::string to_string(const Rat& r) { return r.str(); }
inline std::string to_string(const Coeff& c) { return c.str(); }

/// Best-effort projection of a field element to Q (throws if symbolic).
inline Rat to_rat(const Rat& r) { return r; }
inline Rat to_rat(const Coeff& c) { return c.as_rat(); }

}  // namespace toprec
