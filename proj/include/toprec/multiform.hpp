#pragma once

// Multi-differentials in the pole basis dz/(z - a_b)^k.
//
// MultiForm stores every ordered slot vector explicitly.  SymForm stores a
// symmetric form by multiset (sorted slot vector), which is what the engine
// keeps internally; it expands to a MultiForm on demand.

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toprec/errors.hpp"
#include "toprec/rational.hpp"

namespace toprec {

struct Slot {
  int bp = 0;
  int order = 0;
  auto operator<=>(const Slot&) const = default;
};

using Slots = std::vector<Slot>;

template <Field F>
class MultiForm {
 public:
  using Terms = std::map<Slots, F>;

  MultiForm() = default;
  explicit MultiForm(int n) : n_(n) {}

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Slots& s, const F& c) {
    if (static_cast<int>(s.size()) != n_) throw ValidationError("MultiForm: slot vector has wrong arity");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  F coeff(const Slots& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? F(0L) : it->second;
  }

  MultiForm scaled(const F& c) const {
    MultiForm r(n_);
    if (c.is_zero()) return r;
    for (const auto& [s, v] : terms_) r.terms_.emplace(s, v * c);
    return r;
  }

  friend MultiForm operator+(const MultiForm& a, const MultiForm& b) {
    if (a.n_ != b.n_) throw ValidationError("MultiForm: arity mismatch");
    MultiForm r = a;
    for (const auto& [s, v] : b.terms_) r.add(s, v);
    return r;
  }
  friend MultiForm operator-(const MultiForm& a, const MultiForm& b) { return a + b.scaled(F(-1L)); }
  friend bool operator==(const MultiForm& a, const MultiForm& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Variable i of the result is variable perm[i] of this form.
  MultiForm permuted(const std::vector<int>& perm) const {
    MultiForm r(n_);
    for (const auto& [s, v] : terms_) {
      Slots t(s.size());
      for (int i = 0; i < n_; ++i) t[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      r.terms_.emplace(std::move(t), v);
    }
    return r;
  }

  int max_order() const {
    int m = 0;
    for (const auto& [s, v] : terms_)
      for (const auto& sl : s) m = std::max(m, sl.order);
    return m;
  }

  /// True iff some term has a simple pole (order 1) in some variable.
  bool has_residue_terms() const {
    for (const auto& [s, v] : terms_)
      for (const auto& sl : s)
        if (sl.order == 1) return true;
    return false;
  }

  std::string str(const std::vector<std::string>& locations = {}) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, v] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << to_string(v) << ")";
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::string a = static_cast<std::size_t>(s[i].bp) < locations.size() ? locations[static_cast<std::size_t>(s[i].bp)]
                                                                               : "a" + std::to_string(s[i].bp);
        std::string shift = a == "0" ? "" : (a[0] == '-' ? "+" + a.substr(1) : "-" + a);
        os << " dz" << i + 1 << "/(z" << i + 1 << shift << ")^" << s[i].order;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  int n_ = 0;
  Terms terms_;
};

/// True iff the form is invariant under every permutation of its variables.
/// Adjacent transpositions generate the symmetric group, so checking those
/// on every term suffices.
template <Field F>
bool symmetry_check(const MultiForm<F>& m) {
  for (const auto& [s, v] : m.terms()) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == s[i + 1]) continue;
      Slots t = s;
      std::swap(t[i], t[i + 1]);
      auto it = m.terms().find(t);
      if (it == m.terms().end() || !(it->second == v)) return false;
    }
  }
  return true;
}

/// Symmetric form keyed by sorted slot vectors.
template <Field F>
class SymForm {
 public:
  using Terms = std::map<Slots, F>;

  SymForm() = default;
  explicit SymForm(int n) : n_(n) {}

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of the multiset of s (s need not be sorted).
  void add(Slots s, const F& c) {
    if (c.is_zero()) return;
    std::sort(s.begin(), s.end());
    auto [it, fresh] = terms_.try_emplace(std::move(s), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void set(Slots sorted, F c) {
    if (c.is_zero()) return;
    terms_.insert_or_assign(std::move(sorted), std::move(c));
  }

  F coeff(Slots s) const {
    std::sort(s.begin(), s.end());
    auto it = terms_.find(s);
    return it == terms_.end() ? F(0L) : it->second;
  }

  SymForm scaled(const F& c) const {
    SymForm r(n_);
    if (c.is_zero()) return r;
    for (const auto& [s, v] : terms_) r.terms_.emplace(s, v * c);
    return r;
  }
  friend bool operator==(const SymForm& a, const SymForm& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend SymForm operator-(const SymForm& a, const SymForm& b) {
    SymForm r = a;
    for (const auto& [s, v] : b.terms_) r.add(s, -v);
    return r;
  }

  int max_order() const {
    int m = 0;
    for (const auto& [s, v] : terms_)
      for (const auto& sl : s) m = std::max(m, sl.order);
    return m;
  }

  /// All distinct orderings of every multiset.
  MultiForm<F> expand() const {
    MultiForm<F> r(n_);
    for (const auto& [s, v] : terms_) {
      Slots t = s;
      do r.add(t, v);
      while (std::next_permutation(t.begin(), t.end()));
    }
    return r;
  }

  /// Collapses a symmetric MultiForm; throws if it is not symmetric.
  static SymForm from(const MultiForm<F>& m) {
    if (!symmetry_check(m)) throw InternalError("SymForm::from: form is not symmetric");
    SymForm r(m.n());
    for (const auto& [s, v] : m.terms())
      if (std::is_sorted(s.begin(), s.end())) r.terms_.emplace(s, v);
    return r;
  }

 private:
  int n_ = 0;
  Terms terms_;
};

/// Calls f(head, rest) once for each distinct value `head` in the sorted
/// multiset s, with rest = s minus one copy of head (still sorted).
template <class Fn>
void for_each_distinct_head(const Slots& s, Fn&& f) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && s[i] == s[i - 1]) continue;
    Slots rest;
    rest.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) rest.push_back(s[j]);
    f(s[i], rest);
  }
}

}  // namespace toprec
