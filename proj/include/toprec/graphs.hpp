#pragma once

// Graph expansion of ω_{g,n}: a cross-check of the recursion engine.
//
// A graph has a root p, leaves p_1..p_k (k = n-1) and trivalent vertices.
// Every vertex v has one incoming arrowed edge (the kernel K(x, q_v), x being
// the parent slot or p) and two outgoing slots: left = q_v and right = σ(q_v).
// A slot carries either an arrowed edge to a child vertex or a non-arrowed
// edge (a Bergman kernel) to a leaf or to a slot of another vertex.
//
// Graphs are generated by unrolling the recursion (each pending form either
// becomes a Bergman edge or a new vertex with the two bracket choices), then
// validated against the defining conditions as independent predicates.
//
// Weights are evaluated with nested residues, deepest vertices first, on
// ordered variable tuples; no symmetry is used anywhere.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
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

/// A point of the graph: the root p, a leaf p_i, or a slot of a vertex.
struct GPoint {
  enum Kind { Root, Leaf, SlotOf } kind = Root;
  int index = 0;  // leaf index, or vertex index
  int side = 0;   // 0 = left (q), 1 = right (σq); slots only
  auto operator<=>(const GPoint&) const = default;
};

/// What occupies an outgoing slot.
struct GEnd {
  enum Kind { Empty, Child, Bergman } kind = Empty;
  int child = -1;  // vertex index for Child
  GPoint other;    // far endpoint for Bergman (leaf or slot)
  auto operator<=>(const GEnd&) const = default;
};

struct GVertex {
  GPoint in;  // where the incoming arrow starts: Root or a slot of the parent
  std::array<GEnd, 2> out;
  auto operator<=>(const GVertex&) const = default;
};

struct RecGraph {
  int g = 0, k = 0;  // genus and number of leaves
  std::vector<GVertex> vertices;

  std::string key() const {
    std::ostringstream os;
    auto pt = [&](const GPoint& p) {
      os << (p.kind == GPoint::Root ? 'r' : p.kind == GPoint::Leaf ? 'l' : 's') << p.index << '.' << p.side;
    };
    for (const auto& v : vertices) {
      os << '[';
      pt(v.in);
      for (const auto& e : v.out) {
        os << '|' << e.kind << ':' << e.child << ':';
        pt(e.other);
      }
      os << ']';
    }
    return os.str();
  }
};

inline int graph_size_bound() { return 3; }

namespace detail {

struct Pending {
  int g;
  GPoint root;
  std::vector<GPoint> ext;
};

inline bool g_present(int g, int n) { return (n >= 1 && 2 * g - 2 + n > 0) || (g == 0 && n == 2); }

inline void set_end(RecGraph& G, const GPoint& at, const GEnd& e) {
  if (at.kind != GPoint::SlotOf) throw InternalError("graph: ends can only be attached to slots");
  GEnd& slot = G.vertices[static_cast<std::size_t>(at.index)].out[static_cast<std::size_t>(at.side)];
  if (slot.kind != GEnd::Empty) throw InternalError("graph: slot used twice");
  slot = e;
}

inline void unroll(RecGraph G, std::vector<Pending> todo, std::vector<RecGraph>& out) {
  if (todo.empty()) {
    out.push_back(std::move(G));
    return;
  }
  Pending p = std::move(todo.back());
  todo.pop_back();
  const int n = 1 + static_cast<int>(p.ext.size());
  if (p.g == 0 && n == 2) {
    // A Bergman edge between the pending root (always a slot) and the other point.
    set_end(G, p.root, GEnd{GEnd::Bergman, -1, p.ext[0]});
    // The far end is a leaf or an ancestor slot; ancestor slots record nothing,
    // since every edge is stored once, at its deeper endpoint.
    unroll(std::move(G), std::move(todo), out);
    return;
  }
  const int w = static_cast<int>(G.vertices.size());
  G.vertices.push_back(GVertex{p.root, {}});
  if (p.root.kind == GPoint::SlotOf) set_end(G, p.root, GEnd{GEnd::Child, w, {}});
  const GPoint L{GPoint::SlotOf, w, 0}, R{GPoint::SlotOf, w, 1};
  // ω_{g-1,n+1}(q, σq, J)
  if (p.g >= 1 && g_present(p.g - 1, n + 1)) {
    auto t = todo;
    std::vector<GPoint> ext{R};
    ext.insert(ext.end(), p.ext.begin(), p.ext.end());
    t.push_back(Pending{p.g - 1, L, std::move(ext)});
    unroll(G, std::move(t), out);
  }
  // Σ' ω_{h,1+|I|}(q, I) ω_{h',1+|I'|}(σq, I')
  const std::size_t m = p.ext.size();
  for (int h = 0; h <= p.g; ++h)
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<GPoint> I, Ic;
      for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1u ? I : Ic).push_back(p.ext[i]);
      if (!g_present(h, 1 + static_cast<int>(I.size())) || !g_present(p.g - h, 1 + static_cast<int>(Ic.size()))) continue;
      auto t = todo;
      t.push_back(Pending{p.g - h, R, Ic});
      t.push_back(Pending{h, L, I});
      unroll(G, std::move(t), out);
    }
}

}  // namespace detail

/// All uncolored graphs for ω_{g,n}; refuses 2g-2+n beyond the size bound.
inline std::vector<RecGraph> enumerate_graphs(int g, int n) {
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) throw DomainError("enumerate_graphs: (g,n) is not stable");
  if (2 * g - 2 + n > graph_size_bound())
    throw DomainError("enumerate_graphs: 2g-2+n = " + std::to_string(2 * g - 2 + n) + " exceeds the bound " +
                      std::to_string(graph_size_bound()));
  RecGraph G;
  G.g = g;
  G.k = n - 1;
  std::vector<GPoint> leaves;
  for (int i = 0; i < n - 1; ++i) leaves.push_back(GPoint{GPoint::Leaf, i, 0});
  std::vector<RecGraph> out;
  detail::unroll(G, {detail::Pending{g, GPoint{}, leaves}}, out);
  return out;
}

/// Number of terms of the unrolled recursion, by the counting recurrence
///   T(g,n) = T(g-1,n+1) + Σ'_{h, I ⊆ J} T(h,1+|I|) T(g-h,1+|J∖I|),  T(0,2) = 1.
inline mpz_class unrolled_term_count(int g, int n) {
  if (g == 0 && n == 2) return 1;
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) return 0;
  mpz_class t = 0;
  if (g >= 1) t += unrolled_term_count(g - 1, n + 1);
  const int m = n - 1;
  for (int h = 0; h <= g; ++h)
    for (int i = 0; i <= m; ++i) {
      if (!detail::g_present(h, 1 + i) || !detail::g_present(g - h, 1 + m - i)) continue;
      t += binomial(m, i) * unrolled_term_count(h, 1 + i) * unrolled_term_count(g - h, 1 + m - i);
    }
  return t;
}

/// The defining conditions; returns the violated ones (empty when valid).
inline std::vector<std::string> graph_violations(const RecGraph& G) {
  std::vector<std::string> bad;
  const int V = static_cast<int>(G.vertices.size());
  const int g = G.g, k = G.k;
  if (V != 2 * g + k - 1) bad.push_back("1: vertex count");
  // 2, 6: exactly one vertex hangs from the root, with an arrowed edge.
  int from_root = 0;
  for (const auto& v : G.vertices) from_root += v.in.kind == GPoint::Root;
  if (from_root != 1) bad.push_back("2/6: one arrowed root edge");
  // 3, 7: each leaf is reached by exactly one non-arrowed edge.
  std::vector<int> leaf_hits(static_cast<std::size_t>(k), 0);
  int arrowed = 1, plain = 0, inner = 0;
  for (const auto& v : G.vertices)
    for (const auto& e : v.out) {
      if (e.kind == GEnd::Child) ++arrowed;
      if (e.kind == GEnd::Bergman) {
        ++plain;
        if (e.other.kind == GPoint::Leaf) {
          if (e.other.index < 0 || e.other.index >= k) bad.push_back("3: leaf index");
          else ++leaf_hits[static_cast<std::size_t>(e.other.index)];
        } else if (e.other.kind == GPoint::SlotOf) {
          ++inner;
        } else {
          bad.push_back("7: non-arrowed edge to the root");
        }
      }
    }
  for (int h : leaf_hits)
    if (h != 1) bad.push_back("3/7: each leaf once, non-arrowed");
  // A slot may also be the far end of inner edges; it must then carry nothing
  // else.  Count far ends per slot.
  std::map<GPoint, int> far;
  for (const auto& v : G.vertices)
    for (const auto& e : v.out)
      if (e.kind == GEnd::Bergman && e.other.kind == GPoint::SlotOf) ++far[e.other];
  for (std::size_t v = 0; v < G.vertices.size(); ++v)
    for (int side = 0; side < 2; ++side)
      if (G.vertices[v].out[static_cast<std::size_t>(side)].kind == GEnd::Empty &&
          !far.count(GPoint{GPoint::SlotOf, static_cast<int>(v), side}))
        bad.push_back("trivalence: unused slot");
  for (const auto& [pt, c] : far) {
    if (pt.index < 0 || pt.index >= V) {
      bad.push_back("9: inner edge endpoint");
      continue;
    }
    const GEnd& e = G.vertices[static_cast<std::size_t>(pt.index)].out[static_cast<std::size_t>(pt.side)];
    if (c != 1 || e.kind != GEnd::Empty) bad.push_back("trivalence: slot used twice");
  }
  if (arrowed + plain != 3 * g + 2 * k - 1) bad.push_back("4: edge count");
  if (plain != k + g || arrowed != 2 * g + k - 1) bad.push_back("5: arrowed/non-arrowed counts");
  // 8: arrows form a spanning binary tree rooted at p.
  std::vector<int> parent(static_cast<std::size_t>(V), -2);
  for (int v = 0; v < V; ++v) {
    const GPoint& in = G.vertices[static_cast<std::size_t>(v)].in;
    if (in.kind == GPoint::Root) parent[static_cast<std::size_t>(v)] = -1;
    else if (in.kind == GPoint::SlotOf && in.index >= 0 && in.index < V) {
      const GEnd& e = G.vertices[static_cast<std::size_t>(in.index)].out[static_cast<std::size_t>(in.side)];
      if (e.kind == GEnd::Child && e.child == v) parent[static_cast<std::size_t>(v)] = in.index;
    }
  }
  auto ancestor_or_self = [&](int a, int d) {
    for (int steps = 0; d >= 0 && steps <= V; ++steps) {
      if (d == a) return true;
      d = parent[static_cast<std::size_t>(d)];
    }
    return false;
  };
  for (int v = 0; v < V; ++v) {
    int x = v, steps = 0;
    while (x >= 0 && steps <= V) {
      x = parent[static_cast<std::size_t>(x)];
      ++steps;
    }
    if (x != -1) bad.push_back("8: arrows do not form a tree rooted at p");
  }
  for (int v = 0; v < V; ++v)
    for (const auto& e : G.vertices[static_cast<std::size_t>(v)].out)
      if (e.kind == GEnd::Child && (e.child < 0 || e.child >= V || parent[static_cast<std::size_t>(e.child)] != v))
        bad.push_back("8: child arrow inconsistent");
  // 9: g inner non-arrowed edges, each between a vertex and an ancestor (or itself).
  if (inner != g) bad.push_back("9: inner edge count");
  for (int v = 0; v < V; ++v)
    for (const auto& e : G.vertices[static_cast<std::size_t>(v)].out)
      if (e.kind == GEnd::Bergman && e.other.kind == GPoint::SlotOf && e.other.index >= 0 && e.other.index < V &&
          !ancestor_or_self(e.other.index, v) && !ancestor_or_self(v, e.other.index))
        bad.push_back("9: inner edge between unrelated vertices");
  // 10: an arrowed child next to an inner edge to a descendant sits on the left.
  for (int v = 0; v < V; ++v) {
    const auto& out = G.vertices[static_cast<std::size_t>(v)].out;
    for (int side = 0; side < 2; ++side) {
      const GEnd& a = out[static_cast<std::size_t>(side)];
      const GEnd& b = out[static_cast<std::size_t>(1 - side)];
      if (a.kind != GEnd::Child) continue;
      // b's slot is the far end of an inner edge from a strict descendant.
      GPoint me{GPoint::SlotOf, v, 1 - side};
      if (b.kind == GEnd::Empty && far.count(me)) {
        bool from_descendant = false;
        for (int d = 0; d < V; ++d)
          for (const auto& e : G.vertices[static_cast<std::size_t>(d)].out)
            if (e.kind == GEnd::Bergman && e.other == me && d != v && ancestor_or_self(v, d)) from_descendant = true;
        if (from_descendant && side != 0) bad.push_back("10: arrowed edge must be the left child");
      }
    }
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

/// Graphviz rendering; the right child edge carries a black dot.
inline std::string graph_to_dot(const RecGraph& G, const std::string& name = "G") {
  std::ostringstream os;
  os << "digraph " << name << " {\n  p [shape=plaintext,label=\"p\"];\n";
  for (int i = 0; i < G.k; ++i) os << "  p" << i + 1 << " [shape=plaintext,label=\"p" << i + 1 << "\"];\n";
  for (std::size_t v = 0; v < G.vertices.size(); ++v) os << "  v" << v << " [shape=circle,label=\"" << v << "\"];\n";
  auto name_of = [&](const GPoint& p) {
    if (p.kind == GPoint::Root) return std::string("p");
    if (p.kind == GPoint::Leaf) return "p" + std::to_string(p.index + 1);
    return "v" + std::to_string(p.index);
  };
  for (std::size_t v = 0; v < G.vertices.size(); ++v) {
    const GVertex& x = G.vertices[v];
    if (x.in.kind == GPoint::Root) os << "  p -> v" << v << ";\n";
    for (int side = 0; side < 2; ++side) {
      const GEnd& e = x.out[static_cast<std::size_t>(side)];
      std::string tail = side == 1 ? ",arrowtail=dot,dir=both" : "";
      if (e.kind == GEnd::Child) os << "  v" << v << " -> v" << e.child << " [label=\"" << (side ? "R" : "L") << "\"" << tail << "];\n";
      if (e.kind == GEnd::Bergman) {
        os << "  v" << v << " -> " << name_of(e.other) << " [style=dashed,arrowhead=none,taillabel=\"" << (side ? "R" : "L")
           << "\"" << (e.other.kind == GPoint::SlotOf ? std::string(",headlabel=\"") + (e.other.side ? "R" : "L") + "\"" : "")
           << "];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Evaluation.

/// Weight of one colored graph (colors[v] = branchpoint of vertex v), as a
/// form in (p, p_1, ..., p_k), and the sum over graphs and colorings.
template <Field F>
class GraphEvaluator {
 public:
  GraphEvaluator(const SpectralCurve<F>& c, Kernel<F> kernel, int window = 16)
      : curve_(c), kernel_(std::move(kernel)), window_(window) {}

  MultiForm<F> weight(const RecGraph& G, const std::vector<int>& colors) {
    for (int attempt = 0;; ++attempt) {
      try {
        return weight_at(G, colors);
      } catch (const PrecisionError&) {
        if (attempt >= 6) throw;
        window_ += std::max(4, window_ / 2);
        frames_.clear();
      }
    }
  }

  /// Σ_G Σ_colorings w(G).
  MultiForm<F> sum(const std::vector<RecGraph>& graphs) {
    const int nb = static_cast<int>(curve_.branchpoints.size());
    MultiForm<F> total(graphs.empty() ? 0 : graphs[0].k + 1);
    for (const auto& G : graphs) {
      const int V = static_cast<int>(G.vertices.size());
      std::vector<int> colors(static_cast<std::size_t>(V), 0);
      while (true) {
        total = total + weight(G, colors);
        int i = 0;
        while (i < V && ++colors[static_cast<std::size_t>(i)] == nb) colors[static_cast<std::size_t>(i++)] = 0;
        if (i == V) break;
      }
    }
    return total;
  }

  int window() const { return window_; }

 private:
  using S = LaurentSeries<F>;
  // Variables: 0 = root p, 1..k = leaves, then 1+k+2v+side for slots.
  using Mono = std::map<int, Slot>;
  using Form = std::map<Mono, F>;

  struct Frame {
    LocalFrame<F> f;
    std::function<S(int)> K;
  };

  Frame& frame(int bp) {
    auto it = frames_.find(bp);
    if (it != frames_.end()) return it->second;
    Frame fr;
    fr.f = local_frame(curve_, static_cast<std::size_t>(bp), window_);
    fr.K = kernel_.bind(curve_, fr.f);
    return frames_.emplace(bp, std::move(fr)).first->second;
  }

  int var_of(const RecGraph& G, const GPoint& p) const {
    if (p.kind == GPoint::Root) return 0;
    if (p.kind == GPoint::Leaf) return 1 + p.index;
    return 1 + G.k + 2 * p.index + p.side;
  }

  /// Expansion of dz/(z - b)^k at z = a + w(ζ), times w'(ζ), where w is ζ or σ.
  S basis_at(Frame& fr, const Slot& s, bool sigma) {
    const F a = fr.f.a;
    const F b = curve_.branchpoints[static_cast<std::size_t>(s.bp)].a;
    S r;
    if (a == b) {
      r = S::monomial(F(1L), -s.order, kExact, kLocalVar);
    } else {
      S lin = S::variable(kLocalVar) + S::constant(a - b, kExact, kLocalVar);
      r = lin.inverse(window_).pow(s.order, window_);
    }
    if (!sigma) return r;
    return S::mul(r.compose(fr.f.sigma, window_), fr.f.dsigma, window_);
  }

  /// Form-valued series: monomial in the other variables -> ζ-series.
  using SForm = std::map<Mono, S>;

  static SForm sf_mul(const SForm& a, const SForm& b, int cap) {
    SForm r;
    for (const auto& [ma, sa] : a)
      for (const auto& [mb, sb] : b) {
        Mono m = ma;
        bool clash = false;
        for (const auto& [v, s] : mb)
          if (!m.emplace(v, s).second) clash = true;
        if (clash) throw InternalError("graph weight: variable used twice");
        S p = S::mul(sa, sb, cap);
        auto [it, fresh] = r.try_emplace(m, p);
        if (!fresh) it->second += p;
      }
    return r;
  }

  Form vertex_form(const RecGraph& G, const std::vector<int>& colors, int v, std::map<int, Form>& done) {
    const GVertex& x = G.vertices[static_cast<std::size_t>(v)];
    const int bp = colors[static_cast<std::size_t>(v)];
    Frame& fr = frame(bp);
    const int w = window_;
    // Collect factors per slot.
    SForm bracket{{Mono{}, S::constant(F(1L), kExact, kLocalVar)}};
    int pole_budget = 0;
    std::vector<std::pair<int, GPoint>> heads;  // (side, far point) Bergman heads to expand later
    bool self_loop = false;
    for (int side = 0; side < 2; ++side) {
      const GEnd& e = x.out[static_cast<std::size_t>(side)];
      const int slot_var = var_of(G, GPoint{GPoint::SlotOf, v, side});
      if (e.kind == GEnd::Child) {
        const Form& cf = done.at(e.child);
        SForm part;
        for (const auto& [m, c] : cf) {
          Mono rest = m;
          auto it = rest.find(slot_var);
          if (it == rest.end()) throw InternalError("graph weight: child form lacks its slot variable");
          Slot s = it->second;
          rest.erase(it);
          if (s.bp == bp) pole_budget = std::max(pole_budget, s.order);
          S term = basis_at(fr, s, side == 1).scaled(c);
          auto [jt, fresh] = part.try_emplace(rest, term);
          if (!fresh) jt->second += term;
        }
        bracket = sf_mul(bracket, part, w);
      } else if (e.kind == GEnd::Bergman) {
        if (e.other == GPoint{GPoint::SlotOf, v, 1 - side}) {
          if (side == 0) self_loop = true;
          else continue;
        } else {
          heads.push_back({side, e.other});
        }
      }
    }
    // A slot that is the far end of inner edges from descendants appears as a
    // variable of the child forms; evaluate it at this vertex.
    for (int side = 0; side < 2; ++side) {
      if (x.out[static_cast<std::size_t>(side)].kind != GEnd::Empty) continue;
      if (self_loop && side == 1) continue;
      const int slot_var = var_of(G, GPoint{GPoint::SlotOf, v, side});
      SForm next;
      for (const auto& [m, ser] : bracket) {
        Mono rest = m;
        S term = ser;
        if (auto it = rest.find(slot_var); it != rest.end()) {
          if (it->second.bp == bp) pole_budget += it->second.order;
          term = S::mul(term, basis_at(fr, it->second, side == 1), w);
          rest.erase(it);
        }
        auto [jt, fresh] = next.try_emplace(rest, term);
        if (!fresh) jt->second += term;
      }
      bracket = std::move(next);
    }
    // Edges from this vertex's slots to ancestors and leaves are expanded here.
    if (self_loop) {
      S d = S::variable(kLocalVar) - fr.f.sigma;
      S b = S::mul(fr.f.dsigma, d.inverse(w + 4).pow(2, w), w);
      bracket = sf_mul(bracket, SForm{{Mono{}, b}}, w);
      pole_budget += 2;
    }
    int cutoff = 0;
    for (const auto& [m, s] : bracket)
      if (!s.is_known_zero()) cutoff = std::max(cutoff, -s.valuation());
    cutoff = std::max(cutoff, pole_budget);
    for (const auto& [side, far] : heads) {
      // B(a + w, z) = Σ_m (m+1) w^m dw dz/(z - a)^(m+2), w = ζ or σ(ζ)
      SForm part;
      const int fv = var_of(G, far);
      S wser = side == 0 ? S::variable(kLocalVar) : fr.f.sigma;
      S wpow = S::constant(F(1L), kExact, kLocalVar);
      for (int m = 0; m <= cutoff + 1; ++m) {
        S term = wpow.scaled(F(static_cast<long>(m + 1)));
        if (side == 1) term = S::mul(term, fr.f.dsigma, w);
        part.emplace(Mono{{fv, Slot{bp, m + 2}}}, term);
        wpow = S::mul(wpow, wser, w);
      }
      bracket = sf_mul(bracket, part, w);
    }
    // Residue against the kernel: K(x, q) = Σ_k K_k dx/(x - a)^k.
    const int xv = var_of(G, x.in);
    Form out;
    for (const auto& [m, s] : bracket) {
      if (s.is_known_zero()) {
        if (s.hi() <= 0) throw PrecisionError("graph weight: bracket unknown at the needed order", 1);
        continue;
      }
      int val = s.valuation();
      for (int k = 1; k <= 2 - val; ++k) {
        F c = S::product_coeff(fr.K(k), s, -1);
        if (c.is_zero()) continue;
        Mono key = m;
        key.emplace(xv, Slot{bp, k});
        auto [it, fresh] = out.try_emplace(key, c);
        if (!fresh) it->second += c;
      }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  }

  MultiForm<F> weight_at(const RecGraph& G, const std::vector<int>& colors) {
    const int V = static_cast<int>(G.vertices.size());
    if (static_cast<int>(colors.size()) != V) throw ValidationError("graph weight: one color per vertex");
    // Post-order: children have larger indices than parents in generated graphs,
    // but do not rely on it.
    std::vector<int> order;
    std::vector<int> state(static_cast<std::size_t>(V), 0);
    std::function<void(int)> visit = [&](int v) {
      if (state[static_cast<std::size_t>(v)] == 2) return;
      if (state[static_cast<std::size_t>(v)] == 1) throw ValidationError("graph weight: arrows contain a cycle");
      state[static_cast<std::size_t>(v)] = 1;
      for (const auto& e : G.vertices[static_cast<std::size_t>(v)].out)
        if (e.kind == GEnd::Child) visit(e.child);
      state[static_cast<std::size_t>(v)] = 2;
      order.push_back(v);
    };
    int root = -1;
    for (int v = 0; v < V; ++v)
      if (G.vertices[static_cast<std::size_t>(v)].in.kind == GPoint::Root) root = v;
    if (root < 0) throw ValidationError("graph weight: no vertex hangs from the root");
    visit(root);
    // Inner edges pointing at a slot: the deeper endpoint carries the edge, so
    // the ancestor sees it through the child forms.  A vertex's own far ends are
    // produced by descendants, which are visited first.
    std::map<int, Form> done;
    for (int v : order) done[v] = vertex_form(G, colors, v, done);
    MultiForm<F> m(G.k + 1);
    for (const auto& [mono, c] : done.at(root)) {
      Slots s(static_cast<std::size_t>(G.k + 1));
      if (static_cast<int>(mono.size()) != G.k + 1) throw InternalError("graph weight: open slot variables remain");
      for (const auto& [var, sl] : mono) {
        if (var > G.k) throw InternalError("graph weight: open slot variables remain");
        s[static_cast<std::size_t>(var)] = sl;
      }
      m.add(s, c);
    }
    return m;
  }

  SpectralCurve<F> curve_;
  Kernel<F> kernel_;
  int window_;
  std::map<int, Frame> frames_;
};

}  // namespace toprec
