#include <gtest/gtest.h>

#include <chrono>
#include <numeric>

#include "toprec/catalog.hpp"
#include "toprec/extract.hpp"
#include "toprec/kernel.hpp"
#include "toprec/recursion.hpp"

using namespace toprec;

namespace {

/// Rooted quadrangulations with `faces` faces by genus, counted as pairs
/// (α, φ) on 4F darts: α a fixed-point-free involution (edges), φ a fixed
/// product of 4-cycles (faces), vertices the cycles of α∘φ.
std::map<int, Rat> quadrangulations_by_genus(int faces) {
  const int N = 4 * faces;
  std::vector<int> phi(static_cast<std::size_t>(N)), alpha(static_cast<std::size_t>(N), -1);
  for (int i = 0; i < N; ++i) phi[static_cast<std::size_t>(i)] = (i % 4 == 3) ? i - 3 : i + 1;
  std::map<int, long> count;
  auto finish = [&] {
    std::vector<int> parent(static_cast<std::size_t>(N));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < N; ++i) {
      parent[static_cast<std::size_t>(find(i))] = find(alpha[static_cast<std::size_t>(i)]);
      parent[static_cast<std::size_t>(find(i))] = find(phi[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < N; ++i)
      if (find(i) != find(0)) return;
    std::vector<bool> seen(static_cast<std::size_t>(N), false);
    int V = 0;
    for (int i = 0; i < N; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      ++V;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = alpha[static_cast<std::size_t>(phi[static_cast<std::size_t>(j)])])
        seen[static_cast<std::size_t>(j)] = true;
    }
    int E = 2 * faces;
    ++count[(2 - V + E - faces) / 2];
  };
  std::function<void()> rec = [&] {
    int i = 0;
    while (i < N && alpha[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == N) return finish();
    for (int j = i + 1; j < N; ++j) {
      if (alpha[static_cast<std::size_t>(j)] >= 0) continue;
      alpha[static_cast<std::size_t>(i)] = j;
      alpha[static_cast<std::size_t>(j)] = i;
      rec();
      alpha[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(j)] = -1;
    }
  };
  rec();
  std::map<int, Rat> out;
  Rat norm = Rat(N) / (pow(Rat(4), faces) * Rat(factorial(faces)));
  for (const auto& [g, c] : count) out[g] = Rat(c) * norm;
  return out;
}

/// One-vertex rooted quadrangulations with F faces (genus (F+1)/2), by the
/// hook-character formula: only hooks are nonzero on the n-cycle, and
/// Σ_k χ^{(n-k,1^k)}(ρ) y^k = ∏_i (1 - (-y)^{ρ_i}) / (1 + y).
Rat one_vertex_quadrangulations(int faces) {
  const int n = 4 * faces;
  auto hooks = [&](int part, int count) {
    std::vector<Rat> poly{Rat(1)};
    for (int i = 0; i < count; ++i) {
      std::vector<Rat> next(poly.size() + static_cast<std::size_t>(part), Rat(0));
      Rat lead = (part % 2) ? Rat(1) : Rat(-1);  // -(-1)^part
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j] += poly[j];
        next[j + static_cast<std::size_t>(part)] += lead * poly[j];
      }
      poly = next;
    }
    std::vector<Rat> q(static_cast<std::size_t>(n), Rat(0));  // divide by 1 + y
    Rat carry(0);
    for (int k = 0; k < n; ++k) {
      carry = poly[static_cast<std::size_t>(k)] - carry;
      q[static_cast<std::size_t>(k)] = carry;
    }
    return q;
  };
  auto chi_edges = hooks(2, n / 2), chi_faces = hooks(4, faces);
  Rat sum(0);
  for (int k = 0; k < n; ++k) {
    Rat dim(binomial(n - 1, k));
    Rat cyc = (k % 2) ? Rat(-1) : Rat(1);
    sum += chi_edges[static_cast<std::size_t>(k)] * chi_faces[static_cast<std::size_t>(k)] * cyc / dim;
  }
  Rat edge_class = Rat(factorial(n)) / (pow(Rat(2), n / 2) * Rat(factorial(n / 2)));
  return edge_class * sum / (pow(Rat(4), faces) * Rat(factorial(faces)));
}

/// Transitive tuples of r transpositions in S_d whose product has cycle type μ.
long transposition_tuples(int d, int r, std::vector<int> mu) {
  std::sort(mu.rbegin(), mu.rend());
  std::vector<std::pair<int, int>> tr;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) tr.emplace_back(a, b);
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> used;
  long total = 0;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == r) {
      std::vector<int> parent(static_cast<std::size_t>(d));
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      for (auto [a, b] : used) parent[static_cast<std::size_t>(find(a))] = find(b);
      for (int i = 0; i < d; ++i)
        if (find(i) != find(0)) return;
      std::vector<bool> seen(static_cast<std::size_t>(d), false);
      std::vector<int> type;
      for (int i = 0; i < d; ++i) {
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = true;
          ++len;
        }
        if (len) type.push_back(len);
      }
      std::sort(type.rbegin(), type.rend());
      if (type == mu) ++total;
      return;
    }
    for (auto [a, b] : tr) {
      std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
      used.emplace_back(a, b);
      rec(depth + 1);
      used.pop_back();
      std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    }
  };
  rec(0);
  return total;
}

/// |Aut μ| ∏ μ_i (transitive tuples) / d!.
Rat hurwitz_oracle(int g, const std::vector<int>& mu) {
  int d = 0, n = static_cast<int>(mu.size());
  Rat prod(1);
  std::map<int, long> mult;
  for (int m : mu) {
    d += m;
    prod *= Rat(m);
    ++mult[m];
  }
  for (const auto& [v, k] : mult) prod *= Rat(factorial(k));
  return prod * Rat(transposition_tuples(d, 2 * g - 2 + n + d, mu)) / Rat(factorial(d));
}

OmegaTable<Coeff>& maps_table() {
  static OmegaTable<Coeff> t(catalog_get("maps-quad"), printed_maps_kernel<Coeff>());
  return t;
}

OmegaTable<Rat>& lambert_table() {
  static OmegaTable<Rat> t(lambert_curve<Rat>(), printed_hurwitz_kernel<Rat>());
  return t;
}

}  // namespace

TEST(Extract, InfinityExpansion) {
  auto z = expand_at_infinity(Rat(1), Rat(0), 7);
  EXPECT_EQ(z.valuation(), -1);
  EXPECT_EQ(z.coeff(-1), Rat(1));
  EXPECT_EQ(z.coeff(1), Rat(-1));
  EXPECT_EQ(z.coeff(3), Rat(-1));
  EXPECT_EQ(z.coeff(5), Rat(-2));
  EXPECT_EQ(z.coeff(0), Rat(0));
}

TEST(Extract, OracleSelfConsistency) {
  auto one = quadrangulations_by_genus(1);
  EXPECT_EQ(one[0], Rat(2));
  EXPECT_EQ(one[1], Rat(1));
  EXPECT_EQ(one_vertex_quadrangulations(1), Rat(1));
  EXPECT_EQ(one_vertex_quadrangulations(3), quadrangulations_by_genus(3)[2]);
  EXPECT_EQ(hurwitz_oracle(0, {3}), Rat(3));
}

TEST(Extract, PlanarCountsMatchEnumeration) {
  MapCountTable t = map_count_extract_disk(maps_table().curve(), 3);
  for (int f = 1; f <= 3; ++f) EXPECT_EQ(t.by_faces.at(f), quadrangulations_by_genus(f)[0]) << f;
}

TEST(Extract, HigherGenusCountsMatchEnumeration) {
  auto& t = maps_table();
  std::map<int, std::map<int, Rat>> brute;
  for (int f = 1; f <= 3; ++f) brute[f] = quadrangulations_by_genus(f);
  for (int g = 1; g <= 2; ++g) {
    MapCountTable tab = map_count_extract(t.curve(), t.omega_sym(g, 1), g, 3);
    for (int f = 1; f <= 3; ++f) EXPECT_EQ(tab.by_faces.at(f), brute[f][g]) << "g=" << g << " faces=" << f;
  }
  EXPECT_EQ(map_count_extract(t.curve(), t.omega_sym(2, 1), 2, 2).by_faces.at(2), Rat(0));
}

TEST(Extract, GenusThreeOneVertexCount) {
  auto& t = maps_table();
  MapCountTable tab = map_count_extract(t.curve(), t.omega_sym(3, 1), 3, 5);
  EXPECT_EQ(tab.by_faces.at(5), one_vertex_quadrangulations(5));
  EXPECT_EQ(tab.by_faces.at(4), Rat(0));
}

TEST(Extract, OddMarkedFaceIsRejected) {
  auto& t = maps_table();
  EXPECT_THROW(map_count_extract(t.curve(), t.omega_sym(1, 1), 1, 3, 3), ValidationError);
  EXPECT_THROW(map_count_extract_disk(t.curve(), 3, 5), ValidationError);
}

TEST(Extract, DiskAndCylinderHurwitz) {
  for (const auto& e : hurwitz_extract_disk(6).entries) EXPECT_EQ(e.number, hurwitz_oracle(0, e.mu)) << e.mu[0];
  for (const auto& e : hurwitz_extract_cylinder(4).entries)
    EXPECT_EQ(e.number, hurwitz_oracle(0, e.mu)) << e.mu[0] << "," << e.mu[1];
}

TEST(Extract, StableHurwitzNumbersMatchTranspositionCount) {
  auto& t = lambert_table();
  for (auto [g, n, deg] : std::vector<std::tuple<int, int, int>>{{1, 1, 5}, {0, 3, 4}, {1, 2, 4}, {2, 1, 4}, {0, 4, 4}}) {
    HurwitzTable h = hurwitz_extract(t.omega_sym(g, n), g, deg);
    EXPECT_FALSE(h.entries.empty());
    for (const auto& e : h.entries) {
      std::string mu;
      for (int m : e.mu) mu += std::to_string(m) + " ";
      EXPECT_EQ(e.number, hurwitz_oracle(g, e.mu)) << "g=" << g << " mu=" << mu;
    }
  }
}

TEST(Extract, HurwitzTorusValues) {
  HurwitzTable h = hurwitz_extract(lambert_table().omega_sym(1, 1), 1, 5);
  std::vector<Rat> want{Rat(0), Rat(1), Rat(27), Rat(640), Rat(15625)};
  ASSERT_EQ(h.entries.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(h.entries[i].number, want[i]);
}
