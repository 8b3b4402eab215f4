#pragma once

// Independent gluing oracle: explicit vertex graph plus union-find, no path
// walking.

#include <numeric>
#include <random>
#include <vector>

#include "skein/diagram.hpp"

namespace oracle {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Glued {
  std::vector<int> pairing;
  int loops = 0;
};

// lower: k -> l, upper: l -> m.
inline Glued glue(const skein::PlanarMatching& lower, const skein::PlanarMatching& upper) {
  const int k = lower.bottom(), l = lower.top(), m = upper.top();
  // vertices: lower points [0, k+l), upper points [k+l, k+2l+m)
  const int off = k + l;
  UnionFind uf(k + 2 * l + m);
  for (int p = 0; p < k + l; ++p) uf.unite(p, lower.partner(p));
  for (int p = 0; p < l + m; ++p) uf.unite(off + p, off + upper.partner(p));
  for (int j = 0; j < l; ++j) uf.unite(k + j, off + j);
  std::vector<int> ext;
  for (int i = 0; i < k; ++i) ext.push_back(i);
  for (int j = 0; j < m; ++j) ext.push_back(off + l + j);
  Glued g;
  g.pairing.assign(k + m, -1);
  for (int a = 0; a < k + m; ++a)
    for (int b = 0; b < k + m; ++b)
      if (a != b && uf.find(ext[a]) == uf.find(ext[b])) g.pairing[a] = b;
  std::vector<char> has_ext(k + 2 * l + m, 0);
  for (int v : ext) has_ext[uf.find(v)] = 1;
  std::vector<char> counted(k + 2 * l + m, 0);
  for (int v = 0; v < k + 2 * l + m; ++v) {
    int r = uf.find(v);
    if (!has_ext[r] && !counted[r]) {
      counted[r] = 1;
      ++g.loops;
    }
  }
  return g;
}

inline skein::PlanarMatching random_matching(int k, int l, std::mt19937& rng) {
  auto all = skein::enumerate_matchings(k, l);
  std::uniform_int_distribution<size_t> d(0, all.size() - 1);
  return all[d(rng)];
}

inline skein::TLMorphism random_morphism(const skein::Ring& ring, int k, int l, std::mt19937& rng,
                                         int terms = 3) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<skein::Term> t;
  for (int i = 0; i < terms; ++i)
    t.emplace_back(random_matching(k, l, rng), ring.integer(c(rng)) + ring.v_power(c(rng)));
  return skein::TLMorphism(ring, k, l, std::move(t));
}

}  // namespace oracle
