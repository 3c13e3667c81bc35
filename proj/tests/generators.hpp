#pragma once

// Seeded random profiles, histograms, graphs and permutations for tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "merv/core.hpp"
#include "merv/graph.hpp"

namespace merv::testgen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Permutation random_perm(Rng& rng, int m) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

inline Preference random_pref(Rng& rng, int m, Kind kind, int size) {
  std::vector<int> alts(m);
  std::iota(alts.begin(), alts.end(), 1);
  std::shuffle(alts.begin(), alts.end(), rng);
  alts.resize(size);
  return Preference(kind, std::move(alts));
}

inline Preference random_pref(Rng& rng, int m) {
  Kind kind = uniform(rng, 0, 1) ? Kind::List : Kind::Committee;
  return random_pref(rng, m, kind, uniform(rng, 1, m));
}

/// n votes drawn from a small pool so repeats (and symmetry) are common.
inline Profile random_profile(Rng& rng, int m, int n) {
  int pool_size = uniform(rng, 1, std::max(1, n));
  std::vector<Preference> pool;
  for (int i = 0; i < pool_size; ++i) pool.push_back(random_pref(rng, m));
  std::vector<Preference> votes;
  for (int i = 0; i < n; ++i) votes.push_back(pool[uniform(rng, 0, pool_size - 1)]);
  return Profile(m, std::move(votes));
}

inline Profile random_profile_of(Rng& rng, int m, int n, Kind kind, int size) {
  std::vector<Preference> votes;
  for (int i = 0; i < n; ++i) votes.push_back(random_pref(rng, m, kind, size));
  return Profile(m, std::move(votes));
}

inline ColoredGraph random_graph(Rng& rng, int n, double p, int colors = 1) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  std::vector<int> col(n, 0);
  if (colors > 1)
    for (int& c : col) c = uniform(rng, 0, colors - 1);
  return ColoredGraph(n, std::move(edges), std::move(col));
}

/// A random 0-based relabeling.
inline std::vector<int> random_labeling(Rng& rng, int n) {
  std::vector<int> lab(n);
  std::iota(lab.begin(), lab.end(), 0);
  std::shuffle(lab.begin(), lab.end(), rng);
  return lab;
}

/// Graphs with plenty of symmetry: disjoint cycles, circulants, grids,
/// complete bipartite graphs, hypercube-like products.
inline ColoredGraph structured_graph(Rng& rng, int max_n) {
  std::vector<Edge> edges;
  int kind = uniform(rng, 0, 4);
  int n = 0;
  auto add = [&](int u, int v) {
    if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
  };
  if (kind == 0) {  // disjoint cycles of one length
    int len = uniform(rng, 3, 8), k = std::max(1, uniform(rng, 1, max_n / len));
    n = len * k;
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < len; ++i) add(c * len + i, c * len + (i + 1) % len);
  } else if (kind == 1) {  // circulant
    n = uniform(rng, 5, max_n);
    int jumps = uniform(rng, 1, 3);
    std::vector<int> js;
    for (int j = 0; j < jumps; ++j) js.push_back(uniform(rng, 1, n / 2));
    for (int i = 0; i < n; ++i)
      for (int j : js) add(i, (i + j) % n);
  } else if (kind == 2) {  // grid or torus
    int a = uniform(rng, 2, 7), b = uniform(rng, 2, std::max(2, max_n / a));
    bool torus = uniform(rng, 0, 1);
    n = a * b;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) {
        if (j + 1 < b || (torus && b > 2)) add(i * b + j, i * b + (j + 1) % b);
        if (i + 1 < a || (torus && a > 2)) add(i * b + j, ((i + 1) % a) * b + j);
      }
  } else if (kind == 3) {  // complete bipartite
    int a = uniform(rng, 1, 8), b = uniform(rng, 1, 8);
    n = a + b;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) add(i, a + j);
  } else {  // hypercube
    int d = uniform(rng, 2, 5);
    n = 1 << d;
    for (int v = 0; v < n; ++v)
      for (int b = 0; b < d; ++b) add(v, v ^ (1 << b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return ColoredGraph(n, std::move(edges));
}

}  // namespace merv::testgen
