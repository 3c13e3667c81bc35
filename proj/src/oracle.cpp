#include "merv/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace merv::oracle {
namespace {

void check_alternatives(int m, int cap) {
  if (m > cap)
    throw BudgetExceeded("oracle refuses m=" + std::to_string(m) + " (cap " + std::to_string(cap) + ")");
}

void check_vertices(const ColoredGraph& g) {
  if (g.num_vertices() > kMaxVertices)
    throw BudgetExceeded("oracle refuses graphs with more than " + std::to_string(kMaxVertices) + " vertices");
}

OrderedPartition orbits_of(int n, const std::vector<std::vector<int>>& images, int offset) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& img : images)
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(img[v] - offset);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v + offset);
  OrderedPartition out;
  for (auto& [r, cell] : groups) out.push_back(std::move(cell));
  return normalize_partition(std::move(out));
}

}  // namespace

std::vector<Permutation> stabilizer(const Histogram& h) {
  check_alternatives(h.m(), kMaxAlternatives);
  std::vector<Permutation> out;
  std::vector<int> image(h.m());
  std::iota(image.begin(), image.end(), 1);
  do {
    Permutation sigma(image);
    if (apply_perm(sigma, h) == h) out.push_back(sigma);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

OrderedPartition ap_brute(const Histogram& h) {
  std::vector<std::vector<int>> images;
  for (const auto& s : stabilizer(h)) images.emplace_back(s.image().begin(), s.image().end());
  return orbits_of(h.m(), images, 1);
}

std::vector<Decision> fpd_brute(const Histogram& h, DecisionSpace space, std::uint64_t cap) {
  auto stab = stabilizer(h);
  std::vector<Decision> out;
  for (const auto& d : enumerate_decisions(space, h.m(), cap)) {
    bool fixed = std::all_of(stab.begin(), stab.end(), [&](const Permutation& s) { return apply_perm(s, d) == d; });
    if (fixed) out.push_back(d);
  }
  return out;
}

bool anr_brute(const Histogram& h, DecisionSpace space) { return !fpd_brute(h, space).empty(); }

AxiomBits anr_axiom_check(const ResoluteRule& rule, const Profile& p, int reorders, std::uint64_t seed) {
  check_alternatives(p.m(), kMaxAxiomAlternatives);
  AxiomBits bits;
  bits.res = true;
  Decision base = rule(p);

  bits.ano = true;
  std::mt19937_64 rng(seed);
  std::vector<Preference> votes(p.votes().begin(), p.votes().end());
  for (int r = 0; r < reorders && bits.ano; ++r) {
    std::shuffle(votes.begin(), votes.end(), rng);
    bits.ano = rule(Profile(p.m(), votes)) == base;
  }

  bits.neu = true;
  std::vector<int> image(p.m());
  std::iota(image.begin(), image.end(), 1);
  do {
    Permutation sigma(image);
    if (!(rule(apply_perm(sigma, p)) == apply_perm(sigma, base))) {
      bits.neu = false;
      break;
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return bits;
}

CanonResult canon_brute(const ColoredGraph& g) {
  check_vertices(g);
  const int n = g.num_vertices();
  std::vector<int> sorted_colors = g.colors();
  std::sort(sorted_colors.begin(), sorted_colors.end());
  CanonResult best;
  best.canon_colors = sorted_colors;
  bool have = false;
  std::vector<int> lab(n);
  std::iota(lab.begin(), lab.end(), 0);
  do {
    bool admissible = true;
    for (int v = 0; v < n && admissible; ++v) admissible = sorted_colors[lab[v]] == g.colors()[v];
    if (!admissible) continue;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(std::min(lab[u], lab[v]), std::max(lab[u], lab[v]));
    std::sort(edges.begin(), edges.end());
    if (!have || edges < best.canon_edges) {
      have = true;
      best.canon_edges = std::move(edges);
      best.labeling = lab;
    }
  } while (std::next_permutation(lab.begin(), lab.end()));
  return best;
}

bool gi_brute(const ColoredGraph& a, const ColoredGraph& b) {
  check_vertices(a);
  check_vertices(b);
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const int n = a.num_vertices();
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = a.colors()[v] == b.colors()[f[v]];
    for (auto [u, v] : a.edges()) {
      if (!ok) break;
      ok = b.adjacent(f[u], f[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

std::vector<std::vector<int>> automorphisms_brute(const ColoredGraph& g) {
  check_vertices(g);
  const int n = g.num_vertices();
  std::vector<std::vector<int>> out;
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = g.colors()[v] == g.colors()[f[v]];
    for (auto [u, v] : g.edges()) {
      if (!ok) break;
      ok = g.adjacent(f[u], f[v]);
    }
    if (ok) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

bool ga_brute(const ColoredGraph& g) { return automorphisms_brute(g).size() > 1; }

OrderedPartition orbits_brute(const ColoredGraph& g) {
  return orbits_of(g.num_vertices(), automorphisms_brute(g), 0);
}

}  // namespace merv::oracle
