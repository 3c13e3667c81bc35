#include "merv/encode.hpp"

#include <algorithm>
#include <map>

namespace merv {

char role_letter(Role role) { return "ANVTXY"[static_cast<int>(role)]; }

std::size_t EncodedGraph::count(Role role) const {
  return static_cast<std::size_t>(std::count(roles.begin(), roles.end(), role));
}

bool is_simple_c2(const Histogram& h) {
  return std::all_of(h.entries().begin(), h.entries().end(), [](const HistogramEntry& e) {
    return e.multiplicity == 1 && e.preference.is_committee() && e.preference.size() == 2;
  });
}

ColoredGraph m2_hist_to_graph(const Histogram& h) {
  if (!is_simple_c2(h)) throw std::invalid_argument("histogram is not a simple 2-committee histogram");
  std::vector<Edge> edges;
  edges.reserve(h.distinct());
  for (const auto& e : h.entries()) edges.emplace_back(e.preference[0] - 1, e.preference[1] - 1);
  return ColoredGraph(h.m(), std::move(edges));
}

Histogram graph_to_m2_hist(const ColoredGraph& g) {
  if (!g.uncolored()) throw std::invalid_argument("alternative graphs are uncoloured");
  std::vector<HistogramEntry> entries;
  entries.reserve(g.num_edges());
  for (auto [u, v] : g.edges()) entries.push_back({Preference::committee({u + 1, v + 1}), 1});
  return Histogram(g.num_vertices(), std::move(entries));
}

EncodedGraph common_hist_to_graph(const Histogram& h) {
  if (h.m() < 2) throw std::invalid_argument("general encoding needs at least two alternatives");
  if (h.empty()) throw std::invalid_argument("general encoding needs a non-empty histogram");
  const int m = h.m();
  const auto entries = h.entries();
  const int distinct = static_cast<int>(entries.size());
  const std::int64_t n = h.n();

  EncodedGraph out;
  std::vector<Edge> edges;
  auto add = [&](Role role) {
    out.roles.push_back(role);
    out.alt_of.push_back(0);
    return static_cast<int>(out.roles.size()) - 1;
  };
  for (int a = 1; a <= m; ++a) {
    add(Role::A);
    out.alt_of.back() = a;
  }
  for (int j = 0; j < distinct; ++j) add(Role::N);

  for (int j = 0; j < distinct; ++j) {
    const Preference& r = entries[j].preference;
    const int rv = m + j;
    if (r.is_committee()) {
      for (int a : r.members()) edges.emplace_back(a - 1, rv);
      continue;
    }
    for (int pos = 1; pos <= r.size(); ++pos) {
      int prev = r[pos - 1] - 1;
      for (int i = 1; i < pos; ++i) {
        int v = add(Role::V);
        edges.emplace_back(prev, v);
        prev = v;
      }
      edges.emplace_back(prev, rv);
    }
  }
  for (int j = 0; j < distinct; ++j) {
    int prev = m + j;
    for (std::int64_t t = 0; t < entries[j].multiplicity; ++t) {
      int v = add(Role::T);
      edges.emplace_back(prev, v);
      prev = v;
    }
  }
  int x = add(Role::X);
  for (int a = 0; a < m; ++a) edges.emplace_back(x, a);
  int prev = x;
  for (std::int64_t i = 0; i < n + 1; ++i) {
    int v = add(Role::X);
    edges.emplace_back(prev, v);
    prev = v;
  }
  int y = add(Role::Y);
  for (int j = 0; j < distinct; ++j) edges.emplace_back(y, m + j);
  prev = y;
  for (std::int64_t i = 0; i < n + 2; ++i) {
    int v = add(Role::Y);
    edges.emplace_back(prev, v);
    prev = v;
  }
  out.graph = ColoredGraph(static_cast<int>(out.roles.size()), std::move(edges));
  return out;
}

namespace {

[[noreturn]] void decode_fail(const std::string& why) {
  throw Error("histogram decoding failed: " + why);
}

// Walks from `from` through `first` along degree-2 vertices. Stops at the
// first vertex that is in `stop` or whose degree is not 2.
std::vector<int> walk(const ColoredGraph& g, int from, int first, const std::vector<char>& stop) {
  std::vector<int> path{from, first};
  int prev = from, cur = first;
  while (!stop[cur] && g.degree(cur) == 2) {
    auto nb = g.neighbors(cur);
    int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  return path;
}

}  // namespace

Permutation decode_representative(const Histogram& h, const CanonOptions& opts) {
  EncodedGraph enc = common_hist_to_graph(h);
  CanonResult cr = canon(enc.graph, opts);
  const ColoredGraph g = enc.graph.relabeled(cr.labeling);
  const int nv = g.num_vertices();
  const std::int64_t n = h.n();
  const int m = h.m();

  // Pendant chains identify x (n+1 steps in) and y (n+2 steps in).
  std::vector<char> none(nv, 0);
  int x = -1, x1 = -1, y = -1, y1 = -1;
  for (int leaf = 0; leaf < nv; ++leaf) {
    if (g.degree(leaf) != 1) continue;
    auto path = walk(g, leaf, g.neighbors(leaf)[0], none);
    std::int64_t steps = static_cast<std::int64_t>(path.size()) - 1;
    if (g.degree(path.back()) == 1) decode_fail("isolated path component");
    if (steps == n + 1) {
      if (x != -1) decode_fail("ambiguous x tail");
      x = path[n + 1];
      x1 = path[n];
    } else if (steps >= n + 2) {
      if (y != -1) decode_fail("ambiguous y tail");
      y = path[n + 2];
      y1 = path[n + 1];
    }
  }
  if (x == -1 || y == -1) decode_fail("auxiliary tails not found");

  std::vector<int> a_side;
  for (int u : g.neighbors(x))
    if (u != x1) a_side.push_back(u);
  if (static_cast<int>(a_side.size()) != m) decode_fail("wrong number of alternative vertices");
  std::sort(a_side.begin(), a_side.end());
  std::vector<int> mark(nv, 0);
  std::vector<char> is_a(nv, 0);
  for (int i = 0; i < m; ++i) {
    mark[a_side[i]] = i + 1;
    is_a[a_side[i]] = 1;
  }

  std::vector<HistogramEntry> decoded;
  for (int r : g.neighbors(y)) {
    if (r == y1) continue;
    std::int64_t mult = 0;
    std::map<int, int> by_position;
    int direct = 0;
    bool has_paths = false;
    std::vector<int> committee;
    for (int u : g.neighbors(r)) {
      if (u == y) continue;
      if (is_a[u]) {
        ++direct;
        committee.push_back(mark[u]);
        by_position[1] = mark[u];
        continue;
      }
      auto path = walk(g, r, u, is_a);
      int end = path.back();
      int steps = static_cast<int>(path.size()) - 1;
      if (is_a[end]) {
        has_paths = true;
        if (by_position.count(steps)) decode_fail("two alternatives at one rank");
        by_position[steps] = mark[end];
      } else if (g.degree(end) == 1) {
        if (mult != 0) decode_fail("two multiplicity tails");
        mult = steps;
      } else {
        decode_fail("unexpected vertex next to a preference");
      }
    }
    if (mult == 0) decode_fail("missing multiplicity tail");
    if (!has_paths) {
      if (committee.empty()) decode_fail("empty preference");
      decoded.push_back({Preference::committee(committee), mult});
      continue;
    }
    if (direct != 1) decode_fail("list without a unique top alternative");
    std::vector<int> ranking;
    int expect = 1;
    for (auto [pos, alt] : by_position) {
      if (pos != expect++) decode_fail("gap in list ranks");
      ranking.push_back(alt);
    }
    decoded.push_back({Preference::list(ranking), mult});
  }
  Histogram h_star(m, std::move(decoded));

  std::vector<int> image(m);
  for (int a = 1; a <= m; ++a) {
    int c = cr.labeling[a - 1];
    if (!is_a[c]) decode_fail("alternative vertex left the alternative side");
    image[a - 1] = mark[c];
  }
  Permutation sigma(std::move(image));
  if (!(apply_perm(sigma, h) == h_star)) decode_fail("decoded histogram differs from the relabeled input");
  return sigma;
}

Permutation m2_representative(const Histogram& h, const CanonOptions& opts) {
  CanonResult cr = canon(m2_hist_to_graph(h), opts);
  std::vector<int> image(h.m());
  for (int a = 1; a <= h.m(); ++a) image[a - 1] = cr.labeling[a - 1] + 1;
  return Permutation(std::move(image));
}

Permutation representative_selection(const Histogram& h, const CanonOptions& opts) {
  if (h.m() == 1) return Permutation::identity(1);
  if (is_simple_c2(h)) return m2_representative(h, opts);
  return decode_representative(h, opts);
}

OrderedPartition ap_of_histogram(const Histogram& h, const CanonOptions& opts) {
  if (h.m() == 1) return {{1}};
  if (h.empty()) {
    std::vector<int> all(h.m());
    for (int a = 1; a <= h.m(); ++a) all[a - 1] = a;
    return {all};
  }
  EncodedGraph enc = common_hist_to_graph(h);
  std::vector<int> a_vertices(h.m());
  for (int a = 0; a < h.m(); ++a) a_vertices[a] = a;
  OrderedPartition orbits = automorphism_orbits_on(enc.graph, a_vertices, opts);
  for (auto& cell : orbits)
    for (int& v : cell) v = enc.alt_of[v];
  return normalize_partition(std::move(orbits));
}

}  // namespace merv
