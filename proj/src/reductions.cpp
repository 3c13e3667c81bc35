#include "merv/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "partition.hpp"

namespace merv {
namespace {

void add_cycle(std::vector<Edge>& edges, const std::vector<int>& verts) {
  const int len = static_cast<int>(verts.size());
  if (len == 2) edges.emplace_back(verts[0], verts[1]);
  if (len < 3) return;
  for (int i = 0; i < len; ++i) {
    int a = verts[i], b = verts[(i + 1) % len];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
}

void add_clique(std::vector<Edge>& edges, const std::vector<int>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) edges.emplace_back(verts[i], verts[j]);
}

std::vector<int> range(int from, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

void check_pair(const ColoredGraph& g1, const ColoredGraph& g2) {
  if (!g1.uncolored() || !g2.uncolored()) throw std::invalid_argument("reductions take uncoloured graphs");
  if (g1.num_vertices() != g2.num_vertices())
    throw std::invalid_argument("graphs must have the same number of vertices");
  if (g1.num_vertices() < 1) throw std::invalid_argument("graphs must be non-empty");
}

// The gadget argument needs the first graph connected; complementing both
// keeps the isomorphism question and makes it so.
bool prepare(ColoredGraph& g1, ColoredGraph& g2) {
  if (is_connected(g1)) return false;
  g1 = g1.complement();
  g2 = g2.complement();
  return true;
}

Histogram edge_histogram(int m, const std::vector<Edge>& edges) {
  std::vector<HistogramEntry> entries;
  entries.reserve(edges.size());
  for (auto [u, v] : edges) entries.push_back({Preference::committee({u + 1, v + 1}), 1});
  return Histogram(m, std::move(entries));
}

std::vector<int> window(const std::vector<int>& ring, int offset, int len) {
  std::vector<int> out;
  out.reserve(len);
  for (int t = 0; t < len; ++t) out.push_back(ring[(offset + t) % ring.size()] + 1);
  return out;
}

}  // namespace

std::string combiner_name(Combiner c) { return c == Combiner::AnyNoMeansYes ? "ANY_NO" : "ANY_YES"; }

bool combine(Combiner c, const std::vector<bool>& anr_possible) {
  if (c == Combiner::AnyNoMeansYes)
    return std::any_of(anr_possible.begin(), anr_possible.end(), [](bool b) { return !b; });
  return std::any_of(anr_possible.begin(), anr_possible.end(), [](bool b) { return b; });
}

SizeFn parse_size_fn(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  auto number = [&](std::string_view t) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
      throw InputError("bad size function '" + text + "'");
    return v;
  };
  if (s.empty()) throw InputError("empty size function");
  if (s == "m") return [](int m) { return m; };
  if (s[0] != 'm') {
    int c = number(s);
    return [c](int) { return c; };
  }
  if (s.size() < 3) throw InputError("bad size function '" + text + "'");
  int c = number(std::string_view(s).substr(2));
  switch (s[1]) {
    case '-': return [c](int m) { return m - c; };
    case '+': return [c](int m) { return m + c; };
    case '/':
      if (c == 0) throw InputError("division by zero in size function");
      return [c](int m) { return m / c; };
  }
  throw InputError("bad size function '" + text + "'");
}

bool is_connected(const ColoredGraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  detail::UnionFind uf(n);
  for (auto [u, v] : g.edges()) uf.unite(u, v);
  for (int v = 1; v < n; ++v)
    if (uf.find(v) != uf.find(0)) return false;
  return true;
}

ColoredGraph attach_cycle(const ColoredGraph& g, int v, int len) {
  const int n = g.num_vertices();
  std::vector<Edge> edges = g.edges();
  auto fresh = range(n, len);
  add_cycle(edges, fresh);
  for (int c : fresh) edges.emplace_back(v, c);
  std::vector<int> colors = g.colors();
  colors.resize(n + len, 0);
  return ColoredGraph(n + len, std::move(edges), std::move(colors));
}

ReductionBundle gi_to_anr_m2c1(const ColoredGraph& g1_in, const ColoredGraph& g2_in) {
  check_pair(g1_in, g2_in);
  ColoredGraph g1 = g1_in, g2 = g2_in;
  ReductionBundle out;
  out.complemented = prepare(g1, g2);
  const int m = g1.num_vertices();
  out.source_vertices = m;
  out.combiner = Combiner::AnyNoMeansYes;
  ColoredGraph g1_star = attach_cycle(g1, 0, m + 1);
  for (int i = 0; i < m; ++i) {
    ColoredGraph u = disjoint_union(g1_star, attach_cycle(g2, i, m + 1));
    out.instances.push_back({edge_histogram(u.num_vertices(), u.edges()), DecisionSpace{Kind::Committee, 1}});
  }
  out.g1_alternatives = range(1, 2 * m + 1);
  return out;
}

ReductionBundle gi_to_anr_mm(const ColoredGraph& g1_in, const ColoredGraph& g2_in, const SizeFn& iota,
                             const SizeFn& kappa) {
  check_pair(g1_in, g2_in);
  ColoredGraph g1 = g1_in, g2 = g2_in;
  ReductionBundle out;
  out.complemented = prepare(g1, g2);
  const int m = g1.num_vertices();
  const long long ms = static_cast<long long>(6 * m + 1) * (6 * m + 1);
  if (ms > 50'000'000) throw std::invalid_argument("graph too large for this reduction");
  const int m_star = static_cast<int>(ms);
  const int kap = kappa(m_star);
  const int ell = iota(m_star);
  if (ell < 2) throw std::invalid_argument("vote size iota(m*) must be at least 2");
  if (kap < 1 || kap > m_star - 1) throw std::invalid_argument("kappa(m*) must lie in [1, m*-1]");
  const int k = std::min(kap, m_star - kap);
  out.source_vertices = m;
  out.m_star = m_star;
  out.k = k;
  out.combiner = Combiner::AnyNoMeansYes;
  out.case_number = k <= 6 * m ? 1 : 2;

  const int copies = out.case_number == 1 ? k : 2;
  const int g_part = 2 * m * (copies + 1);
  int x_size = 0, y_size = 0;
  if (out.case_number == 1) {
    x_size = m_star - g_part;
  } else {
    y_size = m_star - 6 * m - k + 1;
    x_size = k - 1;
    if (y_size % 3 == 0) {
      ++y_size;
      --x_size;
    }
  }
  out.g1_alternatives = range(1, 2 * m);
  out.x_alternatives = range(g_part + 1, x_size);
  out.y_alternatives = range(g_part + x_size + 1, y_size);
  if (ell > 2 && ell >= x_size) throw std::invalid_argument("vote size too large for the padding cycle");

  ColoredGraph g1p = attach_cycle(g1, 0, m);
  std::vector<int> x_ring = range(g_part, x_size), y_set = range(g_part + x_size, y_size);
  const DecisionSpace space{Kind::Committee, kap};
  for (int i = 0; i < m; ++i) {
    ColoredGraph g2i = attach_cycle(g2, i, m);
    ColoredGraph part = g1p;
    for (int c = 0; c < copies; ++c) part = disjoint_union(part, g2i);
    std::vector<Edge> edges = part.edges();
    if (ell == 2) {
      add_cycle(edges, x_ring);
      add_clique(edges, y_set);
      out.instances.push_back({edge_histogram(m_star, edges), space});
      continue;
    }
    // Larger votes: pad every edge with a rotating window of X, and add the
    // X windows themselves (with a Y alternative in the second case).
    std::vector<HistogramEntry> entries;
    const std::int64_t p1_mult = out.case_number == 1 ? 1 : y_size;
    for (auto [a, b] : edges)
      for (int j = 0; j < x_size; ++j) {
        auto members = window(x_ring, j, ell - 2);
        members.push_back(a + 1);
        members.push_back(b + 1);
        entries.push_back({Preference::committee(std::move(members)), p1_mult});
      }
    if (out.case_number == 1) {
      for (int j = 0; j < x_size; ++j) entries.push_back({Preference::committee(window(x_ring, j, ell)), 1});
    } else {
      const std::int64_t p1_size = static_cast<std::int64_t>(edges.size()) * x_size * y_size;
      for (int j = 0; j < x_size; ++j)
        for (int y : y_set) {
          auto members = window(x_ring, j, ell - 1);
          members.push_back(y + 1);
          entries.push_back({Preference::committee(std::move(members)), p1_size + 1});
        }
    }
    out.instances.push_back({Histogram(m_star, std::move(entries)), space});
  }
  return out;
}

GaInstance ga_to_anr(const ColoredGraph& g, const SizeFn& kappa) {
  if (!g.uncolored()) throw std::invalid_argument("reductions take uncoloured graphs");
  const int m = g.num_vertices();
  if (m < 2) throw std::invalid_argument("GA reduction needs at least two vertices");
  int m_star = -1;
  for (int cand = 2 * m + 5; cand <= 1'000'000; ++cand) {
    int kv = kappa(cand);
    if (kv >= 2 * m + 5 && kv <= cand) {
      m_star = cand;
      break;
    }
  }
  if (m_star < 0) throw std::invalid_argument("kappa never reaches 2m+5");
  const int kap = kappa(m_star);
  const int x = m, xp = m + 1;
  const int tail = kap - m - 2;
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < m; ++v) edges.emplace_back(v, x);
  edges.emplace_back(x, xp);
  int prev = xp;
  for (int t = 0; t < tail; ++t) {
    int y = m + 2 + t;
    edges.emplace_back(prev, y);
    prev = y;
  }
  add_cycle(edges, range(kap, m_star - kap));
  return {edge_histogram(m_star, edges), DecisionSpace{Kind::List, kap}, m_star};
}

namespace {

// Votes (as index sets over 0..mp-1) whose counts strictly decrease with the
// index.
std::vector<std::vector<int>> distinct_votes(int mp, int lp) {
  std::vector<std::vector<int>> votes;
  if (lp == 1) {
    for (int j = 0; j < mp; ++j)
      for (int c = 0; c < mp - 1 - j; ++c) votes.push_back({j});
    return votes;
  }
  // Index 0 joins every vote. Seed votes leave out consecutive blocks of the
  // rest so each other index misses at least one.
  const int t = lp - 1, excl = mp - 1 - t;
  const int seeds = (mp - 1 + excl - 1) / excl;
  std::vector<int> seed_count(mp, 0);
  for (int s = 0; s < seeds; ++s) {
    std::vector<char> out(mp, 0);
    for (int e = 0; e < excl; ++e) out[1 + (s * excl + e) % (mp - 1)] = 1;
    std::vector<int> vote{0};
    for (int a = 1; a < mp; ++a)
      if (!out[a]) {
        vote.push_back(a);
        ++seed_count[a];
      }
    votes.push_back(std::move(vote));
  }
  std::vector<int> order(mp - 1);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return seed_count[a] > seed_count[b]; });
  for (auto& sub : distinct_votes(mp - 1, t)) {
    std::vector<int> vote{0};
    for (int r : sub) vote.push_back(order[r]);
    votes.push_back(std::move(vote));
  }
  return votes;
}

}  // namespace

Profile distinct_votes_profile(int m_prime, int ell_prime) {
  if (ell_prime < 1 || ell_prime >= m_prime)
    throw std::invalid_argument("need 1 <= ell' < m'");
  auto votes = distinct_votes(m_prime, ell_prime);
  std::vector<int> count(m_prime, 0);
  for (const auto& v : votes)
    for (int a : v) ++count[a];
  std::vector<int> order(m_prime);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return count[a] > count[b]; });
  std::vector<int> rename(m_prime);
  for (int r = 0; r < m_prime; ++r) rename[order[r]] = r + 1;
  std::vector<Preference> prefs;
  prefs.reserve(votes.size());
  for (const auto& v : votes) {
    std::vector<int> members;
    for (int a : v) members.push_back(rename[a]);
    prefs.push_back(Preference::committee(std::move(members)));
  }
  return Profile(m_prime, std::move(prefs));
}

}  // namespace merv
