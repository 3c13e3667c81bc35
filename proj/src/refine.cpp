#include <algorithm>
#include <deque>

#include "partition.hpp"

namespace merv::detail {

Partition::Partition(const OrderedPartition& p, int n)
    : elems(), pos(n, -1), start_of(n, 0), end(n + 1, 0) {
  elems.reserve(n);
  for (const auto& cell : p) {
    if (cell.empty()) throw std::invalid_argument("empty cell in partition");
    int start = static_cast<int>(elems.size());
    for (int v : cell) {
      if (v < 0 || v >= n || pos[v] != -1) throw std::invalid_argument("not a partition of the vertex set");
      pos[v] = static_cast<int>(elems.size());
      start_of[elems.size()] = start;
      elems.push_back(v);
    }
    end[start] = static_cast<int>(elems.size());
    ++cells;
  }
  if (static_cast<int>(elems.size()) != n) throw std::invalid_argument("partition does not cover all vertices");
}

OrderedPartition Partition::to_ordered() const {
  OrderedPartition out;
  for (int s = 0; s < size(); s = end[s]) out.emplace_back(elems.begin() + s, elems.begin() + end[s]);
  return out;
}

int Partition::individualize(int v) {
  int p = pos[v];
  int s = start_of[p];
  if (end[s] - s == 1) return s;
  int first = elems[s];
  elems[s] = v;
  elems[p] = first;
  pos[v] = s;
  pos[first] = p;
  end[s + 1] = end[s];
  end[s] = s + 1;
  for (int q = s + 1; q < end[s + 1]; ++q) start_of[q] = s + 1;
  ++cells;
  return s;
}

std::vector<int> all_cells(const Partition& p) {
  std::vector<int> out;
  for (int s = 0; s < p.size(); s = p.end[s]) out.push_back(s);
  return out;
}

std::uint64_t refine_in_place(const ColoredGraph& g, Partition& p, std::vector<int> splitters) {
  const int n = p.size();
  std::uint64_t h = mix(0x5eed, static_cast<std::uint64_t>(p.cells));
  std::deque<int> queue;
  std::vector<char> queued(n + 1, 0);
  for (int s : splitters) {
    if (!queued[s]) {
      queued[s] = 1;
      queue.push_back(s);
    }
  }
  std::vector<int> count(n, 0);
  std::vector<int> touched;
  std::vector<int> touched_cells;
  std::vector<int> members;
  std::vector<std::pair<int, int>> keyed;

  while (!queue.empty() && !p.discrete()) {
    int s = queue.front();
    queue.pop_front();
    queued[s] = 0;
    members.assign(p.elems.begin() + s, p.elems.begin() + p.end[s]);
    for (int w : members)
      for (int u : g.neighbors(w))
        if (count[u]++ == 0) touched.push_back(u);
    for (int u : touched) touched_cells.push_back(p.start_of[p.pos[u]]);
    std::sort(touched_cells.begin(), touched_cells.end());
    touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());
    h = mix(h, static_cast<std::uint64_t>(s));

    for (int c : touched_cells) {
      int e = p.end[c];
      keyed.clear();
      for (int q = c; q < e; ++q) keyed.emplace_back(count[p.elems[q]], p.elems[q]);
      std::sort(keyed.begin(), keyed.end());
      if (keyed.front().first == keyed.back().first) {
        h = mix(mix(h, static_cast<std::uint64_t>(c)), static_cast<std::uint64_t>(keyed.front().first));
        continue;
      }
      std::vector<int> fragment_starts;
      for (int i = 0; i < e - c; ++i) {
        int q = c + i;
        p.elems[q] = keyed[i].second;
        p.pos[keyed[i].second] = q;
        if (i == 0 || keyed[i].first != keyed[i - 1].first) fragment_starts.push_back(q);
      }
      for (std::size_t f = 0; f < fragment_starts.size(); ++f) {
        int fs = fragment_starts[f];
        int fe = f + 1 < fragment_starts.size() ? fragment_starts[f + 1] : e;
        p.end[fs] = fe;
        for (int q = fs; q < fe; ++q) p.start_of[q] = fs;
        h = mix(mix(mix(h, static_cast<std::uint64_t>(fs)),
                    static_cast<std::uint64_t>(count[p.elems[fs]])),
                static_cast<std::uint64_t>(fe - fs));
        if (f == 0 && queued[c]) continue;
        if (!queued[fs]) {
          queued[fs] = 1;
          queue.push_back(fs);
        }
      }
      p.cells += static_cast<int>(fragment_starts.size()) - 1;
    }
    for (int u : touched) count[u] = 0;
    touched.clear();
    touched_cells.clear();
  }
  return mix(h, static_cast<std::uint64_t>(p.cells));
}

}  // namespace merv::detail

namespace merv {

OrderedPartition refine(const ColoredGraph& g, const OrderedPartition& p) {
  detail::Partition part(p, g.num_vertices());
  detail::refine_in_place(g, part, detail::all_cells(part));
  return part.to_ordered();
}

}  // namespace merv

namespace merv::detail {

UnionFind::UnionFind(int n) : parent_(n) {
  for (int i = 0; i < n; ++i) parent_[i] = i;
}

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a < b) std::swap(a, b);
  parent_[a] = b;
}

UnionFind stabilizer_orbits(int n, const std::vector<std::vector<int>>& gens,
                            const std::vector<int>& fixed) {
  UnionFind uf(n);
  for (const auto& gen : gens) {
    bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int v) { return gen[v] == v; });
    if (!fixes) continue;
    for (int v = 0; v < n; ++v) uf.unite(v, gen[v]);
  }
  return uf;
}

std::vector<Edge> relabeled_edges(const ColoredGraph& g, const std::vector<int>& labeling) {
  std::vector<Edge> out;
  out.reserve(g.num_edges());
  for (auto [u, v] : g.edges()) {
    int a = labeling[u], b = labeling[v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_automorphism(const ColoredGraph& g, const std::vector<int>& image) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.colors()[image[v]] != g.colors()[v]) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(image[u], image[v])) return false;
  return true;
}

}  // namespace merv::detail
