#include <algorithm>
#include <cstdlib>
#include <map>

#include "merv/graph.hpp"

namespace merv {

ColoredGraph::ColoredGraph(int num_vertices, std::vector<Edge> edges, std::vector<int> colors)
    : n_(num_vertices), colors_(std::move(colors)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  if (colors_.empty()) colors_.assign(n_, 0);
  if (static_cast<int>(colors_.size()) != n_)
    throw std::invalid_argument("colour sequence length differs from vertex count");
  for (int c : colors_)
    if (c < 0) throw std::invalid_argument("colours must be non-negative");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

ColoredGraph ColoredGraph::from_one_based(int num_vertices, const std::vector<Edge>& edges,
                                          std::vector<int> colors) {
  std::vector<Edge> shifted;
  shifted.reserve(edges.size());
  for (auto [u, v] : edges) shifted.emplace_back(u - 1, v - 1);
  return ColoredGraph(num_vertices, std::move(shifted), std::move(colors));
}

bool ColoredGraph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

bool ColoredGraph::uncolored() const {
  return std::all_of(colors_.begin(), colors_.end(), [](int c) { return c == 0; });
}

ColoredGraph ColoredGraph::relabeled(std::span<const int> labeling) const {
  if (static_cast<int>(labeling.size()) != n_) throw std::invalid_argument("labeling size mismatch");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (auto [u, v] : edges_) edges.emplace_back(labeling[u], labeling[v]);
  std::vector<int> colors(n_);
  for (int v = 0; v < n_; ++v) colors.at(labeling[v]) = colors_[v];
  return ColoredGraph(n_, std::move(edges), std::move(colors));
}

ColoredGraph ColoredGraph::with_color(int v, int color) const {
  ColoredGraph out = *this;
  out.colors_.at(v) = color;
  if (color < 0) throw std::invalid_argument("colours must be non-negative");
  return out;
}

ColoredGraph ColoredGraph::complement() const {
  std::vector<Edge> edges;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) edges.emplace_back(u, v);
  return ColoredGraph(n_, std::move(edges), colors_);
}

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  int shift = a.num_vertices();
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  std::vector<int> colors = a.colors();
  colors.insert(colors.end(), b.colors().begin(), b.colors().end());
  return ColoredGraph(shift + b.num_vertices(), std::move(edges), std::move(colors));
}

OrderedPartition normalize_partition(OrderedPartition p) {
  for (auto& cell : p) std::sort(cell.begin(), cell.end());
  std::erase_if(p, [](const std::vector<int>& c) { return c.empty(); });
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

std::string render_partition(const OrderedPartition& p, int offset) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += '{';
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(p[i][j] + offset);
    }
    out += '}';
  }
  out += '}';
  return out;
}

OrderedPartition color_partition(const ColoredGraph& g) {
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < g.num_vertices(); ++v) by_color[g.colors()[v]].push_back(v);
  OrderedPartition p;
  for (auto& [c, cell] : by_color) p.push_back(std::move(cell));
  return p;
}

Engine parse_engine(const std::string& name) {
  if (name == "lex") return Engine::Lex;
  if (name == "fast") return Engine::Fast;
  throw InputError("unknown engine '" + name + "' (expected lex or fast)");
}

std::string engine_name(Engine engine) { return engine == Engine::Lex ? "lex" : "fast"; }

std::uint64_t default_budget() {
  const char* env = std::getenv("MERV_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefaultBudget;
  return v;
}

CanonResult canon(const ColoredGraph& g, const CanonOptions& opts) {
  return opts.engine == Engine::Lex ? canon_lex(g, opts.budget) : canon_fast(g, opts.budget);
}

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b, const CanonOptions& opts) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> ca = a.colors(), cb = b.colors();
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return false;
  return canon(a, opts).same_form(canon(b, opts));
}

}  // namespace merv
