// Lexicographic canonical labeling.
//
// The sorted edge list is minimal exactly when the upper-triangular adjacency
// bit string, read row by row, is maximal. Position i is filled from the cell
// at position i; once a vertex is placed, every later cell is split into its
// neighbours followed by its non-neighbours, which fixes row i completely.
// Rows are compared as per-cell neighbour counts.

#include <algorithm>
#include <climits>

#include "partition.hpp"

namespace merv {
namespace {

using detail::Partition;
using Row = std::vector<int>;

enum class Status : std::uint8_t { Equal, Better };

constexpr int kNoJump = INT_MAX;

class LexSearch {
 public:
  LexSearch(const ColoredGraph& g, std::uint64_t budget)
      : g_(g), n_(g.num_vertices()), budget_(budget), mark_(g.num_vertices(), 0) {}

  CanonResult run() {
    CanonResult out;
    out.canon_colors = g_.colors();
    std::sort(out.canon_colors.begin(), out.canon_colors.end());
    if (n_ == 0) return out;
    Partition root(color_partition(g_), n_);
    status_.push_back(Status::Equal);
    count_node();
    search(root, 0);
    out.labeling.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.labeling[best_elems_[i]] = i;
    out.canon_edges = detail::relabeled_edges(g_, out.labeling);
    out.generators = std::move(gens_);
    out.nodes = nodes_;
    return out;
  }

 private:
  void count_node() {
    if (++nodes_ > budget_) throw BudgetExceeded("lexicographic canonical labeling exceeded node budget");
  }

  Row row_of(const Partition& p, int i, int v) {
    for (int u : g_.neighbors(v)) mark_[u] = 1;
    Row row;
    int s = i;
    int e = p.end[s];
    int in_rest = 0;
    for (int q = s; q < e; ++q) {
      int u = p.elems[q];
      if (u != v && mark_[u]) ++in_rest;
    }
    if (e - s > 1) row.push_back(in_rest);
    for (s = e; s < n_; s = p.end[s]) {
      int c = 0;
      for (int q = s; q < p.end[s]; ++q) c += mark_[p.elems[q]];
      row.push_back(c);
    }
    for (int u : g_.neighbors(v)) mark_[u] = 0;
    return row;
  }

  // Places v at position i and splits each later cell into neighbours first.
  Partition place(const Partition& p, int i, int v) {
    Partition c = p;
    c.individualize(v);
    for (int u : g_.neighbors(v)) mark_[u] = 1;
    std::vector<int> buf;
    for (int s = i + 1; s < n_;) {
      int e = c.end[s];
      buf.clear();
      for (int q = s; q < e; ++q)
        if (mark_[c.elems[q]]) buf.push_back(c.elems[q]);
      int a = static_cast<int>(buf.size());
      if (a > 0 && a < e - s) {
        for (int q = s; q < e; ++q)
          if (!mark_[c.elems[q]]) buf.push_back(c.elems[q]);
        for (int q = s; q < e; ++q) {
          c.elems[q] = buf[q - s];
          c.pos[buf[q - s]] = q;
        }
        c.end[s] = s + a;
        c.end[s + a] = e;
        for (int q = s + a; q < e; ++q) c.start_of[q] = s + a;
        ++c.cells;
      }
      s = e;
    }
    for (int u : g_.neighbors(v)) mark_[u] = 0;
    return c;
  }

  int record_automorphism(const Partition& p) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[best_elems_[i]] = p.elems[i];
    if (detail::is_automorphism(g_, gamma)) gens_.push_back(std::move(gamma));
    std::size_t common = 0;
    while (common < path_.size() && path_[common] == best_path_[common]) ++common;
    return static_cast<int>(common);
  }

  int search(const Partition& p, int i) {
    if (i == n_) {
      if (!have_best_ || status_[i] == Status::Better) {
        have_best_ = true;
        best_elems_ = p.elems;
        best_path_ = path_;
        best_rows_ = rows_;
        std::fill(status_.begin(), status_.end(), Status::Equal);
        return kNoJump;
      }
      return record_automorphism(p);
    }

    std::vector<int> candidates(p.elems.begin() + i, p.elems.begin() + p.end[i]);
    std::sort(candidates.begin(), candidates.end());
    std::vector<Row> rows;
    rows.reserve(candidates.size());
    for (int v : candidates) rows.push_back(row_of(p, i, v));
    Row top = *std::max_element(rows.begin(), rows.end());

    std::vector<int> explored;
    std::size_t gens_seen = 0;
    detail::UnionFind uf(0);
    bool uf_valid = false;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      if (rows[ci] != top) continue;
      int v = candidates[ci];
      Status child_status = Status::Better;
      if (have_best_ && status_[i] == Status::Equal) {
        if (top < best_rows_[i]) return kNoJump;
        child_status = top == best_rows_[i] ? Status::Equal : Status::Better;
      }
      if (!explored.empty()) {
        if (!uf_valid || gens_seen != gens_.size()) {
          uf = detail::stabilizer_orbits(n_, gens_, path_);
          gens_seen = gens_.size();
          uf_valid = true;
        }
        int root = uf.find(v);
        if (std::any_of(explored.begin(), explored.end(), [&](int u) { return uf.find(u) == root; })) continue;
      }
      explored.push_back(v);
      count_node();

      Partition child = place(p, i, v);
      rows_.push_back(top);
      path_.push_back(v);
      status_.push_back(child_status);
      int jump = search(child, i + 1);
      rows_.pop_back();
      path_.pop_back();
      status_.pop_back();
      if (jump < i) return jump;
    }
    return kNoJump;
  }

  const ColoredGraph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<char> mark_;
  bool have_best_ = false;
  std::vector<int> best_elems_;
  std::vector<int> best_path_;
  std::vector<Row> best_rows_;
  std::vector<Row> rows_;
  std::vector<int> path_;
  std::vector<Status> status_;
  std::vector<std::vector<int>> gens_;
};

}  // namespace

CanonResult canon_lex(const ColoredGraph& g, std::uint64_t budget) {
  return LexSearch(g, budget).run();
}

}  // namespace merv
