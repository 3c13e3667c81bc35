// Individualization-refinement canonical labeling.
//
// Leaves are ordered by (node trace sequence, relabeled edge list); the
// canonical leaf is the minimum. Subtrees whose trace prefix is already worse
// than the best leaf are cut, and children equivalent under discovered
// automorphisms fixing the current prefix are skipped.

#include <algorithm>
#include <climits>

#include "partition.hpp"

namespace merv {
namespace {

using detail::Partition;

struct Leaf {
  std::vector<std::uint64_t> trace;
  std::vector<int> path;
  std::vector<int> elems;
  std::vector<Edge> code;
};

// Relation of the current trace prefix to the best leaf's. Worse nodes are
// kept only while they still match the first leaf, to find automorphisms.
enum class Status : std::uint8_t { Equal, Better, Worse };

constexpr int kNoJump = INT_MAX;

class FastSearch {
 public:
  FastSearch(const ColoredGraph& g, std::uint64_t budget) : g_(g), n_(g.num_vertices()), budget_(budget) {}

  CanonResult run() {
    Partition root(color_partition(g_), n_);
    std::uint64_t h = detail::refine_in_place(g_, root, detail::all_cells(root));
    trace_.push_back(h);
    status_.push_back(Status::Equal);
    eq_first_.push_back(1);
    count_node();
    search(root, 0);

    CanonResult out;
    out.labeling.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.labeling[best_.elems[i]] = i;
    out.canon_edges = best_.code;
    out.canon_colors = g_.colors();
    std::sort(out.canon_colors.begin(), out.canon_colors.end());
    out.generators = std::move(gens_);
    out.nodes = nodes_;
    return out;
  }

 private:
  void count_node() {
    if (++nodes_ > budget_) throw BudgetExceeded("canonical labeling exceeded node budget");
  }

  int target_cell(const Partition& p) const {
    int best = -1, best_size = 1;
    for (int s = 0; s < n_; s = p.end[s]) {
      if (p.cell_size(s) > best_size) {
        best = s;
        best_size = p.cell_size(s);
      }
    }
    return best;
  }

  // Invariant code for cells that became singletons when going from parent to
  // child: their position and the positions of their singleton neighbours.
  std::uint64_t singleton_code(const Partition& parent, const Partition& child, std::uint64_t h) const {
    std::vector<int> nbr;
    for (int q = 0; q < n_; ++q) {
      if (child.cell_size(child.start_of[q]) != 1) continue;
      if (parent.cell_size(parent.start_of[q]) == 1) continue;
      int v = child.elems[q];
      nbr.clear();
      for (int u : g_.neighbors(v)) {
        int pu = child.pos[u];
        if (child.cell_size(child.start_of[pu]) == 1) nbr.push_back(pu);
      }
      std::sort(nbr.begin(), nbr.end());
      h = detail::mix(h, static_cast<std::uint64_t>(q));
      for (int x : nbr) h = detail::mix(h, static_cast<std::uint64_t>(x));
    }
    return h;
  }

  void adopt_best(const Partition& p) {
    best_.trace = trace_;
    best_.path = path_;
    best_.elems = p.elems;
    best_.code = cur_code_;
    std::fill(status_.begin(), status_.end(), Status::Equal);
  }

  // Returns the depth of the deepest common ancestor of the current leaf and
  // the leaf it was matched against.
  int record_automorphism(const Leaf& matched, const Partition& p) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[matched.elems[i]] = p.elems[i];
    bool trivial = true;
    for (int v = 0; v < n_; ++v) trivial &= gamma[v] == v;
    if (!trivial && detail::is_automorphism(g_, gamma)) gens_.push_back(std::move(gamma));
    std::size_t common = 0;
    while (common < path_.size() && common < matched.path.size() && path_[common] == matched.path[common])
      ++common;
    return static_cast<int>(common);
  }

  int leaf(const Partition& p, int depth) {
    std::vector<int> lab(n_);
    for (int i = 0; i < n_; ++i) lab[p.elems[i]] = i;
    cur_code_ = detail::relabeled_edges(g_, lab);

    if (!have_first_) {
      have_first_ = true;
      adopt_best(p);
      first_ = best_;
      return kNoJump;
    }
    if (eq_first_[depth] && first_.trace.size() == trace_.size() && cur_code_ == first_.code)
      return record_automorphism(first_, p);
    if (status_[depth] == Status::Worse) return kNoJump;
    if (status_[depth] == Status::Better) {
      adopt_best(p);
      return kNoJump;
    }
    if (best_.trace.size() != trace_.size()) return kNoJump;
    auto c = priority_cmp(std::span<const Edge>(cur_code_), std::span<const Edge>(best_.code));
    if (c < 0) {
      adopt_best(p);
      return kNoJump;
    }
    if (c == 0) return record_automorphism(best_, p);
    return kNoJump;
  }

  int search(const Partition& p, int depth) {
    if (p.discrete()) return leaf(p, depth);

    int cell = target_cell(p);
    std::vector<int> candidates(p.elems.begin() + cell, p.elems.begin() + p.end[cell]);
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored;
    std::size_t gens_seen = 0;
    detail::UnionFind uf(0);
    bool uf_valid = false;

    for (int v : candidates) {
      if (!explored.empty()) {
        if (!uf_valid || gens_seen != gens_.size()) {
          uf = detail::stabilizer_orbits(n_, gens_, path_);
          gens_seen = gens_.size();
          uf_valid = true;
        }
        int root = uf.find(v);
        bool equivalent = std::any_of(explored.begin(), explored.end(), [&](int u) { return uf.find(u) == root; });
        if (equivalent) continue;
      }
      explored.push_back(v);

      Partition child = p;
      int s = child.individualize(v);
      std::uint64_t h = detail::refine_in_place(g_, child, {s});
      h = singleton_code(p, child, h);
      count_node();

      std::size_t next = static_cast<std::size_t>(depth) + 1;
      bool child_eq_first = eq_first_[depth] && first_.trace.size() > next && first_.trace[next] == h;
      Status child_status = Status::Better;
      if (have_first_ && status_[depth] == Status::Worse) {
        if (!child_eq_first) continue;
        child_status = Status::Worse;
      } else if (have_first_ && status_[depth] == Status::Equal) {
        if (best_.trace.size() <= next || h > best_.trace[next]) {
          if (!child_eq_first) continue;
          child_status = Status::Worse;
        } else {
          child_status = h < best_.trace[next] ? Status::Better : Status::Equal;
        }
      }

      trace_.push_back(h);
      path_.push_back(v);
      status_.push_back(child_status);
      eq_first_.push_back(child_eq_first ? 1 : 0);
      int jump = search(child, depth + 1);
      trace_.pop_back();
      path_.pop_back();
      status_.pop_back();
      eq_first_.pop_back();
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  const ColoredGraph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<Edge> cur_code_;
  std::vector<std::uint64_t> trace_;
  std::vector<int> path_;
  std::vector<Status> status_;
  std::vector<char> eq_first_;
  std::vector<std::vector<int>> gens_;
};

}  // namespace

CanonResult canon_fast(const ColoredGraph& g, std::uint64_t budget) {
  return FastSearch(g, budget).run();
}

}  // namespace merv
