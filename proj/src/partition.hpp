#pragma once

#include <cstdint>
#include <vector>

#include "merv/graph.hpp"

namespace merv::detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Ordered partition of positions 0..n-1. A cell is the position range
// [start, end[start]); every position knows the start of its cell.
struct Partition {
  std::vector<int> elems;
  std::vector<int> pos;
  std::vector<int> start_of;
  std::vector<int> end;
  int cells = 0;

  Partition() = default;
  explicit Partition(const OrderedPartition& p, int n);

  int size() const { return static_cast<int>(elems.size()); }
  bool discrete() const { return cells == size(); }
  int cell_size(int start) const { return end[start] - start; }
  OrderedPartition to_ordered() const;

  // Moves v to the front of its cell and splits it off. Returns the start of
  // the new singleton cell.
  int individualize(int v);
};

// Refines p to the coarsest equitable partition finer than p, starting from
// the given splitter cells. The returned hash depends only on the
// isomorphism-invariant course of the refinement.
std::uint64_t refine_in_place(const ColoredGraph& g, Partition& p, std::vector<int> splitters);

// All cell starts, in order.
std::vector<int> all_cells(const Partition& p);

class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  void unite(int a, int b);

 private:
  std::vector<int> parent_;
};

// Orbits of the group generated by the generators that fix every vertex in
// `fixed`.
UnionFind stabilizer_orbits(int n, const std::vector<std::vector<int>>& gens,
                            const std::vector<int>& fixed);

// Edge list of g relabeled by labeling, sorted.
std::vector<Edge> relabeled_edges(const ColoredGraph& g, const std::vector<int>& labeling);

bool is_automorphism(const ColoredGraph& g, const std::vector<int>& image);

}  // namespace merv::detail
