#pragma once

// Vertex-colored simple graphs, equitable refinement, canonical labeling and
// automorphism orbits.
//
// The C++ API is 0-based (vertices 0..n-1); text formats and rendered
// partitions are 1-based.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "merv/core.hpp"

namespace merv {

class ColoredGraph {
 public:
  ColoredGraph() = default;
  /// Edges may be given in either orientation; self-loops and duplicates are
  /// rejected. `colors` defaults to all zeros.
  ColoredGraph(int num_vertices, std::vector<Edge> edges, std::vector<int> colors = {});

  /// Same, with 1-based edge endpoints.
  static ColoredGraph from_one_based(int num_vertices, const std::vector<Edge>& edges,
                                     std::vector<int> colors = {});

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;
  /// Sorted, each edge stored as (u, v) with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& colors() const noexcept { return colors_; }
  bool uncolored() const;

  /// Vertex v becomes labeling[v].
  ColoredGraph relabeled(std::span<const int> labeling) const;
  ColoredGraph with_color(int v, int color) const;
  ColoredGraph complement() const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.colors_ == b.colors_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> colors_;
  std::vector<std::vector<int>> adj_;
};

/// Disjoint union; vertices of b are shifted by a.num_vertices().
ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b);

using OrderedPartition = std::vector<std::vector<int>>;

/// Sorts each cell, then orders cells by smallest member.
OrderedPartition normalize_partition(OrderedPartition p);

/// "{{1,4},{2},{3}}" with elements shifted by `offset` (1 for 0-based input).
std::string render_partition(const OrderedPartition& p, int offset = 1);

/// The cells of the colour classes in ascending colour order.
OrderedPartition color_partition(const ColoredGraph& g);

/// Coarsest equitable refinement of p. Cells that split are replaced in place
/// by their fragments ordered by ascending neighbour count.
OrderedPartition refine(const ColoredGraph& g, const OrderedPartition& p);

enum class Engine : std::uint8_t { Lex, Fast };

Engine parse_engine(const std::string& name);
std::string engine_name(Engine engine);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Node budget from MERV_BUDGET if set and valid, else kDefaultBudget.
std::uint64_t default_budget();

struct CanonOptions {
  Engine engine = Engine::Fast;
  std::uint64_t budget = default_budget();
};

struct CanonResult {
  /// labeling[v] is the canonical label of input vertex v.
  std::vector<int> labeling;
  /// Edge set of the relabeled graph, sorted.
  std::vector<Edge> canon_edges;
  /// Colour sequence of the relabeled graph; always sorted ascending.
  std::vector<int> canon_colors;
  /// Automorphisms discovered during the search, as vertex images.
  std::vector<std::vector<int>> generators;
  std::uint64_t nodes = 0;

  bool same_form(const CanonResult& other) const {
    return canon_edges == other.canon_edges && canon_colors == other.canon_colors;
  }
};

/// Relabelings are admissible when they sort the colour sequence ascending.
/// canon_lex returns the priority-minimal edge set over admissible
/// relabelings; canon_fast returns some canonical form.
CanonResult canon_lex(const ColoredGraph& g, std::uint64_t budget = default_budget());
CanonResult canon_fast(const ColoredGraph& g, std::uint64_t budget = default_budget());
CanonResult canon(const ColoredGraph& g, const CanonOptions& opts = {});

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b, const CanonOptions& opts = {});

/// Orbit partition of the colour-preserving automorphism group, normalized.
OrderedPartition automorphism_orbits(const ColoredGraph& g, const CanonOptions& opts = {});

/// Orbits restricted to `subset`: the result partitions `subset` into
/// (orbit intersect subset) classes, normalized.
OrderedPartition automorphism_orbits_on(const ColoredGraph& g, const std::vector<int>& subset,
                                        const CanonOptions& opts = {});

bool has_nontrivial_automorphism(const ColoredGraph& g, const CanonOptions& opts = {});

}  // namespace merv
