#pragma once

// Histogram <-> graph encodings and the decoder that turns a canonical
// labeling of the encoded graph into a representative selection.

#include <cstdint>
#include <vector>

#include "merv/core.hpp"
#include "merv/graph.hpp"

namespace merv {

enum class Role : std::uint8_t { A, N, V, T, X, Y };

char role_letter(Role role);

struct EncodedGraph {
  ColoredGraph graph;
  std::vector<Role> roles;
  /// Alternative (1-based) for role-A vertices, 0 elsewhere. Vertex a-1 is
  /// alternative a.
  std::vector<int> alt_of;

  std::size_t count(Role role) const;
};

/// Every preference a 2-committee of multiplicity one.
bool is_simple_c2(const Histogram& h);

/// Vertices are the alternatives (vertex a-1 is alternative a), one edge per vote.
ColoredGraph m2_hist_to_graph(const Histogram& h);
Histogram graph_to_m2_hist(const ColoredGraph& g);

/// The general encoding. Vertex order: A, N (one per distinct preference in
/// priority order), V (path intermediates), T (multiplicity tails), X, Y.
/// Requires m >= 2 and a non-empty histogram.
EncodedGraph common_hist_to_graph(const Histogram& h);

/// Automorphism partition of h through the general encoding; cells hold
/// alternatives (1-based), normalized.
OrderedPartition ap_of_histogram(const Histogram& h, const CanonOptions& opts = {});

/// Representative selection: sigma(h) is shared by the whole isomorphism
/// class of h. Simple 2-committee histograms go through the alternative
/// graph, everything else through the general encoding and the decoder.
Permutation representative_selection(const Histogram& h, const CanonOptions& opts = {});

/// The decoder on its own: canonically relabels the general encoding, reads
/// back alternatives, preferences and multiplicities, and returns sigma with
/// sigma(h) equal to the decoded histogram. Throws Error if decoding fails.
Permutation decode_representative(const Histogram& h, const CanonOptions& opts = {});

/// Representative selection through the alternative graph; h must be simple C2.
Permutation m2_representative(const Histogram& h, const CanonOptions& opts = {});

}  // namespace merv
