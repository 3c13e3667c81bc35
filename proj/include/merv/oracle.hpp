#pragma once

// Brute-force ground truth. Everything here enumerates S_m or all vertex
// bijections and refuses inputs over the hard caps.

#include <cstdint>
#include <functional>
#include <vector>

#include "merv/core.hpp"
#include "merv/graph.hpp"

namespace merv::oracle {

inline constexpr int kMaxAlternatives = 8;
inline constexpr int kMaxVertices = 8;
inline constexpr int kMaxAxiomAlternatives = 6;

/// All sigma with sigma(h) = h, identity included, in lexicographic order.
std::vector<Permutation> stabilizer(const Histogram& h);

/// Orbits of the stabilizer; cells hold alternatives (1-based), normalized.
OrderedPartition ap_brute(const Histogram& h);

/// Decisions of D fixed by every stabilizer element, in priority order.
std::vector<Decision> fpd_brute(const Histogram& h, DecisionSpace space,
                                std::uint64_t cap = 1'000'000);

bool anr_brute(const Histogram& h, DecisionSpace space);

using ResoluteRule = std::function<Decision(const Profile&)>;

struct AxiomBits {
  bool ano = false;
  bool neu = false;
  bool res = false;
};

/// Anonymity over `reorders` seeded vote shuffles, neutrality over all of S_m.
AxiomBits anr_axiom_check(const ResoluteRule& rule, const Profile& p, int reorders = 20,
                          std::uint64_t seed = 0x5eed);

/// Minimum edge list over all relabelings that sort the colour sequence; ties
/// go to the lexicographically first labeling.
CanonResult canon_brute(const ColoredGraph& g);

bool gi_brute(const ColoredGraph& a, const ColoredGraph& b);

/// True iff g has a non-identity colour-preserving automorphism.
bool ga_brute(const ColoredGraph& g);

/// All colour-preserving automorphisms as vertex images.
std::vector<std::vector<int>> automorphisms_brute(const ColoredGraph& g);

/// Orbit partition of the automorphism group (0-based vertices), normalized.
OrderedPartition orbits_brute(const ColoredGraph& g);

}  // namespace merv::oracle
