#pragma once

// Instance generators turning GI and GA questions into ANR-possibility
// questions.

#include <functional>
#include <string>
#include <vector>

#include "merv/core.hpp"
#include "merv/graph.hpp"

namespace merv {

/// How per-instance ANR verdicts combine into the source verdict.
enum class Combiner { AnyNoMeansYes, AnyYesMeansYes };

std::string combiner_name(Combiner c);

struct ReductionInstance {
  Histogram histogram;
  DecisionSpace space;
};

struct ReductionBundle {
  std::vector<ReductionInstance> instances;
  Combiner combiner = Combiner::AnyNoMeansYes;
  int source_vertices = 0;
  /// Both graphs were replaced by their complements (done when the first
  /// graph is disconnected; isomorphism is unaffected).
  bool complemented = false;

  // Only set by gi_to_anr_mm.
  int case_number = 0;
  int m_star = 0;
  int k = 0;
  /// Alternatives (1-based) of the first graph's block, the padding cycle X
  /// and the clique Y; identical for every instance.
  std::vector<int> g1_alternatives;
  std::vector<int> x_alternatives;
  std::vector<int> y_alternatives;
};

/// Source verdict from ANR verdicts (true = ANR-possible), one per instance.
bool combine(Combiner c, const std::vector<bool>& anr_possible);

using SizeFn = std::function<int(int)>;

/// "m", "m-<c>", "m+<c>", "m/<c>" or "<c>".
SizeFn parse_size_fn(const std::string& text);

bool is_connected(const ColoredGraph& g);

/// `len` fresh vertices forming a cycle, each also joined to v.
ColoredGraph attach_cycle(const ColoredGraph& g, int v, int len);

/// One C1 instance per i in [1, m] over G1* + G2^i, where the star marks a
/// (m+1)-cycle attached to vertex 1 (resp. i). GI holds iff some instance is
/// not ANR-possible.
ReductionBundle gi_to_anr_m2c1(const ColoredGraph& g1, const ColoredGraph& g2);

/// m* = (6m+1)^2 alternatives, decision space C_{kappa(m*)}, votes of size
/// iota(m*). One instance per i in [1, m].
ReductionBundle gi_to_anr_mm(const ColoredGraph& g1, const ColoredGraph& g2, const SizeFn& iota,
                             const SizeFn& kappa);

struct GaInstance {
  Histogram histogram;
  DecisionSpace space;
  int m_star = 0;
};

/// G plus a hub x joined to all of G and to x', a path hanging off x', and a
/// cycle Z on the remaining alternatives; decision space L_{kappa(m*)} with m*
/// the least value where kappa(m*) >= 2m+5. The instance is ANR-possible iff G
/// is rigid. Needs at least two vertices.
GaInstance ga_to_anr(const ColoredGraph& g, const SizeFn& kappa);

/// ell'-committee profile over [m'] where all approval counts differ; counts
/// decrease with the alternative index.
Profile distinct_votes_profile(int m_prime, int ell_prime);

}  // namespace merv
