#pragma once

// Fixed-point decisions, ANR-possibility, the most equitable rule with
// verification (clr) and canonical tie-breaking (cltb).
//
// Automorphism partitions of histograms are OrderedPartitions whose cells
// hold alternatives (1-based).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "merv/core.hpp"
#include "merv/graph.hpp"

namespace merv {

struct MervOutput {
  Decision decision;
  int verified = 0;

  friend bool operator==(const MervOutput&, const MervOutput&) = default;
};

/// {"decision":"C 2","verified":1}
std::string to_json(const MervOutput& out);

struct Options {
  Engine engine = Engine::Fast;
  std::uint64_t budget = default_budget();
  /// bounded_m handles m up to this many alternatives; 0 disables it.
  int bounded_m_threshold = 7;
  bool fast_paths = true;

  CanonOptions canon() const { return {engine, budget}; }
};

bool is_fixed_point(const Decision& d, const OrderedPartition& ap);
bool anr_possible(const OrderedPartition& ap, DecisionSpace space);

enum class ApRoute { BoundedM, ScoreOrbits, FullCommittee, ConstUnranked, AlternativeGraph, General };

std::string route_name(ApRoute route);

struct ApResult {
  OrderedPartition ap;
  ApRoute route;
};

/// The dispatcher: bounded m, then 1-, m- and (m-1)-committee profiles, then
/// (m-C)-list profiles with C <= 3, then the graph path.
ApResult compute_ap(const Histogram& h, const Options& opts = {});

/// The graph path alone: the alternative graph for simple 2-committee
/// histograms, the general encoding otherwise.
OrderedPartition ap_general(const Histogram& h, const Options& opts = {});

bool anr_verify(const Histogram& h, DecisionSpace space, const Options& opts = {});
bool anr_verify(const Profile& p, DecisionSpace space, const Options& opts = {});

/// The candidate whose sigma-image has the highest priority.
Decision argmax_priority(std::span<const Decision> candidates, const Permutation& sigma);

/// Same over the implicit set of fixed points of ap in the space; throws
/// std::invalid_argument when there are none.
Decision argmax_fixed_points(const OrderedPartition& ap, DecisionSpace space, const Permutation& sigma);

/// Same over the whole decision space.
Decision argmax_all(DecisionSpace space, const Permutation& sigma);

MervOutput clr(const Histogram& h, DecisionSpace space, const Options& opts = {});
MervOutput clr(const Profile& p, DecisionSpace space, const Options& opts = {});

/// `cowinners` must be non-empty and inside the decision space.
MervOutput cltb(const Histogram& h, DecisionSpace space, std::span<const Decision> cowinners,
                const Options& opts = {});
MervOutput cltb(const Profile& p, DecisionSpace space, std::span<const Decision> cowinners,
                const Options& opts = {});

namespace fast {

/// Every vote a 1-committee, or every vote an (m-1)-committee: orbits are the
/// classes of equal plurality (resp. veto) score.
std::optional<OrderedPartition> score_orbits(const Histogram& h);

/// Every vote the full committee [m].
std::optional<OrderedPartition> full_committee(const Histogram& h);

/// Every vote an (m-C)-list with m-C >= 2 and C <= max_c. The stabilizer is
/// enumerated by anchoring a most frequent list against every list of the same
/// multiplicity and completing the C unranked alternatives in all ways.
std::optional<OrderedPartition> const_unranked(const Histogram& h, int max_c = 3);

/// Lexicographic representative for (m-C)-list histograms: the sigma
/// minimizing sigma(h) in priority order, ties going to the smaller sigma.
/// Nullopt outside the domain.
std::optional<Permutation> const_unranked_rs(const Histogram& h, int max_c = 3);

/// m <= threshold: brute-force stabilizer orbits.
std::optional<OrderedPartition> bounded_m(const Histogram& h, int threshold = 7);

}  // namespace fast

}  // namespace merv
