#include "merv/equitable.hpp"

#include <algorithm>

#include "merv/encode.hpp"

namespace merv {

std::string to_json(const MervOutput& out) {
  return "{\"decision\":\"" + out.decision.to_string() + "\",\"verified\":" + std::to_string(out.verified) + "}";
}

namespace {

// cell_of[a] = index of a's cell.
std::vector<int> cell_index(const OrderedPartition& ap, int m) {
  std::vector<int> cell_of(m + 1, -1);
  for (std::size_t c = 0; c < ap.size(); ++c)
    for (int a : ap[c]) {
      if (a < 1 || a > m) throw std::invalid_argument("partition cell outside [1, m]");
      cell_of[a] = static_cast<int>(c);
    }
  return cell_of;
}

int partition_size(const OrderedPartition& ap) {
  int m = 0;
  for (const auto& c : ap) m += static_cast<int>(c.size());
  return m;
}

// reachable[s]: some sub-multiset of the sizes sums to s.
std::vector<char> subset_sums(const std::vector<int>& sizes, int limit) {
  std::vector<char> reachable(limit + 1, 0);
  reachable[0] = 1;
  for (int s : sizes)
    for (int t = limit; t >= s; --t)
      if (reachable[t - s]) reachable[t] = 1;
  return reachable;
}

bool is_list_space(DecisionSpace space) { return space.kind == Kind::List && space.k >= 2; }

}  // namespace

bool is_fixed_point(const Decision& d, const OrderedPartition& ap) {
  int m = std::max(partition_size(ap), d.max_alternative());
  auto cell_of = cell_index(ap, m);
  if (!d.is_committee()) {
    return std::all_of(d.members().begin(), d.members().end(), [&](int a) {
      return cell_of[a] >= 0 && ap[cell_of[a]].size() == 1;
    });
  }
  for (int a : d.members()) {
    if (cell_of[a] < 0) return false;
    for (int b : ap[cell_of[a]])
      if (!d.contains(b)) return false;
  }
  return true;
}

bool anr_possible(const OrderedPartition& ap, DecisionSpace space) {
  if (is_list_space(space)) {
    auto singles = std::count_if(ap.begin(), ap.end(), [](const auto& c) { return c.size() == 1; });
    return singles >= space.k;
  }
  if (space.k > partition_size(ap)) return false;
  std::vector<int> sizes;
  for (const auto& c : ap) sizes.push_back(static_cast<int>(c.size()));
  return subset_sums(sizes, space.k)[space.k] != 0;
}

std::string route_name(ApRoute route) {
  switch (route) {
    case ApRoute::BoundedM: return "bounded_m";
    case ApRoute::ScoreOrbits: return "score_orbits";
    case ApRoute::FullCommittee: return "full_committee";
    case ApRoute::ConstUnranked: return "const_unranked";
    case ApRoute::AlternativeGraph: return "alternative_graph";
    case ApRoute::General: return "general";
  }
  return "unknown";
}

OrderedPartition ap_general(const Histogram& h, const Options& opts) {
  if (h.m() > 1 && is_simple_c2(h)) {
    OrderedPartition orbits = automorphism_orbits(m2_hist_to_graph(h), opts.canon());
    for (auto& cell : orbits)
      for (int& v : cell) ++v;
    return orbits;
  }
  return ap_of_histogram(h, opts.canon());
}

ApResult compute_ap(const Histogram& h, const Options& opts) {
  if (opts.fast_paths) {
    if (auto ap = fast::bounded_m(h, opts.bounded_m_threshold)) return {std::move(*ap), ApRoute::BoundedM};
    if (auto ap = fast::score_orbits(h)) return {std::move(*ap), ApRoute::ScoreOrbits};
    if (auto ap = fast::full_committee(h)) return {std::move(*ap), ApRoute::FullCommittee};
    if (auto ap = fast::const_unranked(h, 3)) return {std::move(*ap), ApRoute::ConstUnranked};
  }
  bool simple = h.m() > 1 && is_simple_c2(h);
  return {ap_general(h, opts), simple ? ApRoute::AlternativeGraph : ApRoute::General};
}

bool anr_verify(const Histogram& h, DecisionSpace space, const Options& opts) {
  space.validate(h.m());
  return anr_possible(compute_ap(h, opts).ap, space);
}

bool anr_verify(const Profile& p, DecisionSpace space, const Options& opts) {
  return anr_verify(hist(p), space, opts);
}

Decision argmax_priority(std::span<const Decision> candidates, const Permutation& sigma) {
  if (candidates.empty()) throw std::invalid_argument("argmax over an empty candidate set");
  std::size_t best = 0;
  Preference best_image = apply_perm(sigma, candidates[0]);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Preference image = apply_perm(sigma, candidates[i]);
    if (priority_cmp(image, best_image) < 0) {
      best = i;
      best_image = std::move(image);
    }
  }
  return candidates[best];
}

Decision argmax_fixed_points(const OrderedPartition& ap, DecisionSpace space, const Permutation& sigma) {
  const int m = sigma.size();
  auto cell_of = cell_index(ap, m);
  std::vector<int> by_rank(m);
  for (int a = 1; a <= m; ++a) by_rank[sigma(a) - 1] = a;

  if (is_list_space(space)) {
    std::vector<int> chosen;
    for (int a : by_rank) {
      if (ap[cell_of[a]].size() != 1) continue;
      chosen.push_back(a);
      if (static_cast<int>(chosen.size()) == space.k) return Preference::list(chosen);
    }
    throw std::invalid_argument("no fixed-point decision in " + space.to_string());
  }

  // Greedy over alternatives in rank order: take a's whole cell whenever the
  // remaining size can still be met exactly by undecided cells.
  std::vector<int> state(ap.size(), 0);  // 0 undecided, 1 taken, -1 skipped
  int need = space.k;
  auto feasible = [&](int target, int except) {
    std::vector<int> sizes;
    for (std::size_t c = 0; c < ap.size(); ++c)
      if (state[c] == 0 && static_cast<int>(c) != except) sizes.push_back(static_cast<int>(ap[c].size()));
    return target >= 0 && subset_sums(sizes, std::max(target, 0))[target] != 0;
  };
  if (!feasible(need, -1)) throw std::invalid_argument("no fixed-point decision in " + space.to_string());
  for (int a : by_rank) {
    int c = cell_of[a];
    if (state[c] != 0) continue;
    int size = static_cast<int>(ap[c].size());
    if (size <= need && feasible(need - size, c)) {
      state[c] = 1;
      need -= size;
    } else {
      state[c] = -1;
    }
    if (need == 0) break;
  }
  std::vector<int> members;
  for (std::size_t c = 0; c < ap.size(); ++c)
    if (state[c] == 1) members.insert(members.end(), ap[c].begin(), ap[c].end());
  return Preference::committee(members);
}

Decision argmax_all(DecisionSpace space, const Permutation& sigma) {
  Permutation inv = sigma.inverse();
  std::vector<int> members;
  for (int r = 1; r <= space.k; ++r) members.push_back(inv(r));
  return is_list_space(space) ? Preference::list(members) : Preference::committee(members);
}

MervOutput clr(const Histogram& h, DecisionSpace space, const Options& opts) {
  space.validate(h.m());
  OrderedPartition ap = compute_ap(h, opts).ap;
  Permutation sigma = representative_selection(h, opts.canon());
  if (anr_possible(ap, space)) return {argmax_fixed_points(ap, space, sigma), 1};
  return {argmax_all(space, sigma), 0};
}

MervOutput clr(const Profile& p, DecisionSpace space, const Options& opts) {
  return clr(hist(p), space, opts);
}

MervOutput cltb(const Histogram& h, DecisionSpace space, std::span<const Decision> cowinners,
                const Options& opts) {
  space.validate(h.m());
  if (cowinners.empty()) throw std::invalid_argument("empty co-winner set");
  for (const auto& d : cowinners)
    if (!space.contains(d) || d.max_alternative() > h.m())
      throw std::invalid_argument("co-winner " + d.to_string() + " outside " + space.to_string());
  OrderedPartition ap = compute_ap(h, opts).ap;
  Permutation sigma = representative_selection(h, opts.canon());
  std::vector<Decision> fixed;
  for (const auto& d : cowinners)
    if (is_fixed_point(d, ap)) fixed.push_back(d);
  if (!fixed.empty()) return {argmax_priority(fixed, sigma), 1};
  return {argmax_priority(cowinners, sigma), 0};
}

MervOutput cltb(const Profile& p, DecisionSpace space, std::span<const Decision> cowinners,
                const Options& opts) {
  return cltb(hist(p), space, cowinners, opts);
}

}  // namespace merv
