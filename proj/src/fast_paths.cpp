#include <algorithm>
#include <map>
#include <numeric>

#include "merv/equitable.hpp"
#include "merv/oracle.hpp"

namespace merv::fast {
namespace {

bool all_votes(const Histogram& h, Kind kind, int size) {
  return !h.empty() && std::all_of(h.entries().begin(), h.entries().end(), [&](const HistogramEntry& e) {
    return e.preference.size() == size && (size == 1 || e.preference.kind() == kind);
  });
}

OrderedPartition classes_by_key(int m, const std::vector<std::int64_t>& key) {
  std::map<std::int64_t, std::vector<int>> groups;
  for (int a = 1; a <= m; ++a) groups[key[a]].push_back(a);
  OrderedPartition out;
  for (auto& [k, cell] : groups) out.push_back(std::move(cell));
  return normalize_partition(std::move(out));
}

// Calls visit(sigma) for every relabeling that sends the anchor list to a list
// of the same multiplicity positionally, with the unranked alternatives
// completed in every order.
template <typename Visit>
void anchored_relabelings(const Histogram& h, const Preference& anchor, std::int64_t mult, Visit visit) {
  const int m = h.m();
  std::vector<char> in_anchor(m + 1, 0);
  for (int a : anchor.members()) in_anchor[a] = 1;
  std::vector<int> free_src;
  for (int a = 1; a <= m; ++a)
    if (!in_anchor[a]) free_src.push_back(a);
  for (const auto& e : h.entries()) {
    if (e.multiplicity != mult) continue;
    std::vector<int> image(m, 0);
    std::vector<char> used(m + 1, 0);
    for (int i = 0; i < anchor.size(); ++i) {
      image[anchor[i] - 1] = e.preference[i];
      used[e.preference[i]] = 1;
    }
    std::vector<int> free_dst;
    for (int a = 1; a <= m; ++a)
      if (!used[a]) free_dst.push_back(a);
    do {
      for (std::size_t i = 0; i < free_src.size(); ++i) image[free_src[i] - 1] = free_dst[i];
      visit(Permutation(image));
    } while (std::next_permutation(free_dst.begin(), free_dst.end()));
  }
}

std::optional<int> unranked_count(const Histogram& h, int max_c) {
  if (h.empty()) return std::nullopt;
  int len = h.entries().front().preference.size();
  int c = h.m() - len;
  if (len < 2 || c > max_c || !all_votes(h, Kind::List, len)) return std::nullopt;
  return c;
}

const HistogramEntry& most_frequent(const Histogram& h) {
  const HistogramEntry* best = &h.entries().front();
  for (const auto& e : h.entries())
    if (e.multiplicity > best->multiplicity) best = &e;
  return *best;
}

}  // namespace

std::optional<OrderedPartition> score_orbits(const Histogram& h) {
  const int m = h.m();
  std::vector<std::int64_t> score(m + 1, 0);
  if (all_votes(h, Kind::Committee, 1)) {
    for (const auto& e : h.entries()) score[e.preference[0]] += e.multiplicity;
  } else if (m >= 2 && all_votes(h, Kind::Committee, m - 1)) {
    for (const auto& e : h.entries())
      for (int a = 1; a <= m; ++a)
        if (!e.preference.contains(a)) score[a] += e.multiplicity;
  } else {
    return std::nullopt;
  }
  return classes_by_key(m, score);
}

std::optional<OrderedPartition> full_committee(const Histogram& h) {
  if (!all_votes(h, Kind::Committee, h.m())) return std::nullopt;
  std::vector<int> all(h.m());
  std::iota(all.begin(), all.end(), 1);
  return OrderedPartition{all};
}

std::optional<OrderedPartition> const_unranked(const Histogram& h, int max_c) {
  if (!unranked_count(h, max_c)) return std::nullopt;
  const auto& anchor = most_frequent(h);
  std::vector<int> parent(h.m() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  anchored_relabelings(h, anchor.preference, anchor.multiplicity, [&](const Permutation& sigma) {
    if (!(apply_perm(sigma, h) == h)) return;
    for (int a = 1; a <= h.m(); ++a) {
      int r1 = find(a), r2 = find(sigma(a));
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  });
  std::vector<std::int64_t> key(h.m() + 1, 0);
  for (int a = 1; a <= h.m(); ++a) key[a] = find(a);
  return classes_by_key(h.m(), key);
}

std::optional<Permutation> const_unranked_rs(const Histogram& h, int max_c) {
  if (!unranked_count(h, max_c)) return std::nullopt;
  std::int64_t top = most_frequent(h).multiplicity;
  std::vector<int> first(h.entries().front().preference.size());
  std::iota(first.begin(), first.end(), 1);
  Preference target = Preference::list(first);
  std::optional<Permutation> best;
  std::optional<Histogram> best_image;
  // Every minimizer sends some most frequent list to 1 > 2 > ... > m-C.
  for (const auto& e : h.entries()) {
    if (e.multiplicity != top) continue;
    Histogram single(h.m(), {{target, top}});
    anchored_relabelings(single, e.preference, top, [&](const Permutation& to_target) {
      Histogram image = apply_perm(to_target, h);
      bool better = !best_image || priority_cmp(image, *best_image) < 0 ||
                    (priority_cmp(image, *best_image) == 0 && to_target < *best);
      if (better) {
        best = to_target;
        best_image = std::move(image);
      }
    });
  }
  return best;
}

std::optional<OrderedPartition> bounded_m(const Histogram& h, int threshold) {
  if (h.m() > threshold || h.m() > oracle::kMaxAlternatives) return std::nullopt;
  return oracle::ap_brute(h);
}

}  // namespace merv::fast
