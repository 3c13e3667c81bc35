#include <algorithm>
#include <map>
#include <numeric>

#include "partition.hpp"

namespace merv {

OrderedPartition automorphism_orbits_on(const ColoredGraph& g, const std::vector<int>& subset,
                                        const CanonOptions& opts) {
  const int n = g.num_vertices();
  if (subset.empty()) return {};
  CanonResult base = canon(g, opts);
  detail::UnionFind uf(n);
  for (const auto& gen : base.generators)
    for (int v = 0; v < n; ++v) uf.unite(v, gen[v]);

  // Orbits never cross equitable cells; inside a cell, classes that the
  // discovered generators did not join are compared by individualized canon.
  detail::Partition eq(color_partition(g), n);
  detail::refine_in_place(g, eq, detail::all_cells(eq));
  std::map<int, std::vector<int>> reps_by_cell;
  std::vector<char> seen(n, 0);
  for (int v : subset) {
    int r = uf.find(v);
    if (seen[r]) continue;
    seen[r] = 1;
    reps_by_cell[eq.start_of[eq.pos[v]]].push_back(v);
  }
  int fresh = g.colors().empty() ? 1 : *std::max_element(g.colors().begin(), g.colors().end()) + 1;
  for (auto& [cell, reps] : reps_by_cell) {
    if (reps.size() < 2) continue;
    std::vector<CanonResult> forms;
    forms.reserve(reps.size());
    for (int v : reps) forms.push_back(canon(g.with_color(v, fresh), opts));
    for (std::size_t a = 0; a < reps.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        if (forms[a].same_form(forms[b])) {
          uf.unite(reps[a], reps[b]);
          break;
        }
      }
    }
  }

  std::map<int, std::vector<int>> groups;
  for (int v : subset) groups[uf.find(v)].push_back(v);
  OrderedPartition out;
  for (auto& [r, cell] : groups) out.push_back(std::move(cell));
  return normalize_partition(std::move(out));
}

OrderedPartition automorphism_orbits(const ColoredGraph& g, const CanonOptions& opts) {
  std::vector<int> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  return automorphism_orbits_on(g, all, opts);
}

bool has_nontrivial_automorphism(const ColoredGraph& g, const CanonOptions& opts) {
  auto orbits = automorphism_orbits(g, opts);
  return std::any_of(orbits.begin(), orbits.end(), [](const auto& c) { return c.size() >= 2; });
}

}  // namespace merv
