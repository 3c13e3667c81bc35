#pragma once

#include "merv/core.hpp"
#include "merv/graph.hpp"

namespace merv::fixtures {

inline Histogram h1() {
  return Histogram(4, {{Preference::committee({1, 2}), 1},
                       {Preference::committee({1, 4}), 1},
                       {Preference::committee({2, 3}), 1},
                       {Preference::committee({2, 4}), 1}});
}

inline Histogram h2() {
  return Histogram(4, {{Preference::committee({1, 2}), 1},
                       {Preference::committee({1, 3}), 1},
                       {Preference::committee({1, 4}), 1},
                       {Preference::committee({2, 3}), 1}});
}

inline Profile p1() {
  return Profile(4, {Preference::committee({1, 2}), Preference::committee({1, 4}), Preference::committee({2, 3}),
                     Preference::committee({2, 4})});
}

// 4 x {1,2}, 2 x [3>4>1], 2 x [4>3>2]
inline Histogram figure_hist() {
  return Histogram(4, {{Preference::committee({1, 2}), 4},
                       {Preference::list({3, 4, 1}), 2},
                       {Preference::list({4, 3, 2}), 2}});
}

inline ColoredGraph g1() { return ColoredGraph::from_one_based(4, {{1, 2}, {1, 4}, {2, 3}, {2, 4}}); }
inline ColoredGraph g2() { return ColoredGraph::from_one_based(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}); }

inline ColoredGraph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return ColoredGraph(n, e);
}

inline ColoredGraph path(int n) {
  std::vector<Edge> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return ColoredGraph(n, e);
}

}  // namespace merv::fixtures
