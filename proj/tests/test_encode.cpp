#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "merv/encode.hpp"
#include "merv/oracle.hpp"

using namespace merv;

TEST_SUITE("encode") {
  TEST_CASE("alternative graph") {
    CHECK(m2_hist_to_graph(fixtures::h1()) == fixtures::g1());
    CHECK(m2_hist_to_graph(fixtures::h2()) == fixtures::g2());
    ColoredGraph empty = m2_hist_to_graph(Histogram(3));
    CHECK(empty.num_vertices() == 3);
    CHECK(empty.num_edges() == 0);
    CHECK(graph_to_m2_hist(fixtures::g1()) == fixtures::h1());
    CHECK(graph_to_m2_hist(ColoredGraph(3, {})).empty());
    CHECK_THROWS(m2_hist_to_graph(fixtures::figure_hist()));
    testgen::Rng rng(21);
    for (int it = 0; it < 50; ++it) {
      ColoredGraph g = testgen::random_graph(rng, testgen::uniform(rng, 1, 9), 0.4);
      CHECK(m2_hist_to_graph(graph_to_m2_hist(g)) == g);
    }
  }

  TEST_CASE("general encoding class sizes") {
    EncodedGraph enc = common_hist_to_graph(fixtures::figure_hist());
    CHECK(enc.graph.num_vertices() == 42);
    CHECK(enc.count(Role::A) == 4);
    CHECK(enc.count(Role::N) == 3);
    CHECK(enc.count(Role::V) == 6);
    CHECK(enc.count(Role::T) == 8);
    CHECK(enc.count(Role::X) == 10);
    CHECK(enc.count(Role::Y) == 11);
    EncodedGraph single = common_hist_to_graph(Histogram(2, {{Preference::committee({1}), 1}}));
    CHECK(single.count(Role::A) == 2);
    CHECK(single.count(Role::N) == 1);
    CHECK(single.count(Role::V) == 0);
    CHECK(single.count(Role::T) == 1);
    CHECK(single.count(Role::X) == 3);
    CHECK(single.count(Role::Y) == 4);
    CHECK_THROWS(common_hist_to_graph(Histogram(3)));
  }

  TEST_CASE("histogram isomorphism matches graph isomorphism") {
    testgen::Rng rng(22);
    for (int it = 0; it < 100; ++it) {
      int m = testgen::uniform(rng, 2, 5);
      Histogram h = hist(testgen::random_profile(rng, m, testgen::uniform(rng, 1, 6)));
      Histogram h2 = it % 2 ? apply_perm(testgen::random_perm(rng, m), h)
                            : hist(testgen::random_profile(rng, m, static_cast<int>(h.n())));
      bool truth = false;
      for (const auto& s : all_permutations(m)) truth = truth || apply_perm(s, h) == h2;
      CHECK(isomorphic(common_hist_to_graph(h).graph, common_hist_to_graph(h2).graph) == truth);
    }
  }

  TEST_CASE("ap of histograms") {
    CHECK(ap_of_histogram(fixtures::h1()) == OrderedPartition{{1, 4}, {2}, {3}});
    Histogram full(5, {{Preference::committee({1, 2, 3, 4, 5}), 3}});
    CHECK(ap_of_histogram(full) == OrderedPartition{{1, 2, 3, 4, 5}});
    testgen::Rng rng(23);
    for (int it = 0; it < 150; ++it) {
      int m = testgen::uniform(rng, 1, 6);
      Histogram h = hist(testgen::random_profile(rng, m, testgen::uniform(rng, 1, 8)));
      CHECK(ap_of_histogram(h) == oracle::ap_brute(h));
    }
  }

  TEST_CASE("simple C2: both encodings agree with the oracle") {
    testgen::Rng rng(24);
    for (int it = 0; it < 100; ++it) {
      int m = testgen::uniform(rng, 2, 7);
      ColoredGraph g = testgen::random_graph(rng, m, 0.5);
      if (g.num_edges() == 0) continue;
      Histogram h = graph_to_m2_hist(g);
      OrderedPartition via_m2 = automorphism_orbits(g);
      for (auto& cell : via_m2)
        for (int& v : cell) ++v;
      CHECK(via_m2 == ap_of_histogram(h));
      CHECK(via_m2 == oracle::ap_brute(h));
    }
  }

  TEST_CASE("representative selection") {
    for (Engine e : {Engine::Lex, Engine::Fast}) {
      Histogram r1 = apply_perm(representative_selection(fixtures::h1(), {e}), fixtures::h1());
      Histogram r2 = apply_perm(representative_selection(fixtures::h2(), {e}), fixtures::h2());
      CHECK(r1 == r2);
    }
    CHECK(representative_selection(fixtures::h1(), {Engine::Lex}) == Permutation::from_cycles(4, {{1, 2}, {3, 4}}));

    testgen::Rng rng(25);
    for (int it = 0; it < 150; ++it) {
      int m = testgen::uniform(rng, 1, 6);
      Histogram h = hist(testgen::random_profile(rng, m, testgen::uniform(rng, 1, 8)));
      Histogram h2 = apply_perm(testgen::random_perm(rng, m), h);
      for (Engine e : {Engine::Lex, Engine::Fast})
        CHECK(apply_perm(representative_selection(h, {e}), h) == apply_perm(representative_selection(h2, {e}), h2));
    }
  }

  TEST_CASE("decoder recovers the relabeled histogram") {
    testgen::Rng rng(26);
    for (int it = 0; it < 100; ++it) {
      int m = testgen::uniform(rng, 2, 6);
      Histogram h = hist(testgen::random_profile(rng, m, testgen::uniform(rng, 1, 8)));
      CHECK_NOTHROW(decode_representative(h));
      CHECK_NOTHROW(decode_representative(h, {Engine::Lex}));
    }
  }
}
