#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "generators.hpp"
#include "merv/equitable.hpp"
#include "merv/oracle.hpp"
#include "merv/reductions.hpp"
#include "merv/rules.hpp"

using namespace merv;

namespace {

bool solve(const ReductionBundle& b) {
  std::vector<bool> verdicts;
  for (const auto& inst : b.instances) verdicts.push_back(anr_verify(inst.histogram, inst.space));
  return combine(b.combiner, verdicts);
}

}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("combiners and size functions") {
    CHECK(combine(Combiner::AnyNoMeansYes, {true, false, true}));
    CHECK_FALSE(combine(Combiner::AnyNoMeansYes, {true, true}));
    CHECK(combine(Combiner::AnyYesMeansYes, {false, true}));
    CHECK_FALSE(combine(Combiner::AnyYesMeansYes, {false, false}));
    CHECK(combiner_name(Combiner::AnyNoMeansYes) == "ANY_NO");
    CHECK(parse_size_fn("m")(10) == 10);
    CHECK(parse_size_fn("m-1")(10) == 9);
    CHECK(parse_size_fn("m+2")(10) == 12);
    CHECK(parse_size_fn("m/3")(10) == 3);
    CHECK(parse_size_fn("4")(10) == 4);
    CHECK_THROWS_AS(parse_size_fn("2m"), InputError);
  }

  TEST_CASE("graph helpers") {
    CHECK(is_connected(fixtures::path(5)));
    CHECK_FALSE(is_connected(ColoredGraph(3, {{0, 1}})));
    ColoredGraph c = attach_cycle(fixtures::path(2), 0, 4);
    CHECK(c.num_vertices() == 6);
    CHECK(c.num_edges() == 1 + 4 + 4);
  }

  TEST_CASE("m2c1 shape") {
    ReductionBundle b = gi_to_anr_m2c1(fixtures::g1(), fixtures::g2());
    REQUIRE(b.instances.size() == 4);
    for (const auto& inst : b.instances) {
      CHECK(inst.histogram.m() == 18);
      CHECK(inst.space.to_string() == "C:1");
      for (const auto& e : inst.histogram.entries()) CHECK(e.preference.size() == 2);
    }
    CHECK(b.combiner == Combiner::AnyNoMeansYes);
    CHECK(solve(b));
    CHECK(solve(gi_to_anr_m2c1(fixtures::complete(3), fixtures::complete(3))));
    CHECK_FALSE(solve(gi_to_anr_m2c1(fixtures::path(4), fixtures::complete(4))));
    CHECK_THROWS(gi_to_anr_m2c1(fixtures::path(3), fixtures::path(4)));
  }

  TEST_CASE("m2c1 with a disconnected first graph") {
    ColoredGraph a(4, {{0, 1}, {2, 3}}), b(4, {{0, 1}});
    ReductionBundle bundle = gi_to_anr_m2c1(a, b);
    CHECK(bundle.complemented);
    CHECK_FALSE(solve(bundle));
  }

  TEST_CASE("m2c1 against brute force") {
    testgen::Rng rng(51);
    for (int it = 0; it < 60; ++it) {
      int n = testgen::uniform(rng, 2, 5);
      ColoredGraph a = testgen::random_graph(rng, n, 0.5);
      ColoredGraph b = it % 2 ? a.relabeled(testgen::random_labeling(rng, n)) : testgen::random_graph(rng, n, 0.5);
      CHECK(solve(gi_to_anr_m2c1(a, b)) == oracle::gi_brute(a, b));
    }
  }

  TEST_CASE("mm shape") {
    ColoredGraph g = fixtures::path(3);
    ReductionBundle b = gi_to_anr_mm(g, g, parse_size_fn("2"), parse_size_fn("3"));
    CHECK(b.m_star == 19 * 19);
    CHECK(b.case_number == 1);
    CHECK(b.k == 3);
    REQUIRE(b.instances.size() == 3);
    for (const auto& inst : b.instances) {
      CHECK(inst.histogram.m() == 361);
      CHECK(inst.space.to_string() == "C:3");
    }
    ReductionBundle big = gi_to_anr_mm(g, g, parse_size_fn("2"), parse_size_fn("m/2"));
    CHECK(big.case_number == 2);
    CHECK_FALSE(big.y_alternatives.empty());
    CHECK(big.y_alternatives.size() % 3 != 0);
    CHECK_THROWS(gi_to_anr_mm(g, g, parse_size_fn("1"), parse_size_fn("3")));
    CHECK_THROWS(gi_to_anr_mm(g, g, parse_size_fn("2"), parse_size_fn("m")));
  }

  TEST_CASE("mm padding keeps X apart from the graph part") {
    ColoredGraph a = fixtures::path(3);
    ColoredGraph b = ColoredGraph(3, {{0, 1}, {0, 2}, {1, 2}});
    for (const char* iota : {"2", "3"}) {
      ReductionBundle bundle = gi_to_anr_mm(a, b, parse_size_fn(iota), parse_size_fn("2"));
      std::set<int> x(bundle.x_alternatives.begin(), bundle.x_alternatives.end());
      for (const auto& inst : bundle.instances) {
        Options opts;
        for (const auto& cell : compute_ap(inst.histogram, opts).ap) {
          int in_x = 0;
          for (int v : cell) in_x += x.count(v) ? 1 : 0;
          CHECK((in_x == 0 || in_x == static_cast<int>(cell.size())));
        }
      }
      CHECK_FALSE(solve(bundle));
    }
  }

  TEST_CASE("ga") {
    GaInstance inst = ga_to_anr(fixtures::complete(3), parse_size_fn("m-1"));
    CHECK(inst.m_star == 2 * 3 + 6);
    CHECK(inst.space.to_string() == "L:11");
    // K3 has a nontrivial automorphism, so the instance is not ANR-possible.
    CHECK_FALSE(anr_verify(inst.histogram, inst.space));
    CHECK_THROWS(ga_to_anr(ColoredGraph(1, {}), parse_size_fn("m-1")));
    testgen::Rng rng(52);
    for (int it = 0; it < 40; ++it) {
      int n = testgen::uniform(rng, 2, 6);
      ColoredGraph g = testgen::random_graph(rng, n, 0.5);
      GaInstance ga = ga_to_anr(g, parse_size_fn("m-1"));
      CHECK(anr_verify(ga.histogram, ga.space) == !oracle::ga_brute(g));
    }
  }

  TEST_CASE("distinct votes profile") {
    Profile base = distinct_votes_profile(2, 1);
    CHECK(base.size() == 1);
    CHECK(approval_scores(base, 1) == std::vector<std::int64_t>{1, 0});
    for (int m = 2; m <= 8; ++m)
      for (int l = 1; l < m; ++l) {
        CAPTURE(m);
        CAPTURE(l);
        Profile p = distinct_votes_profile(m, l);
        CHECK(p.size() < static_cast<std::size_t>(m * m));
        for (const auto& v : p.votes()) CHECK(v.size() == l);
        auto scores = approval_scores(p, l);
        for (int a = 1; a < m; ++a) CHECK(scores[a - 1] > scores[a]);
      }
  }
}
