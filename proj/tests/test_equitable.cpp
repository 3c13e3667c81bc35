#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "merv/encode.hpp"
#include "merv/equitable.hpp"
#include "merv/oracle.hpp"
#include "merv/rules.hpp"

using namespace merv;

namespace {

const DecisionSpace C1{Kind::Committee, 1}, C2{Kind::Committee, 2}, L3{Kind::List, 3};

Options general(Engine e = Engine::Fast) {
  Options o;
  o.engine = e;
  o.bounded_m_threshold = 0;
  o.fast_paths = false;
  return o;
}

DecisionSpace random_space(testgen::Rng& rng, int m) {
  int k = testgen::uniform(rng, 1, m);
  return {k > 1 && testgen::uniform(rng, 0, 1) ? Kind::List : Kind::Committee, k};
}

}  // namespace

TEST_SUITE("equitable") {
  TEST_CASE("fixed points") {
    OrderedPartition ap{{1, 4}, {2}, {3}};
    CHECK(is_fixed_point(Preference::committee({2}), ap));
    CHECK_FALSE(is_fixed_point(Preference::committee({1}), ap));
    CHECK(is_fixed_point(Preference::committee({1, 4}), ap));
    CHECK_FALSE(is_fixed_point(Preference::committee({2, 4}), ap));
    CHECK(is_fixed_point(Preference::list({3, 2}), ap));
    CHECK_FALSE(is_fixed_point(Preference::list({1, 4}), ap));
    OrderedPartition singletons{{1}, {2}, {3}};
    CHECK(is_fixed_point(Preference::list({3, 1, 2}), singletons));
  }

  TEST_CASE("anr_possible") {
    OrderedPartition ap{{1, 4}, {2}, {3}};
    CHECK_FALSE(anr_possible(ap, L3));
    CHECK(anr_possible(ap, C2));
    CHECK(anr_possible(ap, {Kind::Committee, 3}));
    OrderedPartition whole{{1, 2, 3, 4, 5}};
    CHECK(anr_possible(whole, {Kind::Committee, 5}));
    for (int k = 1; k < 5; ++k) CHECK_FALSE(anr_possible(whole, {Kind::Committee, k}));
    // Adding a singleton cell never breaks a committee size already reachable.
    testgen::Rng rng(31);
    for (int it = 0; it < 200; ++it) {
      OrderedPartition p;
      int next = 1;
      int cells = testgen::uniform(rng, 1, 5);
      for (int c = 0; c < cells; ++c) {
        std::vector<int> cell;
        for (int s = testgen::uniform(rng, 1, 3); s > 0; --s) cell.push_back(next++);
        p.push_back(cell);
      }
      int k = testgen::uniform(rng, 1, next - 1);
      bool before = anr_possible(p, {Kind::Committee, k});
      p.push_back({next});
      if (before) CHECK(anr_possible(p, {Kind::Committee, k}));
    }
  }

  TEST_CASE("anr_verify examples") {
    CHECK(anr_verify(fixtures::p1(), C1));
    Profile unanimous(4, {Preference::committee({1, 2, 3, 4}), Preference::committee({1, 2, 3, 4})});
    CHECK(anr_verify(unanimous, {Kind::Committee, 4}));
    CHECK_FALSE(anr_verify(unanimous, C1));
    CHECK_FALSE(anr_verify(fixtures::p1(), L3));
  }

  TEST_CASE("clr examples") {
    Options lex;
    lex.engine = Engine::Lex;
    CHECK(clr(fixtures::p1(), C1, lex) == MervOutput{Preference::committee({2}), 1});
    CHECK(to_json(clr(fixtures::p1(), C1, lex)) == R"({"decision":"C 2","verified":1})");
    Profile unanimous(3, {Preference::committee({1, 2, 3})});
    CHECK(clr(unanimous, {Kind::Committee, 3}) == MervOutput{Preference::committee({1, 2, 3}), 1});
    MervOutput impossible = clr(fixtures::p1(), L3);
    CHECK(impossible.verified == 0);
    CHECK(L3.contains(impossible.decision));
  }

  TEST_CASE("clr against the oracle") {
    testgen::Rng rng(32);
    for (int it = 0; it < 150; ++it) {
      int m = testgen::uniform(rng, 1, 5);
      Profile p = testgen::random_profile(rng, m, testgen::uniform(rng, 1, 8));
      DecisionSpace space = random_space(rng, m);
      Histogram h = hist(p);
      bool want = oracle::anr_brute(h, space);
      for (Engine e : {Engine::Fast, Engine::Lex}) {
        MervOutput out = clr(p, space, general(e));
        CHECK(out.verified == (want ? 1 : 0));
        if (want) CHECK(is_fixed_point(out.decision, oracle::ap_brute(h)));
        CHECK(anr_verify(p, space, general(e)) == want);
      }
      // Anonymity: a reordered profile gives the same output.
      std::vector<Preference> votes(p.votes().begin(), p.votes().end());
      std::shuffle(votes.begin(), votes.end(), rng);
      CHECK(clr(Profile(m, votes), space) == clr(p, space));
    }
  }

  TEST_CASE("clr neutrality at verified profiles") {
    testgen::Rng rng(33);
    int checked = 0;
    for (int it = 0; it < 120; ++it) {
      int m = testgen::uniform(rng, 2, 5);
      Profile p = testgen::random_profile(rng, m, testgen::uniform(rng, 1, 6));
      DecisionSpace space = random_space(rng, m);
      MervOutput out = clr(p, space);
      if (!out.verified) continue;
      ++checked;
      for (const auto& s : all_permutations(m)) CHECK(clr(apply_perm(s, p), space).decision == apply_perm(s, out.decision));
    }
    CHECK(checked > 20);
  }

  TEST_CASE("argmax") {
    auto sigma = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    std::vector<Decision> dstar{Preference::committee({2}), Preference::committee({3})};
    CHECK(argmax_priority(dstar, sigma) == Preference::committee({2}));
    std::vector<Decision> some{Preference::committee({3, 4}), Preference::committee({1, 4}), Preference::committee({2, 3})};
    CHECK(argmax_priority(some, Permutation::identity(4)) == Preference::committee({1, 4}));
    CHECK_THROWS(argmax_fixed_points({{1, 4}, {2}, {3}}, L3, sigma));

    testgen::Rng rng(34);
    for (int it = 0; it < 200; ++it) {
      int m = testgen::uniform(rng, 1, 6);
      Histogram h = hist(testgen::random_profile(rng, m, testgen::uniform(rng, 1, 6)));
      OrderedPartition ap = oracle::ap_brute(h);
      auto s = testgen::random_perm(rng, m);
      DecisionSpace space = random_space(rng, m);
      std::vector<Decision> fixed;
      for (const auto& d : enumerate_decisions(space, m, 1'000'000))
        if (is_fixed_point(d, ap)) fixed.push_back(d);
      if (fixed.empty()) {
        CHECK_THROWS(argmax_fixed_points(ap, space, s));
      } else {
        CHECK(argmax_fixed_points(ap, space, s) == argmax_priority(fixed, s));
      }
      auto all = enumerate_decisions(space, m, 1'000'000);
      CHECK(argmax_all(space, s) == argmax_priority(all, s));
    }
  }

  TEST_CASE("cltb") {
    testgen::Rng rng(35);
    for (int it = 0; it < 100; ++it) {
      int m = testgen::uniform(rng, 1, 5);
      Profile p = testgen::random_profile(rng, m, testgen::uniform(rng, 1, 6));
      DecisionSpace space = random_space(rng, m);
      auto all = enumerate_decisions(space, m, 1'000'000);
      CHECK(cltb(p, space, all) == clr(p, space));
      const Decision& d = all[testgen::uniform(rng, 0, static_cast<int>(all.size()) - 1)];
      std::vector<Decision> one{d};
      MervOutput out = cltb(p, space, one);
      CHECK(out.decision == d);
      CHECK(out.verified == (is_fixed_point(d, oracle::ap_brute(hist(p))) ? 1 : 0));
      auto winners = cowinners(p, 2, space);
      CHECK(std::find(winners.begin(), winners.end(), cltb(p, space, winners).decision) != winners.end());
    }
    CHECK_THROWS(cltb(fixtures::p1(), C1, std::vector<Decision>{}));
    CHECK_THROWS(cltb(fixtures::p1(), C1, std::vector<Decision>{Preference::committee({1, 2})}));
  }

  TEST_CASE("fast paths") {
    Histogram plur = hist(Profile(3, {Preference::committee({1}), Preference::committee({1}), Preference::committee({2})}));
    CHECK(fast::score_orbits(plur) == OrderedPartition{{1}, {2}, {3}});
    CHECK(fast::score_orbits(fixtures::h1()) == std::nullopt);
    CHECK(fast::full_committee(Histogram(3, {{Preference::committee({1, 2, 3}), 2}})) == OrderedPartition{{1, 2, 3}});
    CHECK(fast::bounded_m(fixtures::h1(), 7) == OrderedPartition{{1, 4}, {2}, {3}});
    CHECK(fast::bounded_m(fixtures::h1(), 3) == std::nullopt);

    testgen::Rng rng(36);
    for (int it = 0; it < 100; ++it) {
      int m = testgen::uniform(rng, 3, 6);
      int c = testgen::uniform(rng, 0, std::min(3, m - 2));
      Histogram h = hist(testgen::random_profile_of(rng, m, testgen::uniform(rng, 1, 5), Kind::List, m - c));
      auto fp = fast::const_unranked(h, 3);
      REQUIRE(fp.has_value());
      CHECK(*fp == ap_general(h, general()));
      auto rs = fast::const_unranked_rs(h, 3);
      REQUIRE(rs.has_value());
      // The lexicographic representative is shared by the whole class.
      Histogram h2 = apply_perm(testgen::random_perm(rng, m), h);
      CHECK(apply_perm(*rs, h) == apply_perm(*fast::const_unranked_rs(h2, 3), h2));
    }
    CHECK(route_name(compute_ap(fixtures::h1()).route) == "bounded_m");
    CHECK(compute_ap(fixtures::h1(), general()).route == ApRoute::AlternativeGraph);
  }
}
