#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace merv;

TEST_SUITE("core") {
  TEST_CASE("preferences normalize") {
    CHECK(Preference::committee({3, 1}).to_string() == "C 1 3");
    CHECK(Preference::list({3, 1}).to_string() == "L 3 1");
    CHECK(Preference::list({2}) == Preference::committee({2}));
    CHECK_THROWS(Preference::committee({1, 1}));
    CHECK_THROWS(Preference::committee({}));
    CHECK_THROWS(Preference::committee({0, 2}));
  }

  TEST_CASE("permutation action on histograms") {
    auto sigma = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    CHECK(apply_perm(sigma, fixtures::h1()) == fixtures::h2());
    CHECK(apply_perm(Permutation::identity(4), fixtures::h1()) == fixtures::h1());
    CHECK(apply_perm(Permutation::from_cycles(4, {{1, 4}}), fixtures::h1()) == fixtures::h1());
    CHECK(apply_perm(sigma, Preference::list({3, 1})) == Preference::list({4, 2}));
    CHECK_THROWS(apply_perm(Permutation::identity(3), fixtures::h1()));
    CHECK(sigma.cycle_string() == "(1,2)(3,4)");
    CHECK(Permutation::identity(3).cycle_string() == "()");
  }

  TEST_CASE("hist") {
    CHECK(hist(fixtures::p1()) == fixtures::h1());
    Histogram single = hist(Profile(2, {Preference::committee({1})}));
    CHECK(single.render() == "m 2\n1 x C 1\n");
    Profile q(4, {Preference::committee({2, 4}), Preference::committee({2, 3}), Preference::committee({1, 4}),
                  Preference::committee({1, 2})});
    CHECK(hist(q) == fixtures::h1());
    CHECK_THROWS(Profile(2, {}));
  }

  TEST_CASE("priority order") {
    auto a = Preference::committee({1, 2}), b = Preference::committee({1, 3});
    CHECK(priority_cmp(a, b) < 0);
    CHECK(priority_cmp(a, a) == 0);
    CHECK(priority_cmp(Preference::committee({1, 4}), Preference::committee({2, 3})) < 0);
    CHECK(priority_cmp(Preference::committee({3, 4}), Preference::list({1, 2})) < 0);
    CHECK(priority_cmp(Preference::list({4, 3}), Preference::committee({1, 2, 3})) < 0);
    auto e1 = fixtures::g1().edges(), e2 = fixtures::g2().edges();
    CHECK(priority_cmp(std::span<const Edge>(e2), std::span<const Edge>(e1)) < 0);
    CHECK_THROWS(priority_cmp(Histogram(3), Histogram(4)));
  }

  TEST_CASE("priority order is a strict total order") {
    testgen::Rng rng(3);
    for (int it = 0; it < 2000; ++it) {
      int m = testgen::uniform(rng, 1, 5);
      auto x = testgen::random_pref(rng, m), y = testgen::random_pref(rng, m), z = testgen::random_pref(rng, m);
      auto xy = priority_cmp(x, y), yx = priority_cmp(y, x);
      CHECK((xy < 0) == (yx > 0));
      CHECK((xy == 0) == (x == y));
      if (xy < 0 && priority_cmp(y, z) < 0) CHECK(priority_cmp(x, z) < 0);
    }
  }

  TEST_CASE("group action and conservation") {
    testgen::Rng rng(4);
    for (int it = 0; it < 300; ++it) {
      int m = testgen::uniform(rng, 1, 6);
      Histogram h = hist(testgen::random_profile(rng, m, testgen::uniform(rng, 1, 8)));
      auto s = testgen::random_perm(rng, m), t = testgen::random_perm(rng, m);
      CHECK(apply_perm(compose(s, t), h) == apply_perm(s, apply_perm(t, h)));
      Histogram sh = apply_perm(s, h);
      CHECK(sh.n() == h.n());
      std::vector<std::int64_t> a, b;
      for (const auto& e : h.entries()) a.push_back(e.multiplicity);
      for (const auto& e : sh.entries()) b.push_back(e.multiplicity);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
      CHECK(apply_perm(s.inverse(), sh) == h);
    }
  }

  TEST_CASE("enumerate_decisions") {
    auto c1 = enumerate_decisions({Kind::Committee, 1}, 3, 100);
    REQUIRE(c1.size() == 3);
    CHECK(c1[0].to_string() == "C 1");
    auto c2 = enumerate_decisions({Kind::Committee, 2}, 3, 100);
    REQUIRE(c2.size() == 3);
    CHECK(c2[0].to_string() == "C 1 2");
    CHECK(c2[1].to_string() == "C 1 3");
    CHECK(c2[2].to_string() == "C 2 3");
    auto l2 = enumerate_decisions({Kind::List, 2}, 3, 100);
    REQUIRE(l2.size() == 6);
    CHECK(l2[0].to_string() == "L 1 2");
    for (std::size_t i = 1; i < l2.size(); ++i) CHECK(priority_cmp(l2[i - 1], l2[i]) < 0);
    CHECK(decision_count({Kind::List, 3}, 5) == 60);
    CHECK_THROWS_AS(enumerate_decisions({Kind::List, 5}, 8, 100), BudgetExceeded);
  }

  TEST_CASE("decision spaces") {
    CHECK(DecisionSpace::parse("C:2").to_string() == "C:2");
    CHECK(DecisionSpace::parse("L:1").to_string() == "C:1");
    CHECK_THROWS(DecisionSpace::parse("X:2"));
    CHECK_THROWS(DecisionSpace::parse("C:0"));
    CHECK_THROWS(DecisionSpace{Kind::Committee, 5}.validate(4));
    CHECK(DecisionSpace{Kind::List, 2}.contains(Preference::list({2, 1})));
    CHECK_FALSE(DecisionSpace{Kind::List, 2}.contains(Preference::committee({1, 2})));
  }
}
