#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sic/oracles.hpp"
#include "support.hpp"

using namespace sic;

TEST_SUITE("oracles") {
  TEST_CASE("intervals are closed: touching counts as intersecting") {
    Interval a(0, 1), b(1, 2), c(Rational(3, 2), Rational(5, 2));
    CHECK(intersects(a, b));
    CHECK(intersects(b, a));
    CHECK(intersects(b, c));
    CHECK_FALSE(intersects(a, c));
    CHECK(intersects(a, a));
    CHECK(Interval(0, 2).contains(Interval(1, 2)));
    CHECK_FALSE(Interval(0, 2).contains(Interval(1, 3)));
    CHECK(Interval(0, 1).contains(Rational(1)));
    CHECK_FALSE(Interval(0, 1).contains(Rational(3, 2)));
    CHECK_THROWS_AS(Interval(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Interval(2, 1), std::invalid_argument);
  }

  TEST_CASE("clique_number on known instances") {
    CHECK(clique_number({}) == 0);
    std::vector<Interval> one = {Interval(0, 1)};
    CHECK(clique_number(one) == 1);
    // A chain that only touches at endpoints: any point hits at most two.
    std::vector<Interval> chain = {Interval(0, 1), Interval(1, 2), Interval(2, 3)};
    CHECK(clique_number(chain) == 2);
    // Nested plus a crosser.
    std::vector<Interval> nest = {Interval(0, 10), Interval(2, 5), Interval(3, 4), Interval(4, 8)};
    CHECK(clique_number(nest) == 4);
    std::vector<Interval> shifted = {Interval(-3, -2), Interval(Rational(-5, 2), Rational(-3, 2))};
    CHECK(clique_number(shifted) == 2);
  }

  TEST_CASE("clique_number matches the stabbing oracle on random instances") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
      auto xs = test::random_intervals(rng, 40, Rational(5, 2), 12);
      CHECK(clique_number(xs) == test::brute_clique(xs));
    }
  }

  TEST_CASE("verify_proper agrees with the pairwise scan") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
      auto xs = test::random_intervals(rng, 30, Rational(2), 10);
      Transcript good;
      auto colors = offline_optimal_coloring(xs);
      for (std::size_t i = 0; i < xs.size(); ++i) good.entries.push_back({xs[i], colors[i]});
      CHECK_FALSE(verify_proper(good).has_value());
      CHECK(test::brute_proper(good));

      // Squash all colors into too few classes: must now report a violation.
      Transcript bad = good;
      int clique = clique_number(xs);
      if (clique < 2) continue;
      for (auto& e : bad.entries) e.color %= (clique - 1);
      auto v = verify_proper(bad);
      REQUIRE(v.has_value());
      CHECK(v->first < v->second);
      CHECK(bad.entries[v->first].color == bad.entries[v->second].color);
      CHECK(intersects(bad.entries[v->first].interval, bad.entries[v->second].interval));
      CHECK_FALSE(test::brute_proper(bad));
    }
  }

  TEST_CASE("verify_proper reports the lexicographically first violation") {
    Transcript t;
    t.entries = {{Interval(0, 1), 0},
                 {Interval(5, 6), 0},
                 {Interval(Rational(1, 2), 2), 0},
                 {Interval(Rational(11, 2), 7), 0}};
    auto v = verify_proper(t);
    REQUIRE(v.has_value());
    CHECK(v->first == 0);
    CHECK(v->second == 2);
  }

  TEST_CASE("offline coloring is proper and uses exactly the clique number") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
      auto xs = test::random_intervals(rng, 60, Rational(3), 15);
      auto colors = offline_optimal_coloring(xs);
      REQUIRE(colors.size() == xs.size());
      Transcript tr;
      for (std::size_t i = 0; i < xs.size(); ++i) tr.entries.push_back({xs[i], colors[i]});
      CHECK_FALSE(verify_proper(tr).has_value());
      CHECK(tr.distinct_colors() == clique_number(xs));
    }
  }

  TEST_CASE("bounds_report checks lengths and containment") {
    Transcript t;
    t.entries = {{Interval(0, 1), 0}, {Interval(Rational(1, 2), Rational(7, 4)), 1}};
    auto b = bounds_report(t, Rational(3, 2), Interval(0, 2));
    CHECK(b.min_length == 1);
    CHECK(b.max_length == Rational(5, 4));
    CHECK(b.within_sigma);
    CHECK(b.contained);

    auto tight = bounds_report(t, Rational(6, 5), Interval(0, 2));
    CHECK_FALSE(tight.within_sigma);  // 5/4 > 6/5

    auto region = bounds_report(t, Rational(3, 2), Interval(0, Rational(3, 2)));
    CHECK_FALSE(region.contained);

    Transcript empty;
    auto e = bounds_report(empty, Rational(1), Interval(0, 1));
    CHECK(e.within_sigma);
    CHECK(e.contained);
    CHECK(e.min_length == 0);
    CHECK(e.max_length == 0);
  }

  TEST_CASE("bounds_report flags too-short intervals") {
    Transcript t;
    t.entries = {{Interval(0, Rational(1, 2)), 0}};
    CHECK_FALSE(bounds_report(t, Rational(2), Interval(0, 2)).within_sigma);
  }
}
