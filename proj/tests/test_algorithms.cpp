#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "sic/online_algorithm.hpp"
#include "sic/oracles.hpp"
#include "support.hpp"

using namespace sic;

namespace {

Transcript drive(OnlineAlgorithm& alg, const std::vector<Interval>& xs) {
  Transcript t;
  for (const Interval& iv : xs) t.entries.push_back({iv, alg.color(iv)});
  return t;
}

}  // namespace

TEST_SUITE("algorithms") {
  TEST_CASE("first-fit picks the smallest free color") {
    FirstFit ff;
    CHECK(ff.color(Interval(0, 1)) == 0);
    CHECK(ff.color(Interval(Rational(1, 2), Rational(3, 2))) == 1);
    CHECK(ff.color(Interval(2, 3)) == 0);
    CHECK(ff.color(Interval(Rational(3, 2), Rational(5, 2))) == 2);  // touches colors 1 and 0
    CHECK(ff.color(Interval(10, 11)) == 0);
  }

  TEST_CASE("first-fit matches the naive reference on random sequences") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
      auto xs = test::random_intervals(rng, 120, Rational(2), 20);
      FirstFit fast;
      test::NaiveFirstFit slow;
      for (const Interval& iv : xs) CHECK(fast.color(iv) == slow.color(iv));
    }
  }

  TEST_CASE("first-fit on unit intervals stays within 2w-1 colors") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      auto xs = test::random_intervals(rng, 150, Rational(1), 25, 16);
      FirstFit ff;
      Transcript tr = drive(ff, xs);
      int w = clique_number(xs);
      CHECK(tr.distinct_colors() <= 2 * w - 1);
      CHECK_FALSE(verify_proper(tr).has_value());
    }
  }

  TEST_CASE("small block index is the floor of x*b") {
    CHECK(small_block_index(Rational(0), 3) == 0);
    CHECK(small_block_index(Rational(7, 3), 3) == 7);
    CHECK(small_block_index(Rational(-1, 3), 3) == -1);
    CHECK(small_block_index(Rational(1), 1) == 1);
    CHECK(small_block_index(Rational(999, 1000), 1) == 0);
    CHECK(small_block_index(Rational(-999, 1000), 1) == -1);
    CHECK(small_block_index(Rational(5, 2), 2) == 5);
  }

  TEST_CASE("large block selection lands in the window with the right residue") {
    CHECK(select_large_block(7, 0, 3) == 6);
    CHECK(select_large_block(0, 0, 1) == 0);
    CHECK(select_large_block(7, 5, 3) == 5);

    // Exhaustive check of the two defining properties.
    for (long b : {1L, 2L, 3L, 5L}) {
      for (long i = -12; i <= 12; ++i) {
        for (long s = 0; s <= 3 * b; ++s) {
          BigInt j = select_large_block(i, s, b);
          CHECK(j <= i);
          CHECK(j > i - b);
          BigInt diff = j - s;
          CHECK(diff % b == 0);
        }
      }
    }
  }

  TEST_CASE("phi counts the color classes") {
    CHECK(BlockColoring(Rational(1), 1).phi() == 2);
    CHECK(BlockColoring(Rational(3, 2), 2).phi() == 5);
    CHECK(BlockColoring(Rational(2), 1).phi() == 3);
    CHECK(BlockColoring(Rational(5, 3), 3).phi() == 8);
  }

  TEST_CASE("block coloring constructor and length guard") {
    CHECK_THROWS_AS(BlockColoring(Rational(1, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(BlockColoring(Rational(1), 0), std::invalid_argument);
    BlockColoring alg(Rational(3, 2), 2);
    CHECK_THROWS_AS(alg.color(Interval(0, Rational(1, 2))), std::invalid_argument);
    CHECK_THROWS_AS(alg.color(Interval(0, 2)), std::invalid_argument);
    CHECK(alg.color(Interval(0, Rational(3, 2))) >= 0);
  }

  TEST_CASE("default_b is the denominator in lowest terms") {
    CHECK(BlockColoring::default_b(Rational(1)) == 1);
    CHECK(BlockColoring::default_b(Rational(3, 2)) == 2);
    CHECK(BlockColoring::default_b(Rational(6, 4)) == 2);
    CHECK(BlockColoring::default_b(Rational(5, 3)) == 3);
    CHECK(BlockColoring::default_b(Rational(2)) == 1);
  }

  TEST_CASE("block coloring is proper and respects its color budget") {
    std::mt19937_64 rng(9);
    struct Pair {
      Rational sigma;
      long b;
    };
    for (const Pair& p : {Pair{Rational(1), 1}, Pair{Rational(3, 2), 2}, Pair{Rational(2), 1},
                          Pair{Rational(5, 3), 3}}) {
      for (int t = 0; t < 15; ++t) {
        auto xs = test::random_intervals(rng, 100, p.sigma, 18, 12);
        // Shift half the runs left so negative block indices get exercised.
        if (t % 2 == 0)
          for (Interval& iv : xs) iv = iv.shifted(Rational(-25));
        BlockColoring alg(p.sigma, p.b);
        Transcript tr = drive(alg, xs);
        CHECK_FALSE(verify_proper(tr).has_value());
        long w = clique_number(xs);
        long bound = alg.phi() * ((w + p.b * (p.b - 1)) / p.b);
        CHECK(tr.distinct_colors() <= bound);
      }
    }
  }

  TEST_CASE("color ids are a bijection onto structured (class, level) pairs") {
    std::mt19937_64 rng(17);
    auto xs = test::random_intervals(rng, 200, Rational(5, 3), 14, 6);
    BlockColoring alg(Rational(5, 3), 3);
    Transcript tr = drive(alg, xs);
    // Ids are dense 0..n-1, distinct pairs; with propriety (checked above)
    // this means intervals sharing a structured pair are pairwise disjoint.
    std::set<std::pair<long, long>> pairs;
    for (int c = 0; c < tr.distinct_colors(); ++c) {
      auto p = alg.structured_color(c);
      CHECK(p.first >= 0);
      CHECK(p.first < alg.phi());
      CHECK(p.second >= 0);
      pairs.insert(p);
    }
    CHECK(static_cast<int>(pairs.size()) == tr.distinct_colors());
    CHECK_THROWS_AS(alg.structured_color(tr.distinct_colors()), std::out_of_range);
  }

  TEST_CASE("factory spells the names") {
    auto ff = make_algorithm("firstfit", Rational(1), 0);
    CHECK(ff->name() == "firstfit");
    auto blk = make_algorithm("block", Rational(3, 2), 0);
    CHECK(blk->name() == "block(sigma=3/2,b=2)");
    CHECK_THROWS_AS(make_algorithm("quantum", Rational(1), 0), std::invalid_argument);
  }
}
