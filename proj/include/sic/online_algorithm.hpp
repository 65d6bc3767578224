#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "sic/interval.hpp"

namespace sic {

/* An online coloring algorithm: commits to a color the moment it sees an
 * interval. Color ids are dense nonnegative ints, stable within a game. */
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual int color(const Interval& iv) = 0;
  virtual std::string name() const = 0;
};

/* Smallest color not used on any previously seen intersecting interval.
 * Each color class is pairwise disjoint, so keeping it ordered by left
 * endpoint makes the availability test a single bounded lookup. */
class FirstFit final : public OnlineAlgorithm {
 public:
  int color(const Interval& iv) override;
  std::string name() const override { return "firstfit"; }

 private:
  std::vector<std::map<Rational, Rational>> classes_;  // per color: left -> right
};

/* i such that x lands in the half-open small block [i/b, (i+1)/b). */
BigInt small_block_index(const Rational& x, long b);

/* The unique j in {i-b+1, ..., i} with j = s (mod b); large block j is
 * [j/b, j/b + 1) and contains small block i. */
BigInt select_large_block(const BigInt& i, const BigInt& s, long b);

/* Block algorithm for intervals with length in [1, sigma]. Routes each
 * interval from the small block of its left endpoint to a large block chosen
 * round-robin, and colors it (j mod phi, level) with phi = ceil(b*(1+sigma)).
 * Distinct colors stay within phi * floor((clique + b(b-1)) / b). */
class BlockColoring final : public OnlineAlgorithm {
 public:
  BlockColoring(Rational sigma, long b);  // throws std::invalid_argument

  int color(const Interval& iv) override;  // throws if length outside [1, sigma]
  std::string name() const override;

  long phi() const { return phi_; }
  const Rational& sigma() const { return sigma_; }
  long b() const { return b_; }

  /* Reverse lookup of a color id's (j mod phi, level) pair, for inspection. */
  std::pair<long, long> structured_color(int id) const;

  /* Denominator of sigma in lowest terms: the smallest b that makes every
   * unit-fraction block boundary land on multiples of 1/b. */
  static long default_b(const Rational& sigma);

 private:
  Rational sigma_;
  long b_;
  long phi_;
  std::map<BigInt, BigInt> small_counters_;             // S_i
  std::map<BigInt, long> large_counters_;               // L_j
  std::map<std::pair<long, long>, int> color_ids_;      // (j mod phi, level) -> id
  std::vector<std::pair<long, long>> structured_;       // id -> (j mod phi, level)
};

/* Name-based factory: "firstfit" ignores sigma/b; "block" requires sigma >= 1
 * and b >= 1 (b == 0 means "use default_b(sigma)"). */
std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, const Rational& sigma,
                                                long b);

}  // namespace sic
