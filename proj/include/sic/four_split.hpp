#pragma once

#include <array>
#include <span>
#include <utility>
#include <variant>

#include "sic/colorset.hpp"
#include "sic/rational.hpp"

namespace sic {

/* Four equal-size sets with a small common intersection have a large union:
 * |X1 n ... n X4| <= (1-gamma)k  implies  |X1 u ... u X4| >= ((3+gamma)/3)k.
 * Returns whether that implication holds for the given sets. */
bool lemma_4sets_check(const ColorSet& x1, const ColorSet& x2, const ColorSet& x3,
                       const ColorSet& x4, const Rational& gamma);

struct UnionCase {
  ColorSet colors;  // union of all input sets, size >= ((3+gamma)/3)^n * k
};

struct PartitionCase {
  /* 1-based inclusive leaf ranges covering 1..4^n: ranges[0].first == 1,
   * ranges[i+1].first == ranges[i].second + 1, ranges[3].second == 4^n. */
  std::array<std::pair<long, long>, 4> ranges;
  ColorSet witness;  // intersection of the four range unions, size >= (1-gamma)k
};

using FourSplitResult = std::variant<UnionCase, PartitionCase>;

/* Dichotomy over 4^n sets of size k: scan groups of four consecutive sets
 * bottom-up through the 4-ary aggregation hierarchy; the first group whose
 * members share >= (1-gamma)k common colors (and at least one) yields the
 * partition case, with the group's leaf ranges widened to cover 1..4^n.
 * Otherwise the total union is large. */
FourSplitResult four_split(std::span<const ColorSet> sets, long k, const Rational& gamma);

}  // namespace sic
