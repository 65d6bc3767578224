#include "sic/four_split.hpp"

#include <stdexcept>

namespace sic {

bool lemma_4sets_check(const ColorSet& x1, const ColorSet& x2, const ColorSet& x3,
                       const ColorSet& x4, const Rational& gamma) {
  if (gamma < 0 || gamma > 1) throw std::invalid_argument("gamma outside [0, 1]");
  long k = static_cast<long>(x1.size());
  if (x2.size() != x1.size() || x3.size() != x1.size() || x4.size() != x1.size())
    throw std::invalid_argument("the four sets must have equal size");
  ColorSet inter = set_intersection(set_intersection(x1, x2), set_intersection(x3, x4));
  ColorSet uni = set_union(set_union(x1, x2), set_union(x3, x4));
  bool small_intersection = Rational(static_cast<long>(inter.size())) <= (1 - gamma) * k;
  bool large_union = Rational(static_cast<long>(uni.size())) >= (3 + gamma) * k / 3;
  return !small_intersection || large_union;
}

FourSplitResult four_split(std::span<const ColorSet> sets, long k, const Rational& gamma) {
  if (gamma < 0 || gamma > 1) throw std::invalid_argument("gamma outside [0, 1]");
  long leaves = static_cast<long>(sets.size());
  for (long p = leaves; p > 1; p /= 4)
    if (p % 4 != 0) throw std::invalid_argument("set count must be a power of 4");
  if (leaves == 0) throw std::invalid_argument("set count must be a power of 4");
  for (const ColorSet& s : sets)
    if (static_cast<long>(s.size()) != k)
      throw std::invalid_argument("every set must have exactly k colors");

  Rational threshold = (1 - gamma) * k;
  std::vector<ColorSet> level(sets.begin(), sets.end());
  long width = 1;  // leaves covered by each set at the current level

  while (level.size() > 1) {
    for (std::size_t g = 0; 4 * g < level.size(); ++g) {
      ColorSet inter = level[4 * g];
      for (int c = 1; c < 4 && !inter.empty(); ++c)
        inter = set_intersection(inter, level[4 * g + c]);
      if (inter.empty() || Rational(static_cast<long>(inter.size())) < threshold) continue;

      std::array<std::pair<long, long>, 4> ranges;
      for (long c = 0; c < 4; ++c) {
        long first = (static_cast<long>(4 * g) + c) * width;
        ranges[c] = {first + 1, first + width};
      }
      ranges[0].first = 1;
      ranges[3].second = leaves;

      std::array<ColorSet, 4> unions;
      for (int c = 0; c < 4; ++c)
        for (long leaf = ranges[c].first; leaf <= ranges[c].second; ++leaf)
          unions[c].insert(sets[leaf - 1].begin(), sets[leaf - 1].end());
      ColorSet witness = set_intersection(set_intersection(unions[0], unions[1]),
                                          set_intersection(unions[2], unions[3]));
      return PartitionCase{ranges, std::move(witness)};
    }
    std::vector<ColorSet> up(level.size() / 4);
    for (std::size_t g = 0; g < up.size(); ++g)
      for (int c = 0; c < 4; ++c) up[g].insert(level[4 * g + c].begin(), level[4 * g + c].end());
    level = std::move(up);
    width *= 4;
  }
  return UnionCase{std::move(level[0])};
}

}  // namespace sic
