#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sic/transcript.hpp"

namespace sic {

/* Largest number of intervals stabbed by one point. Sweep orders starts before
 * ends at equal coordinates, so touching closed intervals count together. */
int clique_number(std::span<const Interval> xs);

struct Violation {
  std::size_t first = 0, second = 0;  // transcript indices, first < second
};

/* First intersecting same-colored pair in lexicographic index order, if any. */
std::optional<Violation> verify_proper(const Transcript& t);

/* Greedy smallest-free-color in left-endpoint order (stable by index).
 * Interval graphs are perfect, so this uses exactly clique_number colors. */
std::vector<int> offline_optimal_coloring(std::span<const Interval> xs);

struct BoundsReport {
  Rational min_length, max_length;  // both 0 when the transcript is empty
  bool within_sigma = true;         // every length in [1, sigma]
  bool contained = true;            // every interval inside region
};

BoundsReport bounds_report(const Transcript& t, const Rational& sigma, const Interval& region);

}  // namespace sic
