#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sic/interval.hpp"

namespace sic {

struct Entry {
  Interval interval;
  int color;
};

/* Presentation-ordered record of one game. */
struct Transcript {
  std::vector<Entry> entries;

  std::size_t size() const { return entries.size(); }
  int distinct_colors() const;
  std::vector<Interval> intervals() const;

  /* JSON array of {"left": "p/q", "right": "p/q", "color": int}. */
  std::string to_json() const;
  static Transcript from_json(std::string_view text);  // throws std::invalid_argument
};

}  // namespace sic
