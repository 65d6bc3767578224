#pragma once

#include <iosfwd>

#include "sic/rational.hpp"

namespace sic {

/* Closed interval [left, right] with left < right; touching intervals intersect. */
struct Interval {
  Rational left, right;

  Interval(Rational l, Rational r);  // throws std::invalid_argument unless l < r

  Rational length() const { return right - left; }
  bool contains(const Rational& x) const { return left <= x && x <= right; }
  bool contains(const Interval& o) const { return left <= o.left && o.right <= right; }
  Interval shifted(const Rational& dx) const { return {left + dx, right + dx}; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.left == b.left && a.right == b.right;
  }
};

inline bool intersects(const Interval& a, const Interval& b) {
  return a.left <= b.right && b.left <= a.right;
}

std::ostream& operator<<(std::ostream& os, const Interval& iv);

}  // namespace sic
