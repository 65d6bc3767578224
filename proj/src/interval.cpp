#include "sic/interval.hpp"

#include <ostream>
#include <stdexcept>

namespace sic {

Interval::Interval(Rational l, Rational r) : left(std::move(l)), right(std::move(r)) {
  if (!(left < right))
    throw std::invalid_argument("degenerate interval [" + left.str() + ", " + right.str() + "]");
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << '[' << iv.left << ", " << iv.right << ']';
}

}  // namespace sic
