#pragma once

#include <set>

namespace sic {

using ColorSet = std::set<int>;

ColorSet set_union(const ColorSet& a, const ColorSet& b);
ColorSet set_intersection(const ColorSet& a, const ColorSet& b);
ColorSet set_difference(const ColorSet& a, const ColorSet& b);

}  // namespace sic
