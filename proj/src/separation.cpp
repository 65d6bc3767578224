#include "sic/separation.hpp"

#include <algorithm>
#include <stdexcept>

namespace sic {

ColorSet set_union(const ColorSet& a, const ColorSet& b) {
  ColorSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

ColorSet set_intersection(const ColorSet& a, const ColorSet& b) {
  ColorSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

ColorSet set_difference(const ColorSet& a, const ColorSet& b) {
  ColorSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

SeparationPresenter::SeparationPresenter(int rounds, Interval window, ColorSet push, Side side)
    : rounds_(rounds),
      window_(std::move(window)),
      push_(std::move(push)),
      side_(side),
      lo_(window_.left),
      hi_(window_.right) {
  if (rounds_ < 0) throw std::invalid_argument("separation rounds must be >= 0");
  if (window_.length() > 1)
    throw std::invalid_argument("separation window wider than 1 breaks pairwise intersection");
}

std::optional<Interval> SeparationPresenter::next() {
  if (awaiting_observe_) throw std::logic_error("next() called with a color still owed");
  if (emitted_ == rounds_) return std::nullopt;
  awaiting_observe_ = true;
  Rational anchor = (lo_ + hi_) / 2;
  ++emitted_;
  return Interval(anchor, anchor + 1);
}

void SeparationPresenter::observe(int color) {
  if (!awaiting_observe_) throw std::logic_error("observe() without a pending interval");
  awaiting_observe_ = false;
  Rational anchor = (lo_ + hi_) / 2;
  entries_.push_back(Entry{Interval(anchor, anchor + 1), color});
  ++observed_;
  bool pushed = push_.contains(color);
  /* PushLeft: a pushed color keeps later anchors to its right, so pushed
   * intervals accumulate on the left. PushRight mirrors. */
  if (pushed == (side_ == Side::PushLeft))
    lo_ = anchor;
  else
    hi_ = anchor;
}

std::vector<Entry> SeparationPresenter::extremes(int count) const {
  if (count < 0 || count > observed_)
    throw std::invalid_argument("extreme count outside [0, rounds]");
  std::vector<std::size_t> order(entries_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return entries_[a].interval.left < entries_[b].interval.left;
  });
  if (side_ == Side::PushLeft)
    order.erase(order.begin(), order.end() - count);  // keep largest anchors
  else
    order.erase(order.begin() + count, order.end());  // keep smallest anchors
  std::sort(order.begin(), order.end());
  std::vector<Entry> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(entries_[i]);
  return out;
}

ColorSet SeparationPresenter::extreme_colors(int count) const {
  ColorSet out;
  for (const Entry& e : extremes(count)) out.insert(e.color);
  return out;
}

}  // namespace sic
