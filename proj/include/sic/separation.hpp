#pragma once

#include <vector>

#include "sic/colorset.hpp"
#include "sic/presenter.hpp"
#include "sic/transcript.hpp"

namespace sic {

/* Bisection strategy that sorts one round's colors spatially: unit intervals
 * anchored inside `window`, one per round. With PushLeft, every interval
 * colored from `push` ends up with its left endpoint strictly left of every
 * interval colored outside `push`; PushRight mirrors this. All anchors are
 * distinct and every pair of emitted intervals intersects while the window is
 * at most 1 wide. */
class SeparationPresenter final : public Presenter {
 public:
  enum class Side { PushLeft, PushRight };

  SeparationPresenter(int rounds, Interval window, ColorSet push, Side side);

  std::optional<Interval> next() override;
  void observe(int color) override;

  bool done() const { return observed_ == rounds_; }
  const std::vector<Entry>& entries() const { return entries_; }

  /* The `count` entries farthest on the non-pushed side (largest anchors for
   * PushLeft, smallest for PushRight), in presentation order. */
  std::vector<Entry> extremes(int count) const;
  ColorSet extreme_colors(int count) const;

  const Interval& window() const { return window_; }

 private:
  int rounds_;
  Interval window_;
  ColorSet push_;
  Side side_;
  Rational lo_, hi_;  // current anchor window
  int emitted_ = 0, observed_ = 0;
  bool awaiting_observe_ = false;
  std::vector<Entry> entries_;
};

}  // namespace sic
